#ifndef PRESPEC_INTPOLY_HPP
#define PRESPEC_INTPOLY_HPP

#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prespec/types.hpp"

namespace prespec {

/// Dense polynomial with arbitrary-precision integer coefficients, stored
/// lowest degree first with no trailing zeros. The zero polynomial is the
/// empty coefficient list (degree -1).
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::initializer_list<long> coeffs_lowest_first);
    explicit IntPoly(std::vector<Int> coeffs_lowest_first);

    static IntPoly constant(Int c);
    static IntPoly monomial(int k, Int coeff = 1); // coeff * x^k

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    /// Coefficient of x^k; zero outside the stored range.
    const Int& coeff(int k) const;
    const Int& leading() const;
    bool is_monic() const;
    const std::vector<Int>& coeffs() const { return c_; }

    Int evaluate(const Int& x) const;
    Rat evaluate(const Rat& x) const;

    IntPoly derivative() const;

    /// gcd of all coefficients (non-negative); 0 for the zero polynomial.
    Int content() const;
    /// f / content(f), keeping the sign of the leading coefficient.
    IntPoly primitive_part() const;
    /// f(-x)
    IntPoly reflected() const;

    IntPoly operator-() const;
    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const Int& s, const IntPoly& a);
    bool operator==(const IntPoly& other) const = default;

    /// Comma-separated coefficients, lowest degree first ("4,0,-5,0,1").
    std::string to_csv() const;
    static IntPoly from_csv(std::string_view text);

private:
    void normalize();
    std::vector<Int> c_;
};

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

/// Quotient/remainder of `dividend` by `divisor` over the rationals:
/// dividend = quotient * divisor + remainder, deg remainder < deg divisor.
struct RatDivRem {
    std::vector<Rat> quotient;  // lowest degree first
    std::vector<Rat> remainder; // lowest degree first, trimmed
};
RatDivRem divrem(const IntPoly& dividend, const IntPoly& divisor);

/// True iff f divides g exactly over the integers (zero remainder and an
/// integer quotient). divides(f, f) is true for nonzero f.
bool divides(const IntPoly& f, const IntPoly& g);

/// g / f when f | g exactly over the integers; throws std::domain_error
/// otherwise.
IntPoly divide_exact(const IntPoly& g, const IntPoly& f);

/// Pseudo-remainder r with lc(g)^(deg f - deg g + 1) * f = q*g + r.
IntPoly pseudo_rem(const IntPoly& f, const IntPoly& g);

/// Integer polynomial gcd (primitive PRS), positive leading coefficient.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

/// f with repeated roots stripped: f / gcd(f, f'), primitive, positive lead.
IntPoly squarefree_part(const IntPoly& f);

/// Newton power sums from coefficients; k must be 1 or 2, f monic.
Int power_sum(const IntPoly& f, int k);

/// Resultant of f and g with respect to their common variable.
Int resultant(const IntPoly& f, const IntPoly& g);

/// Monic polynomial of degree (deg f)(deg g) whose root multiset is the
/// pairwise sums of roots of f and g, computed as a resultant in a shifted
/// variable. Both inputs must be monic with degree >= 1.
IntPoly compose_sum(const IntPoly& f, const IntPoly& g);

/// Non-decreasing then non-increasing with a single peak region.
bool is_unimodal(std::span<const Int> seq);
bool is_unimodal(const std::vector<Int>& seq);

/// Absolute coefficient values from the leading coefficient down, with zero
/// coefficients removed (for bipartite characteristic polynomials every
/// other coefficient is structurally zero).
std::vector<Int> abs_profile(const IntPoly& f);

/// The literal signed coefficient sequence from the leading coefficient
/// down, zeros kept; the strict reading of coefficient unimodality.
std::vector<Int> literal_profile(const IntPoly& f);

} // namespace prespec

#endif
