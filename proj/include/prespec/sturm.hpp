#ifndef PRESPEC_STURM_HPP
#define PRESPEC_STURM_HPP

#include <utility>

#include "prespec/intpoly.hpp"
#include "prespec/types.hpp"

namespace prespec {

/// Extended rational: a finite value or one of the two infinities, used as
/// an interval endpoint for root counting.
class ExtRat {
public:
    static ExtRat neg_inf() { return ExtRat(-1, Rat(0)); }
    static ExtRat pos_inf() { return ExtRat(+1, Rat(0)); }
    static ExtRat at(Rat q) { return ExtRat(0, std::move(q)); }

    bool is_neg_inf() const { return inf_ < 0; }
    bool is_pos_inf() const { return inf_ > 0; }
    bool is_finite() const { return inf_ == 0; }
    const Rat& value() const { return q_; }

private:
    ExtRat(int inf, Rat q) : inf_(inf), q_(std::move(q)) {}
    int inf_;
    Rat q_;
};

/// Exact count of distinct real roots of f in the half-open interval
/// (lo, hi]. The squarefree part is taken internally; all arithmetic is
/// exact (integer sign evaluations on a primitive Sturm chain).
int sturm_count(const IntPoly& f, const ExtRat& lo, const ExtRat& hi);

/// Distinct real roots on the whole line.
int count_real_roots(const IntPoly& f);

/// Distinct real roots strictly greater than c.
int count_roots_above(const IntPoly& f, const Rat& c);

/// True iff every root of f is real: distinct real roots of the squarefree
/// part equal its degree.
bool is_totally_real(const IntPoly& f);

/// All roots of f lie strictly inside (-bound, bound).
Rat root_bound(const IntPoly& f);

/// Isolating interval (lo, hi] for exactly one real root of `poly`
/// (the squarefree part of the polynomial it was derived from), with exact
/// signs of `poly` at the endpoints.
struct RootBox {
    IntPoly poly;
    Rat lo;
    Rat hi;
    int sign_lo = 0;
    int sign_hi = 0;

    Rat width() const { return hi - lo; }
    /// True iff the rational q is inside (lo, hi].
    bool contains(const Rat& q) const { return lo < q && q <= hi; }
};

/// Shrinks the box by sign-guided bisection until width <= target.
RootBox refine_box(RootBox box, const Rat& target_width);

/// Boxes for the largest and smallest real root of a totally real,
/// nonconstant polynomial, each of width <= precision.
std::pair<RootBox, RootBox> isolate_extreme_roots(const IntPoly& f, const Rat& precision);

enum class Cmp { Less, Equal, Greater };

/// Exact comparison of the largest real roots of f and g, by interleaved
/// box refinement; exact ties are certified through gcd(f, g). Both inputs
/// must have at least one real root.
Cmp compare_largest_roots(const IntPoly& f, const IntPoly& g);

} // namespace prespec

#endif
