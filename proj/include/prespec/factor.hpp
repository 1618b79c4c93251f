#ifndef PRESPEC_FACTOR_HPP
#define PRESPEC_FACTOR_HPP

#include <vector>

#include "prespec/intpoly.hpp"
#include "prespec/types.hpp"

namespace prespec {

struct FactorPower {
    IntPoly poly;
    int multiplicity = 1;
};

/// Yun decomposition of nonzero f: returns squarefree, pairwise-coprime,
/// primitive factors with positive leading coefficient such that
/// f = (+-content) * product of poly^multiplicity.
std::vector<FactorPower> squarefree_factor(const IntPoly& f);

/// Complete factorization of nonzero f into irreducible primitive factors
/// with positive leading coefficients (monic whenever f is monic), so that
/// f = (+-content) * product of poly^multiplicity. Irreducibility is
/// certified by exhaustion: rational-root stripping plus a divisor-tuple
/// search over interpolation values rules out every proper factor of degree
/// <= deg/2. Degrees above the cap raise BoundError.
std::vector<FactorPower> factor_irreducible(const IntPoly& f, int degree_cap = 16);

/// Total order on polynomials used to emit factor lists deterministically:
/// by degree, then by coefficients from the leading one down.
bool poly_less(const IntPoly& a, const IntPoly& b);

enum class FactorProvenance {
    VerifiedIrreducible, // splitting was attempted and ruled out
    AssumedIrreducible,  // taken on trust from the caller
};

struct SpectrumFactor {
    IntPoly poly;
    int multiplicity = 1;
    FactorProvenance provenance = FactorProvenance::AssumedIrreducible;
};

/// The multiset of monic totally real polynomials whose roots a construction
/// must plant in a spectrum. Duplicated polynomials are merged on entry;
/// the first-seen order is kept so downstream certificates are reproducible.
class PrescribedSpectrum {
public:
    /// Validates: each factor monic, nonconstant, totally real, with
    /// multiplicity >= 1; at least one factor overall.
    static PrescribedSpectrum make(std::vector<SpectrumFactor> parts);

    /// Factors a monic nonconstant f completely and marks every factor
    /// VerifiedIrreducible. f must be totally real.
    static PrescribedSpectrum of_polynomial(const IntPoly& f, int degree_cap = 16);

    const std::vector<SpectrumFactor>& factors() const { return factors_; }

    /// Number of parts counted with multiplicity.
    int part_count() const;

    /// Sum of degree * multiplicity.
    int total_degree() const;

private:
    PrescribedSpectrum() = default;
    std::vector<SpectrumFactor> factors_;
};

} // namespace prespec

#endif
