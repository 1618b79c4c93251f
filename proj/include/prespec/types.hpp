#ifndef PRESPEC_TYPES_HPP
#define PRESPEC_TYPES_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace prespec {

using Int = mpz_class;
using Rat = mpq_class;

/// Thrown when a configured resource cap is hit (enumeration ceiling,
/// factorization degree cap, witness search bound). Distinct from a
/// verified negative result: exhausting a bound proves nothing.
class BoundError : public std::runtime_error {
public:
    explicit BoundError(const std::string& what, long long bound = -1)
        : std::runtime_error(what), bound_(bound) {}

    /// The bound that was exhausted, or -1 if not applicable.
    long long bound() const { return bound_; }

private:
    long long bound_;
};

inline int sign_of(const Int& z) { return mpz_sgn(z.get_mpz_t()); }
inline int sign_of(const Rat& q) { return mpq_sgn(q.get_mpq_t()); }

} // namespace prespec

#endif
