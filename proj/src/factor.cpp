#include "prespec/factor.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "prespec/sturm.hpp"

namespace prespec {

namespace {

Int int_pow(Int base, int e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return out;
}

bool divisible(const Int& n, const Int& d) {
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

// All divisors of n != 0, both signs, ascending |d| with +d before -d.
std::vector<Int> signed_divisors(const Int& n) {
    Int a = abs(n);
    std::vector<Int> small, large;
    for (Int d = 1; d * d <= a; ++d) {
        if (!divisible(a, d)) continue;
        small.push_back(d);
        if (d * d != a) large.push_back(a / d);
    }
    std::vector<Int> out;
    out.reserve(2 * (small.size() + large.size()));
    for (const Int& d : small) {
        out.push_back(d);
        out.push_back(-d);
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) {
        out.push_back(*it);
        out.push_back(-*it);
    }
    return out;
}

std::vector<Int> positive_divisors(const Int& n) {
    std::vector<Int> out;
    for (const Int& d : signed_divisors(n))
        if (d > 0) out.push_back(d);
    return out;
}

// Divides every rational root out of p (primitive, positive leading
// coefficient), returning one primitive linear factor per root.
std::vector<IntPoly> strip_rational_roots(IntPoly& p) {
    std::vector<IntPoly> out;
    while (p.degree() >= 1 && p.coeff(0) == 0) {
        p = divide_exact(p, IntPoly{0, 1});
        out.push_back(IntPoly{0, 1});
    }
    bool progress = true;
    while (progress && p.degree() >= 1) {
        progress = false;
        std::vector<Int> dens = positive_divisors(p.leading());
        for (const Int& num : signed_divisors(p.coeff(0))) {
            for (const Int& den : dens) {
                if (gcd(num, den) != 1) continue;
                Rat r(num, den);
                r.canonicalize();
                if (p.evaluate(r) != 0) continue;
                IntPoly lin(std::vector<Int>{-num, den});
                p = divide_exact(p, lin);
                out.push_back(std::move(lin));
                progress = true;
                break;
            }
            if (progress) break;
        }
    }
    return out;
}

// stir[m][j] = Stirling number of the second kind, 0 <= j <= m <= n.
std::vector<std::vector<Int>> stirling2(int n) {
    std::vector<std::vector<Int>> s(n + 1);
    for (int m = 0; m <= n; ++m) {
        s[m].assign(m + 1, 0);
        for (int j = 0; j <= m; ++j) {
            if (j == m)
                s[m][j] = 1;
            else if (j == 0)
                s[m][j] = 0;
            else
                s[m][j] = j * s[m - 1][j] + s[m - 1][j - 1];
        }
    }
    return s;
}

// Mignotte: any degree-k factor of p over Z has |coefficients| <= 2^k * ||p||_2.
Int factor_coeff_bound(const IntPoly& p, int k) {
    Int norm2 = 0;
    for (const Int& c : p.coeffs()) norm2 += c * c;
    return (sqrt(norm2) + 1) << k;
}

// One nontrivial primitive factor (positive leading coefficient) of p, or
// the zero polynomial when p is irreducible. p must be squarefree,
// primitive, positive-leading, and free of rational roots. The search is
// exhaustive over factor degrees k <= deg/2: a true factor's values at the
// k+1 sample points are divisors of p's values there, and every pruning
// bound below provably holds for true factors, so an empty search certifies
// irreducibility.
IntPoly kronecker_split(const IntPoly& p) {
    const int d = p.degree();
    if (d < 4) return {};
    const std::vector<std::vector<Int>> stir = stirling2(d / 2);
    for (int k = 2; 2 * k <= d; ++k) {
        const int t0 = -(k / 2); // sample window t0 .. t0+k around the origin
        std::vector<std::vector<Int>> cand(k + 1);
        for (int j = 0; j <= k; ++j) cand[j] = signed_divisors(p.evaluate(Int(t0 + j)));

        std::vector<Int> fact(k + 1);
        fact[0] = 1;
        for (int i = 1; i <= k; ++i) fact[i] = i * fact[i - 1];
        // |Delta^j g(t0)| <= j! * Bh * sum_m S2(m, j) for any true factor g,
        // where Bh bounds the coefficients of g shifted to the window start.
        Int bh = factor_coeff_bound(p, k) * (k + 1) * (Int(1) << k) *
                 int_pow(std::max(Int(1), Int(-t0)), k);
        std::vector<Int> bound(k + 1);
        for (int j = 0; j <= k; ++j) {
            Int s = 0;
            for (int m = j; m <= k; ++m) s += stir[m][j];
            bound[j] = fact[j] * bh * s;
        }

        std::vector<std::vector<Int>> diag(k + 1); // backward differences per level
        std::vector<Int> newton(k + 1);            // Delta^j of the chosen prefix at t0
        IntPoly found;
        auto rec = [&](auto&& self, int j) -> bool {
            for (const Int& v : cand[j]) {
                std::vector<Int>& cur = diag[j];
                cur.assign(j + 1, Int(0));
                cur[0] = v;
                for (int i = 1; i <= j; ++i) cur[i] = cur[i - 1] - diag[j - 1][i - 1];
                if (abs(cur[j]) > bound[j]) continue;
                newton[j] = cur[j];
                if (j < k) {
                    if (self(self, j + 1)) return true;
                    continue;
                }
                // Delta^k = k! * leading(g); the lead must divide leading(p).
                if (cur[k] == 0 || !divisible(cur[k], fact[k])) continue;
                if (!divisible(p.leading(), Int(cur[k] / fact[k]))) continue;
                // Newton-form interpolation; integer coefficients required.
                std::vector<Rat> acc(k + 1, Rat(0));
                std::vector<Rat> basis{Rat(1)};
                for (int i = 0; i <= k; ++i) {
                    Rat c(newton[i], fact[i]);
                    c.canonicalize();
                    for (size_t t = 0; t < basis.size(); ++t) acc[t] += c * basis[t];
                    if (i == k) break;
                    std::vector<Rat> nb(basis.size() + 1, Rat(0));
                    Rat xi(t0 + i);
                    for (size_t t = 0; t < basis.size(); ++t) {
                        nb[t + 1] += basis[t];
                        nb[t] -= xi * basis[t];
                    }
                    basis = std::move(nb);
                }
                std::vector<Int> ic(k + 1);
                bool integral = true;
                for (int i = 0; i <= k && integral; ++i) {
                    integral = acc[i].get_den() == 1;
                    if (integral) ic[i] = acc[i].get_num();
                }
                if (!integral) continue;
                IntPoly g = IntPoly(std::move(ic)).primitive_part();
                if (g.leading() < 0) g = -g;
                if (!divides(g, p)) continue;
                found = std::move(g);
                return true;
            }
            return false;
        };
        if (rec(rec, 0)) return found;
    }
    return {};
}

// Complete split of a squarefree primitive positive-leading polynomial.
std::vector<IntPoly> factor_squarefree_primitive(IntPoly p) {
    std::vector<IntPoly> out = strip_rational_roots(p);
    std::vector<IntPoly> todo;
    if (p.degree() >= 1) todo.push_back(std::move(p));
    while (!todo.empty()) {
        IntPoly q = std::move(todo.back());
        todo.pop_back();
        IntPoly g = kronecker_split(q);
        if (g.is_zero()) {
            out.push_back(std::move(q));
            continue;
        }
        todo.push_back(divide_exact(q, g));
        todo.push_back(std::move(g));
    }
    return out;
}

} // namespace

std::vector<FactorPower> squarefree_factor(const IntPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("squarefree_factor of zero polynomial");
    IntPoly p = f.primitive_part();
    if (!p.is_zero() && p.leading() < 0) p = -p;
    std::vector<FactorPower> out;
    if (p.degree() < 1) return out;

    // Yun's algorithm; every division below is exact over the integers.
    IntPoly der = p.derivative();
    IntPoly g = poly_gcd(p, der);
    IntPoly w = divide_exact(p, g);
    IntPoly y = divide_exact(der, g);
    IntPoly z = y - w.derivative();
    int mult = 1;
    while (w.degree() >= 1) {
        if (z.is_zero()) {
            out.push_back({std::move(w), mult});
            break;
        }
        IntPoly d = poly_gcd(w, z);
        if (d.degree() >= 1) out.push_back({d, mult});
        w = divide_exact(w, d);
        y = divide_exact(z, d);
        z = y - w.derivative();
        ++mult;
    }
    return out;
}

std::vector<FactorPower> factor_irreducible(const IntPoly& f, int degree_cap) {
    if (f.is_zero()) throw std::invalid_argument("factor_irreducible of zero polynomial");
    if (degree_cap < 1) throw std::invalid_argument("factorization degree cap must be >= 1");
    if (f.degree() > degree_cap)
        throw BoundError("factorization degree cap exceeded: degree " +
                             std::to_string(f.degree()) + " > cap " + std::to_string(degree_cap),
                         degree_cap);
    std::vector<FactorPower> out;
    for (const FactorPower& sq : squarefree_factor(f))
        for (IntPoly& q : factor_squarefree_primitive(sq.poly))
            out.push_back({std::move(q), sq.multiplicity});
    std::sort(out.begin(), out.end(),
              [](const FactorPower& a, const FactorPower& b) { return poly_less(a.poly, b.poly); });
    return out;
}

bool poly_less(const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int k = a.degree(); k >= 0; --k) {
        int c = cmp(a.coeff(k), b.coeff(k));
        if (c != 0) return c < 0;
    }
    return false;
}

PrescribedSpectrum PrescribedSpectrum::make(std::vector<SpectrumFactor> parts) {
    PrescribedSpectrum out;
    for (SpectrumFactor& part : parts) {
        if (part.poly.degree() < 1 || !part.poly.is_monic())
            throw std::invalid_argument("spectrum factor must be monic and nonconstant: " +
                                        part.poly.to_csv());
        if (part.multiplicity < 1)
            throw std::invalid_argument("spectrum factor multiplicity must be >= 1");
        if (!is_totally_real(part.poly))
            throw std::invalid_argument("spectrum factor is not totally real: " + part.poly.to_csv());
        auto hit = std::find_if(out.factors_.begin(), out.factors_.end(),
                                [&](const SpectrumFactor& s) { return s.poly == part.poly; });
        if (hit != out.factors_.end()) {
            hit->multiplicity += part.multiplicity;
            if (part.provenance == FactorProvenance::VerifiedIrreducible)
                hit->provenance = FactorProvenance::VerifiedIrreducible;
        } else {
            out.factors_.push_back(std::move(part));
        }
    }
    if (out.factors_.empty())
        throw std::invalid_argument("prescribed spectrum needs at least one factor");
    return out;
}

PrescribedSpectrum PrescribedSpectrum::of_polynomial(const IntPoly& f, int degree_cap) {
    if (f.degree() < 1 || !f.is_monic())
        throw std::invalid_argument("prescribed spectrum needs a monic nonconstant polynomial");
    std::vector<SpectrumFactor> parts;
    for (FactorPower& fp : factor_irreducible(f, degree_cap))
        parts.push_back({std::move(fp.poly), fp.multiplicity, FactorProvenance::VerifiedIrreducible});
    return make(std::move(parts));
}

int PrescribedSpectrum::part_count() const {
    int n = 0;
    for (const SpectrumFactor& s : factors_) n += s.multiplicity;
    return n;
}

int PrescribedSpectrum::total_degree() const {
    int n = 0;
    for (const SpectrumFactor& s : factors_) n += s.poly.degree() * s.multiplicity;
    return n;
}

} // namespace prespec
