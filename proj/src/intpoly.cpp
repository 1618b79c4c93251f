#include "prespec/intpoly.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace prespec {

namespace {
const Int kZero = 0;
}

IntPoly::IntPoly(std::initializer_list<long> coeffs_lowest_first) {
    c_.reserve(coeffs_lowest_first.size());
    for (long v : coeffs_lowest_first) c_.emplace_back(v);
    normalize();
}

IntPoly::IntPoly(std::vector<Int> coeffs_lowest_first) : c_(std::move(coeffs_lowest_first)) {
    normalize();
}

IntPoly IntPoly::constant(Int c) {
    IntPoly p;
    if (c != 0) p.c_.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::monomial(int k, Int coeff) {
    if (k < 0) throw std::invalid_argument("monomial degree must be non-negative");
    IntPoly p;
    if (coeff != 0) {
        p.c_.assign(static_cast<std::size_t>(k) + 1, Int(0));
        p.c_.back() = std::move(coeff);
    }
    return p;
}

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& IntPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(k)];
}

const Int& IntPoly::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

bool IntPoly::is_monic() const { return !c_.empty() && c_.back() == 1; }

Int IntPoly::evaluate(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rat IntPoly::evaluate(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::derivative() const {
    std::vector<Int> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(Int(static_cast<long>(k)) * c_[k]);
    return IntPoly(std::move(d));
}

Int IntPoly::content() const {
    Int g = 0;
    for (const Int& c : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return {};
    Int g = content();
    std::vector<Int> out(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k)
        mpz_divexact(out[k].get_mpz_t(), c_[k].get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(out));
}

IntPoly IntPoly::reflected() const {
    std::vector<Int> out = c_;
    for (std::size_t k = 1; k < out.size(); k += 2) out[k] = -out[k];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> out(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) out[k] = -c_[k];
    return IntPoly(std::move(out));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> out(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) out[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) out[k] += b.c_[k];
    return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> out(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) out[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) out[k] -= b.c_[k];
    return IntPoly(std::move(out));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> out(a.c_.size() + b.c_.size() - 1, Int(0));
    Int t;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            mpz_mul(t.get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
            out[i + j] += t;
        }
    }
    return IntPoly(std::move(out));
}

IntPoly operator*(const Int& s, const IntPoly& a) {
    std::vector<Int> out(a.c_.size());
    for (std::size_t k = 0; k < a.c_.size(); ++k) out[k] = s * a.c_[k];
    return IntPoly(std::move(out));
}

std::string IntPoly::to_csv() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (k) out << ',';
        out << c_[k];
    }
    return out.str();
}

IntPoly IntPoly::from_csv(std::string_view text) {
    std::vector<Int> coeffs;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                                : comma - pos);
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
        if (tok.empty()) throw std::invalid_argument("polynomial csv: empty coefficient");
        std::string t(tok);
        if (mpz_class z; z.set_str(t, 10) == 0)
            coeffs.push_back(std::move(z));
        else
            throw std::invalid_argument("polynomial csv: bad integer \"" + t + "\"");
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return IntPoly(std::move(coeffs));
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.to_csv(); }

RatDivRem divrem(const IntPoly& dividend, const IntPoly& divisor) {
    if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
    std::vector<Rat> rem(dividend.coeffs().begin(), dividend.coeffs().end());
    const int dn = dividend.degree();
    const int dd = divisor.degree();
    RatDivRem out;
    if (dn < dd) {
        out.remainder = std::move(rem);
        return out;
    }
    out.quotient.assign(static_cast<std::size_t>(dn - dd) + 1, Rat(0));
    const Rat lead(divisor.leading());
    for (int k = dn - dd; k >= 0; --k) {
        Rat q = rem[static_cast<std::size_t>(k + dd)] / lead;
        out.quotient[static_cast<std::size_t>(k)] = q;
        if (q != 0)
            for (int j = 0; j <= dd; ++j)
                rem[static_cast<std::size_t>(k + j)] -= q * divisor.coeff(j);
    }
    rem.resize(static_cast<std::size_t>(dd > 0 ? dd : 0));
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    out.remainder = std::move(rem);
    return out;
}

bool divides(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero()) return g.is_zero();
    if (g.is_zero()) return true;
    if (g.degree() < f.degree()) return false;
    RatDivRem dr = divrem(g, f);
    if (!dr.remainder.empty()) return false;
    for (const Rat& q : dr.quotient)
        if (q.get_den() != 1) return false;
    return true;
}

IntPoly divide_exact(const IntPoly& g, const IntPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("division by zero polynomial");
    RatDivRem dr = divrem(g, f);
    if (!dr.remainder.empty()) throw std::domain_error("divide_exact: nonzero remainder");
    std::vector<Int> q(dr.quotient.size());
    for (std::size_t k = 0; k < q.size(); ++k) {
        if (dr.quotient[k].get_den() != 1)
            throw std::domain_error("divide_exact: non-integer quotient");
        q[k] = dr.quotient[k].get_num();
    }
    return IntPoly(std::move(q));
}

IntPoly pseudo_rem(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("pseudo_rem: zero divisor");
    if (f.degree() < g.degree()) return f;
    // r with lc(g)^(deg f - deg g + 1) * f = q*g + r; one lc factor applied
    // per elimination step, so no trailing fixup is needed.
    std::vector<Int> rem = f.coeffs();
    const int dd = g.degree();
    const Int& lead = g.leading();
    for (int k = f.degree() - dd; k >= 0; --k) {
        Int top = rem[static_cast<std::size_t>(k + dd)];
        for (Int& c : rem) c *= lead;
        if (top != 0)
            for (int j = 0; j <= dd; ++j)
                rem[static_cast<std::size_t>(k + j)] -= top * g.coeff(j);
        rem.resize(static_cast<std::size_t>(k + dd));
    }
    return IntPoly{std::move(rem)};
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero()) return b.leading() < 0 ? -b : b;
    if (b.is_zero()) return a.leading() < 0 ? -a : a;
    Int cont;
    mpz_gcd(cont.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    IntPoly u = a.primitive_part();
    IntPoly v = b.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        IntPoly r = pseudo_rem(u, v).primitive_part();
        u = std::move(v);
        v = std::move(r);
    }
    if (u.leading() < 0) u = -u;
    return cont * u;
}

IntPoly squarefree_part(const IntPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("squarefree part of zero polynomial");
    if (f.degree() == 0) return IntPoly{1};
    IntPoly g = poly_gcd(f, f.derivative());
    IntPoly s = divide_exact(f, g).primitive_part();
    if (s.leading() < 0) s = -s;
    return s;
}

Int power_sum(const IntPoly& f, int k) {
    if (!f.is_monic()) throw std::invalid_argument("power_sum requires a monic polynomial");
    if (k != 1 && k != 2) throw std::invalid_argument("power_sum supports k = 1 or 2");
    const int n = f.degree();
    const Int& a1 = f.coeff(n - 1);
    if (k == 1) return -a1;
    return a1 * a1 - 2 * f.coeff(n - 2);
}

namespace {

// Entries of the Sylvester-style matrices used below are integer polynomials;
// Bareiss elimination keeps every intermediate an exact minor, so the
// divisions are exact in Z[x].
IntPoly bareiss_poly_det(std::vector<std::vector<IntPoly>> m) {
    const std::size_t n = m.size();
    if (n == 0) return IntPoly{1};
    int sign = 1;
    IntPoly prev{1};
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return {};
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            }
            m[i][k] = {};
        }
        prev = m[k][k];
    }
    return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

Int binomial(int n, int k) {
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

// Sylvester matrix of A and B as polynomials in y with coefficients in Z[x];
// both given highest y-degree first.
std::vector<std::vector<IntPoly>> sylvester(const std::vector<IntPoly>& a,
                                            const std::vector<IntPoly>& b) {
    const std::size_t da = a.size() - 1;
    const std::size_t db = b.size() - 1;
    const std::size_t n = da + db;
    std::vector<std::vector<IntPoly>> m(n, std::vector<IntPoly>(n));
    for (std::size_t r = 0; r < db; ++r)
        for (std::size_t c = 0; c <= da; ++c) m[r][r + c] = a[c];
    for (std::size_t r = 0; r < da; ++r)
        for (std::size_t c = 0; c <= db; ++c) m[db + r][r + c] = b[c];
    return m;
}

} // namespace

Int resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return 0;
    if (f.degree() == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), f.leading().get_mpz_t(), static_cast<unsigned long>(g.degree()));
        return r;
    }
    if (g.degree() == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), g.leading().get_mpz_t(), static_cast<unsigned long>(f.degree()));
        return r;
    }
    std::vector<IntPoly> a, b;
    for (int k = f.degree(); k >= 0; --k) a.push_back(IntPoly::constant(f.coeff(k)));
    for (int k = g.degree(); k >= 0; --k) b.push_back(IntPoly::constant(g.coeff(k)));
    IntPoly det = bareiss_poly_det(sylvester(a, b));
    if (det.is_zero()) return 0;
    if (det.degree() != 0) throw std::logic_error("resultant: non-constant determinant");
    return det.leading();
}

IntPoly compose_sum(const IntPoly& f, const IntPoly& g) {
    if (!f.is_monic() || !g.is_monic())
        throw std::invalid_argument("compose_sum requires monic operands");
    if (f.degree() < 1 || g.degree() < 1)
        throw std::invalid_argument("compose_sum requires degree >= 1 operands");
    // Res_y(f(y), g(x - y)): rows of f(y) are constant in x, rows of g(x - y)
    // expand through the binomial theorem.
    std::vector<IntPoly> a;
    for (int k = f.degree(); k >= 0; --k) a.push_back(IntPoly::constant(f.coeff(k)));
    const int dg = g.degree();
    std::vector<IntPoly> b(static_cast<std::size_t>(dg) + 1);
    for (int k = dg; k >= 0; --k) {
        // coefficient of y^k: sum_{j>=k} g_j C(j,k) (-1)^k x^(j-k)
        std::vector<Int> cx(static_cast<std::size_t>(dg - k) + 1, Int(0));
        for (int j = k; j <= dg; ++j) cx[static_cast<std::size_t>(j - k)] = g.coeff(j) * binomial(j, k);
        IntPoly ck{std::move(cx)};
        if (k % 2) ck = -ck;
        b[static_cast<std::size_t>(dg - k)] = std::move(ck);
    }
    IntPoly det = bareiss_poly_det(sylvester(a, b));
    if (det.degree() != f.degree() * g.degree())
        throw std::logic_error("compose_sum: unexpected degree");
    if (det.leading() == -1) det = -det;
    if (det.leading() != 1) throw std::logic_error("compose_sum: non-unit leading coefficient");
    return det;
}

bool is_unimodal(std::span<const Int> seq) {
    std::size_t i = 0;
    while (i + 1 < seq.size() && seq[i] <= seq[i + 1]) ++i;
    while (i + 1 < seq.size() && seq[i] >= seq[i + 1]) ++i;
    return seq.empty() || i == seq.size() - 1;
}

bool is_unimodal(const std::vector<Int>& seq) {
    return is_unimodal(std::span<const Int>(seq.data(), seq.size()));
}

std::vector<Int> abs_profile(const IntPoly& f) {
    std::vector<Int> out;
    for (int k = f.degree(); k >= 0; --k)
        if (f.coeff(k) != 0) out.push_back(abs(f.coeff(k)));
    return out;
}

std::vector<Int> literal_profile(const IntPoly& f) {
    std::vector<Int> out;
    for (int k = f.degree(); k >= 0; --k) out.push_back(f.coeff(k));
    return out;
}

} // namespace prespec
