#include "prespec/sturm.hpp"

#include <stdexcept>
#include <vector>

namespace prespec {

namespace {

// Negated primitive remainder chain: t0 = s, t1 = s', t_{i+1} a positive
// multiple of -rem(t_{i-1}, t_i). Positive scaling keeps every sign pattern,
// so variation counts are those of the classical chain.
std::vector<IntPoly> build_chain(const IntPoly& s) {
    std::vector<IntPoly> chain{s, s.derivative().primitive_part()};
    if (chain[1].is_zero()) {
        chain.pop_back(); // constant s
        return chain;
    }
    while (true) {
        const IntPoly& a = chain[chain.size() - 2];
        const IntPoly& b = chain.back();
        if (b.degree() == 0) break;
        IntPoly r = pseudo_rem(a, b);
        if (r.is_zero()) break;
        // prem = lc(b)^e * rem; flip so the stored element is a positive
        // multiple of -rem.
        int e = a.degree() - b.degree() + 1;
        bool lc_pos = b.leading() > 0;
        bool factor_pos = lc_pos || e % 2 == 0;
        if (factor_pos) r = -r;
        chain.push_back(r.primitive_part());
    }
    return chain;
}

// Sign of p at the rational x = num/den (den > 0), via the homogeneous
// integer value sum c_k num^k den^(deg-k).
int sign_at(const IntPoly& p, const Int& num, const Int& den) {
    if (p.is_zero()) return 0;
    Int acc = p.leading();
    Int qpow = 1;
    for (int k = p.degree() - 1; k >= 0; --k) {
        qpow *= den;
        acc = acc * num + p.coeff(k) * qpow;
    }
    return sign_of(acc);
}

int sign_at(const IntPoly& p, const ExtRat& x) {
    if (p.is_zero()) return 0;
    if (x.is_finite()) return sign_at(p, x.value().get_num(), x.value().get_den());
    int lead = sign_of(p.leading());
    if (x.is_pos_inf()) return lead;
    return p.degree() % 2 ? -lead : lead;
}

// Sign variations with zeros skipped. With this convention
// V(a) - V(b) counts roots in the half-open (a, b] for squarefree t0.
int variations(const std::vector<IntPoly>& chain, const ExtRat& x) {
    int var = 0;
    int prev = 0;
    for (const IntPoly& p : chain) {
        int s = sign_at(p, x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

struct Counter {
    IntPoly sf;
    std::vector<IntPoly> chain;

    explicit Counter(const IntPoly& f) : sf(squarefree_part(f)), chain(build_chain(sf)) {}

    int roots_in(const ExtRat& lo, const ExtRat& hi) const {
        if (lo.is_pos_inf() || hi.is_neg_inf()) return 0;
        if (lo.is_finite() && hi.is_finite() && lo.value() >= hi.value()) return 0;
        return variations(chain, lo) - variations(chain, hi);
    }

    int roots_above(const Rat& c) const { return roots_in(ExtRat::at(c), ExtRat::pos_inf()); }
    int total() const { return roots_in(ExtRat::neg_inf(), ExtRat::pos_inf()); }
};

RootBox make_box(const Counter& counter, Rat lo, Rat hi) {
    RootBox box;
    box.poly = counter.sf;
    box.sign_lo = sign_at(counter.sf, ExtRat::at(lo));
    box.sign_hi = sign_at(counter.sf, ExtRat::at(hi));
    box.lo = std::move(lo);
    box.hi = std::move(hi);
    return box;
}

// (a, b] containing exactly one root: the largest (or smallest) real root.
RootBox isolate_extreme(const Counter& counter, bool largest, const Rat& precision) {
    Rat bound = root_bound(counter.sf);
    Rat lo = -bound;
    Rat hi = bound;
    while (true) {
        bool single = counter.roots_in(ExtRat::at(lo), ExtRat::at(hi)) == 1;
        if (single && hi - lo <= precision) break;
        Rat mid = (lo + hi) / 2;
        if (largest) {
            bool upper_occupied = counter.roots_in(ExtRat::at(mid), ExtRat::at(hi)) >= 1;
            (upper_occupied ? lo : hi) = mid;
        } else {
            bool lower_occupied = counter.roots_in(ExtRat::at(lo), ExtRat::at(mid)) >= 1;
            (lower_occupied ? hi : lo) = mid;
        }
    }
    return make_box(counter, lo, hi);
}

} // namespace

int sturm_count(const IntPoly& f, const ExtRat& lo, const ExtRat& hi) {
    if (f.is_zero()) throw std::invalid_argument("sturm_count of zero polynomial");
    return Counter(f).roots_in(lo, hi);
}

int count_real_roots(const IntPoly& f) { return Counter(f).total(); }

int count_roots_above(const IntPoly& f, const Rat& c) { return Counter(f).roots_above(c); }

bool is_totally_real(const IntPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("is_totally_real of zero polynomial");
    Counter counter(f);
    return counter.total() == counter.sf.degree();
}

Rat root_bound(const IntPoly& f) {
    if (f.is_zero() || f.degree() < 1) return Rat(1);
    Int max_abs = 0;
    for (int k = 0; k < f.degree(); ++k) {
        Int a = abs(f.coeff(k));
        if (a > max_abs) max_abs = a;
    }
    Rat bound(max_abs, abs(f.leading()));
    bound.canonicalize();
    return bound + 1;
}

RootBox refine_box(RootBox box, const Rat& target_width) {
    while (box.width() > target_width) {
        Rat mid = (box.lo + box.hi) / 2;
        int sm = sign_at(box.poly, ExtRat::at(mid));
        if (sm == 0) {
            // The root is exactly mid; shrink around it, keeping lo off-root.
            box.hi = mid;
            box.sign_hi = 0;
            Rat lo = box.lo;
            if (mid - lo > target_width) lo = mid - target_width;
            int sl = sign_at(box.poly, ExtRat::at(lo));
            while (sl == 0) {
                lo = (lo + mid) / 2;
                sl = sign_at(box.poly, ExtRat::at(lo));
            }
            box.lo = lo;
            box.sign_lo = sl;
        } else if (box.sign_lo != sm) {
            box.hi = mid;
            box.sign_hi = sm;
        } else {
            box.lo = mid;
            box.sign_lo = sm;
        }
    }
    return box;
}

std::pair<RootBox, RootBox> isolate_extreme_roots(const IntPoly& f, const Rat& precision) {
    if (f.is_zero() || f.degree() < 1)
        throw std::invalid_argument("isolate_extreme_roots needs a nonconstant polynomial");
    if (precision <= 0) throw std::invalid_argument("precision must be positive");
    Counter counter(f);
    if (counter.total() != counter.sf.degree())
        throw std::invalid_argument("isolate_extreme_roots requires a totally real polynomial");
    return {isolate_extreme(counter, true, precision), isolate_extreme(counter, false, precision)};
}

Cmp compare_largest_roots(const IntPoly& f, const IntPoly& g) {
    Counter cf(f);
    Counter cg(g);
    if (cf.total() < 1 || cg.total() < 1)
        throw std::invalid_argument("compare_largest_roots requires real roots on both sides");
    Rat coarse(1);
    RootBox bf = isolate_extreme(cf, true, coarse);
    RootBox bg = isolate_extreme(cg, true, coarse);
    IntPoly common = poly_gcd(cf.sf, cg.sf);
    const bool may_tie = common.degree() >= 1;
    while (true) {
        if (bg.hi <= bf.lo) return Cmp::Greater;
        if (bf.hi <= bg.lo) return Cmp::Less;
        if (may_tie) {
            // A root of gcd inside both boxes is simultaneously the unique
            // root of f's box and of g's box, so the two maxima coincide.
            Rat ilo = std::max(bf.lo, bg.lo);
            Rat ihi = std::min(bf.hi, bg.hi);
            if (ilo < ihi &&
                sturm_count(common, ExtRat::at(ilo), ExtRat::at(ihi)) >= 1)
                return Cmp::Equal;
        }
        Rat tf = bf.width() / 2;
        Rat tg = bg.width() / 2;
        bf = refine_box(std::move(bf), tf);
        bg = refine_box(std::move(bg), tg);
    }
}

} // namespace prespec
