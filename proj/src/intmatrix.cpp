#include "prespec/intmatrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace prespec {

IntegerMatrix::IntegerMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

IntegerMatrix IntegerMatrix::identity(int n) {
    IntegerMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::adjacency(const Graph& g) {
    IntegerMatrix m(g.order(), g.order());
    for (auto [u, v] : g.edges()) {
        m.at(u, v) = 1;
        m.at(v, u) = 1;
    }
    return m;
}

IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix sum dimension mismatch");
    IntegerMatrix out = a;
    for (size_t i = 0; i < out.e_.size(); ++i) out.e_[i] += b.e_[i];
    return out;
}

IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix difference dimension mismatch");
    IntegerMatrix out = a;
    for (size_t i = 0; i < out.e_.size(); ++i) out.e_[i] -= b.e_[i];
    return out;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    IntegerMatrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int k = 0; k < a.cols_; ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols_; ++j) {
                const Int& bkj = b.at(k, j);
                if (bkj != 0)
                    mpz_addmul(out.at(i, j).get_mpz_t(), aik.get_mpz_t(), bkj.get_mpz_t());
            }
        }
    }
    return out;
}

IntegerMatrix operator*(const Int& s, const IntegerMatrix& a) {
    IntegerMatrix out = a;
    for (Int& e : out.e_) e *= s;
    return out;
}

int rank(const IntegerMatrix& m) {
    IntegerMatrix w = m;
    const int nrows = w.rows();
    const int ncols = w.cols();
    int r = 0;
    Int prev = 1;
    for (int col = 0; col < ncols && r < nrows; ++col) {
        int piv = -1;
        for (int i = r; i < nrows; ++i) {
            if (w.at(i, col) != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue; // column already clear below row r
        if (piv != r)
            for (int j = col; j < ncols; ++j) std::swap(w.at(r, j), w.at(piv, j));
        const Int d = w.at(r, col);
        for (int i = r + 1; i < nrows; ++i) {
            Int head = std::move(w.at(i, col));
            w.at(i, col) = 0;
            for (int j = col + 1; j < ncols; ++j) {
                Int t = d * w.at(i, j) - head * w.at(r, j);
                mpz_divexact(w.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = d;
        ++r;
    }
    return r;
}

int kernel_dimension(const IntegerMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("kernel_dimension needs a square matrix");
    return m.cols() - rank(m);
}

IntPoly charpoly(const IntegerMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("charpoly needs a square matrix");
    const int n = m.rows();
    // Berkowitz: grow one principal submatrix at a time; c holds the
    // charpoly of the leading r x r block, highest degree first.
    std::vector<Int> c{Int(1)};
    for (int r = 0; r < n; ++r) {
        // Toeplitz column [1, -a_rr, -R C, -R M C, -R M^2 C, ...] with
        // R = row r, C = column r, M = leading r x r block.
        std::vector<Int> t(r + 2);
        t[0] = 1;
        t[1] = -m.at(r, r);
        if (r > 0) {
            std::vector<Int> v(r);
            for (int i = 0; i < r; ++i) v[i] = m.at(i, r);
            for (int k = 2; k <= r + 1; ++k) {
                Int dot = 0;
                for (int i = 0; i < r; ++i)
                    mpz_addmul(dot.get_mpz_t(), m.at(r, i).get_mpz_t(), v[i].get_mpz_t());
                t[k] = -dot;
                if (k == r + 1) break;
                std::vector<Int> nv(r);
                for (int i = 0; i < r; ++i)
                    for (int j = 0; j < r; ++j)
                        mpz_addmul(nv[i].get_mpz_t(), m.at(i, j).get_mpz_t(), v[j].get_mpz_t());
                v = std::move(nv);
            }
        }
        std::vector<Int> nc(r + 2);
        for (int i = 0; i <= r + 1; ++i)
            for (int j = std::max(0, i - r - 1); j <= std::min(i, r); ++j)
                mpz_addmul(nc[i].get_mpz_t(), t[i - j].get_mpz_t(), c[j].get_mpz_t());
        c = std::move(nc);
    }
    std::reverse(c.begin(), c.end());
    return IntPoly(std::move(c));
}

IntegerMatrix poly_at_matrix(const IntPoly& p, const IntegerMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("poly_at_matrix needs a square matrix");
    const int n = m.rows();
    IntegerMatrix out(n, n);
    if (p.is_zero()) return out;
    for (int i = 0; i < n; ++i) out.at(i, i) = p.leading();
    for (int k = p.degree() - 1; k >= 0; --k) {
        out = out * m;
        for (int i = 0; i < n; ++i) out.at(i, i) += p.coeff(k);
    }
    return out;
}

} // namespace prespec
