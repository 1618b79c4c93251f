#ifndef PRESPEC_INTMATRIX_HPP
#define PRESPEC_INTMATRIX_HPP

#include <vector>

#include "prespec/graph.hpp"
#include "prespec/intpoly.hpp"
#include "prespec/types.hpp"

namespace prespec {

/// Dense row-major arbitrary-precision integer matrix.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(int rows, int cols); // zero-filled

    static IntegerMatrix identity(int n);
    static IntegerMatrix adjacency(const Graph& g);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Int& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const IntegerMatrix&) const = default;

    friend IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b);
    friend IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b);
    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
    friend IntegerMatrix operator*(const Int& s, const IntegerMatrix& a);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> e_;
};

/// Rank over the rationals, by fraction-free (Bareiss) elimination.
int rank(const IntegerMatrix& m);

/// Dimension of the rational null space of a square matrix.
int kernel_dimension(const IntegerMatrix& m);

/// Characteristic polynomial det(xI - m) of a square matrix, monic of
/// degree = order, by the division-free Berkowitz algorithm.
IntPoly charpoly(const IntegerMatrix& m);

/// p(m) for square m, evaluated by Horner over integer matrices.
IntegerMatrix poly_at_matrix(const IntPoly& p, const IntegerMatrix& m);

} // namespace prespec

#endif
