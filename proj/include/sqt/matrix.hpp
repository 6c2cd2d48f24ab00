#pragma once

#include "sqt/rational.hpp"

#include <vector>

namespace sqt {

// Dense big-integer matrix, row major.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    BigInt& at(int r, int c) { return a_[idx(r, c)]; }
    const BigInt& at(int r, int c) const { return a_[idx(r, c)]; }

    void swap_rows(int r1, int r2);

    IntMatrix without_column(int c) const;
    IntMatrix select_rows(const std::vector<int>& rows) const;
    IntMatrix select(const std::vector<int>& rows, const std::vector<int>& cols) const;

private:
    size_t idx(int r, int c) const { return static_cast<size_t>(r) * cols_ + c; }

    int rows_, cols_;
    std::vector<BigInt> a_;
};

// Exact determinant by fraction-free (Bareiss) elimination.
BigInt det_bareiss(IntMatrix m);

// Exact rank over the integers, fraction-free elimination with column skipping.
int rank_bareiss(IntMatrix m);

// Kernel generator of a matrix with one-dimensional kernel: fraction-free
// echelon form plus exact rational back-substitution. Returns an empty vector
// when the nullity is not 1.
std::vector<Rational> kernel_vector(IntMatrix m);

// Integer vector collinear with v with coprime coordinates and a positive
// first nonzero coordinate. v must be nonzero.
std::vector<BigInt> to_primitive(const std::vector<Rational>& v);

}  // namespace sqt
