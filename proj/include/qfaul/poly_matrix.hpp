#ifndef QFAUL_POLY_MATRIX_HPP
#define QFAUL_POLY_MATRIX_HPP

#include <span>
#include <stdexcept>
#include <vector>

#include "qfaul/ratfn.hpp"

namespace qfaul {

class NonSquare : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SizeMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DuplicatePoints : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Dense matrix of rational functions.
class PolyMatrix {
public:
    PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("PolyMatrix: negative dimension");
        entries_.resize(static_cast<size_t>(rows) * cols);
    }

    static PolyMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    RatFn& at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    const RatFn& at(int i, int j) const { return entries_[static_cast<size_t>(i) * cols_ + j]; }

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    bool operator==(const PolyMatrix& o) const = default;

private:
    int rows_;
    int cols_;
    std::vector<RatFn> entries_;
};

// Determinant via fraction-free elimination on the denominator-cleared
// integer-polynomial matrix.  Throws NonSquare.
RatFn det(const PolyMatrix& m);

// True iff m * inv equals the identity exactly.  Throws NonSquare and
// SizeMismatch.
bool matrix_inverse_check(const PolyMatrix& m, const PolyMatrix& inv);

// Elementary symmetric function e_k of the given values; e_0 = 1, and
// e_k = 0 for k > #values.
RatFn elem_sym(std::span<const RatFn> values, int k);

// Vandermonde matrix (x_i^(n-j)) for i, j = 1..n: column j holds the power
// n - j, so the last column is all ones.
PolyMatrix vandermonde(std::span<const RatFn> points);

// Closed-form inverse of vandermonde(points): entry (i, j) is
// (-1)^(n-i) e_{i-1}(points without x_j) / prod_{k != j} (x_k - x_j).
// Throws DuplicatePoints when two points coincide.
PolyMatrix vandermonde_inverse(std::span<const RatFn> points);

}  // namespace qfaul

#endif
