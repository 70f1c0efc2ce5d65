#pragma once

#include <vector>

#include "jsk/polynomial.hpp"
#include "jsk/rational.hpp"

namespace jsk {

// Dense matrix of exact rationals.  Everything here is deterministic: pivots
// are chosen by position, never by magnitude.
class RatMatrix {
  public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), Rational(0)) {}

    static RatMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Rational& at(int i, int j) const {
        return a_[static_cast<size_t>(i) * cols_ + j];
    }
    Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }

    RatMatrix transpose() const;
    RatMatrix operator*(const RatMatrix& other) const;
    bool operator==(const RatMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
    }

  private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

// Rank by fraction-free (Bareiss) elimination on an integer-scaled copy.
int rank_exact(const RatMatrix& m);

// Reduced row echelon form; returns the pivot column indices in order.
std::vector<int> rref_in_place(RatMatrix& m);

// Canonical basis of { v : m v = 0 }, one vector per free column of the
// RREF, ordered by free column index.  Each vector has the matrix's column
// count as its length.
std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m);

// Canonical basis of { w : w m = 0 }.
std::vector<std::vector<Rational>> left_kernel_basis(const RatMatrix& m);

// Scale a rational vector to coprime integers with positive first nonzero
// entry.  Zero vectors pass through.
std::vector<Rational> primitive_scale(const std::vector<Rational>& v);

// Rank of a polynomial matrix over the fraction field, again by fraction-free
// elimination (entries stay polynomial; divisions are exact).
int poly_matrix_rank(const std::vector<std::vector<Polynomial>>& m);

}  // namespace jsk
