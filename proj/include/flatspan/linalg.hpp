#pragma once

#include <cassert>
#include <vector>

#include "flatspan/rational.hpp"

namespace flatspan {

/// Dense row-major matrix of rationals. Small: rows and columns are
/// bounded by the ambient dimension plus one.
class Matrix {
 public:
  Matrix() : cols_(0) {}
  explicit Matrix(int cols) : cols_(cols) { assert(cols >= 0); }
  Matrix(int rows, int cols) : cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return cols_ == 0 ? 0 : static_cast<int>(a_.size()) / cols_; }
  int cols() const { return cols_; }
  bool empty() const { return a_.empty(); }

  Rational& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  void append_row(const std::vector<Rational>& row) {
    assert(static_cast<int>(row.size()) == cols_);
    a_.insert(a_.end(), row.begin(), row.end());
  }

  void append_rows(const Matrix& other) {
    assert(other.cols_ == cols_);
    a_.insert(a_.end(), other.a_.begin(), other.a_.end());
  }

  std::vector<Rational> row(int r) const {
    return {a_.begin() + static_cast<std::size_t>(r) * cols_,
            a_.begin() + static_cast<std::size_t>(r + 1) * cols_};
  }

  void swap_rows(int r1, int r2) {
    if (r1 == r2) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(r1, c), at(r2, c));
  }

  void truncate_rows(int rows) { a_.resize(static_cast<std::size_t>(rows) * cols_); }

  bool operator==(const Matrix& other) const = default;

 private:
  int cols_;
  std::vector<Rational> a_;
};

/// In-place reduced row echelon form. Returns the rank; zero rows are
/// dropped, leading entries are 1 with zeros above and below, so the
/// result is the canonical representative of the row space.
int rref(Matrix& m);

/// Pivot columns of a matrix already in reduced echelon form.
std::vector<int> pivot_columns(const Matrix& m);

/// Basis of the right null space {x : m x = 0}, canonicalized by rref.
/// `m` must already be in reduced echelon form.
Matrix kernel(const Matrix& m);

int compare(const Matrix& a, const Matrix& b);
std::size_t hash_matrix(const Matrix& m);

}  // namespace flatspan
