#pragma once

#include <string>
#include <vector>

#include "flatspan/linalg.hpp"
#include "flatspan/point.hpp"

namespace flatspan {

/// A projective subspace of P^d, stored as the reduced row echelon basis
/// of the corresponding linear subspace of Q^{d+1}. The representation is
/// canonical: two flats are equal iff their basis matrices are identical.
/// dim = rank - 1, so the empty flat has dimension -1.
class Flat {
 public:
  /// The empty flat of P^d.
  static Flat empty(int ambient);

  /// Smallest flat containing the given points (all of ambient d).
  /// The list must be nonempty (the ambient is read off the points);
  /// use the explicit-ambient overload for span() of the empty set.
  static Flat span(const std::vector<Point>& points);
  static Flat span(int ambient, const std::vector<Point>& points);

  /// Smallest flat containing the given flats.
  static Flat span_flats(const std::vector<Flat>& flats);

  /// From raw homogeneous generator rows; rows are echelonized.
  static Flat from_rows(int ambient, Matrix rows);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows() - 1; }
  bool is_empty() const { return basis_.rows() == 0; }
  const Matrix& basis() const { return basis_; }

  bool contains(const Point& p) const;
  bool contains(const Flat& other) const;

  /// Reduce a coordinate vector modulo the basis (eliminate all pivot
  /// coordinates). The result is zero iff the vector lies on the flat.
  void reduce(std::vector<Rational>& v) const;

  /// Span of this flat and one extra point (fast path; keeps echelon form
  /// incrementally). Returns *this when the point already lies on it.
  Flat with_point(const Point& p) const;

  std::vector<int> pivots() const { return pivot_columns(basis_); }

  bool operator==(const Flat& other) const {
    return ambient_ == other.ambient_ && basis_ == other.basis_;
  }

  std::string to_string() const;

 private:
  Flat(int ambient, Matrix basis) : ambient_(ambient), basis_(std::move(basis)) {}

  int ambient_ = 0;
  Matrix basis_;
};

/// Intersection of two flats (exact; canonical).
Flat meet(const Flat& a, const Flat& b);

/// Span of two flats.
Flat join(const Flat& a, const Flat& b);

/// Projection from a flat, realized as the quotient map: coordinates are
/// reduced modulo the center's echelon basis and restricted to the
/// non-pivot columns, a fixed choice of complement. The image lives in
/// P^{d - dim(center) - 2 + 1} = P^{d - k - 1}.
/// Throws when the argument is contained in the center.
Point project(const Flat& center, const Point& p);
Flat project(const Flat& center, const Flat& f);

int compare(const Flat& a, const Flat& b);
std::size_t hash_flat(const Flat& f);

struct FlatHash {
  std::size_t operator()(const Flat& f) const { return hash_flat(f); }
};

struct FlatLess {
  bool operator()(const Flat& a, const Flat& b) const { return compare(a, b) < 0; }
};

}  // namespace flatspan
