#pragma once

#include <string>
#include <vector>

#include "flatspan/rational.hpp"

namespace flatspan {

/// A point of rational projective space P^d, stored as d+1 homogeneous
/// coordinates scaled so the first nonzero coordinate is 1. Equality on
/// the canonical coordinates is exact projective equality.
class Point {
 public:
  /// From homogeneous coordinates (length d+1, not all zero).
  explicit Point(std::vector<Rational> homogeneous);

  /// Lift an affine point: prepend the homogenizing coordinate 1.
  static Point affine(const std::vector<Rational>& affine_coords);

  int ambient() const { return static_cast<int>(coords_.size()) - 1; }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& coord(int i) const { return coords_[static_cast<std::size_t>(i)]; }

  /// True when the homogenizing coordinate is nonzero (canonically, 1).
  bool is_affine() const { return coords_[0] != 0; }

  /// Affine coordinates (coords 1..d); requires is_affine().
  std::vector<Rational> affine_coords() const;

  bool operator==(const Point& other) const { return coords_ == other.coords_; }
  std::string to_string() const;

 private:
  std::vector<Rational> coords_;
};

int compare(const Point& a, const Point& b);
std::size_t hash_point(const Point& p);

struct PointHash {
  std::size_t operator()(const Point& p) const { return hash_point(p); }
};

struct PointLess {
  bool operator()(const Point& a, const Point& b) const { return compare(a, b) < 0; }
};

}  // namespace flatspan
