#include "flatspan/point.hpp"

#include <sstream>
#include <stdexcept>

namespace flatspan {

Point::Point(std::vector<Rational> homogeneous) : coords_(std::move(homogeneous)) {
  if (coords_.empty()) throw std::invalid_argument("point needs at least one coordinate");
  std::size_t lead = coords_.size();
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] != 0) {
      lead = i;
      break;
    }
  }
  if (lead == coords_.size()) {
    throw std::invalid_argument("homogeneous coordinates must not all be zero");
  }
  if (coords_[lead] != 1) {
    Rational inv = 1 / coords_[lead];
    for (std::size_t i = lead; i < coords_.size(); ++i) coords_[i] *= inv;
  }
}

Point Point::affine(const std::vector<Rational>& affine_coords) {
  std::vector<Rational> homo;
  homo.reserve(affine_coords.size() + 1);
  homo.emplace_back(1);
  homo.insert(homo.end(), affine_coords.begin(), affine_coords.end());
  return Point(std::move(homo));
}

std::vector<Rational> Point::affine_coords() const {
  if (!is_affine()) throw std::domain_error("point at infinity has no affine coordinates");
  return {coords_.begin() + 1, coords_.end()};
}

std::string Point::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out << " ";
    out << rational_to_string(coords_[i]);
  }
  out << ")";
  return out.str();
}

int compare(const Point& a, const Point& b) {
  if (a.ambient() != b.ambient()) return a.ambient() < b.ambient() ? -1 : 1;
  for (int i = 0; i <= a.ambient(); ++i) {
    int cmp = compare(a.coord(i), b.coord(i));
    if (cmp != 0) return cmp;
  }
  return 0;
}

std::size_t hash_point(const Point& p) {
  std::size_t h = 0x9e1;
  for (const Rational& c : p.coords()) h = detail::hash_combine(h, hash_rational(c));
  return h;
}

}  // namespace flatspan
