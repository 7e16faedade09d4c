#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flatspan/flat.hpp"
#include "flatspan/point.hpp"

namespace flatspan {

/// An ordered, duplicate-free set of points of P^d, optionally carrying a
/// designated origin (either one of the points or a distinguished extra
/// point) and per-point weights >= 1.
class Config {
 public:
  Config() = default;
  explicit Config(std::vector<Point> points);

  int n() const { return static_cast<int>(points_.size()); }
  int ambient() const { return ambient_; }
  const std::vector<Point>& points() const { return points_; }
  const Point& point(int i) const { return points_[static_cast<std::size_t>(i)]; }

  /// Designate a config point as the origin.
  void set_origin_index(int index);
  /// Designate an origin that need not be a config point.
  void set_origin_point(Point origin);
  void clear_origin();

  bool has_origin() const { return origin_.has_value(); }
  const Point& origin() const;
  /// Index of the origin among the points, if it is one of them.
  std::optional<int> origin_index() const;

  void set_weights(std::vector<Rational> weights);
  bool has_weights() const { return !weights_.empty(); }
  const std::vector<Rational>& weights() const { return weights_; }
  /// Weight of point i; 1 when no weights are set.
  Rational weight(int i) const;
  /// Sum of all point weights (= n for unweighted configs).
  Rational total_weight() const;

  /// Sub-configuration on the given point indices (ascending order is not
  /// required; weights carry over, origin carries over when still present
  /// as a point or was a distinguished point).
  Config subset(const std::vector<int>& indices) const;

  /// Index of a point equal to p, or nullopt.
  std::optional<int> find(const Point& p) const;

  /// Smallest flat containing all points.
  Flat closure() const;

 private:
  void check_point(const Point& p) const;

  std::vector<Point> points_;
  int ambient_ = -1;
  std::optional<Point> origin_;
  std::optional<int> origin_index_;
  std::vector<Rational> weights_;
};

/// Image configuration under projection from `center`: points on the
/// center are dropped, coincident images are merged, and weights of merged
/// points are summed (the W_center weighting). The image keeps first-seen
/// input order; it carries weights iff the source did.
Config project_config(const Config& config, const Flat& center);

/// Convenience: projection from one config point.
Config project_from_point(const Config& config, int point_index);

}  // namespace flatspan
