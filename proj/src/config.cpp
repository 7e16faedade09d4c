#include "flatspan/config.hpp"

#include <map>
#include <stdexcept>
#include <unordered_map>

namespace flatspan {

Config::Config(std::vector<Point> points) : points_(std::move(points)) {
  if (!points_.empty()) ambient_ = points_.front().ambient();
  std::unordered_map<Point, int, PointHash> seen;
  seen.reserve(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    check_point(points_[i]);
    auto [it, inserted] = seen.emplace(points_[i], static_cast<int>(i));
    if (!inserted) {
      throw std::invalid_argument("duplicate point at indices " + std::to_string(it->second) +
                                  " and " + std::to_string(i) + ": " + points_[i].to_string());
    }
  }
}

void Config::check_point(const Point& p) const {
  if (ambient_ >= 0 && p.ambient() != ambient_) {
    throw std::invalid_argument("inconsistent ambient dimension: expected " +
                                std::to_string(ambient_) + ", got " +
                                std::to_string(p.ambient()));
  }
}

void Config::set_origin_index(int index) {
  if (index < 0 || index >= n()) {
    throw std::out_of_range("origin index " + std::to_string(index) + " out of range");
  }
  origin_index_ = index;
  origin_ = points_[static_cast<std::size_t>(index)];
}

void Config::set_origin_point(Point origin) {
  check_point(origin);
  origin_index_.reset();
  origin_ = std::move(origin);
  // the distinguished point may coincide with a config point
  for (int i = 0; i < n(); ++i) {
    if (points_[static_cast<std::size_t>(i)] == *origin_) {
      origin_index_ = i;
      break;
    }
  }
}

void Config::clear_origin() {
  origin_.reset();
  origin_index_.reset();
}

const Point& Config::origin() const {
  if (!origin_) throw std::logic_error("no origin designated");
  return *origin_;
}

std::optional<int> Config::origin_index() const { return origin_index_; }

void Config::set_weights(std::vector<Rational> weights) {
  if (static_cast<int>(weights.size()) != n()) {
    throw std::invalid_argument("need one weight per point");
  }
  for (const Rational& w : weights) {
    if (w < 1) throw std::invalid_argument("weights must be >= 1, got " + rational_to_string(w));
  }
  weights_ = std::move(weights);
}

Rational Config::weight(int i) const {
  if (weights_.empty()) return 1;
  return weights_[static_cast<std::size_t>(i)];
}

Rational Config::total_weight() const {
  Rational total = 0;
  for (int i = 0; i < n(); ++i) total += weight(i);
  return total;
}

Config Config::subset(const std::vector<int>& indices) const {
  std::vector<Point> pts;
  pts.reserve(indices.size());
  std::vector<Rational> w;
  for (int i : indices) {
    pts.push_back(points_[static_cast<std::size_t>(i)]);
    if (has_weights()) w.push_back(weights_[static_cast<std::size_t>(i)]);
  }
  Config out(std::move(pts));
  if (has_weights()) out.set_weights(std::move(w));
  if (origin_) {
    if (!origin_index_) {
      out.set_origin_point(*origin_);
    } else if (auto idx = out.find(*origin_)) {
      out.set_origin_index(*idx);
    }
  }
  return out;
}

std::optional<int> Config::find(const Point& p) const {
  for (int i = 0; i < n(); ++i) {
    if (points_[static_cast<std::size_t>(i)] == p) return i;
  }
  return std::nullopt;
}

Flat Config::closure() const {
  if (points_.empty()) throw std::logic_error("closure of an empty config");
  return Flat::span(points_);
}

Config project_config(const Config& config, const Flat& center) {
  std::vector<Point> images;
  std::vector<Rational> weights;
  std::unordered_map<Point, std::size_t, PointHash> index_of;
  for (int i = 0; i < config.n(); ++i) {
    const Point& p = config.point(i);
    if (center.contains(p)) continue;
    Point image = project(center, p);
    auto it = index_of.find(image);
    if (it == index_of.end()) {
      index_of.emplace(image, images.size());
      images.push_back(std::move(image));
      weights.push_back(config.weight(i));
    } else {
      weights[it->second] += config.weight(i);
    }
  }
  Config out{std::move(images)};
  if (config.has_weights()) out.set_weights(std::move(weights));
  return out;
}

Config project_from_point(const Config& config, int point_index) {
  if (point_index < 0 || point_index >= config.n()) {
    throw std::out_of_range("point index out of range");
  }
  return project_config(config, Flat::span({config.point(point_index)}));
}

}  // namespace flatspan
