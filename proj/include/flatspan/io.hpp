#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "flatspan/config.hpp"

namespace flatspan {

/// Input problem (syntax, duplicate points, inconsistent dimensions...).
/// `line` is 1-based; 0 when no line applies (e.g. JSON input).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                    : message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Load a configuration from the text format
///
///   # comment
///   affine 2            (or: projective 2)
///   origin 0            (optional; 0-based point index)
///   origin point 0 0    (optional; coordinates of a non-member origin)
///   weight 1 3/2        (optional; 0-based index, rational weight)
///   0 1
///   1 1/2
///
/// or, when the stream starts with '{', from the JSON equivalent
/// {mode, dim, origin, weights, points}. Affine rows are lifted with a
/// prepended homogeneous coordinate 1. Duplicate points are an error.
Config load_config(std::istream& in);
Config load_config_file(const std::string& path);

/// Serialize to the text format (affine mode when every point is affine).
std::string config_to_text(const Config& config);
/// Serialize to the JSON config format.
std::string config_to_json_text(const Config& config, int indent = 2);

void save_config_file(const Config& config, const std::string& path, bool as_json = false);

}  // namespace flatspan
