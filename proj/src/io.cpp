#include "flatspan/io.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace flatspan {

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

Rational parse_rational_at(const std::string& text, int line) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), line);
  }
}

int parse_index_at(const std::string& text, int line) {
  try {
    std::size_t used = 0;
    int v = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ParseError("invalid index '" + text + "'", line);
  }
}

Config load_config_text(std::istream& in) {
  std::string line;
  int lineno = 0;

  bool affine = false;
  int dim = -1;
  bool have_header = false;
  std::optional<int> origin_index;
  std::optional<std::vector<Rational>> origin_coords;
  int origin_line = 0;
  std::map<int, Rational> weight_by_index;
  int weight_line = 0;
  std::vector<std::vector<Rational>> rows;
  std::vector<int> row_lines;

  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::vector<std::string> toks = tokens(line);
    if (toks.empty()) continue;

    if (!have_header) {
      if (toks.size() != 2 || (toks[0] != "affine" && toks[0] != "projective")) {
        throw ParseError("expected header 'affine <d>' or 'projective <d>'", lineno);
      }
      affine = toks[0] == "affine";
      dim = parse_index_at(toks[1], lineno);
      if (dim < 0) throw ParseError("dimension must be >= 0", lineno);
      have_header = true;
      continue;
    }

    if (toks[0] == "origin") {
      if (toks.size() >= 2 && toks[1] == "point") {
        if (static_cast<int>(toks.size()) != 2 + (affine ? dim : dim + 1)) {
          throw ParseError("origin point needs " + std::to_string(affine ? dim : dim + 1) +
                               " coordinates",
                           lineno);
        }
        std::vector<Rational> coords;
        for (std::size_t i = 2; i < toks.size(); ++i) {
          coords.push_back(parse_rational_at(toks[i], lineno));
        }
        origin_coords = std::move(coords);
      } else if (toks.size() == 2) {
        origin_index = parse_index_at(toks[1], lineno);
      } else {
        throw ParseError("expected 'origin <index>' or 'origin point <coords>'", lineno);
      }
      origin_line = lineno;
      continue;
    }

    if (toks[0] == "weight") {
      if (toks.size() != 3) throw ParseError("expected 'weight <index> <rational>'", lineno);
      weight_by_index[parse_index_at(toks[1], lineno)] = parse_rational_at(toks[2], lineno);
      weight_line = lineno;
      continue;
    }

    const int expected = affine ? dim : dim + 1;
    if (static_cast<int>(toks.size()) != expected) {
      throw ParseError("expected " + std::to_string(expected) + " coordinates, got " +
                           std::to_string(toks.size()),
                       lineno);
    }
    std::vector<Rational> coords;
    coords.reserve(toks.size());
    for (const std::string& t : toks) coords.push_back(parse_rational_at(t, lineno));
    rows.push_back(std::move(coords));
    row_lines.push_back(lineno);
  }

  if (!have_header) throw ParseError("empty input: missing header", lineno == 0 ? 1 : lineno);

  std::vector<Point> pts;
  pts.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    try {
      pts.push_back(affine ? Point::affine(rows[i]) : Point(rows[i]));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), row_lines[i]);
    }
  }

  Config config;
  try {
    config = Config(std::move(pts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }

  if (origin_index) {
    if (*origin_index < 0 || *origin_index >= config.n()) {
      throw ParseError("origin index out of range", origin_line);
    }
    config.set_origin_index(*origin_index);
  } else if (origin_coords) {
    try {
      config.set_origin_point(affine ? Point::affine(*origin_coords) : Point(*origin_coords));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), origin_line);
    }
  }

  if (!weight_by_index.empty()) {
    std::vector<Rational> weights(static_cast<std::size_t>(config.n()), Rational(1));
    for (const auto& [idx, w] : weight_by_index) {
      if (idx < 0 || idx >= config.n()) throw ParseError("weight index out of range", weight_line);
      weights[static_cast<std::size_t>(idx)] = w;
    }
    try {
      config.set_weights(std::move(weights));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), weight_line);
    }
  }
  return config;
}

Config load_config_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    const std::string mode = j.at("mode").get<std::string>();
    if (mode != "affine" && mode != "projective") {
      throw ParseError("mode must be 'affine' or 'projective'");
    }
    const bool affine = mode == "affine";
    const int dim = j.at("dim").get<int>();
    auto coords_of = [&](const nlohmann::json& arr) {
      std::vector<Rational> coords;
      for (const auto& v : arr) {
        coords.push_back(v.is_string() ? parse_rational(v.get<std::string>())
                                       : Rational(v.get<long>()));
      }
      if (static_cast<int>(coords.size()) != (affine ? dim : dim + 1)) {
        throw ParseError("point needs " + std::to_string(affine ? dim : dim + 1) +
                         " coordinates");
      }
      return coords;
    };
    std::vector<Point> pts;
    for (const auto& row : j.at("points")) {
      auto coords = coords_of(row);
      pts.push_back(affine ? Point::affine(coords) : Point(coords));
    }
    Config config(std::move(pts));
    if (j.contains("origin") && !j["origin"].is_null()) {
      if (j["origin"].is_number_integer()) {
        config.set_origin_index(j["origin"].get<int>());
      } else {
        auto coords = coords_of(j["origin"]);
        config.set_origin_point(affine ? Point::affine(coords) : Point(coords));
      }
    }
    if (j.contains("weights") && !j["weights"].is_null()) {
      std::vector<Rational> weights;
      for (const auto& w : j["weights"]) {
        weights.push_back(w.is_string() ? parse_rational(w.get<std::string>())
                                        : Rational(w.get<long>()));
      }
      config.set_weights(std::move(weights));
    }
    return config;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

Config load_config(std::istream& in) {
  // peek past whitespace: '{' selects the JSON reader
  int c;
  while ((c = in.peek()) != EOF && std::isspace(c)) in.get();
  if (c == '{') return load_config_json(in);
  return load_config_text(in);
}

Config load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return load_config(in);
}

std::string config_to_text(const Config& config) {
  std::ostringstream out;
  bool affine = true;
  for (const Point& p : config.points()) {
    if (!p.is_affine()) {
      affine = false;
      break;
    }
  }
  if (config.has_origin() && !config.origin().is_affine()) affine = false;
  out << (affine ? "affine " : "projective ") << config.ambient() << "\n";
  if (config.has_origin()) {
    if (auto idx = config.origin_index()) {
      out << "origin " << *idx << "\n";
    } else {
      out << "origin point";
      const auto coords =
          affine ? config.origin().affine_coords() : config.origin().coords();
      for (const Rational& c : coords) out << " " << rational_to_string(c);
      out << "\n";
    }
  }
  if (config.has_weights()) {
    for (int i = 0; i < config.n(); ++i) {
      if (config.weight(i) != 1) {
        out << "weight " << i << " " << rational_to_string(config.weight(i)) << "\n";
      }
    }
  }
  for (const Point& p : config.points()) {
    const auto coords = affine ? p.affine_coords() : p.coords();
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (i) out << " ";
      out << rational_to_string(coords[i]);
    }
    out << "\n";
  }
  return out.str();
}

std::string config_to_json_text(const Config& config, int indent) {
  bool affine = true;
  for (const Point& p : config.points()) {
    if (!p.is_affine()) {
      affine = false;
      break;
    }
  }
  if (config.has_origin() && !config.origin().is_affine()) affine = false;

  auto coords_json = [&](const Point& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Rational& c : affine ? p.affine_coords() : p.coords()) {
      arr.push_back(rational_to_string(c));
    }
    return arr;
  };

  nlohmann::json j;
  j["mode"] = affine ? "affine" : "projective";
  j["dim"] = config.ambient();
  j["points"] = nlohmann::json::array();
  for (const Point& p : config.points()) j["points"].push_back(coords_json(p));
  if (config.has_origin()) {
    if (auto idx = config.origin_index()) {
      j["origin"] = *idx;
    } else {
      j["origin"] = coords_json(config.origin());
    }
  } else {
    j["origin"] = nullptr;
  }
  if (config.has_weights()) {
    nlohmann::json arr = nlohmann::json::array();
    for (int i = 0; i < config.n(); ++i) arr.push_back(rational_to_string(config.weight(i)));
    j["weights"] = arr;
  } else {
    j["weights"] = nullptr;
  }
  return j.dump(indent) + "\n";
}

void save_config_file(const Config& config, const std::string& path, bool as_json) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  out << (as_json ? config_to_json_text(config) : config_to_text(config));
}

}  // namespace flatspan
