#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "flatspan/analyze.hpp"
#include "flatspan/constructions.hpp"
#include "flatspan/io.hpp"

namespace py = pybind11;
using namespace flatspan;

namespace {

Rational rational_from_py(const py::handle& h) {
  if (py::isinstance<py::int_>(h)) {
    return parse_rational(py::str(h).cast<std::string>());
  }
  return parse_rational(h.cast<std::string>());
}

std::vector<Rational> coords_from_py(const py::sequence& seq) {
  std::vector<Rational> out;
  out.reserve(seq.size());
  for (const auto& item : seq) out.push_back(rational_from_py(item));
  return out;
}

std::vector<std::string> coords_to_py(const std::vector<Rational>& coords) {
  std::vector<std::string> out;
  out.reserve(coords.size());
  for (const Rational& c : coords) out.push_back(rational_to_string(c));
  return out;
}

Config make_config(const py::sequence& points, bool affine,
                   const py::object& origin, const py::object& weights) {
  std::vector<Point> pts;
  for (const auto& row : points) {
    auto coords = coords_from_py(row.cast<py::sequence>());
    pts.push_back(affine ? Point::affine(coords) : Point(std::move(coords)));
  }
  Config config(std::move(pts));
  if (!origin.is_none()) {
    if (py::isinstance<py::int_>(origin)) {
      config.set_origin_index(origin.cast<int>());
    } else {
      auto coords = coords_from_py(origin.cast<py::sequence>());
      config.set_origin_point(affine ? Point::affine(coords) : Point(std::move(coords)));
    }
  }
  if (!weights.is_none()) {
    std::vector<Rational> w;
    for (const auto& item : weights.cast<py::sequence>()) w.push_back(rational_from_py(item));
    config.set_weights(std::move(w));
  }
  return config;
}

py::dict fvector_to_dict(const FVector& fv) {
  py::dict out;
  py::list counts;
  for (int k = -1; k <= fv.ambient; ++k) counts.append(fv.f(k));
  out["f"] = counts;
  py::dict hist;
  for (int k = 0; k <= fv.ambient; ++k) {
    py::dict level;
    for (const auto& [mult, count] : fv.histogram[static_cast<std::size_t>(k)]) {
      level[py::int_(mult)] = count;
    }
    hist[py::int_(k)] = level;
  }
  out["histogram"] = hist;
  if (fv.has_origin) {
    py::dict split;
    for (int k = 0; k <= fv.ambient; ++k) {
      split[py::int_(k)] = py::make_tuple(fv.f_origin(k), fv.f_nonorigin(k));
    }
    out["origin_split"] = split;
  }
  return out;
}

py::dict gvector_to_dict(const GVector& gv) {
  py::dict out;
  out["g"] = gv.g;
  out["K"] = gv.K;
  py::list witnesses;
  for (const CoverWitness& w : gv.witnesses) {
    py::dict wd;
    py::list flats;
    for (const Flat& f : w.flats) flats.append(f);
    wd["flats"] = flats;
    wd["total_dim"] = w.total_dim;
    wd["covered"] = w.covered;
    witnesses.append(wd);
  }
  out["witnesses"] = witnesses;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact enumeration of spanned flats, essential dimension and degeneracy "
            "sequences of rational point configurations";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Point>(m, "Point")
      .def(py::init([](const py::sequence& coords) { return Point(coords_from_py(coords)); }),
           py::arg("homogeneous"))
      .def_static(
          "affine",
          [](const py::sequence& coords) { return Point::affine(coords_from_py(coords)); })
      .def_property_readonly("ambient", &Point::ambient)
      .def_property_readonly("coords", [](const Point& p) { return coords_to_py(p.coords()); })
      .def("__eq__", [](const Point& a, const Point& b) { return a == b; })
      .def("__hash__", [](const Point& p) { return hash_point(p); })
      .def("__repr__", [](const Point& p) { return "Point" + p.to_string(); });

  py::class_<Flat>(m, "Flat")
      .def_static("empty", &Flat::empty, py::arg("ambient"))
      .def_static(
          "span",
          [](const std::vector<Point>& pts, int ambient) {
            if (ambient >= 0) return Flat::span(ambient, pts);
            return Flat::span(pts);
          },
          py::arg("points"), py::arg("ambient") = -1)
      .def_property_readonly("dim", &Flat::dim)
      .def_property_readonly("ambient", &Flat::ambient)
      .def_property_readonly("basis",
                             [](const Flat& f) {
                               std::vector<std::vector<std::string>> rows;
                               for (int r = 0; r < f.basis().rows(); ++r) {
                                 rows.push_back(coords_to_py(f.basis().row(r)));
                               }
                               return rows;
                             })
      .def("contains_point", [](const Flat& f, const Point& p) { return f.contains(p); })
      .def("contains_flat", [](const Flat& f, const Flat& g) { return f.contains(g); })
      .def("__eq__", [](const Flat& a, const Flat& b) { return a == b; })
      .def("__hash__", [](const Flat& f) { return hash_flat(f); })
      .def("__repr__", [](const Flat& f) { return f.to_string(); });

  m.def("meet", &meet, py::arg("a"), py::arg("b"));
  m.def("join", &join, py::arg("a"), py::arg("b"));
  m.def(
      "project_point",
      [](const Flat& center, const Point& p) { return project(center, p); },
      py::arg("center"), py::arg("point"));
  m.def(
      "project_flat",
      [](const Flat& center, const Flat& f) { return project(center, f); },
      py::arg("center"), py::arg("flat"));

  py::class_<Config>(m, "Config")
      .def(py::init(&make_config), py::arg("points"), py::arg("affine") = true,
           py::arg("origin") = py::none(), py::arg("weights") = py::none())
      .def_property_readonly("n", &Config::n)
      .def_property_readonly("ambient", &Config::ambient)
      .def_property_readonly("points", &Config::points)
      .def_property_readonly("has_origin", &Config::has_origin)
      .def_property_readonly("has_weights", &Config::has_weights)
      .def("subset", &Config::subset, py::arg("indices"))
      .def("closure", &Config::closure)
      .def("to_text", [](const Config& c) { return config_to_text(c); })
      .def("to_json", [](const Config& c) { return config_to_json_text(c); })
      .def("__repr__", [](const Config& c) {
        std::ostringstream out;
        out << "Config(n=" << c.n() << ", ambient=" << c.ambient() << ")";
        return out.str();
      });

  m.def("load_config", [](const std::string& text) {
    std::istringstream in(text);
    return load_config(in);
  });
  m.def("load_config_file", &load_config_file, py::arg("path"));

  m.def(
      "project_config",
      [](const Config& c, const Flat& center) { return project_config(c, center); },
      py::arg("config"), py::arg("center"));
  m.def("project_from_point", &project_from_point, py::arg("config"), py::arg("point_index"));

  py::class_<FlatRecord>(m, "FlatRecord")
      .def_readonly("flat", &FlatRecord::flat)
      .def_readonly("incident", &FlatRecord::incident)
      .def_property_readonly("multiplicity", &FlatRecord::multiplicity);

  m.def("enumerate_spanned", &enumerate_spanned, py::arg("config"), py::arg("k_max"),
        py::arg("threads") = 0);
  m.def(
      "f_vector",
      [](const Config& c, int k_max, int threads) {
        return fvector_to_dict(f_vector(c, k_max, threads));
      },
      py::arg("config"), py::arg("k_max") = -1, py::arg("threads") = 0);
  m.def(
      "incidences",
      [](const Config& c, const std::vector<FlatRecord>& flats) {
        return incidences(c, flats);
      },
      py::arg("config"), py::arg("flats"));

  m.def(
      "weighted_sum",
      [](const Config& c, int k, const std::string& fn, int threads) {
        return rational_to_string(weighted_sum(c, k, WeightFn::parse(fn), threads));
      },
      py::arg("config"), py::arg("k"), py::arg("F") = "const1", py::arg("threads") = 0);
  m.def(
      "weighted_sum_via_projection",
      [](const Config& c, int k, const std::string& fn, int threads) {
        return rational_to_string(
            weighted_sum_via_projection(c, k, WeightFn::parse(fn), threads));
      },
      py::arg("config"), py::arg("k"), py::arg("F") = "const1", py::arg("threads") = 0);

  m.def(
      "essential_dimension",
      [](const Config& c, int threads) {
        auto [K, witness] = essential_dimension(c, threads);
        py::dict w;
        py::list flats;
        for (const Flat& f : witness.flats) flats.append(f);
        w["flats"] = flats;
        w["total_dim"] = witness.total_dim;
        w["covered"] = witness.covered;
        return py::make_tuple(K, w);
      },
      py::arg("config"), py::arg("threads") = 0);
  m.def(
      "g_vector",
      [](const Config& c, int threads) { return gvector_to_dict(g_vector(c, threads)); },
      py::arg("config"), py::arg("threads") = 0);

  m.def("gen_skew_lines", &gen_skew_lines, py::arg("points_per_line"), py::arg("lines"),
        py::arg("ambient"));
  m.def("gen_hypercube_base", &gen_hypercube_base, py::arg("k"));
  m.def("gen_hypercube_construction", &gen_hypercube_construction, py::arg("k"), py::arg("m"));
  m.def("gen_crosspolytope_base", &gen_crosspolytope_base, py::arg("j"));
  m.def("gen_crosspolytope_construction", &gen_crosspolytope_construction, py::arg("j"),
        py::arg("m"));

  m.def(
      "raise_construction",
      [](const Config& base, int m, int threads) {
        RaiseResult r = raise_config(base, m, threads);
        py::dict out;
        out["config"] = r.config;
        out["m"] = r.m;
        out["predicted"] = r.predicted;
        out["class2_extra"] = r.class2_extra;
        out["prediction_exact"] = r.prediction_exact;
        return out;
      },
      py::arg("base"), py::arg("m"), py::arg("threads") = 0);

  m.def(
      "analyze_json",
      [](const Config& c, int k_max, bool with_cover, int threads) {
        AnalyzeOptions opts;
        opts.k_max = k_max;
        opts.with_cover = with_cover;
        opts.threads = threads;
        return analyze(c, opts).to_json().dump(2);
      },
      py::arg("config"), py::arg("k_max") = -1, py::arg("with_cover") = true,
      py::arg("threads") = 0);

  m.def(
      "check",
      [](const Config& c, const std::string& claim, int k, const std::string& fn, int threads) {
        ClaimReport report;
        const WeightFn F = WeightFn::parse(fn);
        if (claim == "count-decrease") {
          report = check_count_decrease(c, k, threads);
        } else if (claim == "debruijn-erdos") {
          report = check_debruijn_erdos(c, threads);
        } else if (claim == "weighted-monotone") {
          report = check_weighted_monotone(c, k, F, threads);
        } else if (claim == "log-concavity") {
          report = check_log_concavity(c, threads);
        } else if (claim == "weighted-rewrite") {
          report = check_rewrite_identity(c, k, F, threads);
        } else if (claim == "contained-flats") {
          report = check_contained_flats(c, threads);
        } else if (claim == "witness-minimality") {
          report = check_witness_minimality(c, threads);
        } else if (claim == "projection-degeneracy") {
          report = check_projection_degeneracy(c, threads);
        } else {
          throw std::invalid_argument("unknown claim id '" + claim + "'");
        }
        return report.to_json().dump(2);
      },
      py::arg("config"), py::arg("claim"), py::arg("k") = 1, py::arg("F") = "const1",
      py::arg("threads") = 0);
}
