#include "flatspan/constructions.hpp"

#include <stdexcept>

namespace flatspan {

namespace {

std::vector<Rational> zeros(int count) {
  return std::vector<Rational>(static_cast<std::size_t>(count));
}

}  // namespace

Config gen_skew_lines(int points_per_line, int lines, int ambient) {
  if (lines < 2) throw std::out_of_range("need at least 2 lines");
  if (points_per_line < 2) throw std::out_of_range("need at least 2 points per line");
  if (ambient < 2 * lines - 1) {
    throw std::out_of_range("ambient dimension too small: " + std::to_string(lines) +
                            " skew lines need at least " + std::to_string(2 * lines - 1));
  }
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(points_per_line) * lines);
  for (int j = 0; j < lines; ++j) {
    const int base = 2 * j;            // e_{2j+1} in 0-based affine coords
    const int dir = 2 * j + 1 < ambient ? 2 * j + 1 : 0;  // wrap for the tight ambient
    for (int t = 1; t <= points_per_line; ++t) {
      std::vector<Rational> coords = zeros(ambient);
      coords[static_cast<std::size_t>(base)] = 1;
      coords[static_cast<std::size_t>(dir)] += t;
      pts.push_back(Point::affine(coords));
    }
  }
  return Config(std::move(pts));
}

Config gen_hypercube_base(int k) {
  if (k < 1) throw std::out_of_range("hypercube dimension must be >= 1");
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(1) << k);
  for (int v = 0; v < (1 << k); ++v) {
    std::vector<Rational> coords = zeros(k + 1);
    for (int i = 0; i < k; ++i) {
      coords[static_cast<std::size_t>(i + 1)] = (v >> i) & 1 ? 1 : -1;
    }
    pts.push_back(Point::affine(coords));
  }
  Config out(std::move(pts));
  out.set_origin_point(Point::affine(zeros(k + 1)));
  return out;
}

Config gen_crosspolytope_base(int j) {
  if (j < 1) throw std::out_of_range("cross-polytope parameter must be >= 1");
  const int d = 3 * j + 1;
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(6) * j);
  for (int axis = 1; axis < d; ++axis) {
    for (int sign : {+1, -1}) {
      std::vector<Rational> coords = zeros(d);
      coords[static_cast<std::size_t>(axis)] = sign;
      pts.push_back(Point::affine(coords));
    }
  }
  Config out(std::move(pts));
  out.set_origin_point(Point::affine(zeros(d)));
  return out;
}

Config gen_hypercube_construction(int k, int m) {
  if (k < 2) throw std::out_of_range("hypercube construction needs k >= 2");
  if (m < 2) throw std::out_of_range("hypercube construction needs m >= 2");
  return raise_config(gen_hypercube_base(k), m).config;
}

Config gen_crosspolytope_construction(int j, int m) {
  if (j < 1) throw std::out_of_range("cross-polytope construction needs j >= 1");
  if (m < 2) throw std::out_of_range("cross-polytope construction needs m >= 2");
  return raise_config(gen_crosspolytope_base(j), m).config;
}

RaiseResult raise_config(const Config& base, int m, int threads) {
  if (m < 2) throw std::out_of_range("raise needs m >= 2 axis points");
  if (base.n() == 0) throw std::invalid_argument("raise needs a nonempty base");
  if (!base.has_origin()) throw std::invalid_argument("raise needs a designated origin");

  // Normalize the base: translate the designated origin to 0, and check
  // every point is affine and lies in the hyperplane x_1 = 0. Bases not
  // already in that hyperplane are embedded by prepending a zero
  // coordinate.
  if (!base.origin().is_affine()) {
    throw std::invalid_argument("raise needs an affine origin");
  }
  const std::vector<Rational> o = base.origin().affine_coords();
  const int bd = base.ambient();

  std::vector<std::vector<Rational>> translated;
  translated.reserve(static_cast<std::size_t>(base.n()));
  bool in_hyperplane = true;
  for (int i = 0; i < base.n(); ++i) {
    const Point& p = base.point(i);
    if (!p.is_affine()) {
      throw std::invalid_argument("raise needs an affine base (point " + std::to_string(i) +
                                  " is at infinity)");
    }
    std::vector<Rational> a = p.affine_coords();
    for (int c = 0; c < bd; ++c) a[static_cast<std::size_t>(c)] -= o[static_cast<std::size_t>(c)];
    if (a[0] != 0) in_hyperplane = false;
    translated.push_back(std::move(a));
  }

  const int d = in_hyperplane ? bd : bd + 1;
  std::vector<Point> pts;
  pts.reserve(translated.size() + static_cast<std::size_t>(m));
  std::vector<Point> base_pts;
  for (auto& a : translated) {
    if (!in_hyperplane) a.insert(a.begin(), Rational(0));
    Point p = Point::affine(a);
    base_pts.push_back(p);
    pts.push_back(std::move(p));
  }
  for (int i = 1; i <= m; ++i) {
    std::vector<Rational> a = zeros(d);
    a[0] = i;
    pts.push_back(Point::affine(a));
  }

  RaiseResult out;
  out.m = m;
  out.config = Config(std::move(pts));  // throws on duplicates
  out.config.set_origin_point(Point::affine(zeros(d)));

  // measured f-vector of the normalized base, with the origin at 0
  Config normalized(std::move(base_pts));
  normalized.set_origin_point(Point::affine(zeros(d)));
  if (base.has_weights()) normalized.set_weights(base.weights());
  auto ranks = enumerate_spanned(normalized, normalized.ambient(), threads);
  out.base_fvector = f_vector_from_ranks(normalized, ranks);

  const FVector& fs = out.base_fvector;
  for (int k = 1; k < d; ++k) {
    const std::int64_t f_k_L = k == 1 ? 1 : 0;
    out.predicted[k] = static_cast<std::int64_t>(m) * fs.f_nonorigin(k - 1) +
                       fs.f_origin(k - 1) + fs.f(k) + f_k_L;
  }

  // Exactness audit of the count formula: a spanned (k-2)-flat of S that
  // avoids the origin and whose join with the origin picks up no further
  // base point yields one extra k-flat through the axis that the formula
  // does not see.
  const Point origin = Point::affine(zeros(d));
  for (int k = 2; k < d; ++k) {
    std::int64_t extra = 0;
    if (k - 2 < static_cast<int>(ranks.size())) {
      for (const FlatRecord& rec : ranks[static_cast<std::size_t>(k - 2)]) {
        if (rec.flat.contains(origin)) continue;
        Flat joined = rec.flat.with_point(origin);
        bool trace_grows = false;
        for (int i = 0; i < normalized.n() && !trace_grows; ++i) {
          if (joined.contains(normalized.point(i)) && !rec.flat.contains(normalized.point(i))) {
            trace_grows = true;
          }
        }
        if (!trace_grows) ++extra;
      }
    }
    out.class2_extra[k] = extra;
    if (extra != 0) out.prediction_exact = false;
  }
  return out;
}

}  // namespace flatspan
