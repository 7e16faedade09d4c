#include <doctest.h>

#include <algorithm>

#include "flatspan/constructions.hpp"
#include "flatspan/cover.hpp"
#include "oracle.hpp"

using namespace flatspan;

namespace {

Point pt(std::initializer_list<int> affine) {
  std::vector<Rational> coords;
  for (int c : affine) coords.emplace_back(c);
  return Point::affine(coords);
}

void check_witness_invariants(const Config& config, int budget, std::int64_t g,
                              const CoverWitness& w) {
  CHECK(w.total_dim <= budget);
  CHECK(static_cast<std::int64_t>(w.covered.size()) == g);
  int total = 0;
  for (const Flat& f : w.flats) {
    CHECK(f.dim() >= 1);
    total += f.dim();
  }
  CHECK(total == w.total_dim);
  // covered is exactly the set of points on the union
  for (int i = 0; i < config.n(); ++i) {
    bool on = false;
    for (const Flat& f : w.flats) {
      if (f.contains(config.point(i))) {
        on = true;
        break;
      }
    }
    CHECK(on == std::binary_search(w.covered.begin(), w.covered.end(), i));
  }
}

}  // namespace

TEST_CASE("essential dimension of structured examples") {
  // points on two skew lines
  CHECK(essential_dimension(gen_skew_lines(4, 2, 3)).first == 2);
  CHECK(essential_dimension(gen_skew_lines(2, 2, 3)).first == 2);

  // collinear points
  std::vector<Point> line;
  for (int i = 0; i < 5; ++i) line.push_back(pt({i, 1}));
  CHECK(essential_dimension(Config(line)).first == 1);

  // three skew lines spanning R^5
  Config three = gen_skew_lines(3, 3, 5);
  auto [K, w] = essential_dimension(three);
  CHECK(K == 3);
  GVector gv = g_vector(three);
  CHECK(gv.g[1] == 3);
}

TEST_CASE("five generic points in P^3 have essential dimension 3") {
  Config c({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1}), pt({1, 1, 1})});
  auto flats = oracle::spanned_flats(c);
  CHECK(oracle::essential_dimension(c, flats) == 3);
  auto [K, w] = essential_dimension(c);
  CHECK(K == 3);
}

TEST_CASE("degenerate configurations") {
  CHECK(essential_dimension(Config{}).first == 0);
  Config single({pt({2, 3})});
  auto [K, w] = essential_dimension(single);
  CHECK(K == 1);
  REQUIRE(w.flats.size() == 1);
  CHECK(w.flats[0].dim() == 1);
  CHECK(w.flats[0].contains(single.point(0)));
}

TEST_CASE("g-vector of the hypercube: g_{k-1}(C^k) = 2^{k-1}") {
  for (int k : {2, 3}) {
    GVector gv = g_vector(gen_hypercube_base(k));
    REQUIRE(gv.K >= k - 1);
    CHECK(gv.g[static_cast<std::size_t>(k - 1)] == (1 << (k - 1)));
  }
}

TEST_CASE("g-vector of the cross-polytope: g_i(D) = 2i") {
  for (int j : {1, 2}) {
    GVector gv = g_vector(gen_crosspolytope_base(j));
    CHECK(gv.K == 3 * j);
    for (int i = 1; i <= 3 * j - 1; ++i) {
      CHECK(gv.g[static_cast<std::size_t>(i)] == 2 * i);
    }
  }
}

TEST_CASE("g-vector of the raised hypercube: n - g_k = 2^{k-1}") {
  for (auto [k, m] : {std::pair{2, 10}, std::pair{3, 6}}) {
    Config c = gen_hypercube_construction(k, m);
    GVector gv = g_vector(c);
    REQUIRE(gv.K >= k);
    CHECK(c.n() - gv.g[static_cast<std::size_t>(k)] == (1 << (k - 1)));
  }
}

TEST_CASE("branch and bound equals the exhaustive cover oracle") {
  oracle::Rng rng(20240202);
  for (int trial = 0; trial < 20; ++trial) {
    const int dim = trial % 2 ? 2 : 3;
    Config c = rng.config(rng.uniform(4, 9), dim);
    auto flats = oracle::spanned_flats(c);
    GVector gv = g_vector(c);
    CHECK(gv.K == oracle::essential_dimension(c, flats));
    for (int k = 1; k <= gv.K; ++k) {
      auto expect = oracle::max_coverage(c, flats, k);
      CHECK(gv.g[static_cast<std::size_t>(k)] == expect.covered);
      CHECK(gv.witnesses[static_cast<std::size_t>(k)].cardinality() == expect.cardinality);
      check_witness_invariants(c, k, gv.g[static_cast<std::size_t>(k)],
                               gv.witnesses[static_cast<std::size_t>(k)]);
    }
  }
}

TEST_CASE("g-vector is monotone with the expected endpoints") {
  oracle::Rng rng(717171);
  for (int trial = 0; trial < 15; ++trial) {
    const int dim = trial % 2 ? 2 : 3;
    Config c = rng.config(rng.uniform(4, 9), dim);
    GVector gv = g_vector(c);
    CHECK(gv.g[0] == 0);
    CHECK(gv.g.back() == c.n());
    for (std::size_t i = 1; i < gv.g.size(); ++i) CHECK(gv.g[i - 1] <= gv.g[i]);
    // per-flat budget split: every witness flat of dimension t carries at
    // most g_t points, and disjointness makes the counts add up
    for (std::size_t k = 1; k < gv.witnesses.size(); ++k) {
      const CoverWitness& w = gv.witnesses[k];
      std::int64_t bound = 0;
      for (const Flat& f : w.flats) {
        const std::size_t t = static_cast<std::size_t>(f.dim());
        bound += t < gv.g.size() ? gv.g[t] : gv.g.back();
      }
      CHECK(gv.g[k] <= bound);
    }
  }
}

TEST_CASE("coverage budgets do not combine additively in general") {
  // a near-pencil shows g_1 + g_1 > g_2: the two best single lines are
  // the same line, so separate maxima cannot be stacked
  std::vector<Point> pts;
  for (int i = 0; i < 5; ++i) pts.push_back(pt({i, 0}));
  pts.push_back(pt({0, 1}));
  GVector gv = g_vector(Config{std::move(pts)});
  REQUIRE(gv.K == 2);
  CHECK(gv.g[1] == 5);
  CHECK(gv.g[2] == 6);
  CHECK(gv.g[1] + gv.g[1] > gv.g[2]);
}

TEST_CASE("witness minimality audit accepts computed witnesses") {
  oracle::Rng rng(515253);
  for (int trial = 0; trial < 10; ++trial) {
    const int dim = trial % 2 ? 2 : 3;
    Config c = rng.config(rng.uniform(4, 8), dim);
    GVector gv = g_vector(c);
    auto ranks = enumerate_spanned(c, dim);
    for (const CoverWitness& w : gv.witnesses) {
      for (const auto& level : ranks) {
        for (const FlatRecord& rec : level) {
          CHECK(check_G_minimality(c, w, rec.flat));
        }
      }
    }
  }
}

TEST_CASE("witness minimality audit: skew lines vs planes, corrupted witness") {
  Config skew = gen_skew_lines(4, 2, 3);
  GVector gv = g_vector(skew);
  const CoverWitness& g2 = gv.witnesses[2];
  REQUIRE(g2.flats.size() == 2);
  auto ranks = enumerate_spanned(skew, 3);
  for (const FlatRecord& rec : ranks[2]) {
    CHECK(check_G_minimality(skew, g2, rec.flat));
  }

  // two coplanar lines are replaceable by their plane: the audit rejects
  Config planar({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({1, 1, 0})});
  CoverWitness corrupted;
  corrupted.flats = {Flat::span({pt({0, 0, 0}), pt({1, 0, 0})}),
                     Flat::span({pt({0, 1, 0}), pt({1, 1, 0})})};
  corrupted.total_dim = 2;
  corrupted.covered = {0, 1, 2, 3};
  Flat plane = Flat::span({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0})});
  CHECK_FALSE(check_G_minimality(planar, corrupted, plane));
}

TEST_CASE("contained flats: k-flats with k >= K contain k+1-K witness flats") {
  for (const Config& c : {gen_skew_lines(4, 2, 3), gen_skew_lines(2, 2, 3),
                          gen_hypercube_construction(2, 4)}) {
    auto [K, witness] = essential_dimension(c);
    auto ranks = enumerate_spanned(c, c.ambient());
    for (int k = K; k <= c.ambient(); ++k) {
      if (k >= static_cast<int>(ranks.size())) break;
      for (const FlatRecord& rec : ranks[static_cast<std::size_t>(k)]) {
        int contained = 0;
        for (const Flat& g : witness.flats) {
          if (rec.flat.contains(g)) ++contained;
        }
        CHECK(contained >= k + 1 - K);
      }
    }
  }
}

TEST_CASE("projection degeneracy: collinear cover projects injectively") {
  // A on a single line, p off it: |pi_p(A)| = |A|
  std::vector<Point> pts;
  for (int i = 0; i < 6; ++i) pts.push_back(pt({i, 0, 0}));
  pts.push_back(pt({0, 1, 0}));
  pts.push_back(pt({0, 1, 1}));
  pts.push_back(pt({1, 2, 3}));
  Config c{std::move(pts)};
  GVector gv = g_vector(c);
  REQUIRE(gv.K > 1);
  const auto& covered = gv.witnesses[1].covered;
  REQUIRE(covered.size() == 6);  // the axis line
  for (int p = 0; p < c.n(); ++p) {
    if (std::binary_search(covered.begin(), covered.end(), p)) continue;
    auto report = projection_degeneracy_check(c, 1, p);
    CHECK(report.all_ok());
    CHECK(report.image_size == report.a_size);  // injective on a line
    REQUIRE(report.rows.size() == 1);
    CHECK(report.rows[0].g_image == 0);  // g_0 = 0
  }
}

TEST_CASE("projection degeneracy on random configurations") {
  oracle::Rng rng(808080);
  int checked = 0;
  for (int trial = 0; trial < 12 || checked == 0; ++trial) {
    const int dim = trial % 2 ? 2 : 3;
    Config c = rng.config(rng.uniform(5, 9), dim);
    GVector gv = g_vector(c);
    for (int k = 1; k < gv.K; ++k) {
      const auto& covered = gv.witnesses[static_cast<std::size_t>(k)].covered;
      for (int p = 0; p < c.n(); ++p) {
        if (std::binary_search(covered.begin(), covered.end(), p)) continue;
        auto report = projection_degeneracy_check(c, k, p);
        CHECK(report.all_ok());
        ++checked;
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("projection degeneracy rejects covered points and bad budgets") {
  Config skew = gen_skew_lines(4, 2, 3);
  GVector gv = g_vector(skew);
  REQUIRE(gv.K == 2);
  const auto& covered = gv.witnesses[1].covered;
  REQUIRE(!covered.empty());
  CHECK_THROWS_AS(projection_degeneracy_check(skew, 1, covered[0]), std::invalid_argument);
  CHECK_THROWS_AS(projection_degeneracy_check(skew, 2, 0), std::out_of_range);
  CHECK_THROWS_AS(projection_degeneracy_check(skew, 0, 0), std::out_of_range);
}

TEST_CASE("max coverage handles tiny budgets") {
  Config c = gen_skew_lines(4, 2, 3);
  auto [g0, w0] = max_coverage(c, 0);
  CHECK(g0 == 0);
  CHECK(w0.flats.empty());
  auto [g1, w1] = max_coverage(c, 1);
  CHECK(g1 == 4);  // one spine
  CHECK(w1.cardinality() == 1);
}
