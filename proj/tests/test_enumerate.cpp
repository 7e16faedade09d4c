#include <doctest.h>

#include <algorithm>

#include "flatspan/constructions.hpp"
#include "flatspan/enumerate.hpp"
#include "oracle.hpp"

using namespace flatspan;

namespace {

Point pt(std::initializer_list<int> affine) {
  std::vector<Rational> coords;
  for (int c : affine) coords.emplace_back(c);
  return Point::affine(coords);
}

Config triangle() { return Config({pt({0, 0}), pt({1, 0}), pt({0, 1})}); }

Config collinear(int n) {
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) pts.push_back(pt({i, 0}));
  return Config(std::move(pts));
}

}  // namespace

TEST_CASE("three non-collinear points span 3 lines and 1 plane") {
  auto ranks = enumerate_spanned(triangle(), 2);
  CHECK(ranks[0].size() == 3);
  CHECK(ranks[1].size() == 3);
  CHECK(ranks[2].size() == 1);
}

TEST_CASE("skew-lines configuration matches the closed-form counts") {
  // n = 8 on two skew lines: f_2 = n and f_1 = (n/2)^2 + 2
  Config c = gen_skew_lines(4, 2, 3);
  FVector fv = f_vector(c);
  CHECK(fv.f(-1) == 1);
  CHECK(fv.f(0) == 8);
  CHECK(fv.f(1) == 18);
  CHECK(fv.f(2) == 8);
  CHECK(fv.f(3) == 1);
  // 16 cross lines with 2 points, 2 spines with 4
  CHECK(fv.f_exact(1, 2) == 16);
  CHECK(fv.f_exact(1, 4) == 2);
  CHECK(fv.f_at_least(1, 3) == 2);
}

TEST_CASE("enumeration equals the all-subsets closure oracle") {
  oracle::Rng rng(424242);
  for (int trial = 0; trial < 25; ++trial) {
    const int dim = trial % 2 ? 2 : 3;
    Config c = rng.config(rng.uniform(4, 9), dim);
    auto expect = oracle::spanned_flats(c);
    auto got = enumerate_spanned(c, dim);
    REQUIRE(got.size() == expect.size());
    for (std::size_t k = 0; k < expect.size(); ++k) {
      REQUIRE(got[k].size() == expect[k].size());
      for (std::size_t i = 0; i < expect[k].size(); ++i) {
        CHECK(got[k][i].flat == expect[k][i].flat);
        CHECK(got[k][i].incident == expect[k][i].incident);
      }
    }
  }
}

TEST_CASE("f-vector basics: f_-1 = 1, f_0 = n, histogram sums") {
  oracle::Rng rng(11881);
  for (int trial = 0; trial < 10; ++trial) {
    Config c = rng.config(rng.uniform(2, 8), 3);
    FVector fv = f_vector(c);
    CHECK(fv.f(-1) == 1);
    CHECK(fv.f(0) == c.n());
    for (int k = 0; k <= fv.ambient; ++k) {
      std::int64_t total = 0;
      for (const auto& [mult, count] : fv.histogram[static_cast<std::size_t>(k)]) {
        total += count;
      }
      CHECK(total == fv.f(k));
      CHECK(fv.f_at_least(k, 0) == fv.f(k));
      CHECK(fv.f_at_most(k, c.n()) == fv.f(k));
    }
  }
}

TEST_CASE("collinear points span a single line carrying all of them") {
  FVector fv = f_vector(collinear(6));
  CHECK(fv.f(1) == 1);
  CHECK(fv.f_exact(1, 6) == 1);
  CHECK(fv.f(2) == 0);
}

TEST_CASE("hypercube C^3 origin split matches the hand enumeration") {
  FVector fv = f_vector(gen_hypercube_base(3));
  CHECK(fv.f_origin(1) == 4);
  CHECK(fv.f_nonorigin(1) == 24);
  CHECK(fv.f_origin(2) == 6);
  CHECK(fv.f_nonorigin(2) == 14);
  // the split is consistent with the totals at every positive level
  for (int k = 1; k <= fv.ambient; ++k) {
    CHECK(fv.f_origin(k) + fv.f_nonorigin(k) == fv.f(k));
  }
  CHECK(fv.f_origin(0) == 0);
  CHECK(fv.f_nonorigin(0) == 8);
}

TEST_CASE("octahedron spans 12 edges off the origin") {
  // 2^{i+1} C(3j, i+1) at i = 1, j = 1
  FVector fv = f_vector(gen_crosspolytope_base(1));
  CHECK(fv.f_nonorigin(1) == 12);
  CHECK(fv.f_origin(1) == 3);
}

TEST_CASE("incidence counts") {
  auto ranks = enumerate_spanned(triangle(), 1);
  CHECK(incidences(triangle(), ranks[1]) == 6);

  Config skew = gen_skew_lines(4, 2, 3);
  auto skew_ranks = enumerate_spanned(skew, 1);
  CHECK(incidences(skew, skew_ranks[1]) == 16 * 2 + 2 * 4);

  CHECK(incidences(triangle(), {}) == 0);
}

TEST_CASE("k_max out of range is rejected") {
  CHECK_THROWS_AS(enumerate_spanned(triangle(), 3), std::out_of_range);
}

TEST_CASE("point-flat incidences are in bijection with projected flats") {
  // |{L in F_k : p on L}| = f_{k-1}(pi_p(P)) for every point
  oracle::Rng rng(33211);
  for (int trial = 0; trial < 12; ++trial) {
    const int dim = trial % 2 ? 2 : 3;
    Config c = rng.config(rng.uniform(4, 8), dim);
    auto ranks = enumerate_spanned(c, dim);
    for (int p = 0; p < c.n(); ++p) {
      Config image = project_from_point(c, p);
      FVector image_fv = f_vector(image);
      for (int k = 1; k <= dim; ++k) {
        std::int64_t through = 0;
        for (const FlatRecord& rec : ranks[static_cast<std::size_t>(k)]) {
          if (std::binary_search(rec.incident.begin(), rec.incident.end(), p)) ++through;
        }
        CHECK(through == image_fv.f(k - 1));
      }
    }
  }
}

TEST_CASE("partition bound across random partitions") {
  // f_k <= sum_i f_i(P1) f_{k-i-1}(P2)
  oracle::Rng rng(55019);
  for (int trial = 0; trial < 30; ++trial) {
    const int dim = trial % 2 ? 2 : 3;
    Config c = rng.config(rng.uniform(4, 8), dim);
    FVector whole = f_vector(c);
    std::vector<int> left, right;
    for (int i = 0; i < c.n(); ++i) {
      (rng.uniform(0, 1) ? left : right).push_back(i);
    }
    FVector f1 = f_vector(c.subset(left));
    FVector f2 = f_vector(c.subset(right));
    for (int k = 0; k <= dim; ++k) {
      std::int64_t bound = 0;
      for (int i = -1; i <= k; ++i) bound += f1.f(i) * f2.f(k - i - 1);
      CHECK(whole.f(k) <= bound);
    }
  }
}

TEST_CASE("enumeration output does not depend on the point order") {
  oracle::Rng rng(88771);
  Config c = rng.config(7, 3);
  auto base = enumerate_spanned(c, 3);
  std::vector<int> perm(7);
  for (int i = 0; i < 7; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::shuffle(perm.begin(), perm.end(), rng.engine());
  Config shuffled = c.subset(perm);
  auto other = enumerate_spanned(shuffled, 3);
  REQUIRE(base.size() == other.size());
  for (std::size_t k = 0; k < base.size(); ++k) {
    REQUIRE(base[k].size() == other[k].size());
    for (std::size_t i = 0; i < base[k].size(); ++i) {
      CHECK(base[k][i].flat == other[k][i].flat);  // same canonical flats, same order
    }
  }
}

TEST_CASE("enumeration output does not depend on the worker count") {
  oracle::Rng rng(10901);
  Config c = rng.config(9, 3);
  auto one = enumerate_spanned(c, 3, 1);
  auto four = enumerate_spanned(c, 3, 4);
  REQUIRE(one.size() == four.size());
  for (std::size_t k = 0; k < one.size(); ++k) {
    REQUIRE(one[k].size() == four[k].size());
    for (std::size_t i = 0; i < one[k].size(); ++i) {
      CHECK(one[k][i].flat == four[k][i].flat);
      CHECK(one[k][i].incident == four[k][i].incident);
    }
  }
}

TEST_CASE("duplicate points are rejected, not deduplicated") {
  CHECK_THROWS_AS(Config({pt({1, 2}), pt({1, 2})}), std::invalid_argument);
  // projectively equal though textually different
  CHECK_THROWS_AS(Config({Point({Rational(1), Rational(2)}), Point({Rational(2), Rational(4)})}),
                  std::invalid_argument);
}

TEST_CASE("weighted sums: counting specializes, reciprocal stays exact") {
  Config c = gen_skew_lines(4, 2, 3);
  std::vector<Rational> unit(8, Rational(1));
  c.set_weights(unit);

  // F == 1 counts flats
  CHECK(weighted_sum(c, 1, WeightFn::parse("const1")) == 18);
  CHECK(weighted_sum(c, 2, WeightFn::parse("const1")) == 8);

  // 16 lines of weight 2 and 2 of weight 4
  CHECK(weighted_sum(c, 1, WeightFn::parse("reciprocal")) == make_rational(17, 2));

  // step functional
  WeightFn step = WeightFn::parse("step:3");
  CHECK(weighted_sum(c, 1, step) == Rational(17));
}

TEST_CASE("weighted sum rewrite through projections is exact") {
  oracle::Rng rng(61553);
  for (int trial = 0; trial < 12; ++trial) {
    const int dim = trial % 2 ? 2 : 3;
    Config c = rng.config(rng.uniform(4, 8), dim);
    c.set_weights(rng.weights(c.n()));
    for (int k : {1, 2}) {
      for (const char* fn : {"const1", "reciprocal"}) {
        const WeightFn F = WeightFn::parse(fn);
        CHECK(weighted_sum(c, k, F) == weighted_sum_via_projection(c, k, F));
      }
    }
  }
}

TEST_CASE("weighted machinery preconditions") {
  Config c = triangle();
  CHECK_THROWS_AS(weighted_sum(c, 1, WeightFn::parse("const1")), std::invalid_argument);
  c.set_weights({Rational(1), Rational(1), Rational(1)});
  CHECK_THROWS_AS(weighted_sum_via_projection(c, 0, WeightFn::parse("const1")),
                  std::out_of_range);
  CHECK_THROWS_AS(WeightFn::parse("cubic"), std::invalid_argument);
  CHECK_THROWS_AS(Config(triangle()).set_weights({Rational(1), make_rational(1, 2), Rational(1)}),
                  std::invalid_argument);
}

TEST_CASE("collinear configs: non-increasing functionals drop from level 0 to 1") {
  // F_1 sum is F(W(P)); it is strictly below the F_0 sum
  Config c = collinear(5);
  std::vector<Rational> w;
  for (int i = 0; i < 5; ++i) w.push_back(make_rational(i + 2, 2));  // weights 1, 3/2, 2, ...
  c.set_weights(w);
  const WeightFn F = WeightFn::parse("reciprocal");
  Rational total;
  for (const Rational& x : w) total += x;
  CHECK(weighted_sum(c, 1, F) == 1 / total);
  Rational level0 = weighted_sum(c, 0, F);
  CHECK(weighted_sum(c, 1, F) < level0);
}
