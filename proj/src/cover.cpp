#include "flatspan/cover.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace flatspan {

namespace {

// Fixed-size bitset over point indices.
class Mask {
 public:
  Mask() = default;
  explicit Mask(int bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  void set(int i) { words_[static_cast<std::size_t>(i >> 6)] |= 1ULL << (i & 63); }
  int count() const {
    int total = 0;
    for (std::uint64_t w : words_) total += __builtin_popcountll(w);
    return total;
  }
  int count_and_not(const Mask& other) const {  // |this & ~other|
    int total = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      total += __builtin_popcountll(words_[i] & ~other.words_[i]);
    }
    return total;
  }
  void or_with(const Mask& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  }
  std::vector<int> indices() const {
    std::vector<int> out;
    for (int i = 0; i < bits_; ++i) {
      if (words_[static_cast<std::size_t>(i >> 6)] & (1ULL << (i & 63))) out.push_back(i);
    }
    return out;
  }

 private:
  int bits_ = 0;
  std::vector<std::uint64_t> words_;
};

struct Candidate {
  const Flat* flat;
  Mask mask;
  int dim;
  int mult;
};

int compare_flat_lists(const std::vector<const Flat*>& a, const std::vector<const Flat*>& b) {
  const std::size_t m = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < m; ++i) {
    int c = compare(*a[i], *b[i]);
    if (c != 0) return c;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

// Exact branch-and-bound maximizing coverage, then minimizing witness
// cardinality; among optima encountered the lexicographically smallest
// canonical flat list is kept, so results are reproducible run to run.
class CoverSearch {
 public:
  CoverSearch(const std::vector<Candidate>& candidates, int n_points, int budget)
      : cands_(candidates), budget_(budget), best_mask_(n_points), n_points_(n_points) {}

  void run() {
    prime_greedy();
    Mask covered(n_points_);
    chosen_.clear();
    dfs(0, budget_, covered, 0);
  }

  int best_covered() const { return best_covered_; }

  CoverWitness witness() const {
    CoverWitness w;
    w.covered = best_mask_.indices();
    for (const Flat* f : best_flats_) {
      w.flats.push_back(*f);
      w.total_dim += f->dim();
    }
    return w;
  }

 private:
  // Deterministic greedy start: repeatedly take the feasible candidate
  // with the largest gain. Gives the bound a strong incumbent up front.
  void prime_greedy() {
    Mask covered(n_points_);
    int budget = budget_;
    int covered_count = 0;
    chosen_.clear();
    consider(covered_count, covered);
    while (budget > 0) {
      int best_gain = 0;
      std::size_t best_i = cands_.size();
      for (std::size_t i = 0; i < cands_.size(); ++i) {
        if (cands_[i].dim > budget) continue;
        int gain = cands_[i].mask.count_and_not(covered);
        if (gain > best_gain) {
          best_gain = gain;
          best_i = i;
        }
      }
      if (best_i == cands_.size()) break;
      covered.or_with(cands_[best_i].mask);
      covered_count += best_gain;
      budget -= cands_[best_i].dim;
      chosen_.push_back(cands_[best_i].flat);
      consider(covered_count, covered);
    }
    chosen_.clear();
  }

  void consider(int covered_count, const Mask& covered) {
    if (covered_count < best_covered_) return;
    std::vector<const Flat*> sorted = chosen_;
    std::sort(sorted.begin(), sorted.end(),
              [](const Flat* a, const Flat* b) { return compare(*a, *b) < 0; });
    if (covered_count > best_covered_ ||
        sorted.size() < best_cardinality_ ||
        (sorted.size() == best_cardinality_ && compare_flat_lists(sorted, best_flats_) < 0)) {
      best_covered_ = covered_count;
      best_cardinality_ = sorted.size();
      best_flats_ = std::move(sorted);
      best_mask_ = covered;
    }
  }

  // Fractional knapsack relaxation of the remaining gains, evaluated for
  // every residual budget at once. knap[b] bounds the extra coverage any
  // family of total dimension <= b chosen from candidates[start..] can
  // add. Also reports the largest single gain.
  void knapsack(std::size_t start, int budget, const Mask& covered, std::vector<int>& knap,
                int& max_gain) const {
    max_gain = 0;
    // best `budget` gains per dimension class (min-heaps)
    std::vector<std::vector<int>> top(static_cast<std::size_t>(budget) + 1);
    for (std::size_t i = start; i < cands_.size(); ++i) {
      const Candidate& c = cands_[i];
      if (c.dim > budget) continue;
      const int gain = c.mask.count_and_not(covered);
      if (gain <= 0) continue;
      max_gain = std::max(max_gain, gain);
      auto& bucket = top[static_cast<std::size_t>(c.dim)];
      if (static_cast<int>(bucket.size()) < budget) {
        bucket.push_back(gain);
        std::push_heap(bucket.begin(), bucket.end(), std::greater<>());
      } else if (gain > bucket.front()) {
        std::pop_heap(bucket.begin(), bucket.end(), std::greater<>());
        bucket.back() = gain;
        std::push_heap(bucket.begin(), bucket.end(), std::greater<>());
      }
    }
    struct Item {
      int gain;
      int dim;
    };
    std::vector<Item> items;
    for (int dim = 1; dim <= budget; ++dim) {
      for (int gain : top[static_cast<std::size_t>(dim)]) items.push_back({gain, dim});
    }
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
      return static_cast<long long>(a.gain) * b.dim > static_cast<long long>(b.gain) * a.dim;
    });
    knap.assign(static_cast<std::size_t>(budget) + 1, 0);
    for (int b = 1; b <= budget; ++b) {
      int remaining = b;
      int whole = 0;
      int bound = 0;
      for (const Item& it : items) {
        if (remaining <= 0) break;
        if (it.dim <= remaining) {
          whole += it.gain;
          remaining -= it.dim;
        } else {
          // ceil of the fractional part keeps the bound integral and valid
          bound = (it.gain * remaining + it.dim - 1) / it.dim;
          remaining = 0;
        }
      }
      knap[static_cast<std::size_t>(b)] = whole + bound;
    }
  }

  static int ceil_div(int a, int b) { return (a + b - 1) / b; }

  void dfs(std::size_t start, int budget, const Mask& covered, int covered_count) {
    consider(covered_count, covered);
    if (budget <= 0 || start >= cands_.size()) return;

    std::vector<int> knap;
    int max_gain = 0;
    knapsack(start, budget, covered, knap, max_gain);
    if (max_gain == 0) return;

    const int node_ub = covered_count + knap[static_cast<std::size_t>(budget)];
    if (node_ub < best_covered_) return;
    if (node_ub == best_covered_) {
      const int needed = best_covered_ - covered_count;
      if (needed > 0 &&
          chosen_.size() + static_cast<std::size_t>(ceil_div(needed, max_gain)) >
              best_cardinality_) {
        return;
      }
    }

    for (std::size_t i = start; i < cands_.size(); ++i) {
      const Candidate& c = cands_[i];
      if (c.dim > budget) continue;
      const int gain = c.mask.count_and_not(covered);
      if (gain <= 0) continue;
      const int child_ub =
          covered_count + gain + knap[static_cast<std::size_t>(budget - c.dim)];
      if (child_ub < best_covered_) continue;
      if (child_ub == best_covered_) {
        const int needed_after = best_covered_ - covered_count - gain;
        const std::size_t min_card =
            chosen_.size() + 1 +
            (needed_after > 0 ? static_cast<std::size_t>(ceil_div(needed_after, max_gain)) : 0);
        if (min_card > best_cardinality_) continue;
      }
      Mask next = covered;
      next.or_with(c.mask);
      chosen_.push_back(c.flat);
      dfs(i + 1, budget - c.dim, next, covered_count + gain);
      chosen_.pop_back();
    }
  }

  const std::vector<Candidate>& cands_;
  int budget_;

  int best_covered_ = -1;
  std::size_t best_cardinality_ = 0;
  std::vector<const Flat*> best_flats_;
  Mask best_mask_;
  int n_points_;

  std::vector<const Flat*> chosen_;
};

std::vector<Candidate> build_candidates(const Config& config,
                                        const std::vector<std::vector<FlatRecord>>& ranks,
                                        int max_dim) {
  std::vector<Candidate> out;
  for (int k = 1; k <= max_dim && k < static_cast<int>(ranks.size()); ++k) {
    for (const FlatRecord& rec : ranks[static_cast<std::size_t>(k)]) {
      Mask mask(config.n());
      for (int i : rec.incident) mask.set(i);
      out.push_back(Candidate{&rec.flat, std::move(mask), k, rec.multiplicity()});
    }
  }
  // density order (points per dimension, descending) drives both the DFS
  // and the greedy incumbent; canonical tie-break keeps it reproducible
  std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
    const long long lhs = static_cast<long long>(a.mult) * b.dim;
    const long long rhs = static_cast<long long>(b.mult) * a.dim;
    if (lhs != rhs) return lhs > rhs;
    return compare(*a.flat, *b.flat) < 0;
  });
  return out;
}

std::pair<std::int64_t, CoverWitness> max_coverage_on(
    const Config& config, const std::vector<std::vector<FlatRecord>>& ranks, int budget) {
  if (budget == 0 || config.n() == 0) return {0, CoverWitness{}};
  const int max_dim = std::min(budget, config.ambient());
  auto candidates = build_candidates(config, ranks, max_dim);
  CoverSearch search(candidates, config.n(), budget);
  search.run();
  return {search.best_covered(), search.witness()};
}

}  // namespace

std::pair<std::int64_t, CoverWitness> max_coverage(const Config& config, int budget,
                                                   int threads) {
  if (budget < 0) throw std::out_of_range("coverage budget must be >= 0");
  if (budget == 0 || config.n() == 0) return {0, CoverWitness{}};
  auto ranks = enumerate_spanned(config, std::min(budget, config.ambient()), threads);
  return max_coverage_on(config, ranks, budget);
}

std::pair<int, CoverWitness> essential_dimension(const Config& config, int threads) {
  const int n = config.n();
  if (n == 0) return {0, CoverWitness{}};
  GVector gv = g_vector(config, threads);
  return {gv.K, gv.witnesses.back()};
}

GVector g_vector(const Config& config, int threads) {
  if (config.n() >= 2) {
    const int k_cap = std::max(1, config.closure().dim());
    return g_vector_from_ranks(
        config, enumerate_spanned(config, std::min(k_cap, config.ambient()), threads));
  }
  return g_vector_from_ranks(config, {});
}

GVector g_vector_from_ranks(const Config& config,
                            const std::vector<std::vector<FlatRecord>>& ranks) {
  GVector out;
  const int n = config.n();
  if (n == 0) {
    out.g = {0};
    out.K = 0;
    out.witnesses = {CoverWitness{}};
    return out;
  }
  if (n == 1) {
    // convention: a single point is covered by an (arbitrary) line
    // through it, so K = 1 when the ambient space has lines at all
    out.g = {0};
    out.witnesses = {CoverWitness{}};
    if (config.ambient() >= 1) {
      const Point& p = config.point(0);
      CoverWitness w;
      for (int j = 0; j <= config.ambient() && w.flats.empty(); ++j) {
        std::vector<Rational> e(static_cast<std::size_t>(config.ambient()) + 1);
        e[static_cast<std::size_t>(j)] = 1;
        Point q{std::move(e)};
        if (!(q == p)) {
          w.flats = {Flat::span({p, q})};
          w.total_dim = 1;
          w.covered = {0};
        }
      }
      out.g.push_back(1);
      out.witnesses.push_back(std::move(w));
      out.K = 1;
    } else {
      out.K = 0;  // P^0 has no flats of dimension >= 1
    }
    return out;
  }

  // K never exceeds the dimension of the closure: that one flat covers P
  const int dim_span = config.closure().dim();
  const int k_cap = std::max(1, dim_span);
  if (static_cast<int>(ranks.size()) <= std::min(dim_span, config.ambient())) {
    throw std::invalid_argument("g_vector_from_ranks: enumeration too shallow");
  }

  out.g = {0};
  out.witnesses = {CoverWitness{}};
  for (int k = 1; k <= k_cap; ++k) {
    auto [g, witness] = max_coverage_on(config, ranks, k);
    out.g.push_back(g);
    out.witnesses.push_back(std::move(witness));
    if (g == n) {
      out.K = k;
      return out;
    }
  }
  throw std::logic_error("cover search failed to cover the configuration");
}

bool check_G_minimality(const Config&, const CoverWitness& witness, const Flat& probe) {
  if (witness.flats.size() < 2) return true;
  std::vector<int> dims;
  dims.reserve(witness.flats.size());
  for (const Flat& f : witness.flats) dims.push_back(meet(f, probe).dim());
  std::sort(dims.begin(), dims.end(), std::greater<>());
  // over subsets of size >= 2 the maximum intersection-dimension sum is
  // attained by a prefix of the sorted list
  int sum = dims[0];
  for (std::size_t s = 1; s < dims.size(); ++s) {
    sum += dims[s];
    if (sum >= probe.dim()) return false;
  }
  return true;
}

bool ProjectionDegeneracyReport::all_ok() const {
  if (!size_ok) return false;
  for (const Row& r : rows) {
    if (!r.ok) return false;
  }
  return true;
}

ProjectionDegeneracyReport projection_degeneracy_check(const Config& config, int k,
                                                       int point_index, int threads) {
  if (point_index < 0 || point_index >= config.n()) {
    throw std::out_of_range("point index out of range");
  }
  GVector gv = g_vector(config, threads);
  if (k < 1 || k >= gv.K) {
    throw std::out_of_range("projection_degeneracy_check requires 1 <= k < K");
  }
  const CoverWitness& witness = gv.witnesses[static_cast<std::size_t>(k)];
  const std::vector<int>& covered = witness.covered;
  if (std::binary_search(covered.begin(), covered.end(), point_index)) {
    throw std::invalid_argument("projection point must lie outside the G_k cover");
  }

  Config a_config = config.subset(covered);
  Config image = project_config(a_config, Flat::span({config.point(point_index)}));
  GVector g_a = g_vector(a_config, threads);
  GVector g_img;
  if (image.n() > 0) {
    g_img = g_vector(image, threads);
  } else {
    g_img.g = {0};
    g_img.K = 0;
    g_img.witnesses = {CoverWitness{}};
  }

  auto g_of = [](const GVector& v, int i) -> std::int64_t {
    if (i <= v.K) return v.g[static_cast<std::size_t>(i)];
    return v.g.back();  // saturates at n beyond K
  };

  ProjectionDegeneracyReport report;
  report.k = k;
  report.point = point_index;
  report.a_size = a_config.n();
  report.image_size = image.n();
  const std::int64_t k2 = static_cast<std::int64_t>(k) * k;
  report.size_ok = report.image_size >= report.a_size - k2;
  for (int i = 0; i <= k - 1; ++i) {
    ProjectionDegeneracyReport::Row row;
    row.i = i;
    row.g_image = g_of(g_img, i);
    row.g_a = g_of(g_a, i);
    row.ok = row.g_image <= row.g_a + k2;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace flatspan
