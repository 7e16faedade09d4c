#include "flatspan/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace flatspan {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("FLATSPAN_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<int>(std::min(v, 64L));
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 16u));
}

namespace {

// Run fn(chunk_begin, chunk_end, chunk_id) over [0, total), one chunk per
// worker. Chunk boundaries depend only on (total, threads), never on
// scheduling, so any per-chunk output is reproducible.
template <typename Fn>
void parallel_chunks(std::size_t total, int threads, const Fn& fn) {
  if (total == 0) return;
  threads = static_cast<int>(std::min<std::size_t>(std::max(1, threads), total));
  if (threads == 1) {
    fn(std::size_t{0}, total, 0);
    return;
  }
  const std::size_t chunk = (total + threads - 1) / threads;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    const std::size_t begin = static_cast<std::size_t>(t) * chunk;
    const std::size_t end = std::min(total, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end, t] { fn(begin, end, t); });
  }
  for (auto& th : pool) th.join();
}

std::vector<int> incident_points(const Config& config, const Flat& flat) {
  std::vector<int> out;
  for (int i = 0; i < config.n(); ++i) {
    if (flat.contains(config.point(i))) out.push_back(i);
  }
  return out;
}

}  // namespace

std::vector<std::vector<FlatRecord>> enumerate_spanned(const Config& config, int k_max,
                                                       int threads) {
  const int d = config.ambient();
  if (config.n() > 0 && (k_max < 0 || k_max > d)) {
    throw std::out_of_range("k_max must be between 0 and the ambient dimension " +
                            std::to_string(d));
  }
  threads = resolve_threads(threads);

  std::vector<std::vector<FlatRecord>> ranks(static_cast<std::size_t>(std::max(0, k_max)) + 1);
  if (config.n() == 0) return ranks;

  // rank 0: the points themselves
  for (int i = 0; i < config.n(); ++i) {
    ranks[0].push_back(FlatRecord{Flat::span({config.point(i)}), {i}});
  }
  std::sort(ranks[0].begin(), ranks[0].end(),
            [](const FlatRecord& a, const FlatRecord& b) { return compare(a.flat, b.flat) < 0; });

  for (int k = 1; k <= k_max; ++k) {
    const std::vector<FlatRecord>& frontier = ranks[static_cast<std::size_t>(k - 1)];
    if (frontier.empty()) break;

    const int nthreads = static_cast<int>(
        std::min<std::size_t>(static_cast<std::size_t>(threads), frontier.size()));
    std::vector<std::unordered_set<Flat, FlatHash>> local(
        static_cast<std::size_t>(std::max(1, nthreads)));

    parallel_chunks(frontier.size(), std::max(1, nthreads),
                    [&](std::size_t begin, std::size_t end, int tid) {
                      auto& sink = local[static_cast<std::size_t>(tid)];
                      for (std::size_t fi = begin; fi < end; ++fi) {
                        const FlatRecord& rec = frontier[fi];
                        // extending by an incident point changes nothing
                        auto inc = rec.incident.begin();
                        for (int p = 0; p < config.n(); ++p) {
                          if (inc != rec.incident.end() && *inc == p) {
                            ++inc;
                            continue;
                          }
                          sink.insert(rec.flat.with_point(config.point(p)));
                        }
                      }
                    });

    std::unordered_set<Flat, FlatHash> merged;
    for (auto& s : local) {
      merged.merge(s);
    }

    std::vector<FlatRecord>& out = ranks[static_cast<std::size_t>(k)];
    out.reserve(merged.size());
    for (const Flat& f : merged) out.push_back(FlatRecord{f, {}});
    std::sort(out.begin(), out.end(),
              [](const FlatRecord& a, const FlatRecord& b) { return compare(a.flat, b.flat) < 0; });

    parallel_chunks(out.size(), threads, [&](std::size_t begin, std::size_t end, int) {
      for (std::size_t i = begin; i < end; ++i) {
        out[i].incident = incident_points(config, out[i].flat);
      }
    });
  }
  return ranks;
}

std::int64_t FVector::f(int k) const {
  if (k < -1 || k > ambient) return 0;
  return counts[static_cast<std::size_t>(k + 1)];
}

std::int64_t FVector::f_exact(int k, std::int64_t c) const {
  if (k < 0 || k > ambient) return 0;
  const auto& h = histogram[static_cast<std::size_t>(k)];
  auto it = h.find(c);
  return it == h.end() ? 0 : it->second;
}

std::int64_t FVector::f_at_least(int k, std::int64_t c) const {
  if (k < 0 || k > ambient) return 0;
  std::int64_t total = 0;
  for (const auto& [mult, count] : histogram[static_cast<std::size_t>(k)]) {
    if (mult >= c) total += count;
  }
  return total;
}

std::int64_t FVector::f_at_most(int k, std::int64_t c) const {
  if (k < 0 || k > ambient) return 0;
  std::int64_t total = 0;
  for (const auto& [mult, count] : histogram[static_cast<std::size_t>(k)]) {
    if (mult <= c) total += count;
  }
  return total;
}

std::int64_t FVector::f_origin(int k) const {
  if (!has_origin || k < 0 || k > ambient) return 0;
  return origin_split[static_cast<std::size_t>(k)].first;
}

std::int64_t FVector::f_nonorigin(int k) const {
  if (!has_origin || k < 0 || k > ambient) return 0;
  return origin_split[static_cast<std::size_t>(k)].second;
}

FVector f_vector(const Config& config, int k_max, int threads) {
  if (config.n() == 0) return f_vector_from_ranks(config, {});
  if (k_max < 0) k_max = config.ambient();
  return f_vector_from_ranks(config, enumerate_spanned(config, k_max, threads));
}

FVector f_vector_from_ranks(const Config& config,
                            const std::vector<std::vector<FlatRecord>>& ranks) {
  const int d = config.ambient();
  FVector out;
  out.ambient = d;
  out.n = config.n();
  out.counts.assign(static_cast<std::size_t>(std::max(0, d)) + 2, 0);
  out.counts[0] = 1;  // the empty flat
  if (d < 0) {        // empty config: (1, 0, ...)
    out.counts.assign(2, 0);
    out.counts[0] = 1;
    out.ambient = 0;
    out.histogram.assign(1, {});
    return out;
  }
  out.histogram.assign(static_cast<std::size_t>(d) + 1, {});
  if (config.has_origin()) {
    out.has_origin = true;
    out.origin_split.assign(static_cast<std::size_t>(d) + 1, {0, 0});
  }

  const int k_max = static_cast<int>(ranks.size()) - 1;
  for (int k = 0; k <= k_max; ++k) {
    const auto& records = ranks[static_cast<std::size_t>(k)];
    out.counts[static_cast<std::size_t>(k) + 1] = static_cast<std::int64_t>(records.size());
    auto& hist = out.histogram[static_cast<std::size_t>(k)];
    for (const FlatRecord& rec : records) {
      ++hist[rec.multiplicity()];
      if (out.has_origin) {
        auto& split = out.origin_split[static_cast<std::size_t>(k)];
        const bool through_origin = rec.flat.contains(config.origin());
        // level 0 uses the raise convention f_0^o = 0: the origin, when it
        // is itself a config point, is counted on neither side.
        if (k == 0) {
          if (!through_origin) ++split.second;
        } else if (through_origin) {
          ++split.first;
        } else {
          ++split.second;
        }
      }
    }
  }
  return out;
}

std::int64_t incidences(const Config&, const std::vector<FlatRecord>& flats) {
  std::int64_t total = 0;
  for (const FlatRecord& rec : flats) total += rec.multiplicity();
  return total;
}

WeightFn WeightFn::parse(const std::string& name) {
  WeightFn fn;
  if (name == "const1") {
    fn.kind = Kind::Const1;
  } else if (name == "reciprocal") {
    fn.kind = Kind::Reciprocal;
  } else if (name.rfind("step:", 0) == 0) {
    fn.kind = Kind::Step;
    fn.theta = parse_rational(name.substr(5));
    if (fn.theta <= 0) throw std::invalid_argument("step threshold must be positive");
  } else if (name == "step") {
    fn.kind = Kind::Step;
  } else {
    throw std::invalid_argument("unknown weight function '" + name +
                                "' (expected const1, reciprocal or step:<rational>)");
  }
  return fn;
}

std::string WeightFn::name() const {
  switch (kind) {
    case Kind::Const1:
      return "const1";
    case Kind::Reciprocal:
      return "reciprocal";
    case Kind::Step:
      return "step:" + rational_to_string(theta);
  }
  return "?";
}

Rational WeightFn::operator()(const Rational& w) const {
  switch (kind) {
    case Kind::Const1:
      return 1;
    case Kind::Reciprocal:
      return 1 / w;
    case Kind::Step:
      return w <= theta ? Rational(1) : Rational(1, 2);
  }
  return 1;
}

Rational flat_weight(const Config& config, const FlatRecord& record) {
  Rational total = 0;
  for (int i : record.incident) total += config.weight(i);
  return total;
}

namespace {

void require_weights(const Config& config, const char* what) {
  if (!config.has_weights()) {
    throw std::invalid_argument(std::string(what) + " requires per-point weights");
  }
}

}  // namespace

Rational weighted_sum(const Config& config, int k, const WeightFn& F, int threads) {
  require_weights(config, "weighted_sum");
  if (k < 0 || k > config.ambient()) {
    throw std::out_of_range("weighted_sum: k out of range");
  }
  return weighted_sum_from_ranks(config, enumerate_spanned(config, k, threads), k, F);
}

Rational weighted_sum_from_ranks(const Config& config,
                                 const std::vector<std::vector<FlatRecord>>& ranks, int k,
                                 const WeightFn& F) {
  require_weights(config, "weighted_sum");
  if (k < 0 || k >= static_cast<int>(ranks.size())) {
    throw std::out_of_range("weighted_sum: k beyond the enumerated ranks");
  }
  Rational total = 0;
  for (const FlatRecord& rec : ranks[static_cast<std::size_t>(k)]) {
    total += F(flat_weight(config, rec));
  }
  return total;
}

Rational weighted_sum_via_projection(const Config& config, int k, const WeightFn& F,
                                     int threads) {
  require_weights(config, "weighted_sum_via_projection");
  if (k < 1) {
    throw std::out_of_range("weighted_sum_via_projection requires k >= 1");
  }
  if (k > config.ambient()) {
    throw std::out_of_range("weighted_sum_via_projection: k out of range");
  }
  Rational total = 0;
  for (int p = 0; p < config.n(); ++p) {
    const Rational wp = config.weight(p);
    Config image = project_from_point(config, p);
    if (image.n() == 0) continue;
    auto ranks = enumerate_spanned(image, k - 1, threads);
    for (const FlatRecord& rec : ranks[static_cast<std::size_t>(k - 1)]) {
      Rational w = flat_weight(image, rec) + wp;
      total += wp * F(w) / w;
    }
  }
  return total;
}

}  // namespace flatspan
