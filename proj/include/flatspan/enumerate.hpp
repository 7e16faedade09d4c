#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flatspan/config.hpp"

namespace flatspan {

/// A spanned flat together with the indices of the config points on it.
struct FlatRecord {
  Flat flat;
  std::vector<int> incident;  // sorted ascending

  int multiplicity() const { return static_cast<int>(incident.size()); }
};

/// Number of worker threads for frontier expansion: `requested` when > 0,
/// else the FLATSPAN_THREADS environment variable, else the hardware
/// concurrency. Results never depend on the thread count.
int resolve_threads(int requested);

/// All flats spanned by the config, rank by rank up to dimension k_max:
/// result[k] is the canonically ordered list of spanned k-flats with their
/// incident points. result[0] is the points themselves. The frontier step
/// F_{k+1} = { span(G, p) : G in F_k, p not on G } is complete because
/// every spanned (k+1)-flat contains a spanned k-flat.
std::vector<std::vector<FlatRecord>> enumerate_spanned(const Config& config, int k_max,
                                                       int threads = 0);

/// f-vector with multiplicity histograms and (when an origin is
/// designated) the origin / non-origin split of each level.
struct FVector {
  int ambient = 0;  // d
  int n = 0;

  /// counts[k+1] = f_k for k = -1..d.
  std::vector<std::int64_t> counts;

  /// histogram[k]: multiplicity c -> number of spanned k-flats containing
  /// exactly c config points, for k = 0..d.
  std::vector<std::map<std::int64_t, std::int64_t>> histogram;

  bool has_origin = false;
  /// origin_split[k] = (f_k^o, f_k^obar) for k = 0..d. By the convention
  /// of the raise construction, f_0^o = 0 even when the origin is itself a
  /// config point (so at level 0 the split sums to f_0 only when the
  /// origin is not a config point).
  std::vector<std::pair<std::int64_t, std::int64_t>> origin_split;

  std::int64_t f(int k) const;
  std::int64_t f_exact(int k, std::int64_t c) const;
  std::int64_t f_at_least(int k, std::int64_t c) const;
  std::int64_t f_at_most(int k, std::int64_t c) const;
  std::int64_t f_origin(int k) const;
  std::int64_t f_nonorigin(int k) const;
};

/// Full f-vector of the config (enumerates every rank). k_max < 0 means
/// all ranks up to the ambient dimension.
FVector f_vector(const Config& config, int k_max = -1, int threads = 0);

/// f-vector evaluated on an existing enumeration (levels 0..ranks.size()-1).
FVector f_vector_from_ranks(const Config& config,
                            const std::vector<std::vector<FlatRecord>>& ranks);

/// Total number of (point, flat) incidences: the sum of multiplicities.
std::int64_t incidences(const Config& config, const std::vector<FlatRecord>& flats);

/// Built-in positive, non-increasing weight functionals with rational
/// values, used by the weighted sums.
struct WeightFn {
  enum class Kind { Const1, Reciprocal, Step };
  Kind kind = Kind::Const1;
  Rational theta = 2;  // step threshold

  /// Parse "const1", "reciprocal" or "step:<rational>".
  static WeightFn parse(const std::string& name);
  std::string name() const;
  Rational operator()(const Rational& w) const;
};

/// Weight of a spanned flat: sum of the weights of its incident points.
Rational flat_weight(const Config& config, const FlatRecord& record);

/// Sum of F(W(Lambda)) over all spanned k-flats. Requires weights.
Rational weighted_sum(const Config& config, int k, const WeightFn& F, int threads = 0);
Rational weighted_sum_from_ranks(const Config& config,
                                 const std::vector<std::vector<FlatRecord>>& ranks, int k,
                                 const WeightFn& F);

/// The same sum rewritten through projections from each point: for every
/// p the k-flats through p are in bijection with the (k-1)-flats spanned
/// by the projected config, giving
///   sum_p sum_{L in F_{k-1}(pi_p)} W(p) F(W_p(L)+W(p)) / (W_p(L)+W(p)).
/// Requires weights and k >= 1.
Rational weighted_sum_via_projection(const Config& config, int k, const WeightFn& F,
                                     int threads = 0);

}  // namespace flatspan
