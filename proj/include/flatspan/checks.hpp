#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flatspan/cover.hpp"
#include "flatspan/enumerate.hpp"

namespace flatspan {

enum class ClaimStatus { Pass, Fail, NotApplicable };

std::string to_string(ClaimStatus s);

/// Outcome of one named claim check. Every comparison behind `status` is
/// between exact integers or rationals; `details` carries both sides.
/// runtime_ms is informational and never serialized into reports.
struct ClaimReport {
  std::string claim_id;
  ClaimStatus status = ClaimStatus::Pass;
  nlohmann::json details;
  double runtime_ms = 0.0;

  nlohmann::json to_json() const;
};

/// f_{k-1} > f_k, or f_{k-1} = f_k = 0, whenever the essential dimension
/// is at most k (not-applicable otherwise).
ClaimReport check_count_decrease(const Config& config, int k, int threads = 0);
ClaimReport check_count_decrease(const Config& config, int k, const FVector& fv, int K);

/// Either the points span at least n lines or they are collinear; when
/// f_1 = n exactly, reports whether the config is a near-pencil.
ClaimReport check_debruijn_erdos(const Config& config, int threads = 0);
ClaimReport check_debruijn_erdos(const Config& config, const FVector& fv);

/// Strict decrease of sum F(W(Lambda)) from level k-1 to level k for a
/// non-increasing positive F, whenever k >= K and f_k >= 1.
ClaimReport check_weighted_monotone(const Config& config, int k, const WeightFn& F,
                                    int threads = 0);
ClaimReport check_weighted_monotone(const Config& config, int k, const WeightFn& F,
                                    const std::vector<std::vector<FlatRecord>>& ranks,
                                    const FVector& fv, int K);

/// Report-only: exact ratios f_k^2 / (f_{k-1} f_{k+1}) where defined.
ClaimReport check_log_concavity(const Config& config, int threads = 0);
ClaimReport check_log_concavity(const Config& config, const FVector& fv);

/// Exact identity between the direct weighted sum over F_k and its
/// rewrite through point projections (k >= 1).
ClaimReport check_rewrite_identity(const Config& config, int k, const WeightFn& F,
                                int threads = 0);

/// Contained-flats property: every spanned k-flat with k >= K contains at
/// least k+1-K flats of the computed witness G(P).
ClaimReport check_contained_flats(const Config& config, int threads = 0);

/// Minimality inequality of every computed witness family against every
/// spanned flat of the config.
ClaimReport check_witness_minimality(const Config& config, int threads = 0);

/// Projection-degeneracy inequalities for all valid (k, p).
ClaimReport check_projection_degeneracy(const Config& config, int threads = 0);

/// Partition bound f_k <= sum_i f_i(P1) f_{k-i-1}(P2) for one partition
/// (side[i] says whether point i goes to P2).
ClaimReport check_split_bound(const Config& config, const std::vector<bool>& side, int k,
                              int threads = 0);

/// Validation of a user-supplied curated base configuration: "a81-dual"
/// expects f_1^obar = 7, f_1^o = 4, f_0^obar = 7; "ratio" expects
/// f_1^obar = 5, f_0^obar = 6. Requires a designated origin.
ClaimReport check_known_base(const Config& config, const std::string& which,
                             int threads = 0);

}  // namespace flatspan
