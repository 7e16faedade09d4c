#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "flatspan/checks.hpp"
#include "flatspan/constructions.hpp"
#include "flatspan/cover.hpp"

namespace flatspan {

struct AnalyzeOptions {
  int k_max = -1;                      // -1: all ranks
  std::optional<int> origin_override;  // designate this point index first
  bool with_witnesses = true;
  bool with_cover = true;              // g-vector / K (skip for speed)
  int threads = 0;
  std::optional<int> check_k;          // k for claim checks; default K(P)
  WeightFn weight_fn;                  // F for the weighted check
};

/// Everything the CLI reports for one configuration: f-vector with
/// histograms and origin splits, t-rich line counts, g-vector with
/// witnesses, essential dimension, log-concavity ratios, and every claim
/// check applicable at the config's parameters.
struct AnalysisReport {
  Config config;
  FVector fvector;
  std::optional<GVector> gvector;
  std::vector<ClaimReport> checks;

  bool all_passed() const;
  nlohmann::json to_json(bool with_witnesses = true) const;
  std::string to_text() const;
};

AnalysisReport analyze(const Config& config, const AnalyzeOptions& options = {});

}  // namespace flatspan
