#include "flatspan/analyze.hpp"

#include <sstream>

namespace flatspan {

namespace {

nlohmann::json fvector_json(const FVector& fv) {
  nlohmann::json j;
  nlohmann::json counts = nlohmann::json::array();
  for (int k = -1; k <= fv.ambient; ++k) counts.push_back(fv.f(k));
  j["f"] = counts;  // index i holds f_{i-1}
  nlohmann::json hist;
  for (int k = 0; k <= fv.ambient; ++k) {
    nlohmann::json level;
    for (const auto& [mult, count] : fv.histogram[static_cast<std::size_t>(k)]) {
      level[std::to_string(mult)] = count;
    }
    if (!level.empty()) hist[std::to_string(k)] = level;
  }
  j["multiplicity_histogram"] = hist;
  if (fv.has_origin) {
    nlohmann::json split;
    for (int k = 0; k <= fv.ambient; ++k) {
      split[std::to_string(k)] = {{"origin", fv.f_origin(k)},
                                  {"nonorigin", fv.f_nonorigin(k)}};
    }
    j["origin_split"] = split;
  }
  // the t-rich line profile f_1^{>=t}, reported for every realized t
  nlohmann::json rich;
  if (fv.ambient >= 1) {
    for (const auto& [mult, count] : fv.histogram[1]) {
      (void)count;
      rich[std::to_string(mult)] = fv.f_at_least(1, mult);
    }
  }
  j["t_rich_lines"] = rich;
  return j;
}

nlohmann::json flat_json(const Flat& f) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < f.basis().rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c <= f.ambient(); ++c) {
      row.push_back(rational_to_string(f.basis().at(r, c)));
    }
    rows.push_back(row);
  }
  return {{"dim", f.dim()}, {"basis", rows}};
}

nlohmann::json witness_json(const CoverWitness& w) {
  nlohmann::json flats = nlohmann::json::array();
  for (const Flat& f : w.flats) flats.push_back(flat_json(f));
  return {{"flats", flats},
          {"total_dim", w.total_dim},
          {"cardinality", w.cardinality()},
          {"covered", w.covered}};
}

}  // namespace

bool AnalysisReport::all_passed() const {
  for (const ClaimReport& c : checks) {
    if (c.status == ClaimStatus::Fail) return false;
  }
  return true;
}

nlohmann::json AnalysisReport::to_json(bool with_witnesses) const {
  nlohmann::json j;
  j["schema"] = 1;
  j["input"] = {{"n", config.n()},
                {"dim", config.ambient()},
                {"origin", config.has_origin()},
                {"weighted", config.has_weights()}};
  j["f_vector"] = fvector_json(fvector);
  if (gvector) {
    j["essential_dimension"] = gvector->K;
    j["g_vector"] = gvector->g;
    nlohmann::json deficits = nlohmann::json::array();
    for (std::int64_t g : gvector->g) deficits.push_back(config.n() - g);
    j["n_minus_g"] = deficits;
    if (with_witnesses) {
      nlohmann::json ws = nlohmann::json::array();
      for (const CoverWitness& w : gvector->witnesses) ws.push_back(witness_json(w));
      j["witnesses"] = ws;
    }
  }
  nlohmann::json cs = nlohmann::json::array();
  for (const ClaimReport& c : checks) cs.push_back(c.to_json());
  j["checks"] = cs;
  return j;
}

std::string AnalysisReport::to_text() const {
  std::ostringstream out;
  if (config.n() == 0) {
    out << "configuration: empty";
  } else {
    out << "configuration: n = " << config.n() << ", P^" << config.ambient();
  }
  if (config.has_origin()) out << ", origin designated";
  if (config.has_weights()) out << ", weighted (total " << rational_to_string(config.total_weight()) << ")";
  out << "\n";

  out << "f-vector (f_-1 .. f_" << fvector.ambient << "):";
  for (int k = -1; k <= fvector.ambient; ++k) out << " " << fvector.f(k);
  out << "\n";
  if (fvector.has_origin) {
    for (int k = 0; k <= fvector.ambient; ++k) {
      if (fvector.f(k) == 0) continue;
      out << "  dim " << k << ": through origin " << fvector.f_origin(k) << ", off origin "
          << fvector.f_nonorigin(k) << "\n";
    }
  }
  if (fvector.ambient >= 1 && fvector.f(1) > 0) {
    out << "t-rich lines f_1^{>=t}:";
    for (const auto& [mult, count] : fvector.histogram[1]) {
      (void)count;
      out << " t=" << mult << ":" << fvector.f_at_least(1, mult);
    }
    out << "\n";
  }
  if (gvector) {
    out << "essential dimension K = " << gvector->K << "\n";
    out << "g-vector (g_0 .. g_K):";
    for (std::int64_t g : gvector->g) out << " " << g;
    out << "\n";
    out << "n - g_k:";
    for (std::int64_t g : gvector->g) out << " " << (config.n() - g);
    out << "\n";
    for (std::size_t k = 1; k < gvector->witnesses.size(); ++k) {
      const CoverWitness& w = gvector->witnesses[k];
      out << "  G_" << k << ": " << w.cardinality() << " flat(s), dims";
      for (const Flat& f : w.flats) out << " " << f.dim();
      out << ", covers " << w.covered.size() << "\n";
    }
  }
  for (const ClaimReport& c : checks) {
    out << "check " << c.claim_id << ": " << to_string(c.status);
    if (c.details.contains("reason")) {
      out << " (" << c.details["reason"].get<std::string>() << ")";
    }
    out << "\n";
  }
  return out.str();
}

AnalysisReport analyze(const Config& input, const AnalyzeOptions& options) {
  AnalysisReport report;
  report.config = input;
  if (options.origin_override) {
    report.config.set_origin_index(*options.origin_override);
  }
  const Config& config = report.config;

  // one enumeration feeds the f-vector, the cover search and the checks
  std::vector<std::vector<FlatRecord>> ranks;
  if (config.n() > 0) {
    const int k_max = options.k_max < 0 ? config.ambient()
                                        : std::min(options.k_max, config.ambient());
    ranks = enumerate_spanned(config, k_max, options.threads);
  }
  report.fvector = f_vector_from_ranks(config, ranks);

  if (options.with_cover && config.n() > 0) {
    const int needed = config.n() >= 2 ? config.closure().dim() : 0;
    if (static_cast<int>(ranks.size()) > std::min(needed, config.ambient())) {
      report.gvector = g_vector_from_ranks(config, ranks);
    } else {
      report.gvector = g_vector(config, options.threads);
    }
  }

  // the essential-dimension-gated checks only run when the cover was
  // computed; the f-vector checks always do
  if (report.gvector) {
    const int K = report.gvector->K;
    const int check_k = options.check_k.value_or(K);
    const bool ranks_cover_k =
        check_k <= static_cast<int>(ranks.size()) - 1 || check_k > config.ambient();
    if (ranks_cover_k) {
      report.checks.push_back(check_count_decrease(config, check_k, report.fvector, K));
    } else {
      report.checks.push_back(check_count_decrease(config, check_k, options.threads));
    }
    if (config.has_weights()) {
      if (check_k >= 1 && check_k < static_cast<int>(ranks.size())) {
        report.checks.push_back(check_weighted_monotone(config, check_k, options.weight_fn,
                                                        ranks, report.fvector, K));
      } else {
        report.checks.push_back(
            check_weighted_monotone(config, check_k, options.weight_fn, options.threads));
      }
    }
  }
  if (static_cast<int>(ranks.size()) > 1 || config.n() < 2) {
    report.checks.push_back(check_debruijn_erdos(config, report.fvector));
  } else {
    report.checks.push_back(check_debruijn_erdos(config, options.threads));
  }
  report.checks.push_back(check_log_concavity(config, report.fvector));
  return report;
}

}  // namespace flatspan
