#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "flatspan/analyze.hpp"
#include "flatspan/constructions.hpp"
#include "flatspan/io.hpp"

namespace {

using namespace flatspan;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  out << text;
}

int exit_code(const std::vector<ClaimReport>& checks) {
  for (const ClaimReport& c : checks) {
    if (c.status == ClaimStatus::Fail) return kExitCheckFailed;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flatspan: exact enumeration of spanned flats, essential dimension and\n"
               "degeneracy sequences of rational point configurations"};
  app.require_subcommand(1);

  int threads = 0;  // 0: FLATSPAN_THREADS or hardware default
  app.add_option("--threads", threads, "worker threads (overrides FLATSPAN_THREADS)");

  // ---- gen ----------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate a named configuration");
  std::string gen_name;
  gen->add_option("name", gen_name,
                  "skew-lines | hypercube | hypercube-base | crosspolytope | crosspolytope-base")
      ->required();
  int gen_points = 4, gen_lines = 2, gen_ambient = 3;
  int gen_k = 2, gen_j = 1, gen_m = 10;
  bool gen_json = false;
  std::string gen_out = "-";
  gen->add_option("--points-per-line", gen_points, "points on each skew line");
  gen->add_option("--lines", gen_lines, "number of skew lines");
  gen->add_option("--ambient", gen_ambient, "ambient dimension for skew lines");
  gen->add_option("-k", gen_k, "hypercube dimension");
  gen->add_option("-j", gen_j, "cross-polytope parameter (dimension 3j)");
  gen->add_option("-m", gen_m, "number of axis points");
  gen->add_flag("--json", gen_json, "write the JSON config format");
  gen->add_option("-o,--output", gen_out, "output file (default stdout)");

  // ---- analyze ------------------------------------------------------
  auto* analyze_cmd = app.add_subcommand("analyze", "full report for a configuration");
  std::string analyze_file;
  analyze_cmd->add_option("file", analyze_file, "config file")->required();
  bool analyze_json = false;
  int analyze_kmax = -1;
  std::optional<int> analyze_origin;
  std::optional<int> analyze_check_k;
  std::string analyze_fn = "const1";
  bool analyze_no_cover = false;
  bool analyze_no_witnesses = false;
  analyze_cmd->add_flag("--json", analyze_json, "emit the JSON report");
  analyze_cmd->add_option("--kmax", analyze_kmax, "only enumerate flats up to this dimension");
  analyze_cmd->add_option("--origin", analyze_origin, "designate this point index as origin");
  analyze_cmd->add_option("--check-k", analyze_check_k,
                          "level k for the claim checks (default: the essential dimension)");
  analyze_cmd->add_option("--F", analyze_fn,
                          "weight functional for the weighted check: const1 | reciprocal | "
                          "step:<r>");
  analyze_cmd->add_flag("--no-cover", analyze_no_cover, "skip the g-vector computation");
  analyze_cmd->add_flag("--no-witnesses", analyze_no_witnesses,
                        "omit witness covers from the JSON report");

  // ---- check --------------------------------------------------------
  auto* check_cmd = app.add_subcommand("check", "run one named claim check");
  std::string check_id, check_file;
  check_cmd
      ->add_option("claim", check_id,
                   "count-decrease | debruijn-erdos | weighted-monotone | log-concavity |\n"
                   "weighted-rewrite | contained-flats | witness-minimality |\n"
                   "projection-degeneracy | split-bound | a81-dual-base | ratio-base")
      ->required();
  check_cmd->add_option("file", check_file, "config file")->required();
  std::optional<int> check_k;
  std::string check_fn = "const1";
  unsigned check_seed = 1;
  check_cmd->add_option("--k", check_k, "level k (default: the essential dimension)");
  check_cmd->add_option("--F", check_fn, "weight functional: const1 | reciprocal | step:<r>");
  check_cmd->add_option("--seed", check_seed, "seed for the split-bound partition");

  // ---- project ------------------------------------------------------
  auto* project_cmd = app.add_subcommand("project", "project a config from a flat");
  std::string project_file, project_out = "-";
  std::vector<int> project_center;
  bool project_json = false;
  project_cmd->add_option("file", project_file, "config file")->required();
  project_cmd->add_option("--center", project_center, "point indices spanning the center")
      ->required();
  project_cmd->add_flag("--json", project_json, "write the JSON config format");
  project_cmd->add_option("-o,--output", project_out, "output file (default stdout)");

  // ---- raise --------------------------------------------------------
  auto* raise_cmd = app.add_subcommand("raise", "raise-dimension construction S u L");
  std::string raise_file, raise_out = "-";
  int raise_m = 10;
  bool raise_json = false;
  raise_cmd->add_option("file", raise_file, "base config (needs a designated origin)")
      ->required();
  raise_cmd->add_option("--m", raise_m, "number of axis points")->required();
  raise_cmd->add_flag("--json", raise_json, "write the JSON config format");
  raise_cmd->add_option("-o,--output", raise_out, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      Config config;
      if (gen_name == "skew-lines") {
        config = gen_skew_lines(gen_points, gen_lines, gen_ambient);
      } else if (gen_name == "hypercube") {
        config = gen_hypercube_construction(gen_k, gen_m);
      } else if (gen_name == "hypercube-base") {
        config = gen_hypercube_base(gen_k);
      } else if (gen_name == "crosspolytope") {
        config = gen_crosspolytope_construction(gen_j, gen_m);
      } else if (gen_name == "crosspolytope-base") {
        config = gen_crosspolytope_base(gen_j);
      } else {
        std::cerr << "unknown generator '" << gen_name << "'\n";
        return kExitInputError;
      }
      write_output(gen_json ? config_to_json_text(config) : config_to_text(config), gen_out);
      return kExitOk;
    }

    if (analyze_cmd->parsed()) {
      Config config = load_config_file(analyze_file);
      AnalyzeOptions opts;
      opts.k_max = analyze_kmax;
      opts.origin_override = analyze_origin;
      opts.check_k = analyze_check_k;
      opts.weight_fn = WeightFn::parse(analyze_fn);
      opts.with_cover = !analyze_no_cover;
      opts.threads = threads;
      AnalysisReport report = analyze(config, opts);
      if (analyze_json) {
        std::cout << report.to_json(!analyze_no_witnesses).dump(2) << "\n";
      } else {
        std::cout << report.to_text();
      }
      return exit_code(report.checks);
    }

    if (check_cmd->parsed()) {
      Config config = load_config_file(check_file);
      const WeightFn fn = WeightFn::parse(check_fn);
      auto k_or_default = [&](int fallback_to_K) {
        if (check_k) return *check_k;
        if (fallback_to_K) {
          return essential_dimension(config, threads).first;
        }
        return 1;
      };
      ClaimReport report;
      if (check_id == "count-decrease") {
        report = check_count_decrease(config, k_or_default(1), threads);
      } else if (check_id == "debruijn-erdos") {
        report = check_debruijn_erdos(config, threads);
      } else if (check_id == "weighted-monotone") {
        report = check_weighted_monotone(config, k_or_default(1), fn, threads);
      } else if (check_id == "log-concavity") {
        report = check_log_concavity(config, threads);
      } else if (check_id == "weighted-rewrite") {
        report = check_rewrite_identity(config, check_k.value_or(1), fn, threads);
      } else if (check_id == "contained-flats") {
        report = check_contained_flats(config, threads);
      } else if (check_id == "witness-minimality") {
        report = check_witness_minimality(config, threads);
      } else if (check_id == "projection-degeneracy") {
        report = check_projection_degeneracy(config, threads);
      } else if (check_id == "split-bound") {
        std::vector<bool> side(static_cast<std::size_t>(config.n()));
        unsigned state = check_seed;
        for (std::size_t i = 0; i < side.size(); ++i) {
          state = state * 1664525u + 1013904223u;
          side[i] = (state >> 16) & 1u;
        }
        report = check_split_bound(config, side, check_k.value_or(1), threads);
      } else if (check_id == "a81-dual-base" || check_id == "ratio-base") {
        report = check_known_base(
            config, check_id == "a81-dual-base" ? "a81-dual" : "ratio", threads);
      } else {
        std::cerr << "unknown claim id '" << check_id << "'\n";
        return kExitInputError;
      }
      std::cout << report.to_json().dump(2) << "\n";
      return report.status == ClaimStatus::Fail ? kExitCheckFailed : kExitOk;
    }

    if (project_cmd->parsed()) {
      Config config = load_config_file(project_file);
      std::vector<Point> center_points;
      for (int idx : project_center) {
        if (idx < 0 || idx >= config.n()) {
          std::cerr << "center index " << idx << " out of range\n";
          return kExitInputError;
        }
        center_points.push_back(config.point(idx));
      }
      Config image = project_config(config, Flat::span(center_points));
      write_output(project_json ? config_to_json_text(image) : config_to_text(image),
                   project_out);
      return kExitOk;
    }

    if (raise_cmd->parsed()) {
      Config base = load_config_file(raise_file);
      RaiseResult result = raise_config(base, raise_m, threads);
      write_output(raise_json ? config_to_json_text(result.config)
                              : config_to_text(result.config),
                   raise_out);
      std::cerr << "predicted f_k for the raised configuration (k: count):\n";
      for (const auto& [k, count] : result.predicted) {
        std::cerr << "  " << k << ": " << count;
        const auto extra = result.class2_extra.find(k);
        if (extra != result.class2_extra.end() && extra->second != 0) {
          std::cerr << "  (+" << extra->second << " axis flats outside the count formula)";
        }
        std::cerr << "\n";
      }
      if (!result.prediction_exact) {
        std::cerr << "note: the count formula is not exact for this base/origin; "
                     "exact counts are prediction + correction\n";
      }
      return kExitOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
