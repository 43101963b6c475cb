// overlap-lab: exact-overlap toolkit for the projections C_t of the four
// corner Cantor set. Subcommands: classify, witness, verify, density,
// measure, grid.
//
// Exit codes: 0 success, 1 usage error, 2 oracle disagreement,
// 3 numeric-width overflow.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "olab/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDisagreement = 2;
constexpr int kExitOverflow = 3;

// Writes stdout when path is empty, otherwise writes a temp file in the
// target directory and renames it into place.
void emit(const std::string& path, const std::string& bytes) {
  if (path.empty()) {
    std::fwrite(bytes.data(), 1, bytes.size(), stdout);
    std::fflush(stdout);
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("short write to " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    throw std::runtime_error("cannot rename " + tmp + " to " + path);
  }
}

int jobs_from_env_or(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("OVERLAP_LAB_JOBS")) {
    try {
      const int v = std::stoi(env);
      if (v < 1) throw std::invalid_argument("jobs must be >= 1");
      return v;
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("invalid OVERLAP_LAB_JOBS value: ") + env);
    }
  }
  return 1;
}

struct Options {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::vector<std::int64_t> N;
  std::int64_t max_depth = 0;  // 0 means the exhaustive default 2(p+q)+1
  std::int64_t max_sum = 40;
  std::int64_t level = 6;
  int jobs = 0;  // 0 means env or 1
  bool human = false;
  std::string format;
  std::string output;
  std::string endpoints_csv_path;
};

int run_classify(const Options& o) {
  const olab::OverlapClassification c = olab::classify(o.p, o.q);
  emit(o.output, o.format == "json" ? olab::classification_json(c) : olab::classification_text(c));
  return kExitOk;
}

int run_witness(const Options& o) {
  const olab::ReducedRational t = olab::ReducedRational::reduce(o.p, o.q);
  if (t.p >= t.q) {
    throw std::invalid_argument(
        "witness search requires p/q < 1 after reduction; for t >= 1 use the reciprocal "
        "(classification is symmetric under t -> 1/t)");
  }
  const std::int64_t depth = o.max_depth > 0 ? o.max_depth : olab::default_search_depth(t);
  const olab::WitnessSearchOutcome outcome = olab::search_overlap_witness(t, depth);
  emit(o.output, o.format == "json" ? olab::witness_json(t, outcome, depth, o.human)
                                    : olab::witness_text(t, outcome, depth, o.human));
  return kExitOk;
}

int run_verify(const Options& o) {
  const auto verdicts = olab::verify_pairs(o.max_sum, /*include_rank=*/true, jobs_from_env_or(o.jobs));
  emit(o.output, o.format == "json" ? olab::verify_json(verdicts, o.max_sum)
                                    : olab::verify_text(verdicts, o.max_sum));
  for (const auto& v : verdicts) {
    if (!v.agree()) return kExitDisagreement;
  }
  return kExitOk;
}

int run_density(const Options& o) {
  std::vector<std::int64_t> ns = o.N;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  const int jobs = jobs_from_env_or(o.jobs);
  std::vector<olab::DensityReport> rows;
  rows.reserve(ns.size());
  for (const std::int64_t n : ns) rows.push_back(olab::enumerate_counts(n, jobs));
  std::string body;
  if (o.format == "json") {
    body = olab::density_json(rows);
  } else if (o.format == "csv") {
    body = olab::density_csv(rows);
  } else {
    body = olab::density_text(rows);
  }
  emit(o.output, body);
  return kExitOk;
}

int run_measure(const Options& o) {
  const olab::ReducedRational t = olab::ReducedRational::reduce(o.p, o.q);
  const olab::MeasureEstimate m = olab::measure_and_dimension(t, o.level);
  std::string body;
  if (o.format == "json") {
    body = olab::measure_json(t, m);
  } else if (o.format == "csv") {
    body = olab::measure_csv(t, m);
  } else {
    body = olab::measure_text(t, m);
  }
  emit(o.output, body);
  if (!o.endpoints_csv_path.empty()) {
    emit(o.endpoints_csv_path, olab::endpoints_csv(t, o.level));
  }
  return kExitOk;
}

int run_grid(const Options& o) {
  const olab::WGrid g = olab::render_W_grid(o.N.at(0), jobs_from_env_or(o.jobs));
  emit(o.output, o.format == "svg" ? olab::grid_svg(g) : olab::grid_pgm(g));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact overlaps of projections of the four corner Cantor set"};
  app.require_subcommand(1);

  Options o;

  auto* classify = app.add_subcommand("classify", "decide whether C_{p/q} has an exact overlap");
  classify->add_option("--p", o.p, "numerator")->required();
  classify->add_option("--q", o.q, "denominator")->required();
  classify->add_option("--format", o.format, "text or json")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "json"}));
  classify->add_option("--output", o.output, "write to file instead of stdout");

  auto* witness = app.add_subcommand("witness", "search for an explicit overlap witness");
  witness->add_option("--p", o.p, "numerator")->required();
  witness->add_option("--q", o.q, "denominator")->required();
  witness->add_option("--max-depth", o.max_depth, "depth cap (default 2(p+q)+1, exhaustive)");
  witness->add_flag("--human", o.human, "also render blocks in Omega_t notation");
  witness->add_option("--format", o.format, "text or json")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "json"}));
  witness->add_option("--output", o.output, "write to file instead of stdout");

  auto* verify = app.add_subcommand("verify", "cross-check all four oracles on small pairs");
  verify->add_option("--max-sum", o.max_sum, "check coprime p<q with p+q <= this bound")
      ->default_val(40);
  verify->add_option("--jobs", o.jobs, "parallel workers (or OVERLAP_LAB_JOBS)");
  verify->add_option("--format", o.format, "text or json")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--output", o.output, "write to file instead of stdout");

  auto* density = app.add_subcommand("density", "count W / W_hat / W_tilde inside [1,N]^2");
  density->add_option("--N", o.N, "one or more values of N")->required();
  density->add_option("--jobs", o.jobs, "parallel workers (or OVERLAP_LAB_JOBS)");
  density->add_option("--format", o.format, "text, csv or json")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  density->add_option("--output", o.output, "write to file instead of stdout");

  auto* measure = app.add_subcommand("measure", "level-n measure and dimension estimate");
  measure->add_option("--p", o.p, "numerator")->required();
  measure->add_option("--q", o.q, "denominator")->required();
  measure->add_option("--level", o.level, "approximation level n")->default_val(6);
  measure->add_option("--endpoints-csv", o.endpoints_csv_path,
                      "also dump per-level scaled endpoints to this CSV file");
  measure->add_option("--format", o.format, "text, csv or json")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  measure->add_option("--output", o.output, "write to file instead of stdout");

  auto* grid = app.add_subcommand("grid", "render the W_tilde grid over [1,N]^2");
  grid->add_option("--N", o.N, "grid size")->required()->expected(1);
  grid->add_option("--jobs", o.jobs, "parallel workers (or OVERLAP_LAB_JOBS)");
  grid->add_option("--format", o.format, "pgm or svg")
      ->default_val("pgm")
      ->check(CLI::IsMember({"pgm", "svg"}));
  grid->add_option("--output", o.output, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (classify->parsed()) return run_classify(o);
    if (witness->parsed()) return run_witness(o);
    if (verify->parsed()) return run_verify(o);
    if (density->parsed()) return run_density(o);
    if (measure->parsed()) return run_measure(o);
    if (grid->parsed()) return run_grid(o);
  } catch (const std::overflow_error& e) {
    std::cerr << "overflow: " << e.what() << "\n";
    return kExitOverflow;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
