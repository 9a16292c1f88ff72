// lrc command line: construct, verify, bound and compare binary codes with
// locality. All engine work goes through the C API in lrc.h.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lrc.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitError = 4;

int exit_code_for(lrc_status st) {
  switch (st) {
    case LRC_OK:
      return kExitPass;
    case LRC_ERR_PARSE:
      return kExitUsage;
    case LRC_ERR_PARAMETER:
    case LRC_ERR_INFEASIBLE_DEGREES:
    case LRC_ERR_TOO_MANY_SQUARES:
    case LRC_ERR_UNSUPPORTED_ORDER:
    case LRC_ERR_UNKNOWN_FIXTURE:
      return kExitInfeasible;
    default:
      return kExitError;
  }
}

int report_failure(lrc_status st) {
  std::cerr << "error: " << lrc_last_error() << "\n";
  return exit_code_for(st);
}

struct CodeHandle {
  lrc_code* ptr = nullptr;
  ~CodeHandle() { lrc_code_free(ptr); }
};

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { lrc_string_free(ptr); }
  std::string str() const { return ptr ? ptr : ""; }
};

// Inputs with a ':' are spec-strings; anything else is a pchk-v1 file path.
lrc_status open_code(const std::string& input, lrc_code** out) {
  if (input.find(':') != std::string::npos) return lrc_code_from_spec(input.c_str(), out);
  return lrc_code_from_pchk_file(input.c_str(), out);
}

void print_json(const std::string& json, const std::string& format) {
  if (format == "text") {
    auto j = nlohmann::ordered_json::parse(json);
    for (auto& [key, value] : j.items())
      std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                << "\n";
  } else {
    std::cout << json << "\n";
  }
}

bool write_output(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return true;
  }
  std::ofstream f(out_path, std::ios::binary);
  f << content;
  return bool(f);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"binary codes with locality: construct, verify, bound, compare"};
  app.require_subcommand(1);
  app.set_version_flag("--version", []() { return std::string(lrc_version()); });
  std::string format = "json";
  auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format for reports (json|text)")
        ->check(CLI::IsMember({"json", "text"}));
  };

  // construct
  auto* construct = app.add_subcommand("construct", "build a code from a spec-string");
  std::string c_spec, c_out;
  bool c_mindist = false;
  std::uint32_t c_dcap = 0;
  construct->add_option("spec", c_spec, "e.g. hypergraph:beta=2, pg:s=2, r2chain:t=5,k=8")
      ->required();
  construct->add_option("--out", c_out, "write the parity-check matrix (pchk-v1) here");
  construct->add_flag("--min-distance", c_mindist, "include the exact minimum distance");
  construct->add_option("--d-cap", c_dcap, "dimension cap for the distance sweep (default 26)");
  add_format(construct);

  // verify
  auto* verify = app.add_subcommand("verify", "check (r,t) erasure recovery");
  std::string v_input, v_mode = "seq";
  std::int64_t v_r = -1, v_t = -1;
  std::uint32_t v_workers = 0;
  std::uint64_t v_cap = 0, v_samples = 0, v_seed = 0;
  verify->add_option("input", v_input, "spec-string or pchk-v1 file path")->required();
  verify->add_option("--r", v_r, "locality (defaults to the construction's claim)");
  verify->add_option("--t", v_t, "erasure count (defaults to the construction's claim)");
  verify->add_option("--mode", v_mode, "seq | par | sampled")
      ->check(CLI::IsMember({"seq", "par", "sampled"}));
  verify->add_option("--workers", v_workers, "worker threads (0 = available parallelism)");
  verify->add_option("--pattern-cap", v_cap, "max C(n,t) for exhaustive runs (default 1e8)");
  verify->add_option("--samples", v_samples, "sample count for sampled mode (default 1000)");
  verify->add_option("--seed", v_seed, "sample seed");
  add_format(verify);

  // bounds
  auto* bounds = app.add_subcommand("bounds", "evaluate block-length and rate bounds");
  std::int64_t b_k = -1, b_r = -1, b_t = -1;
  bool b_parallel = false, b_rate = false, b_seq = false;
  bounds->add_option("--k", b_k, "dimension");
  bounds->add_option("--r", b_r, "locality");
  bounds->add_option("--t", b_t, "erasure count");
  bounds->add_flag("--parallel", b_parallel, "only the parallel minimum-length bound");
  bounds->add_flag("--rate", b_rate, "only the rate caps");
  bounds->add_flag("--seq", b_seq, "only the sequential length bounds");
  add_format(bounds);

  // compare
  auto* compare = app.add_subcommand("compare", "emit comparison tables as CSV");
  std::string k_kind, k_out, k_exp;
  std::uint64_t k_rmax = 0, k_smax = 0, k_betamax = 0;
  compare->add_option("kind", k_kind, "table1 | t3bounds | pg_rate | sts_rate | fig2_gap")
      ->required()
      ->check(CLI::IsMember({"table1", "t3bounds", "pg_rate", "sts_rate", "fig2_gap"}));
  compare->add_option("--r-max", k_rmax, "t3bounds sweep limit (default 50)");
  compare->add_option("--k-exp", k_exp,
                      "t3bounds window rule k <= r^e - 1, decimal e (default 1.8)");
  compare->add_option("--s-max", k_smax, "pg_rate/sts_rate sweep limit");
  compare->add_option("--beta-max", k_betamax, "fig2_gap sweep limit (default 50)");
  compare->add_option("--out", k_out, "write CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : kExitUsage;
  }

  if (construct->parsed()) {
    CodeHandle code;
    if (auto st = lrc_code_from_spec(c_spec.c_str(), &code.ptr)) return report_failure(st);
    if (!c_out.empty()) {
      if (auto st = lrc_code_write_pchk(code.ptr, c_out.c_str())) return report_failure(st);
    }
    OwnedString report;
    if (auto st = lrc_code_report_json(code.ptr, &report.ptr)) return report_failure(st);
    std::string json = report.str();
    if (c_mindist) {
      std::uint32_t d = 0;
      if (auto st = lrc_code_min_distance(code.ptr, c_dcap, &d)) return report_failure(st);
      auto j = nlohmann::ordered_json::parse(json);
      j["d"] = d;
      json = j.dump();
    }
    print_json(json, format);
    return kExitPass;
  }

  if (verify->parsed()) {
    CodeHandle code;
    if (auto st = open_code(v_input, &code.ptr)) return report_failure(st);
    if (v_r < 0) v_r = lrc_code_r_claimed(code.ptr);
    if (v_t < 0) v_t = lrc_code_t_claimed(code.ptr);
    if (v_r <= 0 || v_t <= 0) {
      std::cerr << "error: --r and --t are required for this input\n";
      return kExitUsage;
    }
    lrc_verify_opts opts{};
    opts.mode = v_mode == "par"       ? LRC_VERIFY_PARALLEL
                : v_mode == "sampled" ? LRC_VERIFY_SAMPLED
                                      : LRC_VERIFY_SEQUENTIAL;
    opts.r = std::uint32_t(v_r);
    opts.t = std::uint32_t(v_t);
    opts.workers = v_workers;
    opts.pattern_cap = v_cap;
    opts.samples = v_samples;
    opts.seed = v_seed;
    int passed = 0;
    OwnedString report;
    if (auto st = lrc_verify(code.ptr, &opts, &passed, &report.ptr)) return report_failure(st);
    print_json(report.str(), format);
    return passed ? kExitPass : kExitVerifyFail;
  }

  if (bounds->parsed()) {
    if (b_k < 0 && b_r < 0 && b_t < 0) {
      std::cerr << "error: provide at least one of --k, --r, --t\n";
      return kExitUsage;
    }
    OwnedString report;
    if (auto st = lrc_bounds_json(b_k, b_r, b_t, &report.ptr)) return report_failure(st);
    std::string json = report.str();
    if (b_parallel || b_rate || b_seq) {
      auto j = nlohmann::ordered_json::parse(json);
      nlohmann::ordered_json filtered;
      for (auto& [key, value] : j.items()) {
        bool keep = key == "k" || key == "r" || key == "t";
        if (b_parallel && key.find("parallel") != std::string::npos) keep = true;
        if (b_rate && key.find("rate_cap") != std::string::npos) keep = true;
        if (b_seq && (key.find("seq") != std::string::npos || key.find("t3") != std::string::npos))
          keep = true;
        if (keep) filtered[key] = value;
      }
      json = filtered.dump();
    }
    print_json(json, format);
    return kExitPass;
  }

  if (compare->parsed()) {
    std::uint64_t limit = 0;
    if (k_kind == "t3bounds") limit = k_rmax;
    if (k_kind == "pg_rate" || k_kind == "sts_rate") limit = k_smax;
    if (k_kind == "fig2_gap") limit = k_betamax;
    OwnedString csv;
    if (auto st = lrc_compare_csv(k_kind.c_str(), limit, k_exp.c_str(), &csv.ptr))
      return report_failure(st);
    if (!write_output(csv.str(), k_out)) {
      std::cerr << "error: cannot write " << k_out << "\n";
      return kExitError;
    }
    return kExitPass;
  }

  return kExitUsage;
}
