#include "lrc.h"

#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>

#include "bounds.hpp"
#include "compare.hpp"
#include "constructions.hpp"
#include "errors.hpp"
#include "recovery.hpp"

using namespace lrc;

struct lrc_code {
  LinearCode code;
  std::string spec;
  std::uint32_t r_claimed = 0;
  std::uint32_t t_claimed = 0;
  std::string mode;
  std::optional<std::size_t> expected_d;
};

namespace {

thread_local std::string g_last_error;

lrc_status status_of(errc code) {
  switch (code) {
    case errc::parse_error: return LRC_ERR_PARSE;
    case errc::io_error: return LRC_ERR_IO;
    case errc::unsupported_order: return LRC_ERR_UNSUPPORTED_ORDER;
    case errc::too_many_squares: return LRC_ERR_TOO_MANY_SQUARES;
    case errc::infeasible_degree_sequence: return LRC_ERR_INFEASIBLE_DEGREES;
    case errc::parameter_constraint: return LRC_ERR_PARAMETER;
    case errc::unknown_fixture: return LRC_ERR_UNKNOWN_FIXTURE;
    case errc::cap_exceeded: return LRC_ERR_CAP_EXCEEDED;
    case errc::enumeration_infeasible: return LRC_ERR_ENUMERATION_INFEASIBLE;
    case errc::pattern_space_too_large: return LRC_ERR_PATTERN_SPACE;
    case errc::invalid_argument: return LRC_ERR_INVALID_ARGUMENT;
  }
  return LRC_ERR_INTERNAL;
}

template <typename Fn>
lrc_status guarded(Fn&& fn) {
  try {
    fn();
    return LRC_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LRC_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return LRC_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

lrc_status require(bool cond, const char* what) {
  if (cond) return LRC_OK;
  g_last_error = what;
  return LRC_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* lrc_version(void) { return "1.0.0"; }

const char* lrc_last_error(void) { return g_last_error.c_str(); }

void lrc_string_free(char* s) { delete[] s; }

lrc_status lrc_code_from_spec(const char* spec, lrc_code** out) {
  if (auto st = require(spec && out, "spec and out must be non-NULL")) return st;
  return guarded([&] {
    BuiltCode built = build_from_spec(spec);
    *out = new lrc_code{std::move(built.code), built.spec, built.r_claimed, built.t_claimed,
                        built.mode, built.expected_d};
  });
}

lrc_status lrc_code_from_pchk_text(const char* text, lrc_code** out) {
  if (auto st = require(text && out, "text and out must be non-NULL")) return st;
  return guarded([&] { *out = new lrc_code{LinearCode(parse_pchk(text)), "", 0, 0, "", {}}; });
}

lrc_status lrc_code_from_pchk_file(const char* path, lrc_code** out) {
  if (auto st = require(path && out, "path and out must be non-NULL")) return st;
  return guarded([&] { *out = new lrc_code{LinearCode(read_pchk_file(path)), path, 0, 0, "", {}}; });
}

void lrc_code_free(lrc_code* code) { delete code; }

size_t lrc_code_n(const lrc_code* code) { return code ? code->code.n() : 0; }
size_t lrc_code_k(const lrc_code* code) { return code ? code->code.k() : 0; }
size_t lrc_code_rank(const lrc_code* code) { return code ? code->code.pchk_rank() : 0; }
uint32_t lrc_code_r_claimed(const lrc_code* code) { return code ? code->r_claimed : 0; }
uint32_t lrc_code_t_claimed(const lrc_code* code) { return code ? code->t_claimed : 0; }

lrc_status lrc_code_pchk_text(const lrc_code* code, char** out) {
  if (auto st = require(code && out, "code and out must be non-NULL")) return st;
  return guarded([&] { *out = dup_string(format_pchk(code->code.pchk())); });
}

lrc_status lrc_code_write_pchk(const lrc_code* code, const char* path) {
  if (auto st = require(code && path, "code and path must be non-NULL")) return st;
  return guarded([&] { write_pchk_file(code->code.pchk(), path); });
}

lrc_status lrc_code_report_json(const lrc_code* code, char** out) {
  if (auto st = require(code && out, "code and out must be non-NULL")) return st;
  return guarded([&] {
    CodeReport rep;
    rep.spec = code->spec;
    rep.n = code->code.n();
    rep.k = code->code.k();
    rep.rank = code->code.pchk_rank();
    rep.rate = code->code.rate();
    rep.d = code->expected_d;
    if (code->r_claimed) rep.r_claimed = code->r_claimed;
    if (code->t_claimed) rep.t_claimed = code->t_claimed;
    rep.mode = code->mode;
    *out = dup_string(rep.to_json());
  });
}

lrc_status lrc_code_min_distance(const lrc_code* code, uint32_t cap, uint32_t* out) {
  if (auto st = require(code && out, "code and out must be non-NULL")) return st;
  return guarded([&] {
    EnumerationConfig cfg;
    if (cap) cfg.min_distance_cap = cap;
    *out = uint32_t(min_distance(code->code, cfg));
  });
}

lrc_status lrc_verify(const lrc_code* code, const lrc_verify_opts* opts, int* passed,
                      char** report_json) {
  if (auto st = require(code && opts, "code and opts must be non-NULL")) return st;
  return guarded([&] {
    VerifyConfig cfg;
    cfg.workers = opts->workers;
    cfg.enumeration.workers = opts->workers;
    if (opts->pattern_cap) cfg.pattern_cap = opts->pattern_cap;

    VerificationReport rep;
    switch (opts->mode) {
      case LRC_VERIFY_SEQUENTIAL:
        rep = verify_sequential(code->code, opts->r, opts->t, cfg);
        break;
      case LRC_VERIFY_SAMPLED:
        rep = verify_sequential_sampled(code->code, opts->r, opts->t,
                                        opts->samples ? opts->samples : 1000, opts->seed, cfg);
        break;
      case LRC_VERIFY_PARALLEL:
        rep = check_parallel(code->code, opts->r, opts->t);
        break;
      default:
        fail(errc::invalid_argument, "bad verify mode");
    }
    rep.spec = code->spec;
    if (passed) *passed = rep.pass() ? 1 : 0;
    if (report_json) *report_json = dup_string(rep.to_json());
  });
}

lrc_status lrc_bounds_json(int64_t k, int64_t r, int64_t t, char** out) {
  if (auto st = require(out != nullptr, "out must be non-NULL")) return st;
  return guarded([&] {
    auto opt = [](int64_t v) {
      return v < 0 ? std::nullopt : std::optional<std::uint64_t>(std::uint64_t(v));
    };
    *out = dup_string(evaluate_bounds(opt(k), opt(r), opt(t)).to_json());
  });
}

lrc_status lrc_compare_csv(const char* kind, uint64_t limit, const char* k_rule, char** out) {
  if (auto st = require(kind && out, "kind and out must be non-NULL")) return st;
  return guarded([&] { *out = dup_string(compare_csv(kind, limit, k_rule ? k_rule : "")); });
}

}  // extern "C"
