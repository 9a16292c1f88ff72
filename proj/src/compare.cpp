#include "compare.hpp"

#include "bounds.hpp"
#include "constructions.hpp"
#include "errors.hpp"

namespace lrc {

std::string table1_csv() {
  std::string bound_row = "availability_bound";
  std::string rate_row = "construction_rate";
  std::string header = "t";
  for (std::uint32_t t = 4; t <= 7; ++t) {
    header += "," + std::to_string(t);
    bound_row += "," + availability_rate_cap(2, t).to_decimal(4);
    rate_row += "," + r2_chain_code(t, 16).code.rate().to_decimal(4);
  }
  return header + "\n" + bound_row + "\n" + rate_row + "\n";
}

std::string pg_rate_csv(std::uint32_t s_max) {
  if (s_max == 0) s_max = 4;
  std::string out = "s,n,k,rate,cap\n";
  for (std::uint32_t s = 2; s <= s_max; ++s) {
    BuiltCode b = projective_plane_code(s);
    std::uint64_t q = 1u << s;
    out += std::to_string(s) + "," + std::to_string(b.code.n()) + "," +
           std::to_string(b.code.k()) + "," + b.code.rate().to_decimal(4) + "," +
           availability_rate_cap(q, q + 1).to_decimal(4) + "\n";
  }
  return out;
}

std::string sts_rate_csv(std::uint32_t s_max) {
  if (s_max == 0) s_max = 6;
  std::string out = "s,n,k,rate,cap\n";
  for (std::uint32_t s = 3; s <= s_max; ++s) {
    BuiltCode b = steiner_triple_code(s);
    std::uint64_t r = (1u << (s - 1)) - 2;
    out += std::to_string(s) + "," + std::to_string(b.code.n()) + "," +
           std::to_string(b.code.k()) + "," + b.code.rate().to_decimal(4) + "," +
           availability_rate_cap(r, 3).to_decimal(4) + "\n";
  }
  return out;
}

std::string fig2_gap_csv(std::uint64_t beta_max) {
  if (beta_max == 0) beta_max = 50;
  if (beta_max > 100000)
    fail(errc::parameter_constraint, "fig2_gap: beta_max at most 100000");
  std::string out = "beta,n,bound,gap\n";
  for (std::uint64_t beta = 1; beta <= beta_max; ++beta) {
    std::uint64_t n = beta * beta * beta + 3 * beta;
    std::uint64_t bound = new_t3_bound(beta * beta * beta, beta * beta).n;
    out += std::to_string(beta) + "," + std::to_string(n) + "," + std::to_string(bound) + "," +
           std::to_string(std::int64_t(n) - std::int64_t(bound)) + "\n";
  }
  return out;
}

std::string compare_csv(const std::string& kind, std::uint64_t limit,
                        const std::string& k_rule) {
  if (kind == "table1") return table1_csv();
  if (kind == "t3bounds") {
    KWindowRule rule = k_rule.empty() ? KWindowRule{} : KWindowRule::parse(k_rule);
    return compare_t3_bounds(limit ? limit : 50, rule).to_csv();
  }
  if (kind == "pg_rate") return pg_rate_csv(std::uint32_t(limit));
  if (kind == "sts_rate") return sts_rate_csv(std::uint32_t(limit));
  if (kind == "fig2_gap") return fig2_gap_csv(limit);
  fail(errc::parse_error, "unknown comparison kind: " + kind);
}

}  // namespace lrc
