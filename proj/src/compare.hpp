#pragma once

#include <cstdint>
#include <string>

namespace lrc {

// CSV comparison tables. Output is deterministic for fixed arguments.

// Availability rate cap vs the r=2 chain-code rates for t = 4..7.
std::string table1_csv();

// Projective-plane code rate vs the availability cap, s = 2..s_max (<= 4).
std::string pg_rate_csv(std::uint32_t s_max);

// Steiner-triple code rate vs the availability cap, s = 3..s_max.
std::string sts_rate_csv(std::uint32_t s_max);

// Hypergraph block length minus the three-erasure bound, beta = 1..beta_max.
std::string fig2_gap_csv(std::uint64_t beta_max);

// k_rule applies to t3bounds only: decimal exponent for the k window
// (empty = the default 1.8).
std::string compare_csv(const std::string& kind, std::uint64_t limit,
                        const std::string& k_rule = "");

}  // namespace lrc
