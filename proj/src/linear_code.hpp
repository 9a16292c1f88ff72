#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "bitmat.hpp"
#include "rational.hpp"

namespace lrc {

// Binary code defined as the nullspace of a parity-check matrix. The matrix
// is stored verbatim: redundant rows are part of the locality structure and
// are kept. rank and k are fixed at construction.
class LinearCode {
 public:
  explicit LinearCode(BitMatrix pchk);

  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  std::size_t pchk_rank() const { return rank_; }
  const BitMatrix& pchk() const { return pchk_; }

  Rat64 rate() const { return Rat64::make(k_, n_); }

  // Generator basis (rows span the code); derived on demand, cached.
  const BitMatrix& generator() const;

 private:
  // Copies share the cache; the generator is a pure function of pchk_.
  struct GenCache {
    std::once_flag once;
    std::unique_ptr<BitMatrix> gen;
  };

  BitMatrix pchk_;
  std::size_t n_, rank_, k_;
  std::shared_ptr<GenCache> cache_ = std::make_shared<GenCache>();
};

struct EnumerationConfig {
  std::size_t max_basis_rank = 24;             // strategy (a): 2^rank combinations
  std::uint64_t max_support_enum = 10'000'000; // strategy (b): C(n, wmax) candidates
  std::size_t min_distance_cap = 26;           // 2^k codeword sweep
  unsigned workers = 0;                        // 0 = hardware concurrency
};

// Minimum Hamming weight over all nonzero codewords, by Gray-code sweep of
// the 2^k message space. Throws CapExceeded when k > cfg.min_distance_cap.
std::size_t min_distance(const LinearCode& c, const EnumerationConfig& cfg = {});

// All nonzero dual codewords of weight <= wmax, sorted by weight then by
// support. Picks between basis enumeration and support enumeration; throws
// EnumerationInfeasible when both thresholds are exceeded.
std::vector<BitVector> low_weight_dual_words(const LinearCode& c, std::size_t wmax,
                                             const EnumerationConfig& cfg = {});

// The two strategies individually (exposed for cross-checking).
std::vector<BitVector> dual_words_by_basis(const LinearCode& c, std::size_t wmax);
std::vector<BitVector> dual_words_by_support(const LinearCode& c, std::size_t wmax);

// Flat report of code parameters for CLI output.
struct CodeReport {
  std::string spec;
  std::size_t n = 0, k = 0, rank = 0;
  Rat64 rate;
  std::optional<std::size_t> d;
  std::optional<std::uint32_t> r_claimed, t_claimed;
  std::string mode;      // "sequential" | "parallel" | ""
  std::string verified = "unverified";

  std::string to_json() const;
};

// C(n, k) clamped to uint64 max.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace lrc
