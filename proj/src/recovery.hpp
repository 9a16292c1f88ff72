#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bitmat.hpp"
#include "linear_code.hpp"

namespace lrc {

// Sorted 0-based erased column indices.
using ErasurePattern = std::vector<std::uint32_t>;

// One witness that a pattern peels: at each step the chosen dual word meets
// the still-erased set exactly in the recovered position.
struct RecoveryStep {
  std::uint32_t position;
  std::size_t word_index;  // into the dual-word list handed to peel
};

struct RecoveryCertificate {
  std::vector<RecoveryStep> steps;
};

struct PeelResult {
  std::optional<RecoveryCertificate> certificate;  // present iff fully recovered
  ErasurePattern residual;                         // stuck positions on failure
  bool ok() const { return certificate.has_value(); }
};

// Dual words of weight <= r+1 indexed by the columns they cover. Word order
// is the deterministic order produced by low_weight_dual_words.
class DualWordIndex {
 public:
  DualWordIndex(std::vector<BitVector> words, std::size_t n);

  std::size_t size() const { return words_.size(); }
  const BitVector& word(std::size_t i) const { return words_[i]; }
  const std::vector<std::uint32_t>& word_support(std::size_t i) const { return supports_[i]; }
  const std::vector<std::uint32_t>& covering(std::uint32_t col) const { return cover_[col]; }

 private:
  std::vector<BitVector> words_;
  std::vector<std::vector<std::uint32_t>> supports_;
  std::vector<std::vector<std::uint32_t>> cover_;
};

// Greedy peeling. At each step, among eligible (word, position) pairs pick
// the lowest position, then the first word in index order. Greedy cannot get
// stuck on a recoverable pattern: if some valid recovery order exists for E,
// dropping any greedily recovered symbol from that order leaves a valid
// order for the residual set, so an eligible pair exists at every step.
PeelResult peel(const LinearCode& c, const ErasurePattern& erased, const DualWordIndex& words);

struct VerificationReport {
  std::string mode;  // "sequential" | "sequential_sampled" | "parallel"
  std::string spec;  // reproducibility token when known
  std::uint32_t r = 0, t = 0;
  std::size_t n = 0;
  std::uint64_t total_patterns = 0;
  std::uint64_t checked_patterns = 0;
  std::uint64_t failure_count = 0;
  std::vector<ErasurePattern> failures;          // first 100 in rank order
  std::vector<std::string> structural_failures;  // parallel checker items
  double elapsed_seconds = 0;
  bool sampled = false;
  std::uint64_t seed = 0;

  bool pass() const { return failure_count == 0 && structural_failures.empty(); }
  std::string to_json() const;
};

struct VerifyConfig {
  EnumerationConfig enumeration;
  std::uint64_t pattern_cap = 100'000'000;  // C(n,t) limit for exhaustive runs
  unsigned workers = 0;                     // 0 = hardware concurrency
};

// Exhaustive check of every size-t pattern in colexicographic order.
// Success on all size-t sets implies success on smaller ones: a recovery
// order for a superset restricts to one for the subset.
VerificationReport verify_sequential(const LinearCode& c, std::uint32_t r, std::uint32_t t,
                                     const VerifyConfig& cfg = {});

// Uniform size-t samples (with replacement across draws), deterministic for
// a given seed.
VerificationReport verify_sequential_sampled(const LinearCode& c, std::uint32_t r, std::uint32_t t,
                                             std::uint64_t samples, std::uint64_t seed,
                                             const VerifyConfig& cfg = {});

// Structural orthogonal-parity check on the stored rows: row weight r+1,
// column weight t, any two rows covering a common column meet exactly there,
// and n*t == m*(r+1).
VerificationReport check_parallel(const LinearCode& c, std::uint32_t r, std::uint32_t t);

enum class T2ClassKind { RegularGraph, MdsLocal, Product, Violation, NotNormalForm };

struct T2Classification {
  T2ClassKind kind;
  std::string detail;
  // Offending row pair and intersection size for Violation.
  std::size_t row_i = 0, row_j = 0, overlap = 0;
};

// Classify a rate-r/(r+2) code given by parity rows reducible to [I | H']
// with weight-2 columns in H' and weight-r rows.
T2Classification classify_rate_optimal_t2(const LinearCode& c, std::uint32_t r);

// Colexicographic combination enumeration utilities.
ErasurePattern colex_unrank(std::uint64_t rank, std::uint32_t t, std::uint32_t n);
bool colex_next(ErasurePattern& p, std::uint32_t n);  // false once exhausted

}  // namespace lrc
