#include "recovery.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <thread>

#include "errors.hpp"
#include <json.hpp>

namespace lrc {

namespace {

constexpr std::size_t kMaxStoredFailures = 100;

unsigned resolve_workers(unsigned w) {
  if (w) return w;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

DualWordIndex::DualWordIndex(std::vector<BitVector> words, std::size_t n)
    : words_(std::move(words)), cover_(n) {
  supports_.reserve(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    supports_.push_back(words_[i].support());
    for (auto col : supports_[i]) cover_[col].push_back(std::uint32_t(i));
  }
}

namespace {

// Peeling core over a scratch erased-bitmask. `erased_list` holds the
// currently erased positions sorted ascending. Returns true when emptied;
// on failure erased_list is left with the stuck residual.
bool peel_core(const DualWordIndex& words, BitVector& erased_mask,
               std::vector<std::uint32_t>& erased_list, RecoveryCertificate* cert) {
  while (!erased_list.empty()) {
    bool progressed = false;
    for (std::size_t ei = 0; ei < erased_list.size() && !progressed; ++ei) {
      std::uint32_t p = erased_list[ei];
      for (auto wi : words.covering(p)) {
        std::size_t meet = 0;
        for (auto q : words.word_support(wi)) {
          meet += erased_mask.test(q);
          if (meet > 1) break;
        }
        if (meet == 1) {  // support meets erased set exactly in p
          erased_mask.reset(p);
          erased_list.erase(erased_list.begin() + ei);
          if (cert) cert->steps.push_back({p, wi});
          progressed = true;
          break;
        }
      }
    }
    if (!progressed) return false;
  }
  return true;
}

}  // namespace

PeelResult peel(const LinearCode& c, const ErasurePattern& erased, const DualWordIndex& words) {
  BitVector mask(c.n());
  for (auto p : erased) {
    if (p >= c.n()) fail(errc::invalid_argument, "erased position out of range");
    mask.set(p);
  }
  std::vector<std::uint32_t> list = erased;
  std::sort(list.begin(), list.end());

  PeelResult res;
  RecoveryCertificate cert;
  if (peel_core(words, mask, list, &cert)) {
    res.certificate = std::move(cert);
  } else {
    res.residual = std::move(list);
  }
  return res;
}

ErasurePattern colex_unrank(std::uint64_t rank, std::uint32_t t, std::uint32_t n) {
  ErasurePattern p(t);
  for (std::uint32_t i = t; i >= 1; --i) {
    // Largest c with C(c, i) <= rank.
    std::uint32_t c = i - 1;
    while (c + 1 < n && binomial(c + 1, i) <= rank) ++c;
    p[i - 1] = c;
    rank -= binomial(c, i);
  }
  return p;
}

bool colex_next(ErasurePattern& p, std::uint32_t n) {
  std::size_t t = p.size();
  for (std::size_t i = 0; i < t; ++i) {
    std::uint32_t limit = (i + 1 < t) ? p[i + 1] : n;
    if (p[i] + 1 < limit) {
      ++p[i];
      for (std::size_t j = 0; j < i; ++j) p[j] = std::uint32_t(j);
      return true;
    }
  }
  return false;
}

namespace {

struct BlockResult {
  std::uint64_t checked = 0;
  std::uint64_t failure_count = 0;
  std::vector<ErasurePattern> failures;  // first kMaxStoredFailures of the block
};

VerificationReport make_seq_report(const LinearCode& c, std::uint32_t r, std::uint32_t t) {
  VerificationReport rep;
  rep.mode = "sequential";
  rep.r = r;
  rep.t = t;
  rep.n = c.n();
  return rep;
}

}  // namespace

VerificationReport verify_sequential(const LinearCode& c, std::uint32_t r, std::uint32_t t,
                                     const VerifyConfig& cfg) {
  if (t > c.n()) fail(errc::invalid_argument, "t exceeds block length");
  auto t0 = std::chrono::steady_clock::now();

  std::uint64_t total = binomial(c.n(), t);
  if (total > cfg.pattern_cap)
    fail(errc::pattern_space_too_large,
         "C(n,t) = " + std::to_string(total) + " exceeds pattern cap " +
             std::to_string(cfg.pattern_cap) + "; use sampled mode");

  DualWordIndex words(low_weight_dual_words(c, r + 1, cfg.enumeration), c.n());

  VerificationReport rep = make_seq_report(c, r, t);
  rep.total_patterns = total;

  constexpr std::uint64_t kBlock = 1 << 16;
  std::uint64_t nblocks = (total + kBlock - 1) / kBlock;
  std::vector<BlockResult> blocks(nblocks);
  std::atomic<std::uint64_t> next_block{0};

  unsigned workers = resolve_workers(cfg.workers);
  auto run = [&] {
    BitVector mask(c.n());
    std::vector<std::uint32_t> list;
    for (;;) {
      std::uint64_t b = next_block.fetch_add(1);
      if (b >= nblocks) return;
      std::uint64_t lo = b * kBlock, hi = std::min(total, lo + kBlock);
      ErasurePattern pat = colex_unrank(lo, t, std::uint32_t(c.n()));
      BlockResult& out = blocks[b];
      for (std::uint64_t i = lo; i < hi; ++i) {
        for (auto p : pat) mask.set(p);
        list.assign(pat.begin(), pat.end());
        if (!peel_core(words, mask, list, nullptr)) {
          ++out.failure_count;
          if (out.failures.size() < kMaxStoredFailures) out.failures.push_back(pat);
          for (auto p : list) mask.reset(p);  // residual still set
        }
        // mask is clear again on success; on failure cleared just above.
        ++out.checked;
        if (i + 1 < hi) colex_next(pat, std::uint32_t(c.n()));
      }
    }
  };

  if (workers <= 1 || nblocks == 1) {
    run();
  } else {
    std::vector<std::thread> ts;
    for (unsigned w = 0; w < workers; ++w) ts.emplace_back(run);
    for (auto& th : ts) th.join();
  }

  for (auto& b : blocks) {
    rep.checked_patterns += b.checked;
    rep.failure_count += b.failure_count;
    for (auto& f : b.failures) {
      if (rep.failures.size() >= kMaxStoredFailures) break;
      rep.failures.push_back(f);
    }
  }
  if (rep.checked_patterns != total)
    fail(errc::invalid_argument, "internal: pattern enumeration lost blocks");
  rep.elapsed_seconds = seconds_since(t0);
  return rep;
}

VerificationReport verify_sequential_sampled(const LinearCode& c, std::uint32_t r, std::uint32_t t,
                                             std::uint64_t samples, std::uint64_t seed,
                                             const VerifyConfig& cfg) {
  if (t > c.n()) fail(errc::invalid_argument, "t exceeds block length");
  if (samples < 1) fail(errc::invalid_argument, "samples must be >= 1");
  auto t0 = std::chrono::steady_clock::now();

  DualWordIndex words(low_weight_dual_words(c, r + 1, cfg.enumeration), c.n());

  VerificationReport rep = make_seq_report(c, r, t);
  rep.mode = "sequential_sampled";
  rep.sampled = true;
  rep.seed = seed;
  rep.total_patterns = binomial(c.n(), t);

  // Partial Fisher-Yates per draw; draws are with replacement. The modulo
  // draw keeps sample streams identical across platforms.
  std::mt19937_64 rng(seed);
  std::vector<std::uint32_t> deck(c.n());
  BitVector mask(c.n());
  std::vector<std::uint32_t> list;
  ErasurePattern pat(t);
  for (std::uint64_t s = 0; s < samples; ++s) {
    for (std::uint32_t i = 0; i < c.n(); ++i) deck[i] = i;
    for (std::uint32_t i = 0; i < t; ++i) {
      std::uint64_t j = i + rng() % (c.n() - i);
      std::swap(deck[i], deck[j]);
      pat[i] = deck[i];
    }
    std::sort(pat.begin(), pat.end());
    for (auto p : pat) mask.set(p);
    list.assign(pat.begin(), pat.end());
    if (!peel_core(words, mask, list, nullptr)) {
      ++rep.failure_count;
      if (rep.failures.size() < kMaxStoredFailures) rep.failures.push_back(pat);
      for (auto p : list) mask.reset(p);
    }
  }
  rep.checked_patterns = samples;
  rep.elapsed_seconds = seconds_since(t0);
  return rep;
}

VerificationReport check_parallel(const LinearCode& c, std::uint32_t r, std::uint32_t t) {
  auto t0 = std::chrono::steady_clock::now();
  const BitMatrix& h = c.pchk();
  VerificationReport rep;
  rep.mode = "parallel";
  rep.r = r;
  rep.t = t;
  rep.n = c.n();
  rep.total_patterns = c.n();
  rep.checked_patterns = c.n();

  auto note = [&](std::string msg) {
    if (rep.structural_failures.size() < kMaxStoredFailures)
      rep.structural_failures.push_back(std::move(msg));
  };

  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t w = h.row(i).weight();
    if (w != std::size_t(r) + 1)
      note("row_weight: row " + std::to_string(i + 1) + " has weight " + std::to_string(w) +
           ", expected " + std::to_string(r + 1));
  }
  for (std::size_t j = 0; j < h.cols(); ++j) {
    std::size_t w = h.col_weight(j);
    if (w != t)
      note("col_weight: column " + std::to_string(j + 1) + " has weight " + std::to_string(w) +
           ", expected " + std::to_string(t));
  }
  // Orthogonality: two distinct rows covering a common column meet only there.
  for (std::size_t i = 0; i < h.rows(); ++i) {
    for (std::size_t j = i + 1; j < h.rows(); ++j) {
      if (h.row(i).and_weight(h.row(j)) > 1)
        note("orthogonality: rows " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
             " share more than one column");
    }
  }
  if (c.n() * t != h.rows() * (std::size_t(r) + 1))
    note("count: n*t = " + std::to_string(c.n() * t) + " != m*(r+1) = " +
         std::to_string(h.rows() * (std::size_t(r) + 1)));

  rep.failure_count = rep.structural_failures.size();
  rep.elapsed_seconds = seconds_since(t0);
  return rep;
}

T2Classification classify_rate_optimal_t2(const LinearCode& c, std::uint32_t r) {
  // Rate must be exactly r/(r+2).
  if (c.k() * (std::uint64_t(r) + 2) != c.n() * std::uint64_t(r) || c.k() == 0)
    return {T2ClassKind::NotNormalForm, "rate is not r/(r+2)"};

  // Admit H when rows (as given, or after row reduction) carry the
  // [I | H'] structure up to column permutation: every column weight 1 or 2,
  // exactly rank(H) weight-1 columns, one per row, and each row covering r
  // weight-2 columns. Reduction can hide a valid permuted form, so the rows
  // as given are tried first.
  auto admits = [&](const BitMatrix& m) {
    if (m.rows() != c.pchk_rank()) return false;
    std::vector<std::size_t> colw(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (auto j : m.row(i).support()) ++colw[j];
    std::size_t ones = 0;
    for (auto w : colw) {
      if (w != 1 && w != 2) return false;
      ones += w == 1;
    }
    if (ones != m.rows()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      std::size_t private_cols = 0, shared_cols = 0;
      for (auto j : m.row(i).support()) (colw[j] == 1 ? private_cols : shared_cols)++;
      if (private_cols != 1 || shared_cols != r) return false;
    }
    return true;
  };

  BitMatrix rows = c.pchk();
  if (!admits(rows)) {
    auto [red, pivots] = rref(c.pchk());
    BitMatrix basis(pivots.size(), c.n());
    for (std::size_t i = 0; i < pivots.size(); ++i) basis.row(i) = red.row(i);
    if (!admits(basis)) return {T2ClassKind::NotNormalForm, "no [I | H'] form found"};
    rows = std::move(basis);
  }

  // Pairwise support intersections; weight-1 columns never contribute.
  bool any_mds = false;
  std::vector<bool> in_mds(rows.rows(), false);
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    for (std::size_t j = i + 1; j < rows.rows(); ++j) {
      std::size_t s = rows.row(i).and_weight(rows.row(j));
      if (s > 1 && s < r) {
        return {T2ClassKind::Violation,
                "rows " + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                    " share " + std::to_string(s) + " columns",
                i, j, s};
      }
      if (s == r && r >= 2) {
        any_mds = true;
        in_mds[i] = in_mds[j] = true;
      }
    }
  }
  if (!any_mds) return {T2ClassKind::RegularGraph, "all pairwise intersections in {0,1}"};
  bool all_mds = std::all_of(in_mds.begin(), in_mds.end(), [](bool b) { return b; });
  if (all_mds) return {T2ClassKind::MdsLocal, "rows pair up sharing r columns"};
  // Weight-2 columns make a shared column impossible between an MDS pair
  // row and any third row, so the two patterns sit on disjoint symbols.
  return {T2ClassKind::Product, "regular-graph and MDS-pair rows on disjoint symbols"};
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["mode"] = mode;
  if (!spec.empty()) j["spec"] = spec;
  j["r"] = r;
  j["t"] = t;
  j["n"] = n;
  j["pass"] = pass();
  j["total_patterns"] = total_patterns;
  j["checked_patterns"] = checked_patterns;
  j["failure_count"] = failure_count;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& f : failures) {
    auto one = nlohmann::ordered_json::array();
    for (auto p : f) one.push_back(p + 1);  // 1-based symbol numbering
    arr.push_back(std::move(one));
  }
  j["failures"] = std::move(arr);
  if (!structural_failures.empty()) j["structural_failures"] = structural_failures;
  j["elapsed_seconds"] = elapsed_seconds;
  j["sampled"] = sampled;
  if (sampled) {
    j["seed"] = seed;
    j["sampling"] = "with_replacement";
  }
  return j.dump();
}

}  // namespace lrc
