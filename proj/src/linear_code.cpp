#include "linear_code.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "errors.hpp"
#include <json.hpp>

namespace lrc {

LinearCode::LinearCode(BitMatrix pchk) : pchk_(std::move(pchk)) {
  if (pchk_.rows() == 0 || pchk_.cols() == 0)
    fail(errc::invalid_argument, "empty parity-check matrix");
  n_ = pchk_.cols();
  rank_ = rank(pchk_);
  k_ = n_ - rank_;
}

const BitMatrix& LinearCode::generator() const {
  std::call_once(cache_->once,
                 [this] { cache_->gen = std::make_unique<BitMatrix>(nullspace_basis(pchk_)); });
  return *cache_->gen;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > ~std::uint64_t(0)) return ~std::uint64_t(0);
  }
  return std::uint64_t(r);
}

namespace {

unsigned resolve_workers(unsigned w) {
  if (w) return w;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Codeword for message index i under Gray ordering: XOR of generator rows
// selected by gray(i) = i ^ (i >> 1).
BitVector gray_state(const BitMatrix& gen, std::uint64_t i) {
  BitVector v(gen.cols());
  std::uint64_t g = i ^ (i >> 1);
  while (g) {
    v.xor_with(gen.row(std::countr_zero(g)));
    g &= g - 1;
  }
  return v;
}

std::size_t min_weight_range(const BitMatrix& gen, std::uint64_t lo, std::uint64_t hi) {
  // Successive Gray codes differ in bit ctz(i), so each step is one row XOR.
  BitVector cur = gray_state(gen, lo);
  std::size_t best = lo == 0 ? ~std::size_t(0) : cur.weight();
  for (std::uint64_t i = lo + 1; i < hi; ++i) {
    cur.xor_with(gen.row(std::countr_zero(i)));
    best = std::min(best, cur.weight());
  }
  return best;
}

}  // namespace

std::size_t min_distance(const LinearCode& c, const EnumerationConfig& cfg) {
  std::size_t k = c.k();
  if (k == 0) fail(errc::invalid_argument, "min_distance of a zero-dimensional code");
  if (k > cfg.min_distance_cap || k > 62)
    fail(errc::cap_exceeded, "min_distance: k = " + std::to_string(k) + " exceeds cap " +
                                 std::to_string(std::min<std::size_t>(cfg.min_distance_cap, 62)));
  const BitMatrix& gen = c.generator();
  std::uint64_t total = std::uint64_t(1) << k;

  unsigned workers = resolve_workers(cfg.workers);
  if (workers <= 1 || total < (1u << 16)) return min_weight_range(gen, 0, total);

  std::vector<std::size_t> best(workers, ~std::size_t(0));
  std::vector<std::thread> ts;
  std::uint64_t chunk = (total + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::uint64_t lo = w * chunk, hi = std::min(total, lo + chunk);
    if (lo >= hi) break;
    ts.emplace_back([&, w, lo, hi] { best[w] = min_weight_range(gen, lo, hi); });
  }
  for (auto& t : ts) t.join();
  return *std::min_element(best.begin(), best.end());
}

std::vector<BitVector> dual_words_by_basis(const LinearCode& c, std::size_t wmax) {
  auto [r, pivots] = rref(c.pchk());
  std::size_t m = pivots.size();
  BitMatrix basis(m, c.n());
  for (std::size_t i = 0; i < m; ++i) basis.row(i) = r.row(i);

  std::vector<BitVector> out;
  BitVector cur(c.n());
  std::uint64_t total = std::uint64_t(1) << m;
  for (std::uint64_t i = 1; i < total; ++i) {
    cur.xor_with(basis.row(std::countr_zero(i)));
    if (cur.weight() <= wmax) out.push_back(cur);
  }
  std::sort(out.begin(), out.end(), BitVector::weight_support_less);
  return out;
}

std::vector<BitVector> dual_words_by_support(const LinearCode& c, std::size_t wmax) {
  const BitMatrix& gen = c.generator();
  std::size_t n = c.n();
  std::vector<BitVector> out;

  // Supports in colexicographic order per weight; membership in the dual is
  // orthogonality to every generator row.
  std::vector<std::uint32_t> pos;
  auto emit_if_dual = [&](std::size_t w) {
    for (std::size_t g = 0; g < gen.rows(); ++g) {
      bool parity = false;
      for (std::size_t i = 0; i < w; ++i) parity ^= gen.at(g, pos[i]);
      if (parity) return;
    }
    BitVector v(n);
    for (std::size_t i = 0; i < w; ++i) v.set(pos[i]);
    out.push_back(std::move(v));
  };

  for (std::size_t w = 1; w <= std::min(wmax, n); ++w) {
    pos.assign(w, 0);
    for (std::size_t i = 0; i < w; ++i) pos[i] = std::uint32_t(i);
    while (true) {
      emit_if_dual(w);
      std::size_t i = 0;
      while (i + 1 < w && pos[i] + 1 == pos[i + 1]) ++i;
      if (pos[i] + 1 >= (i + 1 < w ? pos[i + 1] : std::uint32_t(n))) break;
      ++pos[i];
      for (std::size_t j = 0; j < i; ++j) pos[j] = std::uint32_t(j);
    }
  }
  std::sort(out.begin(), out.end(), BitVector::weight_support_less);
  return out;
}

std::vector<BitVector> low_weight_dual_words(const LinearCode& c, std::size_t wmax,
                                             const EnumerationConfig& cfg) {
  if (wmax < 1) fail(errc::invalid_argument, "wmax must be >= 1");
  if (c.pchk_rank() <= cfg.max_basis_rank) return dual_words_by_basis(c, wmax);

  std::uint64_t supports = 0;
  for (std::size_t w = 1; w <= std::min(wmax, c.n()); ++w) {
    std::uint64_t b = binomial(c.n(), w);
    supports = supports > ~std::uint64_t(0) - b ? ~std::uint64_t(0) : supports + b;
  }
  if (supports <= cfg.max_support_enum) return dual_words_by_support(c, wmax);

  fail(errc::enumeration_infeasible,
       "dual-word enumeration infeasible: rank " + std::to_string(c.pchk_rank()) + " > " +
           std::to_string(cfg.max_basis_rank) + " and C(n,<=wmax) = " + std::to_string(supports) +
           " > " + std::to_string(cfg.max_support_enum));
}

std::string CodeReport::to_json() const {
  nlohmann::ordered_json j;
  if (!spec.empty()) j["spec"] = spec;
  j["n"] = n;
  j["k"] = k;
  j["rank"] = rank;
  j["rate"] = rate.to_string();
  j["rate_decimal"] = rate.to_decimal(4);
  if (d) j["d"] = *d;
  if (r_claimed) j["r_claimed"] = *r_claimed;
  if (t_claimed) j["t_claimed"] = *t_claimed;
  if (!mode.empty()) j["mode"] = mode;
  j["verified"] = verified;
  return j.dump();
}

}  // namespace lrc
