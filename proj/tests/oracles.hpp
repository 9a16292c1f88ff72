#pragma once

// Independent reference implementations used to freeze expected values.
// Everything here recomputes from first principles on plain containers and
// stays off the library's optimized paths.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "bitmat.hpp"
#include "finite_field.hpp"
#include "linear_code.hpp"
#include "recovery.hpp"

namespace oracle {

using Row = std::vector<int>;
using Mat = std::vector<Row>;

inline Mat to_mat(const lrc::BitMatrix& m) {
  Mat out(m.rows(), Row(m.cols(), 0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m.at(i, j) ? 1 : 0;
  return out;
}

// Plain Gaussian elimination rank.
inline std::size_t rank(Mat m) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && !m[p][c]) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    for (std::size_t i = 0; i < rows; ++i)
      if (i != r && m[i][c])
        for (std::size_t j = 0; j < cols; ++j) m[i][j] ^= m[r][j];
    ++r;
  }
  return r;
}

inline std::size_t pivot_count(const Mat& m) { return rank(m); }

// Exhaustive minimum distance: every nonzero message re-encoded from
// scratch, no incremental state.
inline std::size_t min_distance(const lrc::BitMatrix& gen) {
  std::size_t k = gen.rows(), n = gen.cols();
  std::size_t best = n + 1;
  for (std::uint64_t msg = 1; msg < (std::uint64_t(1) << k); ++msg) {
    std::vector<int> cw(n, 0);
    for (std::size_t b = 0; b < k; ++b)
      if ((msg >> b) & 1)
        for (std::size_t j = 0; j < n; ++j) cw[j] ^= gen.at(b, j) ? 1 : 0;
    std::size_t w = 0;
    for (int x : cw) w += x;
    best = std::min(best, w);
  }
  return best;
}

// All nonzero vectors of weight <= wmax in the row span of H, enumerated
// over all 2^rows combinations of the rows as given (not a reduced basis).
// Returned as sorted support sets.
inline std::set<std::vector<std::uint32_t>> dual_words(const lrc::BitMatrix& h,
                                                       std::size_t wmax) {
  std::set<std::vector<std::uint32_t>> out;
  std::size_t rows = h.rows(), n = h.cols();
  for (std::uint64_t pick = 1; pick < (std::uint64_t(1) << rows); ++pick) {
    std::vector<int> v(n, 0);
    for (std::size_t i = 0; i < rows; ++i)
      if ((pick >> i) & 1)
        for (std::size_t j = 0; j < n; ++j) v[j] ^= h.at(i, j) ? 1 : 0;
    std::vector<std::uint32_t> support;
    for (std::size_t j = 0; j < n; ++j)
      if (v[j]) support.push_back(std::uint32_t(j));
    if (!support.empty() && support.size() <= wmax) out.insert(support);
  }
  return out;
}

inline std::set<std::vector<std::uint32_t>> supports_of(const std::vector<lrc::BitVector>& words) {
  std::set<std::vector<std::uint32_t>> out;
  for (const auto& w : words) out.insert(w.support());
  return out;
}

// Exhaustive recoverability: search over every (dual word, position) choice
// at every step, memoized on the erased set.
class DfsRecoverability {
 public:
  explicit DfsRecoverability(std::vector<std::vector<std::uint32_t>> word_supports)
      : supports_(std::move(word_supports)) {}

  bool recoverable(const std::vector<std::uint32_t>& erased) {
    std::uint64_t mask = 0;
    for (auto p : erased) mask |= std::uint64_t(1) << p;
    return go(mask);
  }

 private:
  bool go(std::uint64_t mask) {
    if (!mask) return true;
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    bool ok = false;
    for (const auto& sup : supports_) {
      std::uint32_t hit = 0, pos = 0;
      for (auto q : sup)
        if ((mask >> q) & 1) {
          ++hit;
          pos = q;
        }
      if (hit == 1 && go(mask & ~(std::uint64_t(1) << pos))) {
        ok = true;
        break;
      }
    }
    memo_[mask] = ok;
    return ok;
  }

  std::vector<std::vector<std::uint32_t>> supports_;
  std::map<std::uint64_t, bool> memo_;
};

// Replay a certificate against the definition: each step's word must lie in
// the dual, have weight <= r+1, and meet the still-erased set exactly in the
// recovered position.
inline bool certificate_sound(const lrc::LinearCode& c, const lrc::ErasurePattern& erased,
                              const lrc::RecoveryCertificate& cert, const lrc::DualWordIndex& idx,
                              std::uint32_t r) {
  std::set<std::uint32_t> still(erased.begin(), erased.end());
  if (cert.steps.size() != erased.size()) return false;
  for (const auto& step : cert.steps) {
    if (!still.count(step.position)) return false;
    const lrc::BitVector& w = idx.word(step.word_index);
    if (w.weight() > std::size_t(r) + 1) return false;
    for (std::size_t g = 0; g < c.generator().rows(); ++g)
      if (c.generator().row(g).dot(w)) return false;
    std::size_t meet = 0;
    bool covers = false;
    for (auto q : idx.word_support(step.word_index)) {
      if (still.count(q)) ++meet;
      if (q == step.position) covers = true;
    }
    if (!covers || meet != 1) return false;
    still.erase(step.position);
  }
  return still.empty();
}

// Latin square properties.
inline bool is_latin(const lrc::LatinSquare& sq) {
  std::size_t r = sq.size();
  for (std::size_t i = 0; i < r; ++i) {
    std::set<std::uint32_t> row_syms, col_syms;
    for (std::size_t j = 0; j < r; ++j) {
      row_syms.insert(sq[i][j]);
      col_syms.insert(sq[j][i]);
    }
    if (row_syms.size() != r || col_syms.size() != r) return false;
    if (*row_syms.begin() < 1 || *row_syms.rbegin() > r) return false;
  }
  return true;
}

inline bool orthogonal(const lrc::LatinSquare& a, const lrc::LatinSquare& b) {
  std::set<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) pairs.insert({a[i][j], b[i][j]});
  return pairs.size() == a.size() * a.size();
}

}  // namespace oracle
