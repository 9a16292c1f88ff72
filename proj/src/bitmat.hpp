#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lrc {

// Dense bit vector packed in 64-bit words. Bits at positions >= size() are
// kept zero so wordwise weight/XOR need no masking.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t len) : len_(len), w_((len + 63) / 64, 0) {}

  std::size_t size() const { return len_; }

  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
  void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }
  void assign(std::size_t i, bool v) { v ? set(i) : reset(i); }

  void clear() { std::fill(w_.begin(), w_.end(), 0); }
  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }

  std::size_t weight() const {
    std::size_t c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  void xor_with(const BitVector& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
  }

  std::size_t and_weight(const BitVector& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
    return c;
  }

  // Parity of |support(this) & support(o)|; the GF(2) inner product.
  bool dot(const BitVector& o) const {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
    return std::popcount(acc) & 1u;
  }

  std::vector<std::uint32_t> support() const {
    std::vector<std::uint32_t> s;
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
      std::uint64_t w = w_[wi];
      while (w) {
        s.push_back(static_cast<std::uint32_t>(wi * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return s;
  }

  std::span<const std::uint64_t> words() const { return w_; }
  std::span<std::uint64_t> words() { return w_; }

  bool operator==(const BitVector&) const = default;
  // Total order: by weight, then lexicographic on the support sequence.
  static bool weight_support_less(const BitVector& a, const BitVector& b);

 private:
  std::size_t len_ = 0;
  std::vector<std::uint64_t> w_;
};

// Dense binary matrix, one BitVector per row.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);  // rejects > 2^33 total bits

  static BitMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const BitVector& row(std::size_t i) const { return row_[i]; }
  BitVector& row(std::size_t i) { return row_[i]; }

  bool at(std::size_t i, std::size_t j) const { return row_[i].test(j); }
  void set(std::size_t i, std::size_t j) { row_[i].set(j); }
  void assign(std::size_t i, std::size_t j, bool v) { row_[i].assign(j, v); }

  void append_row(BitVector v);

  // Weight of column j over all rows.
  std::size_t col_weight(std::size_t j) const;

  bool operator==(const BitMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BitVector> row_;
};

std::size_t rank(const BitMatrix& m);

// Reduced row-echelon form (rows preserved, zero rows sink to the bottom)
// plus the pivot column list.
std::pair<BitMatrix, std::vector<std::size_t>> rref(const BitMatrix& m);

// Basis of {x : Mx = 0}; rows() of the result == cols(m) - rank(m).
BitMatrix nullspace_basis(const BitMatrix& m);

BitMatrix transpose(const BitMatrix& m);

BitMatrix kronecker(const BitMatrix& a, const BitMatrix& b);

// y = M x over GF(2); x indexed by columns.
BitVector mat_vec(const BitMatrix& m, const BitVector& x);

// pchk-v1 text format: "rows cols\n" then one line of cols {0,1} chars per row.
std::string format_pchk(const BitMatrix& m);
BitMatrix parse_pchk(const std::string& text);
BitMatrix read_pchk_file(const std::string& path);
void write_pchk_file(const BitMatrix& m, const std::string& path);

}  // namespace lrc
