#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lrc {

// Reduced fraction of machine integers; covers code rates and small caps.
struct Rat64 {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Rat64 make(std::uint64_t num, std::uint64_t den);
  Rat64 mul(const Rat64& o) const;
  bool operator==(const Rat64&) const = default;
  bool less(const Rat64& o) const;

  double to_double() const { return double(num) / double(den); }
  std::string to_string() const;            // "num/den"
  std::string to_decimal(int places) const; // half-up rounding, e.g. "0.4000"
};

// Minimal unsigned big integer; only what exact rate-bound products need.
class BigUint {
 public:
  BigUint() : limb_{0} {}
  explicit BigUint(std::uint64_t v) : limb_{v} {}

  void mul_u64(std::uint64_t f);
  static BigUint mul(const BigUint& a, const BigUint& b);
  static int cmp(const BigUint& a, const BigUint& b);

  bool is_zero() const { return limb_.size() == 1 && limb_[0] == 0; }
  std::optional<std::uint64_t> to_u64() const {
    if (limb_.size() > 1) return std::nullopt;
    return limb_[0];
  }
  double to_double() const;
  std::string to_string() const;

 private:
  void trim();
  std::uint64_t divmod_u64(std::uint64_t d);  // in-place divide, returns remainder
  std::vector<std::uint64_t> limb_;           // little-endian
};

// Exact rational with big components, unreduced.
struct BigRat {
  BigUint num{std::uint64_t(1)};
  BigUint den{std::uint64_t(1)};

  void mul_factor(std::uint64_t n, std::uint64_t d) {
    num.mul_u64(n);
    den.mul_u64(d);
  }
  bool less(const BigRat& o) const {
    return BigUint::cmp(BigUint::mul(num, o.den), BigUint::mul(o.num, den)) < 0;
  }
  double to_double() const { return num.to_double() / den.to_double(); }
  std::string to_string() const;  // reduced when both parts fit a machine word
  std::string to_decimal(int places) const;
};

}  // namespace lrc
