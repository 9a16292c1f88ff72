#include "rational.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "errors.hpp"

namespace lrc {

Rat64 Rat64::make(std::uint64_t num, std::uint64_t den) {
  if (den == 0) fail(errc::invalid_argument, "rational with zero denominator");
  if (num == 0) return {0, 1};
  std::uint64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

Rat64 Rat64::mul(const Rat64& o) const {
  // Cross-reduce before multiplying to keep products in range.
  std::uint64_t g1 = std::gcd(num, o.den);
  std::uint64_t g2 = std::gcd(o.num, den);
  return Rat64::make((num / g1) * (o.num / g2), (den / g2) * (o.den / g1));
}

bool Rat64::less(const Rat64& o) const {
  return (unsigned __int128)num * o.den < (unsigned __int128)o.num * den;
}

std::string Rat64::to_string() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

std::string Rat64::to_decimal(int places) const {
  std::uint64_t pow10 = 1;
  for (int i = 0; i < places; ++i) pow10 *= 10;
  // round(num/den * 10^places) half-up
  unsigned __int128 scaled = ((unsigned __int128)num * pow10 * 2 + den) / ((unsigned __int128)den * 2);
  std::uint64_t ip = std::uint64_t(scaled / pow10);
  std::uint64_t fp = std::uint64_t(scaled % pow10);
  std::string frac = std::to_string(fp);
  frac.insert(frac.begin(), places - frac.size(), '0');
  return std::to_string(ip) + "." + frac;
}

void BigUint::trim() {
  while (limb_.size() > 1 && limb_.back() == 0) limb_.pop_back();
}

void BigUint::mul_u64(std::uint64_t f) {
  unsigned __int128 carry = 0;
  for (auto& l : limb_) {
    unsigned __int128 p = (unsigned __int128)l * f + carry;
    l = std::uint64_t(p);
    carry = p >> 64;
  }
  if (carry) limb_.push_back(std::uint64_t(carry));
  trim();
}

BigUint BigUint::mul(const BigUint& a, const BigUint& b) {
  BigUint r;
  r.limb_.assign(a.limb_.size() + b.limb_.size(), 0);
  for (std::size_t i = 0; i < a.limb_.size(); ++i) {
    unsigned __int128 carry = 0;
    for (std::size_t j = 0; j < b.limb_.size(); ++j) {
      unsigned __int128 p =
          (unsigned __int128)a.limb_[i] * b.limb_[j] + r.limb_[i + j] + carry;
      r.limb_[i + j] = std::uint64_t(p);
      carry = p >> 64;
    }
    r.limb_[i + b.limb_.size()] += std::uint64_t(carry);
  }
  r.trim();
  return r;
}

int BigUint::cmp(const BigUint& a, const BigUint& b) {
  if (a.limb_.size() != b.limb_.size()) return a.limb_.size() < b.limb_.size() ? -1 : 1;
  for (std::size_t i = a.limb_.size(); i-- > 0;) {
    if (a.limb_[i] != b.limb_[i]) return a.limb_[i] < b.limb_[i] ? -1 : 1;
  }
  return 0;
}

double BigUint::to_double() const {
  double d = 0;
  for (std::size_t i = limb_.size(); i-- > 0;) d = d * 18446744073709551616.0 + double(limb_[i]);
  return d;
}

std::uint64_t BigUint::divmod_u64(std::uint64_t d) {
  unsigned __int128 rem = 0;
  for (std::size_t i = limb_.size(); i-- > 0;) {
    unsigned __int128 cur = (rem << 64) | limb_[i];
    limb_[i] = std::uint64_t(cur / d);
    rem = cur % d;
  }
  trim();
  return std::uint64_t(rem);
}

std::string BigUint::to_string() const {
  BigUint tmp = *this;
  std::vector<std::string> chunks;
  while (!tmp.is_zero()) {
    std::uint64_t r = tmp.divmod_u64(1000000000000000000ull);
    chunks.push_back(std::to_string(r));
  }
  if (chunks.empty()) return "0";
  std::string out = chunks.back();
  for (std::size_t i = chunks.size() - 1; i-- > 0;) {
    std::string c = chunks[i];
    out += std::string(18 - c.size(), '0') + c;
  }
  return out;
}

std::string BigRat::to_string() const {
  auto n64 = num.to_u64();
  auto d64 = den.to_u64();
  if (n64 && d64 && *d64 != 0) return Rat64::make(*n64, *d64).to_string();
  return num.to_string() + "/" + den.to_string();
}

std::string BigRat::to_decimal(int places) const {
  // Products of small factors stay far from rounding boundaries at 4
  // places, so a double quotient is exact enough here.
  double v = to_double();
  double pow10 = std::pow(10.0, places);
  double scaled = std::round(v * pow10);
  std::uint64_t ip = std::uint64_t(scaled / pow10);
  std::uint64_t fp = std::uint64_t(std::llround(scaled - double(ip) * pow10));
  std::string frac = std::to_string(fp);
  frac.insert(frac.begin(), places - frac.size(), '0');
  return std::to_string(ip) + "." + frac;
}

}  // namespace lrc
