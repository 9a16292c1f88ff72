#include "finite_field.hpp"

#include "errors.hpp"

namespace lrc {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Fixed irreducible modulus per extension degree, coefficient bitmasks.
// x^2+x+1, x^3+x+1, x^4+x+1, x^5+x^2+1, x^6+x+1, x^7+x+1, x^8+x^4+x^3+x+1.
constexpr std::uint32_t kModulus[9] = {0, 0, 0b111, 0b1011, 0b10011, 0b100101,
                                       0b1000011, 0b10000011, 0b100011011};

std::uint32_t gf2x_mul(std::uint32_t a, std::uint32_t b, std::uint32_t modulus,
                       std::uint32_t degree) {
  std::uint32_t acc = 0;
  while (b) {
    if (b & 1) acc ^= a;
    b >>= 1;
    a <<= 1;
    if (a >> degree) a ^= modulus;
  }
  return acc;
}

}  // namespace

std::uint32_t FieldDescriptor::add(std::uint32_t a, std::uint32_t b) const {
  if (degree > 1) return a ^ b;
  std::uint32_t s = a + b;
  return s >= order ? s - order : s;
}

std::uint32_t FieldDescriptor::mul(std::uint32_t a, std::uint32_t b) const {
  if (degree > 1) return gf2x_mul(a, b, modulus, degree);
  return std::uint32_t((std::uint64_t(a) * b) % order);
}

std::uint32_t FieldDescriptor::neg(std::uint32_t a) const {
  if (degree > 1) return a;
  return a == 0 ? 0 : order - a;
}

std::uint32_t FieldDescriptor::pow(std::uint32_t a, std::uint32_t e) const {
  std::uint32_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint32_t FieldDescriptor::inv(std::uint32_t a) const {
  if (a == 0) fail(errc::invalid_argument, "inverse of zero");
  return pow(a, order - 2);
}

FieldDescriptor field(std::uint32_t order) {
  if (is_prime(order)) return {order, order, 1, 0};
  for (std::uint32_t s = 2; s <= 8; ++s) {
    if (order == (1u << s)) return {order, 2, s, kModulus[s]};
  }
  fail(errc::unsupported_order,
       "field order " + std::to_string(order) + " not supported (prime or 2^s, s <= 8)");
}

std::vector<LatinSquare> mols_set(std::uint32_t r, std::uint32_t count) {
  FieldDescriptor f = field(r);
  if (count > r - 1)
    fail(errc::too_many_squares, "at most " + std::to_string(r - 1) +
                                     " mutually orthogonal squares of order " + std::to_string(r));
  std::vector<LatinSquare> out;
  out.reserve(count);
  for (std::uint32_t m = 1; m <= count; ++m) {
    LatinSquare sq(r, std::vector<std::uint32_t>(r));
    for (std::uint32_t i = 0; i < r; ++i)
      for (std::uint32_t j = 0; j < r; ++j) sq[i][j] = f.add(f.mul(m, i), j) + 1;
    out.push_back(std::move(sq));
  }
  return out;
}

}  // namespace lrc
