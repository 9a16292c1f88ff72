#pragma once

#include <cstdint>
#include <vector>

namespace lrc {

// GF(p) for prime p, or GF(2^s) for s <= 8 with a fixed built-in modulus.
// Elements are canonical integers: residues for prime fields, polynomial
// coefficient bitmasks for GF(2^s). Either way they live in [0, order).
struct FieldDescriptor {
  std::uint32_t order = 0;
  std::uint32_t characteristic = 0;
  std::uint32_t degree = 1;
  std::uint32_t modulus = 0;  // coefficient bitmask incl. leading term; 0 for prime fields

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint32_t e) const;
  std::uint32_t inv(std::uint32_t a) const;
};

// Throws UnsupportedOrder unless order is prime or 2^s with s <= 8.
FieldDescriptor field(std::uint32_t order);

// r x r Latin square with symbols 1..r.
using LatinSquare = std::vector<std::vector<std::uint32_t>>;

// Squares L_m(i,j) = m*i + j over GF(r), m = 1..count, remapped to {1..r}.
// Pairwise orthogonal; requires count <= r-1.
std::vector<LatinSquare> mols_set(std::uint32_t r, std::uint32_t count);

}  // namespace lrc
