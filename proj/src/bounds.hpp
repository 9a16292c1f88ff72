#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"

namespace lrc {

struct ParallelLengthBound {
  std::uint64_t m_min = 0;
  std::uint64_t n_min = 0;
  bool tight = false;  // t | r(r+1); otherwise n_min is the ceiling
};

// m >= (t-1)(r+1)+1 and n >= (r+1)^2 - r(r+1)/t.
ParallelLengthBound parallel_min_length(std::uint64_t r, std::uint64_t t);

// n >= k + ceil(2k/r), two erasures.
std::uint64_t seq_t2_min_length(std::uint64_t k, std::uint64_t r);

// n >= k + ceil((2k + ceil(k/r))/r), three erasures.
std::uint64_t song_t3_bound(std::uint64_t k, std::uint64_t r);

struct T3Bound {
  std::uint64_t n = 0;
  std::uint64_t s1 = 0;  // achieving s1
  std::uint64_t f1 = 0, f2 = 0;
};

// n >= k + min_{s1} max{f1(s1), f2(s1), s1} where f1/f2 are the least m
// with m^2 + m(2r-5) >= 6k + s1^2 - 5s1 and
//      m^2 + m(4r-4+2s1) >= 12k + 3s1^2 - 4s1 - 7.
T3Bound new_t3_bound(std::uint64_t k, std::uint64_t r);

// Exposed for the exactness property test: least m >= 0 on the upper branch
// of m^2 + b*m - c >= 0.
std::int64_t least_quadratic_root(std::int64_t b, std::int64_t c);

// k/n <= r/(r+2), two erasures (sequential or parallel).
Rat64 t2_rate_cap(std::uint64_t r);

// k/n <= 1 / prod_{j=1..t} (1 + 1/(jr)), availability.
BigRat availability_rate_cap(std::uint64_t r, std::uint64_t t);

struct T3CompareRow {
  std::uint64_t r, k, song, nnew;
  std::int64_t delta;  // nnew - song
};

struct T3CompareTable {
  std::vector<T3CompareRow> rows;
  bool new_never_below_song = true;
  std::string to_csv() const;  // header "r,k,song,new,delta"
};

// Window rule k <= r^e - 1 for a decimal exponent like "1.8", decided in
// exact integers: the largest k with (k+1)^den <= r^num where e = num/den.
struct KWindowRule {
  std::uint64_t exp_num = 9;
  std::uint64_t exp_den = 5;

  static KWindowRule parse(const std::string& decimal_exponent);  // e.g. "1.8"
  std::uint64_t k_max(std::uint64_t r) const;
};

// Sweep r = 1..r_max, k in [r, rule.k_max(r)].
T3CompareTable compare_t3_bounds(std::uint64_t r_max, const KWindowRule& rule = {});
std::uint64_t default_k_max(std::uint64_t r);

struct BoundsReport {
  std::optional<std::uint64_t> k, r, t;
  std::optional<ParallelLengthBound> parallel;
  std::optional<std::uint64_t> n_min_seq_t2;
  std::optional<std::uint64_t> n_song_t3;
  std::optional<T3Bound> n_new_t3;
  std::optional<Rat64> rate_cap_t2;
  std::optional<BigRat> rate_cap_availability;

  std::string to_json() const;
};

// Evaluate every bound computable from the provided inputs.
BoundsReport evaluate_bounds(std::optional<std::uint64_t> k, std::optional<std::uint64_t> r,
                             std::optional<std::uint64_t> t);

}  // namespace lrc
