#include "bounds.hpp"

#include <cmath>
#include <numeric>

#include "errors.hpp"
#include <json.hpp>

namespace lrc {

namespace {

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

}  // namespace

ParallelLengthBound parallel_min_length(std::uint64_t r, std::uint64_t t) {
  if (r < 1 || t < 1) fail(errc::invalid_argument, "r, t must be >= 1");
  ParallelLengthBound b;
  b.m_min = (t - 1) * (r + 1) + 1;
  std::uint64_t rr1 = r * (r + 1);
  b.tight = rr1 % t == 0;
  // Integer n turns (r+1)^2 - rr1/t into its ceiling (r+1)^2 - floor(rr1/t).
  b.n_min = (r + 1) * (r + 1) - rr1 / t;
  return b;
}

std::uint64_t seq_t2_min_length(std::uint64_t k, std::uint64_t r) {
  if (k < 1 || r < 1) fail(errc::invalid_argument, "k, r must be >= 1");
  return k + ceil_div(2 * k, r);
}

std::uint64_t song_t3_bound(std::uint64_t k, std::uint64_t r) {
  if (k < 1 || r < 1) fail(errc::invalid_argument, "k, r must be >= 1");
  return k + ceil_div(2 * k + ceil_div(k, r), r);
}

std::int64_t least_quadratic_root(std::int64_t b, std::int64_t c) {
  // Least integer m >= 0 with m^2 + b*m - c >= 0 and 2m + b >= 0 (the upper
  // branch). Float root as a hint, then exact integer correction.
  double disc = double(b) * double(b) + 4.0 * double(c);
  std::int64_t m = disc <= 0 ? 0 : std::int64_t(std::floor((-double(b) + std::sqrt(disc)) / 2.0)) - 2;
  if (m < 0) m = 0;
  auto holds = [&](std::int64_t x) {
    return 2 * x + b >= 0 && x * x + b * x - c >= 0;
  };
  while (!holds(m)) ++m;
  while (m > 0 && holds(m - 1)) --m;
  return m;
}

T3Bound new_t3_bound(std::uint64_t k, std::uint64_t r) {
  if (k < 1 || r < 1) fail(errc::invalid_argument, "k, r must be >= 1");
  std::int64_t ik = std::int64_t(k), ir = std::int64_t(r);
  T3Bound best;
  std::uint64_t best_max = ~std::uint64_t(0);
  for (std::int64_t s1 = 0;; ++s1) {
    if (std::uint64_t(s1) >= best_max && best_max != ~std::uint64_t(0)) break;
    std::int64_t f1 = least_quadratic_root(2 * ir - 5, 6 * ik + s1 * s1 - 5 * s1);
    std::int64_t f2 = least_quadratic_root(4 * ir - 4 + 2 * s1, 12 * ik + 3 * s1 * s1 - 4 * s1 - 7);
    std::uint64_t cur = std::uint64_t(std::max({f1, f2, s1}));
    if (cur < best_max) {
      best_max = cur;
      best.s1 = std::uint64_t(s1);
      best.f1 = std::uint64_t(f1);
      best.f2 = std::uint64_t(f2);
    }
  }
  best.n = k + best_max;
  return best;
}

Rat64 t2_rate_cap(std::uint64_t r) {
  if (r < 1) fail(errc::invalid_argument, "r must be >= 1");
  return Rat64::make(r, r + 2);
}

BigRat availability_rate_cap(std::uint64_t r, std::uint64_t t) {
  if (r < 1 || t < 1) fail(errc::invalid_argument, "r, t must be >= 1");
  BigRat cap;
  for (std::uint64_t j = 1; j <= t; ++j) cap.mul_factor(j * r, j * r + 1);
  return cap;
}

KWindowRule KWindowRule::parse(const std::string& decimal_exponent) {
  std::size_t dot = decimal_exponent.find('.');
  std::string ip = decimal_exponent.substr(0, dot == std::string::npos ? decimal_exponent.size() : dot);
  std::string fp = dot == std::string::npos ? "" : decimal_exponent.substr(dot + 1);
  if (ip.empty() || fp.size() > 6 ||
      ip.find_first_not_of("0123456789") != std::string::npos ||
      fp.find_first_not_of("0123456789") != std::string::npos)
    fail(errc::parse_error, "bad exponent '" + decimal_exponent + "'");
  KWindowRule rule;
  rule.exp_den = 1;
  for (std::size_t i = 0; i < fp.size(); ++i) rule.exp_den *= 10;
  rule.exp_num = std::stoull(ip) * rule.exp_den + (fp.empty() ? 0 : std::stoull(fp));
  std::uint64_t g = std::gcd(rule.exp_num, rule.exp_den);
  if (rule.exp_num == 0) fail(errc::parse_error, "exponent must be positive");
  rule.exp_num /= g;
  rule.exp_den /= g;
  return rule;
}

std::uint64_t KWindowRule::k_max(std::uint64_t r) const {
  // Largest k with (k+1)^den <= r^num; exact big-integer comparison.
  BigUint rpow(1);
  for (std::uint64_t i = 0; i < exp_num; ++i) rpow.mul_u64(r);
  auto ok = [&](std::uint64_t x) {
    BigUint p(1);
    for (std::uint64_t i = 0; i < exp_den; ++i) p.mul_u64(x + 1);
    return BigUint::cmp(p, rpow) <= 0;
  };
  std::uint64_t k = std::uint64_t(std::pow(double(r), double(exp_num) / double(exp_den))) + 2;
  while (k > 0 && !ok(k)) --k;
  while (ok(k + 1)) ++k;
  return k;
}

std::uint64_t default_k_max(std::uint64_t r) { return KWindowRule{}.k_max(r); }

T3CompareTable compare_t3_bounds(std::uint64_t r_max, const KWindowRule& rule) {
  T3CompareTable table;
  for (std::uint64_t r = 1; r <= r_max; ++r) {
    std::uint64_t k_hi = rule.k_max(r);
    for (std::uint64_t k = r; k <= k_hi; ++k) {
      std::uint64_t song = song_t3_bound(k, r);
      std::uint64_t nnew = new_t3_bound(k, r).n;
      std::int64_t delta = std::int64_t(nnew) - std::int64_t(song);
      if (delta < 0) table.new_never_below_song = false;
      table.rows.push_back({r, k, song, nnew, delta});
    }
  }
  return table;
}

std::string T3CompareTable::to_csv() const {
  std::string out = "r,k,song,new,delta\n";
  for (const auto& row : rows) {
    out += std::to_string(row.r) + "," + std::to_string(row.k) + "," + std::to_string(row.song) +
           "," + std::to_string(row.nnew) + "," + std::to_string(row.delta) + "\n";
  }
  return out;
}

BoundsReport evaluate_bounds(std::optional<std::uint64_t> k, std::optional<std::uint64_t> r,
                             std::optional<std::uint64_t> t) {
  BoundsReport rep;
  rep.k = k;
  rep.r = r;
  rep.t = t;
  if (r && t) {
    rep.parallel = parallel_min_length(*r, *t);
    rep.rate_cap_availability = availability_rate_cap(*r, *t);
  }
  if (k && r) {
    rep.n_min_seq_t2 = seq_t2_min_length(*k, *r);
    rep.n_song_t3 = song_t3_bound(*k, *r);
    rep.n_new_t3 = new_t3_bound(*k, *r);
  }
  if (r) rep.rate_cap_t2 = t2_rate_cap(*r);
  return rep;
}

std::string BoundsReport::to_json() const {
  nlohmann::ordered_json j;
  if (k) j["k"] = *k;
  if (r) j["r"] = *r;
  if (t) j["t"] = *t;
  if (parallel) {
    j["m_min_parallel"] = parallel->m_min;
    j["n_min_parallel"] = parallel->n_min;
    j["n_min_parallel_tight"] = parallel->tight;
  }
  if (n_min_seq_t2) j["n_min_seq_t2"] = *n_min_seq_t2;
  if (n_song_t3) j["n_song_t3"] = *n_song_t3;
  if (n_new_t3) {
    j["n_new_t3"] = n_new_t3->n;
    j["new_t3_s1"] = n_new_t3->s1;
    j["new_t3_f1"] = n_new_t3->f1;
    j["new_t3_f2"] = n_new_t3->f2;
  }
  if (rate_cap_t2) {
    j["rate_cap_t2"] = rate_cap_t2->to_string();
    j["rate_cap_t2_decimal"] = rate_cap_t2->to_decimal(4);
  }
  if (rate_cap_availability) {
    j["rate_cap_availability"] = rate_cap_availability->to_string();
    j["rate_cap_availability_decimal"] = rate_cap_availability->to_decimal(4);
  }
  return j.dump();
}

}  // namespace lrc
