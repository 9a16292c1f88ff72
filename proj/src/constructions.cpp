#include "constructions.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <numeric>

#include "errors.hpp"
#include "finite_field.hpp"

namespace lrc {

namespace {

void check_built(const BuiltCode& b) {
  if (b.code.n() != b.expected_n || b.code.k() != b.expected_k)
    fail(errc::invalid_argument,
         b.spec + ": built [" + std::to_string(b.code.n()) + "," + std::to_string(b.code.k()) +
             "] does not match expected [" + std::to_string(b.expected_n) + "," +
             std::to_string(b.expected_k) + "]");
}

// Erdos-Gallai feasibility of a non-increasing degree sequence; returns the
// first violated index (1-based) or 0 when graphical.
std::size_t erdos_gallai_violation(const std::vector<std::uint64_t>& d) {
  std::uint64_t sum = std::accumulate(d.begin(), d.end(), std::uint64_t(0));
  if (sum % 2 != 0) return d.size() ? d.size() : 1;
  std::uint64_t lhs = 0;
  for (std::size_t q = 1; q <= d.size(); ++q) {
    lhs += d[q - 1];
    std::uint64_t rhs = q * (q - 1);
    for (std::size_t i = q; i < d.size(); ++i) rhs += std::min<std::uint64_t>(d[i], q);
    if (lhs > rhs) return q;
  }
  return 0;
}

}  // namespace

BuiltCode regular_graph_code(std::uint64_t k, std::uint64_t r) {
  if (k < 1 || r < 1) fail(errc::parameter_constraint, "k, r must be >= 1");
  std::uint64_t a = 2 * k / r, b = 2 * k % r;
  std::uint64_t m = a + (b > 0 ? 1 : 0);
  std::uint64_t m_req = b == 0 ? r + 1 : r + 2;
  if (m < m_req)
    fail(errc::infeasible_degree_sequence,
         "need ceil(2k/r) >= " + std::to_string(m_req) + ", got " + std::to_string(m));

  // Degree sequence: a nodes of degree r, the odd node of degree b last.
  std::vector<std::uint64_t> degrees(a, r);
  if (b > 0) degrees.push_back(b);
  if (std::size_t v = erdos_gallai_violation(degrees))
    fail(errc::infeasible_degree_sequence,
         "degree sequence not graphical (Erdos-Gallai index " + std::to_string(v) + ")");

  // Havel-Hakimi, highest remaining degree first, ties by node index.
  std::vector<std::uint64_t> deg = degrees;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::vector<std::uint32_t> order(m);
  for (;;) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t x, std::uint32_t y) { return deg[x] > deg[y]; });
    std::uint32_t u = order[0];
    if (deg[u] == 0) break;
    std::uint64_t need = deg[u];
    if (need >= m) fail(errc::infeasible_degree_sequence, "degree exceeds node count");
    for (std::uint64_t i = 1; i <= need; ++i) {
      std::uint32_t v = order[i];
      if (deg[v] == 0) fail(errc::infeasible_degree_sequence, "ran out of attachable nodes");
      edges.emplace_back(std::min(u, v), std::max(u, v));
      --deg[v];
    }
    deg[u] = 0;
  }
  std::sort(edges.begin(), edges.end());
  if (edges.size() != k) fail(errc::infeasible_degree_sequence, "edge count mismatch");

  BitMatrix h(m, k + m);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    h.set(edges[e].first, e);
    h.set(edges[e].second, e);
  }
  for (std::uint64_t i = 0; i < m; ++i) h.set(i, k + i);

  BuiltCode out{LinearCode(std::move(h)),
                "reggraph:k=" + std::to_string(k) + ",r=" + std::to_string(r),
                std::uint32_t(r),
                2,
                "sequential",
                std::size_t(k + m),
                std::size_t(k),
                std::nullopt};
  check_built(out);
  return out;
}

BuiltCode hypergraph_t3_code(std::uint64_t beta) {
  if (beta < 1) fail(errc::parameter_constraint, "beta must be >= 1");
  std::uint64_t k = beta * beta * beta, mrows = 3 * beta;
  BitMatrix h(mrows, k + mrows);
  std::size_t col = 0;
  for (std::uint64_t a = 0; a < beta; ++a)
    for (std::uint64_t b = 0; b < beta; ++b)
      for (std::uint64_t c = 0; c < beta; ++c) {
        h.set(a, col);
        h.set(beta + b, col);
        h.set(2 * beta + c, col);
        ++col;
      }
  for (std::uint64_t i = 0; i < mrows; ++i) h.set(i, k + i);

  BuiltCode out{LinearCode(std::move(h)),
                "hypergraph:beta=" + std::to_string(beta),
                std::uint32_t(beta * beta),
                3,
                "sequential",
                std::size_t(k + mrows),
                std::size_t(k),
                beta >= 2 ? std::optional<std::size_t>(4) : std::nullopt};
  check_built(out);
  return out;
}

namespace {

// Canonical representatives of 1-dim subspaces of GF(Q)^3, first nonzero
// coordinate scaled to 1, listed in ascending lexicographic order.
std::vector<std::array<std::uint32_t, 3>> pg2_points(std::uint32_t q) {
  std::vector<std::array<std::uint32_t, 3>> pts;
  pts.push_back({0, 0, 1});
  for (std::uint32_t z = 0; z < q; ++z) pts.push_back({0, 1, z});
  for (std::uint32_t y = 0; y < q; ++y)
    for (std::uint32_t z = 0; z < q; ++z) pts.push_back({1, y, z});
  std::sort(pts.begin(), pts.end());
  return pts;
}

}  // namespace

BuiltCode projective_plane_code(std::uint32_t s) {
  if (s < 2 || s > 4) fail(errc::parameter_constraint, "pg: 2 <= s <= 4");
  std::uint32_t q = 1u << s;
  FieldDescriptor f = field(q);
  auto pts = pg2_points(q);
  std::size_t n = pts.size();  // Q^2 + Q + 1 points and as many lines

  BitMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::uint32_t dot = f.add(f.add(f.mul(pts[i][0], pts[j][0]), f.mul(pts[i][1], pts[j][1])),
                                f.mul(pts[i][2], pts[j][2]));
      if (dot == 0) h.set(i, j);
    }
  }

  std::size_t rank3s = 1;
  for (std::uint32_t i = 0; i < s; ++i) rank3s *= 3;
  BuiltCode out{LinearCode(std::move(h)),
                "pg:s=" + std::to_string(s),
                q,
                q + 1,
                "parallel",
                n,
                n - rank3s - 1,
                std::optional<std::size_t>(q + 2)};
  check_built(out);
  return out;
}

BuiltCode affine_plane_code(std::uint32_t s) {
  if (s < 2 || s > 4) fail(errc::parameter_constraint, "affine: 2 <= s <= 4");
  std::uint32_t q = 1u << s;
  FieldDescriptor f = field(q);

  // Rows: the Q^2 points (x, y). Columns: Q^2 sloped lines y = m*x + c in
  // (m, c) order, then the Q vertical lines x = c.
  std::size_t npts = std::size_t(q) * q;
  std::size_t nlines = npts + q;
  BitMatrix h(npts, nlines);
  for (std::uint32_t x = 0; x < q; ++x)
    for (std::uint32_t y = 0; y < q; ++y) {
      std::size_t p = std::size_t(x) * q + y;
      for (std::uint32_t m = 0; m < q; ++m) {
        std::uint32_t c = f.add(y, f.mul(m, x));  // y - m*x; char 2 so add == sub
        h.set(p, std::size_t(m) * q + c);
      }
      h.set(p, npts + x);
    }

  std::size_t rank3s = 1;
  for (std::uint32_t i = 0; i < s; ++i) rank3s *= 3;
  BuiltCode out{LinearCode(std::move(h)),
                "affine:s=" + std::to_string(s),
                q,
                q,
                "parallel",
                nlines,
                nlines - rank3s,
                std::nullopt};
  check_built(out);
  return out;
}

BuiltCode steiner_triple_code(std::uint32_t s) {
  if (s < 3) fail(errc::parameter_constraint, "sts: s >= 3");
  std::uint32_t m = (1u << s) - 1;

  std::vector<std::array<std::uint32_t, 3>> lines;
  for (std::uint32_t x = 1; x <= m; ++x)
    for (std::uint32_t y = x + 1; y <= m; ++y) {
      std::uint32_t z = x ^ y;
      if (z > y) lines.push_back({x, y, z});
    }
  std::sort(lines.begin(), lines.end());

  BitMatrix h(m, lines.size());
  for (std::size_t j = 0; j < lines.size(); ++j)
    for (auto p : lines[j]) h.set(p - 1, j);

  BuiltCode out{LinearCode(std::move(h)),
                "sts:s=" + std::to_string(s),
                (1u << (s - 1)) - 2,
                3,
                "parallel",
                lines.size(),
                lines.size() - m + s,
                std::optional<std::size_t>(4)};
  check_built(out);
  return out;
}

BuiltCode r2_chain_code(std::uint32_t t, std::uint64_t k) {
  if (t < 4 || t > 7) fail(errc::parameter_constraint, "r2chain: t in 4..7");
  if (t == 4 && (k % 4 != 0 || k <= 4))
    fail(errc::parameter_constraint, "r2chain t=4: k = 4l with l > 1 required");
  if ((t == 5 || t == 6) && k % 8 != 0)
    fail(errc::parameter_constraint, "r2chain t=" + std::to_string(t) + ": 8|k required");
  if (t == 6 && k < 16) fail(errc::parameter_constraint, "r2chain t=6: k >= 16 required");
  if (t == 7 && k % 16 != 0) fail(errc::parameter_constraint, "r2chain t=7: 16|k required");

  // Column layout: I_1..I_k, P_1..P_k, Q_1..Q_{k/2}, then per-layer parities.
  std::uint64_t nP = k, nQ = k / 2;
  std::uint64_t nR = t >= 5 ? k / 8 : 0;
  std::uint64_t nS = t >= 6 ? k / 8 : 0, nT = t >= 6 ? k / 8 : 0;
  std::uint64_t nU = t >= 7 ? k / 16 : 0, nV = t >= 7 ? k / 16 : 0;
  std::uint64_t n = k + nP + nQ + nR + nS + nT + nU + nV;
  std::uint64_t rows = nP + nQ + nR + nS + nT + nU + nV;

  std::uint64_t baseI = 0, baseP = k, baseQ = baseP + nP, baseR = baseQ + nQ;
  std::uint64_t baseS = baseR + nR, baseT = baseS + nS, baseU = baseT + nT, baseV = baseU + nU;

  BitMatrix h(rows, n);
  std::size_t row = 0;
  auto I = [&](std::uint64_t i) { return baseI + (i - 1); };  // layers use 1-based indices
  auto P = [&](std::uint64_t i) { return baseP + (i - 1); };
  auto Q = [&](std::uint64_t i) { return baseQ + (i - 1); };
  auto S = [&](std::uint64_t i) { return baseS + (i - 1); };
  auto T = [&](std::uint64_t i) { return baseT + (i - 1); };

  for (std::uint64_t i = 1; i <= k; ++i, ++row) {  // P_i = I_i + I_{i+1}, P_k = I_1 + I_k
    h.set(row, I(i));
    h.set(row, I(i == k ? 1 : i + 1));
    h.set(row, P(i));
  }
  for (std::uint64_t i = 1; i <= nQ; ++i, ++row) {  // Q_i = P_i + P_{i+k/2}
    h.set(row, P(i));
    h.set(row, P(i + k / 2));
    h.set(row, Q(i));
  }
  for (std::uint64_t i = 1; i <= nR; ++i, ++row) {  // R_i = Q_{2i-1} + Q_{2i-1+k/4}
    h.set(row, Q(2 * i - 1));
    h.set(row, Q(2 * i - 1 + k / 4));
    h.set(row, baseR + (i - 1));
  }
  for (std::uint64_t i = 1; i <= nS; ++i, ++row) {  // S_i = Q_{2i} + Q_{2i+k/4}
    h.set(row, Q(2 * i));
    h.set(row, Q(2 * i + k / 4));
    h.set(row, S(i));
  }
  for (std::uint64_t i = 1; i <= nT; ++i, ++row) {  // T_i = P_{4i-2} + P_{4i}
    h.set(row, P(4 * i - 2));
    h.set(row, P(4 * i));
    h.set(row, T(i));
  }
  for (std::uint64_t i = 1; i <= nU; ++i, ++row) {  // U_i = T_i + T_{i+k/16}
    h.set(row, T(i));
    h.set(row, T(i + k / 16));
    h.set(row, baseU + (i - 1));
  }
  for (std::uint64_t i = 1; i <= nV; ++i, ++row) {  // V_i = S_i + S_{i+k/16}
    h.set(row, S(i));
    h.set(row, S(i + k / 16));
    h.set(row, baseV + (i - 1));
  }

  BuiltCode out{LinearCode(std::move(h)),
                "r2chain:t=" + std::to_string(t) + ",k=" + std::to_string(k),
                2,
                t,
                "sequential",
                std::size_t(n),
                std::size_t(k),
                std::nullopt};
  check_built(out);
  return out;
}

BuiltCode mols_code(std::uint32_t r, std::uint32_t t) {
  if (t < 2) fail(errc::parameter_constraint, "mols: t >= 2");
  if (t - 2 > r - 1)
    fail(errc::too_many_squares, "mols: t-2 = " + std::to_string(t - 2) +
                                     " squares needed, at most r-1 = " + std::to_string(r - 1));
  std::vector<LatinSquare> squares = mols_set(r, t - 2);
  // Row-index and column-index squares; orthogonal to every Latin square.
  LatinSquare rowsq(r, std::vector<std::uint32_t>(r)), colsq(r, std::vector<std::uint32_t>(r));
  for (std::uint32_t i = 0; i < r; ++i)
    for (std::uint32_t j = 0; j < r; ++j) {
      rowsq[i][j] = i + 1;
      colsq[i][j] = j + 1;
    }
  squares.push_back(std::move(rowsq));
  squares.push_back(std::move(colsq));

  // A is (rt x r^2): row i (1-based) selects the cells of square ceil(i/r)
  // holding symbol (i mod r) + 1; columns ordered by cell (a, b).
  std::size_t r2 = std::size_t(r) * r, rt = std::size_t(r) * t;
  std::size_t n = r2 + rt + 1;
  BitMatrix h(rt + 1, n);
  for (std::size_t i = 1; i <= rt; ++i) {
    const LatinSquare& sq = squares[(i - 1) / r];
    std::uint32_t symbol = std::uint32_t(i % r) + 1;
    for (std::uint32_t a = 0; a < r; ++a)
      for (std::uint32_t b = 0; b < r; ++b)
        if (sq[a][b] == symbol) h.set(i - 1, std::size_t(a) * r + b);
    h.set(i - 1, r2 + (i - 1));  // per-square identity block
  }
  // Closing row: ones over the first identity block plus the last column.
  for (std::uint32_t j = 0; j < r; ++j) h.set(rt, r2 + j);
  h.set(rt, n - 1);

  // Proven capability is t+1 for even t; odd t keeps the conservative claim.
  std::uint32_t t_claim = (t % 2 == 0) ? t + 1 : t;
  BuiltCode out{LinearCode(std::move(h)),
                "mols:r=" + std::to_string(r) + ",t=" + std::to_string(t),
                r,
                t_claim,
                "sequential",
                n,
                r2,
                std::nullopt};
  check_built(out);
  return out;
}

BuiltCode product_code(const BuiltCode& a, const BuiltCode& b) {
  BitMatrix g = kronecker(a.code.generator(), b.code.generator());
  BitMatrix h = nullspace_basis(g);
  BuiltCode out{LinearCode(std::move(h)),
                "product:(" + a.spec + ")x(" + b.spec + ")",
                std::max(a.r_claimed, b.r_claimed),
                (a.t_claimed + 1) * (b.t_claimed + 1) - 1,
                "sequential",
                a.code.n() * b.code.n(),
                a.code.k() * b.code.k(),
                a.expected_d && b.expected_d
                    ? std::optional<std::size_t>(*a.expected_d * *b.expected_d)
                    : std::nullopt};
  check_built(out);
  return out;
}

BuiltCode stacked_code(std::uint32_t r, const BuiltCode& inner) {
  const BitMatrix& ht = inner.code.pchk();
  std::size_t np = ht.cols(), mp = ht.rows();
  BitMatrix h(r * mp + np, (r + 1) * np);
  for (std::uint32_t copy = 0; copy < r; ++copy)
    for (std::size_t i = 0; i < mp; ++i)
      for (auto j : ht.row(i).support()) h.set(copy * mp + i, std::size_t(copy) * np + j);
  for (std::size_t i = 0; i < np; ++i)
    for (std::uint32_t copy = 0; copy <= r; ++copy)
      h.set(r * mp + i, std::size_t(copy) * np + i);

  BuiltCode out{LinearCode(std::move(h)),
                "stack:r=" + std::to_string(r) + ",inner=(" + inner.spec + ")",
                std::max(r, inner.r_claimed),
                2 * inner.t_claimed + 1,
                "sequential",
                (std::size_t(r) + 1) * np,
                std::size_t(r) * inner.code.k(),
                std::optional<std::size_t>(2 * inner.t_claimed + 2)};
  check_built(out);
  return out;
}

BuiltCode spc_code(std::uint32_t n) {
  if (n < 2) fail(errc::parameter_constraint, "spc: n >= 2");
  BitMatrix h(1, n);
  for (std::uint32_t j = 0; j < n; ++j) h.set(0, j);
  BuiltCode out{LinearCode(std::move(h)),
                "spc:n=" + std::to_string(n),
                n - 1,
                1,
                "sequential",
                n,
                std::size_t(n) - 1,
                std::optional<std::size_t>(2)};
  check_built(out);
  return out;
}

BuiltCode simplex_code(std::uint32_t m) {
  if (m < 2 || m > 16) fail(errc::parameter_constraint, "simplex: 2 <= m <= 16");
  std::uint32_t n = (1u << m) - 1;
  BitMatrix g(m, n);
  for (std::uint32_t col = 1; col <= n; ++col)
    for (std::uint32_t bit = 0; bit < m; ++bit)
      if ((col >> bit) & 1) g.set(bit, col - 1);
  BitMatrix h = nullspace_basis(g);
  BuiltCode out{LinearCode(std::move(h)),
                "simplex:m=" + std::to_string(m),
                2,
                (1u << (m - 1)) - 1,
                "sequential",
                n,
                m,
                std::optional<std::size_t>(1u << (m - 1))};
  check_built(out);
  return out;
}

namespace {

const std::map<std::string, std::string>& fixture_table() {
  static const std::map<std::string, std::string> table = {
      {"eq3_14_8",
       "6 14\n"
       "10000011110000\n"
       "01000000001111\n"
       "00100011001100\n"
       "00010000110011\n"
       "00001010101010\n"
       "00000101010101\n"},
      {"item2_28_20",
       "8 28\n"
       "1000000100000001010011000011\n"
       "0100000010000010100101100001\n"
       "0010000001000001001011110000\n"
       "0001000000100010010100111000\n"
       "0000100000010000101010011100\n"
       "0000010000001001010100001110\n"
       "0000001000000110101000000111\n"
       "0000000111111100000000000000\n"},
      {"item3_10_5",
       "5 10\n"
       "1000100011\n"
       "0100010010\n"
       "0010001011\n"
       "0001000101\n"
       "0000111100\n"},
  };
  return table;
}

struct FixtureClaims {
  std::uint32_t r, t;
  std::size_t n, k;
};

const std::map<std::string, FixtureClaims>& fixture_claims() {
  static const std::map<std::string, FixtureClaims> table = {
      {"eq3_14_8", {4, 3, 14, 8}},
      {"item2_28_20", {7, 3, 28, 20}},
      {"item3_10_5", {3, 3, 10, 5}},
  };
  return table;
}

}  // namespace

const std::string& fixture_pchk_text(const std::string& name) {
  auto it = fixture_table().find(name);
  if (it == fixture_table().end()) fail(errc::unknown_fixture, "unknown fixture: " + name);
  return it->second;
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& [name, _] : fixture_table()) names.push_back(name);
  return names;
}

BuiltCode fixture(const std::string& name) {
  auto it = fixture_claims().find(name);
  if (it == fixture_claims().end()) fail(errc::unknown_fixture, "unknown fixture: " + name);
  const FixtureClaims& claims = it->second;
  BuiltCode out{LinearCode(parse_pchk(fixture_pchk_text(name))),
                "fixture:" + name,
                claims.r,
                claims.t,
                "sequential",
                claims.n,
                claims.k,
                std::nullopt};
  check_built(out);
  return out;
}

namespace {

// spec-string grammar: family ":" key=value ("," key=value)*, where a value
// is an integer or a parenthesized nested spec. product uses the infix form
// product:(spec)x(spec).
struct SpecParser {
  const std::string& s;
  std::size_t pos = 0;

  explicit SpecParser(const std::string& str) : s(str) {}

  [[noreturn]] void err(const std::string& what) {
    fail(errc::parse_error, "spec '" + s + "': " + what + " at offset " + std::to_string(pos));
  }

  bool eof() const { return pos >= s.size(); }
  char peek() const { return pos < s.size() ? s[pos] : '\0'; }

  std::string ident() {
    std::size_t start = pos;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
    if (pos == start) err("expected identifier");
    return s.substr(start, pos - start);
  }

  std::uint64_t integer() {
    std::size_t start = pos;
    while (!eof() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) err("expected integer");
    try {
      return std::stoull(s.substr(start, pos - start));
    } catch (const std::exception&) {
      err("integer out of range");
    }
  }

  void expect(char c) {
    if (peek() != c) err(std::string("expected '") + c + "'");
    ++pos;
  }

  BuiltCode parse_paren_spec() {
    expect('(');
    std::size_t depth = 1, start = pos;
    while (!eof() && depth) {
      if (s[pos] == '(') ++depth;
      if (s[pos] == ')') --depth;
      ++pos;
    }
    if (depth) err("unbalanced parentheses");
    return build_from_spec(s.substr(start, pos - start - 1));
  }

  BuiltCode parse() {
    std::string family = ident();
    std::map<std::string, std::uint64_t> args;
    std::unique_ptr<BuiltCode> inner, left, right;

    if (family == "product") {
      expect(':');
      left = std::make_unique<BuiltCode>(parse_paren_spec());
      expect('x');
      right = std::make_unique<BuiltCode>(parse_paren_spec());
      // Right-fold additional factors: (a)x(b)x(c)
      while (peek() == 'x') {
        ++pos;
        BuiltCode next = parse_paren_spec();
        *left = product_code(*left, *right);
        *right = std::move(next);
      }
      if (!eof()) err("trailing characters");
      return product_code(*left, *right);
    }
    if (family == "fixture") {
      expect(':');
      std::string name = ident();
      if (!eof()) err("trailing characters");
      return fixture(name);
    }

    if (peek() == ':') {
      ++pos;
      for (;;) {
        std::string key = ident();
        expect('=');
        if (peek() == '(') {
          if (key != "inner") err("nested spec only allowed for key 'inner'");
          inner = std::make_unique<BuiltCode>(parse_paren_spec());
        } else {
          args[key] = integer();
        }
        if (peek() != ',') break;
        ++pos;
      }
    }
    if (!eof()) err("trailing characters");

    auto need = [&](const std::string& key) {
      auto it = args.find(key);
      if (it == args.end()) err("missing parameter '" + key + "' for " + family);
      return it->second;
    };

    if (family == "reggraph") return regular_graph_code(need("k"), need("r"));
    if (family == "hypergraph") return hypergraph_t3_code(need("beta"));
    if (family == "pg") return projective_plane_code(std::uint32_t(need("s")));
    if (family == "affine") return affine_plane_code(std::uint32_t(need("s")));
    if (family == "sts") return steiner_triple_code(std::uint32_t(need("s")));
    if (family == "r2chain") return r2_chain_code(std::uint32_t(need("t")), need("k"));
    if (family == "mols") return mols_code(std::uint32_t(need("r")), std::uint32_t(need("t")));
    if (family == "spc") return spc_code(std::uint32_t(need("n")));
    if (family == "simplex") return simplex_code(std::uint32_t(need("m")));
    if (family == "stack") {
      std::uint64_t r = need("r");
      if (!inner) err("stack requires inner=(spec)");
      return stacked_code(std::uint32_t(r), *inner);
    }
    err("unknown family '" + family + "'");
  }
};

}  // namespace

BuiltCode build_from_spec(const std::string& spec) {
  SpecParser p(spec);
  return p.parse();
}

CodeReport report_for(const BuiltCode& built) {
  CodeReport rep;
  rep.spec = built.spec;
  rep.n = built.code.n();
  rep.k = built.code.k();
  rep.rank = built.code.pchk_rank();
  rep.rate = built.code.rate();
  rep.d = built.expected_d;
  rep.r_claimed = built.r_claimed;
  rep.t_claimed = built.t_claimed;
  rep.mode = built.mode;
  return rep;
}

}  // namespace lrc
