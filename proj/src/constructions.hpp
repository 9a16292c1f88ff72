#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "linear_code.hpp"

namespace lrc {

// A built code together with its construction token, the claimed recovery
// capability and the closed-form parameters it must match.
struct BuiltCode {
  LinearCode code;
  std::string spec;  // canonical spec-string, e.g. "hypergraph:beta=2"
  std::uint32_t r_claimed = 0;
  std::uint32_t t_claimed = 0;
  std::string mode;  // "sequential" | "parallel"
  std::size_t expected_n = 0;
  std::size_t expected_k = 0;
  std::optional<std::size_t> expected_d;
};

// Systematic graph code for two erasures: edges are information symbols,
// nodes are parity symbols, H = [B | I_m] with B the node-edge incidence.
// Degree sequence (r repeated a times, then b if b > 0) where 2k = ar + b;
// realized by largest-first Havel-Hakimi after an Erdos-Gallai feasibility
// check. Requires m >= r+1 (b = 0) or m >= r+2 (b > 0).
BuiltCode regular_graph_code(std::uint64_t k, std::uint64_t r);

// Three-partition hypergraph code for three erasures: information columns
// indexed by triples (a,b,c) in [beta]^3 lexicographically, with ones in
// rows a, beta+b, 2*beta+c; H = [B | I_{3beta}]. [beta^3+3beta, beta^3, 4].
BuiltCode hypergraph_t3_code(std::uint64_t beta);

// Point-line incidence of the projective plane over GF(2^s).
// [Q^2+Q+1, Q^2+Q-3^s, Q+2] with Q = 2^s; claimed (Q, Q+1) parallel.
BuiltCode projective_plane_code(std::uint32_t s);

// Point-line incidence of the affine plane over GF(2^s).
// [Q^2+Q, Q^2+Q-3^s, >= Q+1]; claimed (Q, Q) parallel.
BuiltCode affine_plane_code(std::uint32_t s);

// Steiner triple system from lines of PG(s-1, 2): points are the nonzero
// vectors of GF(2)^s, lines the triples {x, y, x^y}.
// [m(m-1)/6, m(m-1)/6 - m + s, 4] with m = 2^s - 1; claimed (2^{s-1}-2, 3).
BuiltCode steiner_triple_code(std::uint32_t s);

// Layered r=2 chain codes for t = 4..7 built from the ring of information
// symbols plus parity layers P, Q, R, S, T, U, V.
BuiltCode r2_chain_code(std::uint32_t t, std::uint64_t k);

// Orthogonal-Latin-squares code: t-2 MOLS over GF(r) plus the row/column
// coordinate squares give an (rt x r^2) cover matrix A; H adds per-square
// identities and one closing row. n = r^2 + rt + 1, k = r^2.
BuiltCode mols_code(std::uint32_t r, std::uint32_t t);

// Product code via the Kronecker product of generator bases.
// [nA*nB, kA*kB], claimed t = (tA+1)(tB+1) - 1.
BuiltCode product_code(const BuiltCode& a, const BuiltCode& b);

// Block-diagonal extension: r copies of the inner parity-check matrix on the
// diagonal plus a row of r+1 identity blocks. [(r+1)n', rk', 2t+2], claimed
// 2t+1 erasures.
BuiltCode stacked_code(std::uint32_t r, const BuiltCode& inner);

// Single parity check code [n, n-1, 2].
BuiltCode spc_code(std::uint32_t n);

// Simplex code [2^m - 1, m, 2^{m-1}]; claimed (2, 2^{m-1} - 1) sequential.
BuiltCode simplex_code(std::uint32_t m);

// Hardwired fixture matrices: eq3_14_8, item2_28_20, item3_10_5.
BuiltCode fixture(const std::string& name);
const std::string& fixture_pchk_text(const std::string& name);
std::vector<std::string> fixture_names();

// Parse a spec-string such as "hypergraph:beta=2", "pg:s=2",
// "r2chain:t=5,k=8", "mols:r=3,t=2", "product:(spc:n=3)x(spc:n=3)",
// "stack:r=2,inner=(spc:n=3)", "fixture:eq3_14_8".
BuiltCode build_from_spec(const std::string& spec);

CodeReport report_for(const BuiltCode& built);

}  // namespace lrc
