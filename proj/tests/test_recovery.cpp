#include <doctest.h>

#include <random>
#include <set>

#include <json.hpp>

#include "constructions.hpp"
#include "errors.hpp"
#include "oracles.hpp"
#include "recovery.hpp"

using namespace lrc;

namespace {

DualWordIndex index_for(const LinearCode& c, std::uint32_t r) {
  return DualWordIndex(low_weight_dual_words(c, r + 1), c.n());
}

ErasurePattern random_pattern(std::size_t n, std::size_t t, std::mt19937_64& rng) {
  std::set<std::uint32_t> s;
  while (s.size() < t) s.insert(std::uint32_t(rng() % n));
  return ErasurePattern(s.begin(), s.end());
}

}  // namespace

TEST_CASE("colex enumeration and unranking agree") {
  std::uint32_t n = 6, t = 3;
  ErasurePattern p{0, 1, 2};
  std::uint64_t rank = 0;
  do {
    CHECK(colex_unrank(rank, t, n) == p);
    ++rank;
  } while (colex_next(p, n));
  CHECK(rank == binomial(n, t));
}

TEST_CASE("peel: empty pattern, identity columns, whole fixture") {
  BuiltCode eq3 = fixture("eq3_14_8");
  DualWordIndex words = index_for(eq3.code, 4);

  PeelResult empty = peel(eq3.code, {}, words);
  REQUIRE(empty.ok());
  CHECK(empty.certificate->steps.empty());

  // The three leading identity columns each sit in exactly one row, so the
  // hand peel recovers them one per step.
  PeelResult first3 = peel(eq3.code, {0, 1, 2}, words);
  REQUIRE(first3.ok());
  CHECK(first3.certificate->steps.size() == 3);
  CHECK(oracle::certificate_sound(eq3.code, {0, 1, 2}, *first3.certificate, words, 4));
}

TEST_CASE("exhaustive verification of the fixture matrices") {
  VerificationReport eq3 = verify_sequential(fixture("eq3_14_8").code, 4, 3);
  CHECK(eq3.pass());
  CHECK(eq3.total_patterns == 364);
  CHECK(eq3.checked_patterns == 364);

  VerificationReport item3 = verify_sequential(fixture("item3_10_5").code, 3, 3);
  CHECK(item3.pass());
  CHECK(item3.total_patterns == 120);

  VerificationReport item2 = verify_sequential(fixture("item2_28_20").code, 7, 3);
  CHECK(item2.pass());
  CHECK(item2.total_patterns == 3276);
}

TEST_CASE("one erasure beyond capability fails with a codeword-support witness") {
  BuiltCode eq3 = fixture("eq3_14_8");
  VerificationReport rep = verify_sequential(eq3.code, 4, 4);
  CHECK(!rep.pass());
  CHECK(rep.failure_count > 0);
  REQUIRE(!rep.failures.empty());

  // d = 4: erasing the support of a minimum-weight codeword is
  // unrecoverable. Find one and confirm peel gets stuck on it.
  const BitMatrix& gen = eq3.code.generator();
  ErasurePattern support;
  for (std::uint64_t msg = 1; msg < (1u << 8) && support.empty(); ++msg) {
    BitVector cw(eq3.code.n());
    for (std::size_t b = 0; b < 8; ++b)
      if ((msg >> b) & 1) cw.xor_with(gen.row(b));
    if (cw.weight() == 4) support = cw.support();
  }
  REQUIRE(support.size() == 4);
  DualWordIndex words = index_for(eq3.code, 4);
  CHECK(!peel(eq3.code, support, words).ok());

  // Reported failures are the colex-first ones and are sorted patterns.
  for (const auto& f : rep.failures) {
    CHECK(std::is_sorted(f.begin(), f.end()));
    CHECK(!peel(eq3.code, f, words).ok());
  }
}

TEST_CASE("verification results are identical for any worker count") {
  BuiltCode eq3 = fixture("eq3_14_8");
  VerifyConfig base;
  base.workers = 1;
  VerificationReport ref = verify_sequential(eq3.code, 4, 4, base);
  for (unsigned workers : {2u, 3u, 5u}) {
    VerifyConfig cfg;
    cfg.workers = workers;
    VerificationReport rep = verify_sequential(eq3.code, 4, 4, cfg);
    CHECK(rep.failure_count == ref.failure_count);
    CHECK(rep.failures == ref.failures);
    CHECK(rep.total_patterns == ref.total_patterns);
  }
}

TEST_CASE("sampled verification: pass cases, planted failure, determinism") {
  BuiltCode eq3 = fixture("eq3_14_8");
  VerificationReport ok = verify_sequential_sampled(eq3.code, 4, 3, 1000, 7);
  CHECK(ok.pass());
  CHECK(ok.checked_patterns == 1000);
  CHECK(ok.sampled);

  // Dropping the last parity row of the 10-column fixture plants
  // unrecoverable 3-sets; a full-size sample sweep finds one.
  BitMatrix h = fixture("item3_10_5").code.pchk();
  BitMatrix crippled(4, 10);
  for (std::size_t i = 0; i < 4; ++i) crippled.row(i) = h.row(i);
  LinearCode weak(std::move(crippled));
  VerificationReport bad = verify_sequential_sampled(weak, 3, 3, 2000, 42);
  CHECK(!bad.pass());

  VerificationReport again = verify_sequential_sampled(weak, 3, 3, 2000, 42);
  CHECK(again.failure_count == bad.failure_count);
  CHECK(again.failures == bad.failures);
}

TEST_CASE("every sequential construction verifies at its claimed (r,t)") {
  std::vector<BuiltCode> built;
  built.push_back(regular_graph_code(6, 3));   // C(10,2)
  built.push_back(regular_graph_code(5, 2));   // C(10,2)
  built.push_back(regular_graph_code(7, 3));   // odd-degree node case
  built.push_back(hypergraph_t3_code(2));      // C(14,3)
  built.push_back(mols_code(3, 3));            // odd t: conservative claim
  built.push_back(mols_code(4, 4));            // C(33,5)
  built.push_back(spc_code(4));                // C(4,1)
  built.push_back(simplex_code(3));            // C(7,3)
  built.push_back(stacked_code(2, spc_code(3)));   // C(9,3)
  for (const auto& b : built) {
    REQUIRE(binomial(b.code.n(), b.t_claimed) <= 10'000'000);
    VerificationReport rep = verify_sequential(b.code, b.r_claimed, b.t_claimed);
    CAPTURE(b.spec);
    CHECK(rep.pass());
  }
}

TEST_CASE("odd-t Latin-square codes do not reach t+1 in general") {
  // The even-t argument does not extend: this odd-t instance fails one
  // level above its conservative claim, so the claim stays at t.
  BuiltCode m43 = mols_code(4, 3);
  REQUIRE(m43.t_claimed == 3);
  CHECK(verify_sequential(m43.code, 4, 3).pass());
  CHECK(!verify_sequential(m43.code, 4, 4).pass());
}

TEST_CASE("product of two single-parity codes: the aligned rectangle is stuck") {
  BuiltCode prod = product_code(spc_code(3), spc_code(3));
  DualWordIndex words = index_for(prod.code, 2);
  // Positions (0,0),(0,1),(1,0),(1,1) of the 3x3 array: a four-corner
  // pattern matching a weight-4 codeword support.
  ErasurePattern rect{0, 1, 3, 4};
  BitVector cw(9);
  for (auto p : rect) cw.set(p);
  CHECK(!mat_vec(prod.code.pchk(), cw).any());
  CHECK(!peel(prod.code, rect, words).ok());
}

TEST_CASE("r=2 chain t=7: million-sample run at seed 42 passes") {
  BuiltCode t7 = r2_chain_code(7, 16);
  VerificationReport rep = verify_sequential_sampled(t7.code, 2, 7, 1000000, 42);
  CHECK(rep.pass());
  CHECK(rep.checked_patterns == 1000000);
}

TEST_CASE("block-diagonal extension of the hypergraph code survives seven erasures") {
  BuiltCode ext = stacked_code(2, hypergraph_t3_code(2));
  REQUIRE(ext.code.n() == 42);
  REQUIRE(ext.t_claimed == 7);
  VerificationReport rep = verify_sequential(ext.code, ext.r_claimed, 7);
  CHECK(rep.pass());
  CHECK(rep.total_patterns == binomial(42, 7));
}

TEST_CASE("pattern space cap trips the sampled-mode escape hatch") {
  BuiltCode t7 = r2_chain_code(7, 16);
  VerifyConfig cfg;
  cfg.pattern_cap = 1000;
  CHECK_THROWS_AS(verify_sequential(t7.code, 2, 7, cfg), Error);
}

TEST_CASE("parallel structural checks") {
  CHECK(check_parallel(projective_plane_code(2).code, 4, 5).pass());
  CHECK(check_parallel(projective_plane_code(3).code, 8, 9).pass());
  CHECK(check_parallel(steiner_triple_code(4).code, 6, 3).pass());
  CHECK(check_parallel(steiner_triple_code(5).code, 14, 3).pass());
  CHECK(check_parallel(affine_plane_code(2).code, 4, 4).pass());
  CHECK(check_parallel(affine_plane_code(3).code, 8, 8).pass());

  VerificationReport id = check_parallel(LinearCode(BitMatrix::identity(3)), 1, 1);
  CHECK(!id.pass());
  bool row_weight_item = false;
  for (const auto& item : id.structural_failures)
    if (item.find("row_weight") != std::string::npos) row_weight_item = true;
  CHECK(row_weight_item);
}

TEST_CASE("parallel recovery implies sequential recovery") {
  for (const auto& b : {projective_plane_code(2), steiner_triple_code(3), steiner_triple_code(4),
                        affine_plane_code(2)}) {
    REQUIRE(check_parallel(b.code, b.r_claimed, b.t_claimed).pass());
    VerificationReport seq = verify_sequential(b.code, b.r_claimed, b.t_claimed);
    CHECK(seq.pass());
  }
}

TEST_CASE("greedy peel agrees with exhaustive search over orders and words") {
  std::vector<BuiltCode> small = {fixture("item3_10_5"), regular_graph_code(6, 3),
                                  regular_graph_code(5, 2), hypergraph_t3_code(1),
                                  spc_code(3),             product_code(spc_code(3), spc_code(3)),
                                  stacked_code(2, spc_code(3)), mols_code(2, 2)};
  for (const auto& b : small) {
    REQUIRE(b.code.n() <= 12);
    DualWordIndex words = index_for(b.code, b.r_claimed);
    std::vector<std::vector<std::uint32_t>> supports;
    for (std::size_t i = 0; i < words.size(); ++i) supports.push_back(words.word_support(i));
    oracle::DfsRecoverability dfs(supports);

    for (std::uint32_t t = 0; t <= 4 && t <= b.code.n(); ++t) {
      ErasurePattern p(t);
      for (std::uint32_t i = 0; i < t; ++i) p[i] = i;
      if (t == 0) {
        CHECK(peel(b.code, {}, words).ok());
        continue;
      }
      do {
        CHECK(peel(b.code, p, words).ok() == dfs.recoverable(p));
      } while (colex_next(p, std::uint32_t(b.code.n())));
    }
  }
}

TEST_CASE("greedy peel matches the DFS oracle on random sparse codes") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 6 + rng() % 7;  // up to 12
    std::size_t rows = 2 + rng() % (n / 2);
    std::uint32_t r = 2 + rng() % 3;
    BitMatrix h(rows, n);
    for (std::size_t i = 0; i < rows; ++i) {
      std::size_t weight = 2 + rng() % r;  // row weight <= r+1
      while (h.row(i).weight() < weight) h.set(i, rng() % n);
    }
    LinearCode c(std::move(h));
    DualWordIndex words(low_weight_dual_words(c, r + 1), c.n());
    std::vector<std::vector<std::uint32_t>> supports;
    for (std::size_t i = 0; i < words.size(); ++i) supports.push_back(words.word_support(i));
    oracle::DfsRecoverability dfs(supports);
    for (std::uint32_t t = 1; t <= 3; ++t) {
      ErasurePattern p(t);
      for (std::uint32_t i = 0; i < t; ++i) p[i] = i;
      do {
        CHECK(peel(c, p, words).ok() == dfs.recoverable(p));
      } while (colex_next(p, std::uint32_t(c.n())));
    }
  }
}

TEST_CASE("certificate replay soundness on 1000 random certificates") {
  std::mt19937_64 rng(99);
  struct Source {
    BuiltCode built;
    std::uint32_t t;
  };
  std::vector<Source> sources;
  sources.push_back({fixture("eq3_14_8"), 3});
  sources.push_back({fixture("item3_10_5"), 3});
  sources.push_back({fixture("item2_28_20"), 3});
  sources.push_back({r2_chain_code(4, 8), 4});
  sources.push_back({mols_code(3, 2), 3});

  std::size_t replayed = 0;
  while (replayed < 1000) {
    const Source& src = sources[replayed % sources.size()];
    DualWordIndex words = index_for(src.built.code, src.built.r_claimed);
    ErasurePattern p = random_pattern(src.built.code.n(), src.t, rng);
    PeelResult res = peel(src.built.code, p, words);
    REQUIRE(res.ok());
    CHECK(oracle::certificate_sound(src.built.code, p, *res.certificate, words,
                                    src.built.r_claimed));
    ++replayed;
  }
}

TEST_CASE("monotonicity: sizes below a verified t also recover") {
  std::mt19937_64 rng(17);
  struct Source {
    BuiltCode built;
    std::uint32_t t;
  };
  for (const auto& [built, t] : {Source{fixture("eq3_14_8"), 3}, Source{r2_chain_code(4, 8), 4}}) {
    REQUIRE(verify_sequential(built.code, built.r_claimed, t).pass());
    DualWordIndex words = index_for(built.code, built.r_claimed);
    for (std::uint32_t s = 1; s < t; ++s) {
      for (int trial = 0; trial < 1000; ++trial) {
        ErasurePattern p = random_pattern(built.code.n(), s, rng);
        CHECK(peel(built.code, p, words).ok());
      }
    }
  }
}

TEST_CASE("verified codes have distance at least t+1") {
  struct Source {
    BuiltCode built;
    std::uint32_t t;
  };
  for (const auto& [built, t] :
       {Source{fixture("eq3_14_8"), 3}, Source{fixture("item3_10_5"), 3},
        Source{r2_chain_code(4, 8), 4}, Source{mols_code(3, 2), 3},
        Source{product_code(spc_code(3), spc_code(3)), 3}}) {
    REQUIRE(verify_sequential(built.code, built.r_claimed, t).pass());
    CHECK(min_distance(built.code) >= t + 1);
  }
}

TEST_CASE("rate-optimal two-erasure classification") {
  // Construction output lands in the regular-graph class.
  T2Classification reg = classify_rate_optimal_t2(regular_graph_code(6, 3).code, 3);
  CHECK(reg.kind == T2ClassKind::RegularGraph);
  CHECK(classify_rate_optimal_t2(regular_graph_code(5, 2).code, 2).kind ==
        T2ClassKind::RegularGraph);

  // Two rows sharing r weight-2 columns: the MDS-pair pattern.
  {
    std::uint32_t r = 3;
    BitMatrix h(2, r + 2);
    h.set(0, 0);
    h.set(1, 1);
    for (std::uint32_t j = 0; j < r; ++j) {
      h.set(0, 2 + j);
      h.set(1, 2 + j);
    }
    CHECK(classify_rate_optimal_t2(LinearCode(std::move(h)), r).kind == T2ClassKind::MdsLocal);
  }

  // Identity-only H: no weight-2 columns, k = 0.
  CHECK(classify_rate_optimal_t2(LinearCode(BitMatrix::identity(3)), 1).kind ==
        T2ClassKind::NotNormalForm);

  // Disjoint union of a regular-graph block and an MDS pair.
  {
    std::uint32_t r = 3;
    BuiltCode reggraph = regular_graph_code(6, r);
    const BitMatrix& g = reggraph.code.pchk();  // 4 x 10, [B | I]
    BitMatrix h(g.rows() + 2, g.cols() + r + 2);
    for (std::size_t i = 0; i < g.rows(); ++i)
      for (auto j : g.row(i).support()) h.set(i, j);
    std::size_t base = g.cols();
    h.set(g.rows(), base);
    h.set(g.rows() + 1, base + 1);
    for (std::uint32_t j = 0; j < r; ++j) {
      h.set(g.rows(), base + 2 + j);
      h.set(g.rows() + 1, base + 2 + j);
    }
    CHECK(classify_rate_optimal_t2(LinearCode(std::move(h)), r).kind == T2ClassKind::Product);
  }

  // A pair sharing 1 < s < r columns violates the classification.
  {
    // Rows {a,b,c},{a,b,d},{c,e,f},{d,e,f} on six weight-2 columns, r = 3.
    BitMatrix h(4, 10);
    auto info = [&](std::size_t row, std::size_t col) { h.set(row, 4 + col); };
    h.set(0, 0);
    h.set(1, 1);
    h.set(2, 2);
    h.set(3, 3);
    info(0, 0); info(0, 1); info(0, 2);
    info(1, 0); info(1, 1); info(1, 3);
    info(2, 2); info(2, 4); info(2, 5);
    info(3, 3); info(3, 4); info(3, 5);
    T2Classification v = classify_rate_optimal_t2(LinearCode(std::move(h)), 3);
    CHECK(v.kind == T2ClassKind::Violation);
    CHECK(v.overlap == 2);
  }

  // Wrong rate is rejected as not in normal form.
  CHECK(classify_rate_optimal_t2(fixture("eq3_14_8").code, 4).kind == T2ClassKind::NotNormalForm);
}

TEST_CASE("verification report JSON round-trips and uses 1-based failures") {
  BuiltCode eq3 = fixture("eq3_14_8");
  VerificationReport rep = verify_sequential(eq3.code, 4, 4);
  auto j = nlohmann::json::parse(rep.to_json());
  CHECK(j["pass"] == false);
  CHECK(j["mode"] == "sequential");
  CHECK(j["failure_count"].get<std::uint64_t>() == rep.failure_count);
  REQUIRE(!j["failures"].empty());
  for (auto& f : j["failures"][0]) CHECK(f.get<int>() >= 1);

  // Re-serializing the parsed object is value-identical.
  CHECK(nlohmann::json::parse(j.dump()) == j);
}
