#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace latrep;

TEST(Blocks, TSizesAndSimplicity) {
  auto t0 = build_T(0), t1 = build_T(1);
  EXPECT_EQ(t0.lattice.size(), 23u);
  EXPECT_EQ(t1.lattice.size(), 30u);
  EXPECT_EQ(t0.lattice.length(), 3u);
  EXPECT_TRUE(is_simple(t0.lattice));
  EXPECT_TRUE(is_simple(t1.lattice));
  EXPECT_EQ(t0.lattice.upper_covers(t0.lattice.bottom()).size(), 6u);
  EXPECT_EQ(t0.lattice.join(t0.at("g_0"), t0.at("g_1")), t0.at("g^0,1"));
  auto d = build_T_dual(0);
  EXPECT_EQ(d.lattice.meet(d.at("h^0"), d.at("h^1")), d.at("h_0,1"));
}

TEST(Blocks, FrozenBlocksCertify) {
  EXPECT_TRUE(certify_block(middle_block(), middle_spec()).ok());
  EXPECT_TRUE(certify_block(anchor_block(), anchor_spec()).ok());
  EXPECT_TRUE(certify_block(edge_block(), edge_spec()).ok());
}

TEST(Blocks, CertificationRejectsCounterexamples) {
  LabeledLattice c{chain(5), {{"0", 0}, {"1", 4}}};
  BlockSpec simple;
  simple.simple = true;
  auto r = certify_block(c, simple);
  EXPECT_FALSE(r.ok());
  ASSERT_NE(r.find("simple"), nullptr);
  EXPECT_FALSE(r.find("simple")->detail.empty());

  LabeledLattice m{m3(), {{"0", 0}, {"1", 4}}};
  BlockSpec rigid;
  rigid.rigid = true;
  EXPECT_FALSE(certify_block(m, rigid).ok());
}

TEST(Blocks, SearchesReproduceFrozenData) {
  auto e = search_edge_blocks();
  ASSERT_FALSE(e.empty());
  EXPECT_EQ(e[0], frozen::edge_edges);
  auto a = search_anchor_blocks();
  ASSERT_FALSE(a.empty());
  EXPECT_EQ(a[0], frozen::anchor_edges);
  auto m = search_middle_blocks(3, 4);
  ASSERT_FALSE(m.empty());
  EXPECT_EQ(m[0].nb, frozen::middle_nb);
  EXPECT_EQ(m[0].pi, frozen::middle_pi);
}

TEST(Blocks, S0Shape) {
  for (std::size_t n : {0u, 1u}) {
    auto s0 = build_S0(n);
    auto t = build_T(n);
    EXPECT_EQ(s0.lattice.size(), 2 * t.lattice.size() + middle_block().lattice.size() - 4);
    EXPECT_TRUE(is_simple(s0.lattice));
    EXPECT_EQ(s0.lattice.length(), 8u);
  }
}

TEST(Blocks, EdgeClassification) {
  auto s0 = build_S0(0);
  EXPECT_EQ(classify_edge(s0, {s0.at("g_0"), s0.at("g^0,1")}), EdgeKind::UpperLeft);
  EXPECT_EQ(classify_edge(s0, {s0.at("g_1"), s0.at("g^0,1")}), EdgeKind::UpperRight);
  EXPECT_EQ(classify_edge(s0, {s0.at("h_0,1"), s0.at("h^0")}), EdgeKind::LowerLeft);
  EXPECT_EQ(classify_edge(s0, {s0.at("h_0,1"), s0.at("h^1")}), EdgeKind::LowerRight);
  Index b = s0.lattice.bottom();
  EXPECT_EQ(classify_edge(s0, {b, s0.lattice.upper_covers(b)[0]}), EdgeKind::Ordinary);
  EXPECT_EQ(replaced_edges(s0, 0).size(), 60u);
}

TEST(Blocks, EveryMaximalChainCrossesTwoReplacedEdges) {
  for (std::size_t n : {0u, 1u}) {
    auto s0 = build_S0(n);
    std::set<Pair> marked;
    for (const auto& e : replaced_edges(s0, n)) marked.insert(e.at);
    auto [lo, hi] = fixtures::marked_cover_range(s0.lattice, marked);
    EXPECT_EQ(lo, 2u);
    EXPECT_EQ(hi, 2u);
  }
}

TEST(Blocks, SSizeAndEdgeIntervals) {
  auto s0 = build_S0(0);
  auto s = build_S(0);
  const std::size_t per_edge = edge_block().lattice.size() - 2;
  EXPECT_EQ(s.lattice.size(), s0.lattice.size() + 60 * per_edge);
  EXPECT_EQ(s.lattice.size(), 594u);
  auto iv = interval(s.lattice, s.at("g_0"), s.at("g^0,1"));
  EXPECT_TRUE(lattice_isomorphic(iv.lattice, edge_block().lattice));
  auto lower = interval(s.lattice, s.at("h_0,1"), s.at("h^0"));
  EXPECT_TRUE(lattice_isomorphic(lower.lattice, edge_block_dual().lattice));
}

TEST(Blocks, SVerifies) {
  for (std::size_t n : {0u, 1u, 2u}) {
    auto r = verify_S(build_S(n), n);
    for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << "S(" << n << ") " << c.name << " " << c.detail;
  }
}

TEST(Blocks, SPairwiseNonIsomorphic) {
  std::vector<Lattice> s;
  for (std::size_t n : {0u, 1u, 2u}) s.push_back(build_S(n).lattice);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) EXPECT_FALSE(lattice_isomorphic(s[i], s[j]));
}

TEST(Blocks, SimpleInsertionStaysSimple) {
  auto pool = fixtures::simple_pool();
  ASSERT_GE(pool.size(), 8u);
  for (const auto& l : pool) ASSERT_LE(l.size(), 12u);
  auto cases = fixtures::insertion_cases(pool, 100);
  ASSERT_EQ(cases.size(), 100u);
  for (const auto& c : cases) {
    const Lattice& host = pool[c.host];
    ASSERT_TRUE(check_insertion_precondition(host, {c.cover.first, c.cover.second}));
    auto r = insert_into_prime_interval(host, {c.cover.first, c.cover.second}, pool[c.block]);
    EXPECT_TRUE(is_simple(r.lattice)) << "host " << c.host << " block " << c.block;
  }
}
