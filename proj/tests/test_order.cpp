#include <gtest/gtest.h>

#include "latrep/construct.hpp"
#include "latrep/iso.hpp"

using namespace latrep;

TEST(Poset, ChainClosure) {
  auto p = poset_from_covers(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(p.comparable_pairs(), 6u);
  EXPECT_TRUE(p.leq(0, 2));
  EXPECT_FALSE(p.leq(2, 0));
}

TEST(Poset, SingleElement) {
  auto p = poset_from_covers(1, {});
  EXPECT_EQ(p.size(), 1u);
  EXPECT_EQ(p.comparable_pairs(), 1u);
}

TEST(Poset, Errors) {
  try {
    poset_from_covers(2, {{0, 1}, {1, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CycleDetected);
  }
  try {
    poset_from_covers(2, {{0, 2}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IndexOutOfRange);
  }
}

TEST(Poset, RedundantCoverDropped) {
  auto p = poset_from_covers(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(p.covers().size(), 2u);
}

TEST(Lattice, BooleanSquare) {
  auto l = lattice_from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(l.meet(1, 2), 0u);
  EXPECT_EQ(l.join(1, 2), 3u);
  EXPECT_EQ(length(l), 2u);
  EXPECT_TRUE(is_ranked(l));
}

TEST(Lattice, UnboundedAntichain) {
  try {
    lattice_from_covers(2, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Unbounded);
  }
}

TEST(Lattice, BowtieIsNotALattice) {
  // 0 < a, b < c, d < 1 with both a, b below both c, d: a ∨ b has two
  // minimal upper bounds.
  try {
    lattice_from_covers(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotALattice);
  }
}

TEST(Lattice, N5LengthNotRanked) {
  auto l = n5();
  EXPECT_EQ(length(l), 3u);
  EXPECT_FALSE(is_ranked(l));
}

TEST(Lattice, DualInvolution) {
  for (const auto& l : {chain(3), n5(), m3(), boolean_lattice(3)}) {
    EXPECT_EQ(dual(dual(l)), l);
    auto d = dual(l);
    for (Index x = 0; x < l.size(); ++x)
      for (Index y = 0; y < l.size(); ++y) {
        EXPECT_EQ(d.leq(x, y), l.leq(y, x));
        EXPECT_EQ(d.join(x, y), l.meet(x, y));
      }
  }
  auto c = chain(3);
  auto d = dual(c);
  EXPECT_EQ(d.bottom(), 2u);
  EXPECT_EQ(d.top(), 0u);
  EXPECT_TRUE(lattice_isomorphic(n5(), dual(n5())).has_value());
}

TEST(Lattice, MeetJoinAxiomsSpotCheck) {
  auto l = boolean_lattice(3);
  for (Index x = 0; x < l.size(); ++x)
    for (Index y = 0; y < l.size(); ++y) {
      EXPECT_EQ(l.join(x, y), x | y);
      EXPECT_EQ(l.meet(x, y), x & y);
      EXPECT_EQ(l.join(x, l.meet(x, y)), x);
    }
}

TEST(Construct, GlueChains) {
  auto c = chain(3);
  GlueSpec s{2, 0, {{2, 0}}};
  auto r = glue_hall_dilworth(c, c, s);
  EXPECT_EQ(r.lattice.size(), 5u);
  EXPECT_EQ(length(r.lattice), length(c) + length(c));
  EXPECT_TRUE(lattice_isomorphic(r.lattice, chain(5)).has_value());
}

TEST(Construct, GlueChainOverSquare) {
  // Boolean square below, 3-chain above; filter ↑a = {a, 1} glued to the
  // ideal ↓m = {0, m} of the chain.
  auto sq = boolean_lattice(2);
  auto c = chain(3);
  auto r = glue_hall_dilworth(sq, c, {1, 1, {{1, 0}, {3, 1}}});
  EXPECT_EQ(r.lattice.size(), 5u);
  EXPECT_EQ(length(r.lattice), 3u);
}

TEST(Construct, GlueRejectsBadIso) {
  auto c = chain(3);
  try {
    glue_hall_dilworth(c, c, {1, 1, {{1, 1}, {2, 0}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IsoInvalid);
  }
}

TEST(Construct, ZeroOneSum) {
  auto r = zero_one_sum({chain(3), chain(3)});
  EXPECT_EQ(r.lattice.size(), 4u);
  EXPECT_EQ(r.lattice.meet(1, 2), 0u);
  EXPECT_EQ(r.lattice.join(1, 2), 3u);
  auto m = zero_one_sum({chain(3), chain(3), chain(3)});
  EXPECT_TRUE(lattice_isomorphic(m.lattice, m3()).has_value());
  try {
    zero_one_sum({chain(1)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PartTooSmall);
  }
  auto parts = std::vector<Lattice>{boolean_lattice(2), chain(4), n5()};
  auto s = zero_one_sum(parts);
  std::size_t expect = 2;
  for (const auto& p : parts) expect += p.size() - 2;
  EXPECT_EQ(s.lattice.size(), expect);
  for (Index x = 0; x < parts[1].size(); ++x)
    for (Index y = 0; y < parts[2].size(); ++y) {
      Index a = s.maps[1][x], b = s.maps[2][y];
      if (a == 0 || b == 0 || a == s.lattice.top() || b == s.lattice.top()) continue;
      EXPECT_EQ(s.lattice.meet(a, b), 0u);
      EXPECT_EQ(s.lattice.join(a, b), s.lattice.top());
    }
}

TEST(Construct, InsertIntoPrimeInterval) {
  auto host = chain(3);
  auto r = insert_into_prime_interval(host, {0, 1}, m3());
  EXPECT_EQ(r.lattice.size(), 6u);
  EXPECT_EQ(length(r.lattice), 3u);
  auto iv = interval(r.lattice, 0, 1);
  EXPECT_TRUE(lattice_isomorphic(iv.lattice, m3()).has_value());
  auto same = insert_into_prime_interval(host, {1, 2}, chain(2));
  EXPECT_TRUE(lattice_isomorphic(same.lattice, host).has_value());
  try {
    insert_into_prime_interval(host, {0, 2}, m3());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPrime);
  }
}

namespace {
// Number of maximal chains and their total length, by DP from the top.
std::vector<std::size_t> chain_lengths(const Lattice& l) {
  std::vector<std::vector<std::size_t>> at(l.size());
  at[l.top()] = {0};
  const auto& topo = l.poset().topo();
  for (auto it = topo.rbegin(); it != topo.rend(); ++it)
    for (Index y : l.upper_covers(*it))
      for (auto k : at[y]) at[*it].push_back(k + 1);
  auto r = at[l.bottom()];
  std::sort(r.begin(), r.end());
  return r;
}
}  // namespace

TEST(Construct, InsertionLengthensChainsThroughInterval) {
  auto host = n5();
  auto r = insert_into_prime_interval(host, {1, 2}, chain(4));
  // N5's two maximal chains have lengths 2 and 3; only the long one passes
  // through [a, b] and grows by length(k) - 1 = 2.
  EXPECT_EQ(chain_lengths(host), (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(chain_lengths(r.lattice), (std::vector<std::size_t>{2, 5}));
}

TEST(Iso, PosetIsomorphism) {
  auto c = chain(3);
  auto f = poset_isomorphic(c.poset(), c.poset());
  ASSERT_TRUE(f);
  EXPECT_EQ(*f, (std::vector<Index>{0, 1, 2}));
  EXPECT_FALSE(poset_isomorphic(c.poset(), m3().poset()));
  auto g = poset_isomorphic(n5().poset(), dual(n5()).poset());
  ASSERT_TRUE(g);
  EXPECT_TRUE(is_order_isomorphism(n5().poset(), dual(n5()).poset(), *g));
}

#include "latrep/enumerate.hpp"

TEST(Enumerate, LatticeCounts) {
  // Unlabelled lattice counts 1, 1, 1, 2, 5, 15, 53.
  std::vector<std::size_t> expect{0, 1, 1, 1, 2, 5, 15, 53};
  for (std::size_t n = 1; n <= 7; ++n) EXPECT_EQ(all_lattices(n).size(), expect[n]) << n;
}

TEST(Enumerate, DualityProperties) {
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& l : all_lattices(n)) {
      EXPECT_EQ(dual(dual(l)), l);
      auto f = poset_isomorphic(l.poset(), l.poset());
      ASSERT_TRUE(f);
      EXPECT_TRUE(is_order_isomorphism(l.poset(), l.poset(), *f));
    }
}
