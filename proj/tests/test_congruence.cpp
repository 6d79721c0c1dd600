#include <gtest/gtest.h>

#include "latrep/congruence.hpp"

using namespace latrep;

TEST(Congruence, N5Principal) {
  auto l = n5();
  EXPECT_TRUE(principal_congruence(l, 1, 1).is_discrete());
  auto ab = principal_congruence(l, 1, 2);
  EXPECT_EQ(ab.blocks(), (std::vector<std::vector<Index>>{{0}, {1, 2}, {3}, {4}}));
  auto oc = principal_congruence(l, 0, 3);
  EXPECT_EQ(oc.blocks(), (std::vector<std::vector<Index>>{{0, 3}, {1, 2, 4}}));
  EXPECT_TRUE(ab.refines(oc));
  EXPECT_FALSE(oc.refines(ab));
}

TEST(Congruence, AllCongruencesSmall) {
  EXPECT_EQ(all_congruences(chain(2)).size(), 2u);
  EXPECT_EQ(all_congruences(m3()).size(), 2u);
  EXPECT_EQ(all_congruences(n5()).size(), 5u);
  EXPECT_EQ(all_congruences(chain(5)).size(), 16u);
  EXPECT_EQ(all_congruences(boolean_lattice(3)).size(), 8u);
}

#include "latrep/enumerate.hpp"

namespace {

std::vector<Lattice> corpus() {
  std::vector<Lattice> c;
  for (std::size_t n = 1; n <= 7; ++n)
    for (auto& l : all_lattices(n)) c.push_back(std::move(l));
  c.push_back(boolean_lattice(3));
  c.push_back(chain(10));
  c.push_back(insert_into_prime_interval(n5(), {1, 2}, m3()).lattice);
  c.push_back(insert_into_prime_interval(m3(), {0, 1}, n5()).lattice);
  c.push_back(zero_one_sum({n5(), chain(4), m3()}).lattice);
  c.push_back(glue_hall_dilworth(boolean_lattice(3), n5(), {3, 1, {{3, 0}, {7, 1}}}).lattice);
  return c;
}

Partition from_bits(const CongruenceStructure& cs, const Bits& b) { return cs.partition(b); }

}  // namespace

TEST(Congruence, LeastMemberOracle) {
  for (const auto& l : corpus()) {
    if (l.size() > 12) continue;
    auto all = all_congruences(l);
    for (const auto& p : all) EXPECT_TRUE(is_congruence(l, p));
    for (Index a = 0; a < l.size(); ++a)
      for (Index b = 0; b < l.size(); ++b) {
        if (!l.leq(a, b)) continue;
        auto con = principal_congruence(l, a, b);
        const Partition* least = nullptr;
        for (const auto& p : all)
          if (p.same(a, b) && (!least || p.refines(*least))) least = &p;
        ASSERT_TRUE(least);
        for (const auto& p : all)
          if (p.same(a, b)) {
            EXPECT_TRUE(least->refines(p));
          }
        EXPECT_EQ(con, *least);
      }
  }
}

TEST(Congruence, DependencyRouteMatchesClosure) {
  auto c = corpus();
  c.push_back(insert_into_prime_interval(zero_one_sum({n5(), chain(4), m3()}).lattice, {0, 1}, boolean_lattice(3)).lattice);
  for (const auto& l : c) {
    if (l.size() < 2) continue;
    CongruenceStructure cs(l);
    for (Index a = 0; a < l.size(); ++a)
      for_each_bit(l.poset().up(a), [&](Index b) {
        EXPECT_EQ(from_bits(cs, cs.con(a, b)), principal_congruence(l, a, b));
      });
    auto fast = principal_poset(l);
    auto slow = principal_poset_direct(l);
    EXPECT_EQ(fast.congruences.size(), slow.congruences.size());
    EXPECT_TRUE(poset_isomorphic(fast.order, slow.order));
    std::set<Partition> fs(fast.congruences.begin(), fast.congruences.end());
    std::set<Partition> ss(slow.congruences.begin(), slow.congruences.end());
    EXPECT_EQ(fs, ss);
    bool simple_oracle = true;
    for (auto [x, y] : l.covers()) simple_oracle = simple_oracle && principal_congruence(l, x, y).is_full();
    EXPECT_EQ(is_simple(l), simple_oracle);
  }
}

TEST(Congruence, CoverJoinRealization) {
  // con(x, y) is the join of con over the covers of one maximal chain.
  for (const auto& l : corpus())
    for (Index x = 0; x < l.size(); ++x)
      for_each_bit(l.poset().up(x), [&](Index y) {
        std::vector<Pair> chain_covers;
        Index cur = x;
        while (cur != y) {
          Index nxt = Index(-1);
          for (Index u : l.upper_covers(cur))
            if (l.leq(u, y)) { nxt = u; break; }
          chain_covers.emplace_back(cur, nxt);
          cur = nxt;
        }
        EXPECT_EQ(congruence_closure(l, chain_covers), principal_congruence(l, x, y));
      });
}

TEST(Congruence, Monotone) {
  for (const auto& l : corpus()) {
    if (l.size() > 8) continue;
    for (Index a = 0; a < l.size(); ++a)
      for_each_bit(l.poset().up(a), [&](Index b) {
        auto big = principal_congruence(l, a, b);
        for_each_bit(l.poset().up(a) & l.poset().down(b), [&](Index a2) {
          for_each_bit(l.poset().up(a2) & l.poset().down(b), [&](Index b2) {
            EXPECT_TRUE(principal_congruence(l, a2, b2).refines(big));
          });
        });
      });
    if (l.size() >= 2) {
      EXPECT_TRUE(principal_congruence(l, l.bottom(), l.top()).is_full());
    }
  }
}

TEST(Congruence, PrincipalPosetExamples) {
  auto c2 = principal_poset(chain(2));
  EXPECT_EQ(c2.order.size(), 2u);
  // All five congruences of N5 are principal.
  auto p = principal_poset(n5());
  EXPECT_EQ(p.order.size(), 5u);
  EXPECT_TRUE(p.congruences.front().is_discrete());
  EXPECT_TRUE(p.congruences.back().is_full());
  auto all = all_congruences(n5());
  std::set<Partition> a(all.begin(), all.end()), b(p.congruences.begin(), p.congruences.end());
  EXPECT_EQ(a, b);
}

TEST(Congruence, Simplicity) {
  EXPECT_TRUE(is_simple(m3()));
  EXPECT_FALSE(is_simple(n5()));
  EXPECT_TRUE(is_simple(chain(2)));
  EXPECT_FALSE(is_simple(chain(3)));
  auto w = non_simple_witness(chain(4));
  ASSERT_TRUE(w);
}

TEST(Congruence, InsertionPrecondition) {
  EXPECT_TRUE(check_insertion_precondition(m3(), {0, 2}));
  EXPECT_FALSE(check_insertion_precondition(n5(), {1, 2}));
  EXPECT_FALSE(check_insertion_precondition(n5(), {0, 3}));
  EXPECT_TRUE(check_insertion_precondition(chain(2), {0, 1}));
}

TEST(QuasiOrder, Quotients) {
  auto q = QuasiOrder::generated(3, {{0, 1}, {0, 2}, {1, 2}});
  auto r = quotient_order(q);
  EXPECT_TRUE(r.order == chain(3).poset());
  // H = {0, 1, v}: 0 ν 1 plus H × {1, v}.
  auto q2 = QuasiOrder::generated(3, {{0, 1}, {0, 2}, {1, 2}, {2, 1}});
  auto r2 = quotient_order(q2);
  EXPECT_EQ(r2.order.size(), 2u);
  EXPECT_EQ(r2.class_of[1], r2.class_of[2]);
  QuasiOrder bad;
  bad.nu.assign(2, Bits(2));
  EXPECT_THROW(quotient_order(bad), Error);
}

TEST(QuasiColoring, TwoChain) {
  Coloring g(2);
  g.set(0, 0, 0);
  g.set(1, 1, 0);
  g.set(0, 1, 1);
  auto rep = check_quasi_coloring(chain(2), g, QuasiOrder::generated(2, {{0, 1}}));
  EXPECT_TRUE(rep.ok) << rep.failure;
}

TEST(QuasiColoring, ThreeChainOneColorFails) {
  auto l = chain(3);
  Coloring g(3);
  for (Index x = 0; x < 3; ++x) g.set(x, x, 0);
  g.set(0, 1, 1);
  g.set(1, 2, 1);
  g.set(0, 2, 1);
  auto rep = check_quasi_coloring(l, g, QuasiOrder::generated(2, {{0, 1}}));
  EXPECT_FALSE(rep.ok);
  EXPECT_EQ(rep.failure, "C1");
}
