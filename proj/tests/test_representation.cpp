#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace latrep;

namespace {

Poset chain_poset(std::size_t n) {
  std::vector<Pair> c;
  for (Index i = 0; i + 1 < n; ++i) c.emplace_back(i, i + 1);
  return poset_from_covers(n, c);
}

Poset diamond_poset() { return poset_from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }
Poset poset5() { return poset_from_covers(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}}); }

Bits con_of(const CongruenceStructure& cs, const Frame& f, Index key) {
  auto iv = f.intervals.at(key);
  return cs.con(iv.lo, iv.hi);
}

}  // namespace

TEST(Representation, HNu) {
  auto nu = build_H_nu(chain_poset(2), 1);
  EXPECT_EQ(nu.size(), 3u);
  auto q = quotient_order(nu);
  EXPECT_TRUE(poset_isomorphic(q.order, chain_poset(2)));
  // The vertex and P's top merge into one class.
  EXPECT_EQ(q.class_of[1], q.class_of[2]);
}

TEST(Representation, Arrows) {
  EXPECT_EQ(build_IJ(chain_poset(2), Graph(1)), (std::vector<Pair>{{1, 2}}));
  EXPECT_EQ(build_IJ(chain_poset(3), Graph(1)), (std::vector<Pair>{{2, 3}}));
  EXPECT_EQ(build_IJ(diamond_poset(), Graph(1)), (std::vector<Pair>{{3, 4}}));
  EXPECT_EQ(build_IJ(chain_poset(4), Graph(1)), (std::vector<Pair>{{3, 4}, {1, 2}}));
  auto k2 = graph_from_edges(2, {{0, 1}});
  EXPECT_EQ(build_IJ(chain_poset(2), k2), (std::vector<Pair>{{1, 2}, {1, 3}, {2, 3}, {3, 2}}));
}

TEST(Representation, ShippedGadgetsCertify) {
  auto r = certify_gadget(arrow_gadget());
  for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << c.name << " " << c.detail;
  EXPECT_EQ(r.checks.size(), 7u);
  EXPECT_TRUE(certify_gadget(edge_gadget()).ok());
}

TEST(Representation, SharedMiddleFailsB) {
  auto r = certify_gadget(shared_middle_gadget());
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.checks[1].pass) << r.checks[1].name;
  EXPECT_TRUE(r.checks[0].pass);
}

TEST(Representation, PendantFailsE) {
  auto r = certify_gadget(pendant_gadget());
  const CheckResult* e = nullptr;
  for (const auto& c : r.checks)
    if (c.name.rfind("(e)", 0) == 0) e = &c;
  ASSERT_NE(e, nullptr);
  EXPECT_FALSE(e->pass);
  EXPECT_NE(e->detail.find("not ∇"), std::string::npos);
}

TEST(Representation, GadgetSearch) {
  try {
    search_gadget(0);
    FAIL() << "expected NotFound";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotFound);
  }
  auto t = search_gadget(3);
  EXPECT_EQ(t.lattice.covers(), arrow_gadget().lattice.covers());
}

TEST(Representation, N5OneDirectionalForcing) {
  auto l = n5();
  auto ab = principal_congruence(l, 1, 2), oc = principal_congruence(l, 0, 3);
  EXPECT_TRUE(ab.refines(oc));
  EXPECT_FALSE(oc.refines(ab));
}

TEST(Representation, InsertGadget) {
  Frame f = skeleton(1, {2}, 2);
  Frame g = insert_gadget(f, 1, 2);
  CongruenceStructure cs(g.lattice);
  EXPECT_TRUE(con_of(cs, g, 1).is_subset_of(con_of(cs, g, 2)));
  EXPECT_TRUE(con_of(cs, g, 2).all());
  try {
    insert_gadget(g, 1, 2);
    FAIL() << "expected DuplicateGadget";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DuplicateGadget);
  }

  Frame h = insert_gadget(skeleton(1, {2, 3}, 2), 2, 3, edge_gadget());
  CongruenceStructure ch(h.lattice);
  EXPECT_EQ(con_of(ch, h, 2), con_of(ch, h, 3));
  EXPECT_FALSE(con_of(ch, h, 2).all());
  EXPECT_TRUE(h.has_arrow(2, 3) && h.has_arrow(3, 2));
}

TEST(Representation, GadgetLocality) {
  const std::vector<Pair> unordered{{0, 1}, {0, 2}, {1, 2}};
  for (int code = 0; code < 27; ++code) {
    std::vector<Pair> arrows;
    for (int k = 0, c = code; k < 3; ++k, c /= 3) {
      auto [x, y] = unordered[k];
      if (c % 3 == 1) arrows.emplace_back(x, y);
      if (c % 3 == 2) arrows.emplace_back(y, x);
    }
    Frame f = skeleton(10, {0, 1, 2}, 0);
    for (auto [x, y] : arrows) f = insert_gadget(f, x, y);
    CongruenceStructure cs(f.lattice);
    auto closure = QuasiOrder::generated(3, arrows);
    for (Index x = 0; x < 3; ++x)
      for (Index y = 0; y < 3; ++y)
        EXPECT_EQ(con_of(cs, f, x).is_subset_of(con_of(cs, f, y)), closure.rel(x, y))
            << "arrows code " << code << " pair " << x << "," << y;
  }
}

TEST(Representation, FrameCertification) {
  for (const auto& P : {chain_poset(2), chain_poset(3), diamond_poset(), poset5()}) {
    Graph g(1);
    auto f = build_frame(P, g);
    auto r = certify_frame(f, P, build_H_nu(P, 1));
    for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << P.size() << ": " << c.name << " " << c.detail;
  }
  auto P = chain_poset(3);
  auto k2 = graph_for_group(group_table("c2"));
  EXPECT_TRUE(certify_frame(build_frame(P, k2), P, build_H_nu(P, k2.size())).ok());
}

TEST(Representation, OmittingAnchorArrowFails) {
  auto P = chain_poset(2);
  FrameOptions opt;
  opt.omit.insert({1, 2});
  auto f = build_frame(P, Graph(1), opt);
  auto r = certify_frame(f, P, build_H_nu(P, 1));
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.checks[0].pass);
  EXPECT_EQ(principal_poset(f.lattice).order.size(), 3u);
}

TEST(Representation, BlockAssignment) {
  auto a = assign_blocks(chain_poset(3), 2);
  EXPECT_EQ(a.at(1), 1u);
  EXPECT_EQ(a.at(3), 0u);
  EXPECT_EQ(a.at(4), 0u);
  auto d = assign_blocks(diamond_poset(), 1);
  EXPECT_EQ(d.at(1), 1u);
  EXPECT_EQ(d.at(2), 2u);
}

TEST(Representation, InflationKeepsPrinc) {
  auto P = chain_poset(2);
  auto f = build_frame(P, Graph(1));
  auto a = assign_blocks(P, 1);
  auto inf = inflate(f, a);
  std::size_t expect = f.lattice.size();
  for (const auto& [k, iota] : a) expect += build_S(iota).lattice.size() - 2;
  EXPECT_EQ(inf.lattice.size(), expect);
  EXPECT_TRUE(poset_isomorphic(principal_poset(inf.lattice).order, principal_poset(f.lattice).order));
}

TEST(Representation, SmallestInstancesEndToEnd) {
  struct Case {
    Poset P;
    const char* group;
  };
  for (const auto& c : {Case{chain_poset(2), "c1"}, Case{chain_poset(3), "c2"}}) {
    auto G = group_table(c.group);
    auto rep = represent(c.P, G);
    auto v = verify_representation(rep.inflated.lattice, c.P, G);
    for (const auto& ch : v.report.checks) EXPECT_TRUE(ch.pass) << c.group << ": " << ch.name << " " << ch.detail;
  }
}

TEST(Representation, IntervalRecognition) {
  auto P = chain_poset(2);
  auto rep = represent(P, group_table("c1"));
  const Lattice& L = rep.inflated.lattice;
  std::set<Index> bottoms;
  for (const auto& [k, emb] : rep.inflated.copies) bottoms.insert(rep.frame.intervals.at(k).lo);
  for (Index v = 0; v < rep.frame.lattice.size(); ++v) {
    if (bottoms.count(v)) {
      EXPECT_GE(L.upper_covers(v).size(), 15u) << v;
    } else {
      EXPECT_LT(L.upper_covers(v).size(), 15u) << v;
    }
  }
}

TEST(Representation, DistinctInflation) {
  auto P = diamond_poset();
  auto f = build_frame(P, Graph(1));
  auto inf = inflate(f, assign_blocks(P, 1));
  auto i1 = f.intervals.at(1), i2 = f.intervals.at(2);
  auto s1 = interval(inf.lattice, i1.lo, i1.hi), s2 = interval(inf.lattice, i2.lo, i2.hi);
  EXPECT_TRUE(lattice_isomorphic(s1.lattice, build_S(1).lattice));
  EXPECT_TRUE(lattice_isomorphic(s2.lattice, build_S(2).lattice));
  EXPECT_FALSE(lattice_isomorphic(s1.lattice, s2.lattice));
}

TEST(Representation, GraphRecovery) {
  auto P = chain_poset(2);
  auto g = graph_from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}});
  auto f = build_frame(P, g);
  auto inf = inflate(f, assign_blocks(P, g.size()));
  const Lattice& L = inf.lattice;
  Graph rec(g.size());
  for (Index u = 0; u < g.size(); ++u)
    for (Index v = u + 1; v < g.size(); ++v) {
      Index au = f.intervals.at(P.size() + u).lo, av = f.intervals.at(P.size() + v).lo;
      if (L.join(au, av) != L.top()) rec.add_edge(u, v);
    }
  EXPECT_EQ(rec, g);
}
