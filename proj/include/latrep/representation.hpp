#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "blocks.hpp"
#include "congruence.hpp"
#include "group_graph.hpp"

namespace latrep {

// H = P ∪ V with V at indices |P|.., and
// ν = ≤_P ∪ (H × ({1} ∪ V)).
inline QuasiOrder build_H_nu(const Poset& P, std::size_t nv) {
  auto tops = P.maximal();
  if (tops.size() != 1 || P.minimal().size() != 1) throw Error(ErrorKind::Unbounded, "P must be bounded");
  const Index np = P.size(), h = Index(np + nv), one = tops[0];
  QuasiOrder q;
  q.nu.assign(h, Bits(h));
  for (Index x = 0; x < h; ++x) {
    if (x < np)
      for_each_bit(P.up(x), [&](Index y) { q.nu[x].set(y); });
    q.nu[x].set(x);
    q.nu[x].set(one);
    for (Index v = np; v < h; ++v) q.nu[x].set(v);
  }
  return q;
}

struct RepInput {
  Poset P;
  Index zero = 0, one = 0;
  std::vector<Index> inner;  // P⁻ = P ∖ {0, 1} in index order
};

inline RepInput rep_input(const Poset& P) {
  if (P.size() < 2) throw Error(ErrorKind::InvalidInput, "P needs at least two elements");
  auto mins = P.minimal(), maxs = P.maximal();
  if (mins.size() != 1 || maxs.size() != 1) throw Error(ErrorKind::Unbounded, "P must be bounded");
  RepInput r{P, mins[0], maxs[0], {}};
  for (Index x = 0; x < P.size(); ++x)
    if (x != r.zero && x != r.one) r.inner.push_back(x);
  return r;
}

// I = ({1} × V), then {(p, q) ∈ P⁻ × P⁻ : p < q}, then both directions of
// every edge; each group lexicographic. Also checks that I together with
// {0} × H and H × {1} generates ν.
inline std::vector<Pair> build_IJ(const Poset& P, const Graph& g) {
  auto in = rep_input(P);
  const Index np = P.size();
  std::vector<Pair> arrows;
  for (Index v = 0; v < g.size(); ++v) arrows.emplace_back(in.one, np + v);
  for (Index p : in.inner)
    for (Index q : in.inner)
      if (P.lt(p, q)) arrows.emplace_back(p, q);
  std::vector<Pair> e;
  for (auto [u, v] : g.edges()) {
    e.emplace_back(np + u, np + v);
    e.emplace_back(np + v, np + u);
  }
  std::sort(e.begin(), e.end());
  arrows.insert(arrows.end(), e.begin(), e.end());

  const Index h = Index(np + g.size());
  std::vector<Pair> gen = arrows;
  for (Index x = 0; x < h; ++x) {
    gen.emplace_back(in.zero, x);
    gen.emplace_back(x, in.one);
  }
  auto closed = QuasiOrder::generated(h, gen);
  auto nu = build_H_nu(P, g.size());
  if (closed.nu != nu.nu) throw Error(ErrorKind::GenerationFailure, "arrows do not generate ν");
  return arrows;
}

// A small lattice containing the boundary 0, a_x, b_x, a_y, b_y, 1 plus fresh
// elements. Splicing identifies the boundary with a frame's elements.
struct GadgetTemplate {
  std::string name;
  Lattice lattice;
  std::array<Index, 6> boundary{};  // 0, a_x, b_x, a_y, b_y, 1
  bool symmetric = false;           // forces both directions

  static GadgetTemplate from_covers(std::string name, std::size_t n, const std::vector<Pair>& covers,
                                    bool symmetric = false) {
    GadgetTemplate t;
    t.name = std::move(name);
    t.lattice = lattice_from_covers(n, covers);
    t.boundary = {0, 1, 2, 3, 4, 5};
    t.symmetric = symmetric;
    return t;
  }
  std::vector<Index> fresh() const {
    std::vector<Index> f;
    for (Index v = 0; v < lattice.size(); ++v)
      if (std::find(boundary.begin(), boundary.end(), v) == boundary.end()) f.push_back(v);
    return f;
  }
};

// Boundary indices: 0, a_x = 1, b_x = 2, a_y = 3, b_y = 4, 1 = 5.
//
// The one-directional gadget adds c = a_x ∨ a_y, d = b_x ∨ a_y and
// e = d ∨ b_y. {a_y, b_y, c, d, e} is an N5 whose short side is [a_y, b_y]:
// collapsing it collapses [c, d] and hence [a_x, b_x], never the reverse.
inline GadgetTemplate arrow_gadget() {
  return GadgetTemplate::from_covers(
      "arrow", 9, {{0, 1}, {0, 3}, {1, 2}, {1, 6}, {2, 7}, {3, 4}, {3, 6}, {4, 8}, {6, 7}, {7, 8}, {8, 5}});
}

// The edge gadget adds c = a_x ∨ a_y, t_x = c ∨ b_x, t_y = c ∨ b_y, a third
// element m over c, and t; {c, t_x, t_y, m, t} is an M3, so collapsing either
// side collapses the M3 and then the other side.
inline GadgetTemplate edge_gadget() {
  return GadgetTemplate::from_covers("edge", 11,
                                     {{0, 1}, {0, 3}, {1, 2}, {3, 4}, {1, 6}, {3, 6}, {6, 7}, {6, 8}, {6, 9},
                                      {2, 7}, {4, 8}, {7, 10}, {8, 10}, {9, 10}, {10, 5}},
                                     true);
}

// Both chains share the element s = a_x ∨ a_y with one element t above it:
// the forcing goes both ways.
inline GadgetTemplate shared_middle_gadget() {
  return GadgetTemplate::from_covers("shared-middle", 8,
                                     {{0, 1}, {0, 3}, {1, 2}, {3, 4}, {1, 6}, {3, 6}, {6, 7}, {2, 7}, {4, 7}, {7, 5}});
}

// The arrow gadget with an extra element u hanging between 0 and a_x.
inline GadgetTemplate pendant_gadget() {
  return GadgetTemplate::from_covers(
      "pendant", 10,
      {{0, 9}, {9, 1}, {0, 3}, {1, 2}, {1, 6}, {2, 7}, {3, 4}, {3, 6}, {4, 8}, {6, 7}, {7, 8}, {8, 5}});
}

struct Frame {
  Lattice lattice;
  std::map<Index, IntervalRef> intervals;  // keyed by H index; the anchor uses P's top
  Index anchor_key = 0;
  std::size_t p_size = 0;
  std::vector<Pair> arrows;
  struct Placed {
    Index x, y;
    std::string name;
    std::vector<Index> fresh;
  };
  std::vector<Placed> gadgets;
  std::vector<Index> anchor_elements;

  bool has_arrow(Index x, Index y) const { return std::find(arrows.begin(), arrows.end(), Pair{x, y}) != arrows.end(); }
};

namespace detail {

// Splices every (x, y, template) at once and validates a single time.
inline Frame splice(const Frame& f, const std::vector<std::tuple<Index, Index, const GadgetTemplate*>>& todo) {
  Frame r = f;
  std::vector<Pair> cov = f.lattice.covers();
  Index next = f.lattice.size();
  for (auto [x, y, t] : todo) {
    if (x == y) throw Error(ErrorKind::InvalidInput, "gadget from an interval to itself");
    auto ix = f.intervals.find(x), iy = f.intervals.find(y);
    if (ix == f.intervals.end() || iy == f.intervals.end())
      throw Error(ErrorKind::NotFound, "gadget endpoint is not a registered interval");
    if (r.has_arrow(x, y) || (t->symmetric && r.has_arrow(y, x)))
      throw Error(ErrorKind::DuplicateGadget, "gadget " + std::to_string(x) + "->" + std::to_string(y) + " exists");
    const Index frame_bnd[6] = {f.lattice.bottom(), ix->second.lo, ix->second.hi,
                                iy->second.lo,      iy->second.hi, f.lattice.top()};
    std::vector<Index> m(t->lattice.size(), Index(-1));
    for (int k = 0; k < 6; ++k) m[t->boundary[k]] = frame_bnd[k];
    Frame::Placed placed{x, y, t->name, {}};
    for (Index v : t->fresh()) {
      m[v] = next++;
      placed.fresh.push_back(m[v]);
    }
    for (auto [a, b] : t->lattice.covers()) cov.emplace_back(m[a], m[b]);
    r.arrows.emplace_back(x, y);
    if (t->symmetric) r.arrows.emplace_back(y, x);
    r.gadgets.push_back(std::move(placed));
  }
  r.lattice = lattice_from_covers(next, cov);
  for (const auto& [k, iv] : r.intervals)
    if (!iv.prime_in(r.lattice))
      throw Error(ErrorKind::NotPrimeAfterSplice, "interval " + std::to_string(k) + " no longer a covering pair");
  return r;
}

}  // namespace detail

inline Frame insert_gadget(const Frame& f, Index x, Index y, const GadgetTemplate& t = arrow_gadget()) {
  return detail::splice(f, {{x, y, &t}});
}

// 0–1 sum of the anchor and one chain 0 ≺ a_k ≺ b_k ≺ 1 per key; no gadgets.
inline Frame skeleton(Index anchor_key, const std::vector<Index>& keys, std::size_t p_size) {
  auto anchor = anchor_block();
  std::vector<Lattice> parts{anchor.lattice};
  for (std::size_t k = 0; k < keys.size(); ++k) parts.push_back(chain(4));
  auto sum = zero_one_sum(parts);
  Frame f;
  f.lattice = std::move(sum.lattice);
  f.anchor_key = anchor_key;
  f.p_size = p_size;
  f.intervals[anchor_key] = {sum.maps[0][anchor.at("a_1")], sum.maps[0][anchor.at("b_1")]};
  f.anchor_elements = sum.maps[0];
  for (std::size_t k = 0; k < keys.size(); ++k) f.intervals[keys[k]] = {sum.maps[k + 1][1], sum.maps[k + 1][2]};
  return f;
}

struct FrameOptions {
  std::set<Pair> omit;  // arrows deliberately left out (negative controls)
};

// Chains for P⁻ and V, then a gadget per arrow of build_IJ: the arrow gadget
// for ({1} × V) and P⁻ arrows, one edge gadget per graph edge.
inline Frame build_frame(const Poset& P, const Graph& g, const FrameOptions& opt = {}) {
  auto in = rep_input(P);
  const Index np = P.size();
  std::vector<Index> keys = in.inner;
  for (Index v = 0; v < g.size(); ++v) keys.push_back(np + v);
  Frame f = skeleton(in.one, keys, np);
  auto arrows = build_IJ(P, g);
  static const GadgetTemplate arrow = arrow_gadget(), edge = edge_gadget();
  std::vector<std::tuple<Index, Index, const GadgetTemplate*>> todo;
  for (auto [x, y] : arrows) {
    if (opt.omit.count({x, y})) continue;
    bool is_edge = x >= np && y >= np;
    if (is_edge) {
      if (x < y) todo.emplace_back(x, y, &edge);
    } else {
      todo.emplace_back(x, y, &arrow);
    }
  }
  return detail::splice(f, todo);
}

inline std::string clause_name(char c) { return std::string("(") + c + ")"; }

// Test frame: anchor plus two chains, gadget spliced x -> y. The anchor stays
// in so that collapsing an interval next to 0 or 1 reaches ∇, as it does in
// every real frame.
inline Frame gadget_test_frame(const GadgetTemplate& t) {
  Frame f = skeleton(100, {0, 1}, 0);
  return insert_gadget(f, 0, 1, t);
}

inline Report certify_gadget(const GadgetTemplate& t) {
  Report r;
  Frame f;
  try {
    f = gadget_test_frame(t);
  } catch (const Error& e) {
    r.add("(d) intervals stay prime", false, e.what());
    return r;
  }
  const Lattice& l = f.lattice;
  CongruenceStructure cs(l);
  auto ix = f.intervals.at(0), iy = f.intervals.at(1);
  Bits cx = cs.con(ix.lo, ix.hi), cy = cs.con(iy.lo, iy.hi);
  r.add("(a) con(a_x,b_x) <= con(a_y,b_y)", cx.is_subset_of(cy));
  if (t.symmetric)
    r.add("(b) con(a_y,b_y) <= con(a_x,b_x)", cy.is_subset_of(cx));
  else
    r.add("(b) con(a_y,b_y) not <= con(a_x,b_x)", !cy.is_subset_of(cx));
  {
    std::string bad;
    for (const auto& [b, rep] : cs.principal())
      if (!(b.none() || b.all() || b == cx || b == cy)) {
        bad = "con" + pair_str(rep) + " is a fifth principal congruence";
        break;
      }
    r.add("(c) Princ is {Δ, ∇, con_x, con_y}", bad.empty(), bad);
  }
  r.add("(d) intervals stay prime", ix.prime_in(l) && iy.prime_in(l));
  {
    std::string bad;
    for (auto iv : {ix, iy}) {
      for (Index u : bits_to_vec(l.poset().down(iv.lo)))
        if (u != iv.lo && !cs.interval_bits(u, iv.lo).all() && bad.empty())
          bad = "con" + pair_str({u, iv.lo}) + " is not ∇";
      for (Index w : bits_to_vec(l.poset().up(iv.hi)))
        if (w != iv.hi && !cs.interval_bits(iv.hi, w).all() && bad.empty())
          bad = "con" + pair_str({iv.hi, w}) + " is not ∇";
    }
    r.add("(e) insertion precondition at both intervals", bad.empty(), bad);
  }
  {
    ColoredDigraph g = cover_digraph(t.lattice.poset());
    for (int k = 0; k < 6; ++k) g.color[t.boundary[k]] = Index(k + 1);
    auto autos = all_isomorphisms(g, g);
    r.add("(f) rigid over the boundary", autos.size() == 1, std::to_string(autos.size()) + " automorphisms");
  }
  r.add("(g) con(a_y,b_y) is not ∇", !cy.all());
  return r;
}

namespace detail {

// Kinds of fresh element over the frame 0, a_x, b_x, a_y, b_y, 1: exactly
// above a nontrivial ideal (and below 1 only), exactly below a nontrivial
// filter (and above 0 only), or free.
struct FreshType {
  std::vector<Index> below, above;  // frame elements strictly below / above
};

inline std::vector<FreshType> fresh_types() {
  // Ideals of 0 < a_x < b_x, 0 < a_y < b_y other than {0}: depth on each side.
  std::vector<FreshType> t;
  for (int dx = 0; dx <= 2; ++dx)
    for (int dy = 0; dy <= 2; ++dy) {
      if (dx == 0 && dy == 0) continue;
      FreshType f;
      f.below.push_back(0);
      if (dx >= 1) f.below.push_back(1);
      if (dx >= 2) f.below.push_back(2);
      if (dy >= 1) f.below.push_back(3);
      if (dy >= 2) f.below.push_back(4);
      f.above = {5};
      t.push_back(f);
    }
  for (int dx = 0; dx <= 2; ++dx)
    for (int dy = 0; dy <= 2; ++dy) {
      if (dx == 0 && dy == 0) continue;
      FreshType f;
      f.above.push_back(5);
      if (dx >= 1) f.above.push_back(2);
      if (dx >= 2) f.above.push_back(1);
      if (dy >= 1) f.above.push_back(4);
      if (dy >= 2) f.above.push_back(3);
      f.below = {0};
      t.push_back(f);
    }
  t.push_back({{0}, {5}});
  return t;
}

}  // namespace detail

// First template (by number of fresh elements, then type and relation order)
// that passes certify_gadget.
inline GadgetTemplate search_gadget(std::size_t max_extra) {
  if (max_extra > 8) throw Error(ErrorKind::InvalidInput, "max_extra above 8");
  const auto types = detail::fresh_types();
  const std::vector<Pair> frame{{0, 1}, {1, 2}, {2, 5}, {0, 3}, {3, 4}, {4, 5}};
  for (std::size_t k = 1; k <= max_extra; ++k) {
    std::vector<std::size_t> ty(k, 0);
    std::vector<int> rel(k * (k - 1) / 2, 0);
    auto try_one = [&]() -> std::optional<GadgetTemplate> {
      const Index n = Index(6 + k);
      std::vector<Pair> r = frame;
      for (std::size_t i = 0; i < k; ++i) {
        for (Index b : types[ty[i]].below) r.emplace_back(b, Index(6 + i));
        for (Index a : types[ty[i]].above) r.emplace_back(Index(6 + i), a);
      }
      std::size_t p = 0;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j, ++p) {
          if (rel[p] == 1) r.emplace_back(Index(6 + i), Index(6 + j));
          if (rel[p] == 2) r.emplace_back(Index(6 + j), Index(6 + i));
        }
      Poset ps;
      try {
        ps = poset_from_covers(n, r);
      } catch (const Error&) {
        return std::nullopt;
      }
      // Fresh elements must keep exactly their declared frame relations.
      for (std::size_t i = 0; i < k; ++i)
        for (Index b = 0; b < 6; ++b) {
          const auto& t = types[ty[i]];
          bool below = std::find(t.below.begin(), t.below.end(), b) != t.below.end();
          bool above = std::find(t.above.begin(), t.above.end(), b) != t.above.end();
          if (ps.leq(b, Index(6 + i)) != below || ps.leq(Index(6 + i), b) != above) return std::nullopt;
        }
      // Frame relations must not change either.
      for (Index a = 1; a < 5; ++a)
        for (Index b = 1; b < 5; ++b)
          if (a != b && ps.leq(a, b) != (a + 1 == b && (a == 1 || a == 3))) return std::nullopt;
      GadgetTemplate t;
      try {
        t = GadgetTemplate::from_covers("found", n, ps.covers());
      } catch (const Error&) {
        return std::nullopt;
      }
      if (certify_gadget(t).ok()) return t;
      return std::nullopt;
    };
    auto rec_rel = [&](auto&& self, std::size_t p) -> std::optional<GadgetTemplate> {
      if (p == rel.size()) return try_one();
      for (int v = 0; v < 3; ++v) {
        rel[p] = v;
        if (auto t = self(self, p + 1)) return t;
      }
      return std::nullopt;
    };
    auto rec_ty = [&](auto&& self, std::size_t i, std::size_t from) -> std::optional<GadgetTemplate> {
      if (i == k) return rec_rel(rec_rel, 0);
      for (std::size_t v = from; v < types.size(); ++v) {
        ty[i] = v;
        if (auto t = self(self, i + 1, v)) return t;
      }
      return std::nullopt;
    };
    if (auto t = rec_ty(rec_ty, 0, 0)) return *t;
  }
  throw Error(ErrorKind::NotFound, "no gadget with at most " + std::to_string(max_extra) + " extra elements");
}

inline Report certify_frame(const Frame& f, const Poset& P, const QuasiOrder& nu) {
  Report r;
  const Lattice& l = f.lattice;
  CongruenceStructure cs(l);
  auto pp = principal_poset(l);
  auto quo = quotient_order(nu);
  auto iso1 = poset_isomorphic(pp.order, quo.order);
  auto iso2 = poset_isomorphic(quo.order, P);
  r.add("Princ(frame) ≅ H/Θ_ν", iso1.has_value(),
        std::to_string(pp.order.size()) + " vs " + std::to_string(quo.order.size()) + " classes");
  r.add("H/Θ_ν ≅ P", iso2.has_value());
  std::string bad;
  for (const auto& [k, iv] : f.intervals)
    if (!check_insertion_precondition(cs, iv) && bad.empty()) bad = "interval " + std::to_string(k);
  r.add("insertion precondition at every interval", bad.empty(), bad);
  bool top = cs.con(f.intervals.at(f.anchor_key).lo, f.intervals.at(f.anchor_key).hi).all();
  for (const auto& [k, iv] : f.intervals)
    if (k >= f.p_size) top = top && cs.con(iv.lo, iv.hi).all();
  r.add("anchor and vertex intervals generate ∇", top);
  return r;
}

// ι_p = 1, 2, 3, ... over P⁻ in index order; every vertex gets 0.
inline std::map<Index, std::size_t> assign_blocks(const Poset& P, std::size_t nv) {
  auto in = rep_input(P);
  std::map<Index, std::size_t> a;
  std::size_t next = 1;
  for (Index p : in.inner) a[p] = next++;
  for (Index v = 0; v < nv; ++v) a[Index(P.size() + v)] = 0;
  return a;
}

struct Inflated {
  Lattice lattice;
  std::map<Index, std::vector<Index>> copies;  // key -> embedding of its S-block
};

inline Inflated inflate(const Frame& f, const std::map<Index, std::size_t>& assignment, bool check = true) {
  if (check) {
    CongruenceStructure cs(f.lattice);
    for (const auto& [k, iota] : assignment)
      if (!check_insertion_precondition(cs, f.intervals.at(k)))
        throw Error(ErrorKind::PreconditionFailed, "interval " + std::to_string(k));
  }
  std::map<std::size_t, Lattice> blocks;
  for (const auto& [k, iota] : assignment)
    if (!blocks.count(iota)) blocks[iota] = build_S(iota).lattice;
  std::vector<Insertion> ins;
  std::vector<Index> order;
  for (const auto& [k, iota] : assignment) {
    auto iv = f.intervals.at(k);
    ins.push_back({iv, &blocks.at(iota)});
    order.push_back(k);
  }
  auto b = insert_many(f.lattice, ins);
  Inflated r;
  r.lattice = std::move(b.lattice);
  for (std::size_t i = 0; i < order.size(); ++i) r.copies[order[i]] = std::move(b.maps[i + 1]);
  return r;
}

struct Representation {
  Graph graph;
  Frame frame;
  Inflated inflated;
  std::map<Index, std::size_t> assignment;
  Report frame_report;
  std::map<std::string, double> seconds;
};

inline double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// graph -> H, ν -> frame -> inflation. With use_frucht the graph is the
// Frucht graph; otherwise the smallest graph on at most six vertices with the
// right group, falling back to Frucht.
inline Representation represent(const Poset& P, const GroupTable& G, bool use_frucht = false,
                                std::uint64_t budget = kDefaultBudget) {
  Representation r;
  auto t0 = std::chrono::steady_clock::now();
  r.graph = use_frucht ? frucht_graph(G, budget) : graph_for_group(G, 6, budget);
  r.seconds["graph"] = since(t0);
  t0 = std::chrono::steady_clock::now();
  auto nu = build_H_nu(P, r.graph.size());
  r.frame = build_frame(P, r.graph);
  r.frame_report = certify_frame(r.frame, P, nu);
  r.seconds["frame"] = since(t0);
  if (!r.frame_report.ok()) throw Error(ErrorKind::CertificationFailed, "frame certification failed");
  t0 = std::chrono::steady_clock::now();
  r.assignment = assign_blocks(P, r.graph.size());
  r.inflated = inflate(r.frame, r.assignment);
  r.seconds["inflate"] = since(t0);
  return r;
}

struct Verification {
  Report report;
  std::optional<std::vector<Index>> princ_iso;  // Princ index -> P element
  std::optional<std::vector<Index>> aut_iso;    // Aut element -> G element
  std::vector<Pair> princ_reps;
  std::size_t aut_order = 0;
  Index length = 0;
  bool selfdual = false;
  std::map<std::string, double> seconds;
};

inline Verification verify_representation(const Lattice& L, const Poset& P, const GroupTable& G,
                                           std::uint64_t budget = kDefaultBudget) {
  Verification v;
  auto t0 = std::chrono::steady_clock::now();
  auto pp = principal_poset(L);
  v.princ_iso = poset_isomorphic(pp.order, P);
  v.princ_reps = pp.reps;
  v.seconds["princ"] = since(t0);
  v.report.add("Princ(L) ≅ P", v.princ_iso.has_value(), std::to_string(pp.order.size()) + " principal congruences");
  t0 = std::chrono::steady_clock::now();
  auto aut = lattice_automorphisms(L, budget);
  v.aut_order = aut.order();
  if (aut.order() == G.n) v.aut_iso = group_isomorphism(group_of(aut), G);
  v.seconds["aut"] = since(t0);
  v.report.add("Aut(L) ≅ G", v.aut_iso.has_value(), "|Aut(L)| = " + std::to_string(aut.order()));
  t0 = std::chrono::steady_clock::now();
  v.length = L.length();
  v.selfdual = is_selfdual(L, budget).has_value();
  v.seconds["informative"] = since(t0);
  return v;
}

}  // namespace latrep
