#pragma once

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "congruence.hpp"
#include "construct.hpp"
#include "symmetry.hpp"

namespace latrep {

// A lattice whose distinguished elements carry names. One element may carry
// several names after gluing (g_0 is also the top of the middle block).
struct LabeledLattice {
  Lattice lattice;
  std::map<std::string, Index> labels;

  Index at(const std::string& name) const {
    auto it = labels.find(name);
    if (it == labels.end()) throw Error(ErrorKind::NotFound, "no element labelled " + name);
    return it->second;
  }
  bool has(const std::string& name) const { return labels.count(name) != 0; }
  std::vector<std::string> names_of(Index x) const {
    std::vector<std::string> r;
    for (const auto& [k, v] : labels)
      if (v == x) r.push_back(k);
    return r;
  }
};

inline std::string g_atom(Index i) { return "g_" + std::to_string(i); }
inline std::string g_coatom(Index i, Index j) { return "g^" + std::to_string(i) + "," + std::to_string(j); }
inline std::string h_atom(Index i, Index j) { return "h_" + std::to_string(i) + "," + std::to_string(j); }
inline std::string h_coatom(Index i) { return "h^" + std::to_string(i); }

// T(n): 0, atoms g_i for i < 6+n, coatoms g^{i,j} for i < j, 1, with
// g_i < g^{k,m} iff i ∈ {k, m}.
inline LabeledLattice build_T(std::size_t n) {
  const Index N = Index(6 + n);
  LabeledLattice t;
  std::vector<Pair> cov;
  Index next = 1 + N;
  const Index top = Index(1 + N + N * (N - 1) / 2);
  t.labels["0"] = 0;
  t.labels["1"] = top;
  for (Index i = 0; i < N; ++i) {
    t.labels[g_atom(i)] = 1 + i;
    cov.emplace_back(0, 1 + i);
  }
  for (Index i = 0; i < N; ++i)
    for (Index j = i + 1; j < N; ++j) {
      Index c = next++;
      t.labels[g_coatom(i, j)] = c;
      cov.emplace_back(1 + i, c);
      cov.emplace_back(1 + j, c);
      cov.emplace_back(c, top);
    }
  t.lattice = lattice_from_covers(top + 1, cov);
  return t;
}

// T'(n) is the dual of T(n); g_i becomes the coatom h^i and g^{i,j} the atom
// h_{i,j}.
inline LabeledLattice build_T_dual(std::size_t n) {
  auto t = build_T(n);
  LabeledLattice d;
  d.lattice = dual(t.lattice);
  const Index N = Index(6 + n);
  d.labels["0"] = t.at("1");
  d.labels["1"] = t.at("0");
  for (Index i = 0; i < N; ++i) {
    d.labels[h_coatom(i)] = t.at(g_atom(i));
    for (Index j = i + 1; j < N; ++j) d.labels[h_atom(i, j)] = t.at(g_coatom(i, j));
  }
  return d;
}

// 0, atoms 1..k, coatoms k+1..k+m, top; edges (i, j) put atom i below
// coatom j.
inline Lattice bipartite_lattice(std::size_t k, std::size_t m, const std::vector<Pair>& edges) {
  const Index top = Index(k + m + 1);
  std::vector<Pair> cov;
  for (Index i = 0; i < k; ++i) cov.emplace_back(0, 1 + i);
  for (Index j = 0; j < m; ++j) cov.emplace_back(Index(1 + k + j), top);
  for (auto [i, j] : edges) cov.emplace_back(1 + i, Index(1 + k + j));
  return lattice_from_covers(top + 1, cov);
}

// Length-4 block: 0, atoms α_i, middle row β_j, coatoms γ_i, 1. Atom α_i
// lies below β_j for j ∈ N_i; β_j lies below γ_i iff π(j) ∈ N_i for an
// involution π, so α_i ↔ γ_i, β_j ↔ β_π(j) is an anti-automorphism.
inline Lattice involutive_lattice(const std::vector<std::vector<Index>>& nb, const std::vector<Index>& pi) {
  const Index k = nb.size(), m = pi.size();
  auto A = [&](Index i) { return 1 + i; };
  auto B = [&](Index j) { return 1 + k + j; };
  auto C = [&](Index i) { return 1 + k + m + i; };
  const Index top = 1 + 2 * k + m;
  std::vector<Pair> cov;
  for (Index i = 0; i < k; ++i) {
    cov.emplace_back(0, A(i));
    cov.emplace_back(C(i), top);
    for (Index j : nb[i]) cov.emplace_back(A(i), B(j));
    for (Index j = 0; j < m; ++j)
      if (std::find(nb[i].begin(), nb[i].end(), pi[j]) != nb[i].end()) cov.emplace_back(B(j), C(i));
  }
  return lattice_from_covers(top + 1, cov);
}

// Stored block data, found by the searches below and frozen.
namespace frozen {
inline const std::vector<std::vector<Index>> middle_nb{{0}, {0, 1}, {0, 2, 3}};
inline const std::vector<Index> middle_pi{0, 2, 1, 3};
inline constexpr Index middle_designated = 0;
inline const std::vector<Pair> anchor_edges{{0, 0}, {1, 1}, {2, 0}, {2, 2}, {3, 0}, {3, 1}, {3, 3}};
inline constexpr Pair anchor_interval{0, 0};  // atom 0 below coatom 0
inline const std::vector<Pair> edge_edges{{0, 0}, {1, 0}, {1, 1}, {2, 2}, {2, 3}, {3, 0}, {3, 2}, {3, 4}};
}  // namespace frozen

inline LabeledLattice middle_block() {
  LabeledLattice b;
  b.lattice = involutive_lattice(frozen::middle_nb, frozen::middle_pi);
  const Index k = frozen::middle_nb.size(), m = frozen::middle_pi.size();
  b.labels["0"] = 0;
  b.labels["1"] = b.lattice.top();
  b.labels["atom*"] = 1 + frozen::middle_designated;
  b.labels["coatom*"] = 1 + k + m + frozen::middle_designated;
  return b;
}

inline LabeledLattice anchor_block() {
  LabeledLattice b;
  b.lattice = bipartite_lattice(4, 4, frozen::anchor_edges);
  b.labels["0"] = 0;
  b.labels["1"] = b.lattice.top();
  b.labels["a_1"] = 1 + frozen::anchor_interval.first;
  b.labels["b_1"] = 1 + 4 + frozen::anchor_interval.second;
  return b;
}

inline LabeledLattice edge_block() {
  LabeledLattice b;
  b.lattice = bipartite_lattice(4, 5, frozen::edge_edges);
  b.labels["0"] = 0;
  b.labels["1"] = b.lattice.top();
  return b;
}

inline LabeledLattice edge_block_dual() {
  auto e = edge_block();
  LabeledLattice d;
  d.lattice = dual(e.lattice);
  d.labels["0"] = e.at("1");
  d.labels["1"] = e.at("0");
  return d;
}

enum class SelfDualMode { None, SelfDual, SwapDesignated, NotSelfDual };

struct BlockSpec {
  std::optional<std::size_t> size;
  std::optional<Index> length;
  bool graded = false;
  bool simple = false;
  bool rigid = false;
  SelfDualMode selfdual = SelfDualMode::None;
  std::pair<std::string, std::string> swap;  // labels exchanged by the anti-automorphism
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::vector<CheckResult> checks;
  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
  }
  void add(std::string name, bool pass, std::string detail = {}) {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

inline std::string pair_str(Pair p) { return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")"; }

inline Report certify_block(const LabeledLattice& b, const BlockSpec& spec, std::uint64_t budget = kDefaultBudget) {
  Report r;
  const Lattice& l = b.lattice;
  if (spec.size) r.add("size", l.size() == *spec.size, std::to_string(l.size()));
  if (spec.length) r.add("length", l.length() == *spec.length, std::to_string(l.length()));
  if (spec.graded) r.add("graded", l.is_ranked());
  if (spec.simple) {
    auto w = non_simple_witness(l);
    r.add("simple", !w, w ? "cover " + pair_str(*w) + " generates a proper congruence" : "");
  }
  if (spec.rigid) {
    auto aut = lattice_automorphisms(l, budget);
    std::string d;
    if (aut.order() > 1) {
      d = "non-identity automorphism [";
      for (Index x : aut.elements()[1]) d += std::to_string(x) + " ";
      d.back() = ']';
    }
    r.add("rigid", aut.order() == 1, d);
  }
  switch (spec.selfdual) {
    case SelfDualMode::None: break;
    case SelfDualMode::SelfDual: r.add("selfdual", is_selfdual(l, budget).has_value()); break;
    case SelfDualMode::NotSelfDual: r.add("not selfdual", !is_selfdual(l, budget).has_value()); break;
    case SelfDualMode::SwapDesignated: {
      Index a = b.at(spec.swap.first), c = b.at(spec.swap.second);
      ColoredDigraph g = cover_digraph(l.poset()), h = cover_digraph(l.poset(), true);
      g.color[a] = 1;
      g.color[c] = 2;
      h.color[c] = 1;
      h.color[a] = 2;
      r.add("selfdual swapping " + spec.swap.first + " and " + spec.swap.second,
            find_isomorphism(g, h, budget).has_value());
      break;
    }
  }
  return r;
}

inline BlockSpec middle_spec() {
  BlockSpec s;
  s.length = 4;
  s.graded = s.simple = s.rigid = true;
  s.selfdual = SelfDualMode::SwapDesignated;
  s.swap = {"atom*", "coatom*"};
  return s;
}
inline BlockSpec anchor_spec() {
  BlockSpec s;
  s.simple = s.rigid = true;
  s.selfdual = SelfDualMode::SelfDual;
  return s;
}
inline BlockSpec edge_spec() {
  BlockSpec s;
  s.size = 11;
  s.length = 3;
  s.graded = s.simple = s.rigid = true;
  s.selfdual = SelfDualMode::NotSelfDual;
  return s;
}

// Length-3 blocks with k atoms and m coatoms, in order of the atom
// neighbourhood masks. Two atoms may share at most one coatom (otherwise
// their join is ambiguous).
inline std::vector<std::vector<Pair>> search_bipartite_blocks(std::size_t k, std::size_t m,
                                                              const std::function<bool(const Lattice&)>& keep,
                                                              std::size_t limit) {
  std::vector<std::vector<Pair>> out;
  const unsigned full = (1u << m) - 1;
  std::vector<unsigned> pick;
  auto rec = [&](auto&& self, unsigned from) -> void {
    if (out.size() >= limit) return;
    if (pick.size() == k) {
      unsigned cover = 0;
      for (unsigned s : pick) cover |= s;
      if (cover != full) return;
      std::vector<Pair> e;
      for (Index i = 0; i < k; ++i)
        for (Index j = 0; j < m; ++j)
          if (pick[i] >> j & 1) e.emplace_back(i, j);
      Lattice l;
      try {
        l = bipartite_lattice(k, m, e);
      } catch (const Error&) {
        return;
      }
      if (keep(l)) out.push_back(e);
      return;
    }
    for (unsigned s = from; s <= full; ++s) {
      bool ok = true;
      for (unsigned p : pick) ok = ok && std::popcount(p & s) <= 1;
      if (!ok) continue;
      pick.push_back(s);
      self(self, s + 1);
      pick.pop_back();
      if (out.size() >= limit) return;
    }
  };
  rec(rec, 1);
  return out;
}

inline std::vector<std::vector<Pair>> search_edge_blocks(std::size_t limit = 1) {
  return search_bipartite_blocks(4, 5, [](const Lattice& l) { return is_simple(l) && is_rigid(l); }, limit);
}

inline std::vector<std::vector<Pair>> search_anchor_blocks(std::size_t limit = 1) {
  return search_bipartite_blocks(
      4, 4, [](const Lattice& l) { return is_simple(l) && is_rigid(l) && is_selfdual(l).has_value(); }, limit);
}

struct MiddleCandidate {
  std::vector<std::vector<Index>> nb;
  std::vector<Index> pi;
};

inline std::vector<MiddleCandidate> search_middle_blocks(std::size_t k, std::size_t m, std::size_t limit = 1) {
  std::vector<std::vector<Index>> invs;
  std::vector<Index> cur(m);
  auto inv = [&](auto&& self, std::vector<bool>& used, Index pos) -> void {
    while (pos < m && used[pos]) ++pos;
    if (pos == m) { invs.push_back(cur); return; }
    used[pos] = true;
    cur[pos] = pos;
    self(self, used, pos + 1);
    for (Index q = pos + 1; q < m; ++q) {
      if (used[q]) continue;
      used[q] = true;
      cur[pos] = q;
      cur[q] = pos;
      self(self, used, pos + 1);
      used[q] = false;
    }
    used[pos] = false;
  };
  std::vector<bool> used(m, false);
  inv(inv, used, 0);

  std::vector<MiddleCandidate> out;
  const unsigned full = (1u << m) - 1;
  std::vector<unsigned> pick;
  auto rec = [&](auto&& self, unsigned from) -> void {
    if (out.size() >= limit) return;
    if (pick.size() == k) {
      unsigned cover = 0;
      for (unsigned s : pick) cover |= s;
      if (cover != full) return;
      std::vector<std::vector<Index>> nb(k);
      for (Index i = 0; i < k; ++i)
        for (Index j = 0; j < m; ++j)
          if (pick[i] >> j & 1) nb[i].push_back(j);
      for (const auto& pi : invs) {
        Lattice l;
        try {
          l = involutive_lattice(nb, pi);
        } catch (const Error&) {
          continue;
        }
        if (l.length() == 4 && l.is_ranked() && is_simple(l) && is_rigid(l)) {
          out.push_back({nb, pi});
          if (out.size() >= limit) return;
        }
      }
      return;
    }
    for (unsigned s = from; s <= full; ++s) {
      pick.push_back(s);
      self(self, s + 1);
      pick.pop_back();
      if (out.size() >= limit) return;
    }
  };
  rec(rec, 1);
  return out;
}

// Two Hall–Dilworth gluings: T'(n) at the bottom, the middle block glued
// along ↑h^0 = ↓atom*, then T(n) glued along ↑coatom* = ↓g_0.
inline LabeledLattice build_S0(std::size_t n) {
  auto tp = build_T_dual(n);
  auto mid = middle_block();
  auto t = build_T(n);
  GlueSpec first{tp.at(h_coatom(0)), mid.at("atom*"), {{tp.at(h_coatom(0)), mid.at("0")}, {tp.at("1"), mid.at("atom*")}}};
  auto lower = glue_hall_dilworth(tp.lattice, mid.lattice, first);
  const auto& mm = lower.maps[1];
  GlueSpec second{mm[mid.at("coatom*")], t.at(g_atom(0)),
                  {{mm[mid.at("coatom*")], t.at("0")}, {mm[mid.at("1")], t.at(g_atom(0))}}};
  auto whole = glue_hall_dilworth(lower.lattice, t.lattice, second);
  LabeledLattice s;
  s.lattice = std::move(whole.lattice);
  const auto& lo = whole.maps[0];
  const auto& up = whole.maps[1];
  for (const auto& [k, v] : tp.labels)
    if (k != "1") s.labels[k] = lo[lower.maps[0][v]];
  for (const auto& [k, v] : t.labels)
    if (k != "0") s.labels[k] = up[v];
  s.labels["atom*"] = lo[mm[mid.at("atom*")]];
  s.labels["coatom*"] = lo[mm[mid.at("coatom*")]];
  return s;
}

enum class EdgeKind { UpperLeft, UpperRight, LowerLeft, LowerRight, Ordinary };

inline std::string to_string(EdgeKind k) {
  switch (k) {
    case EdgeKind::UpperLeft: return "upper-left";
    case EdgeKind::UpperRight: return "upper-right";
    case EdgeKind::LowerLeft: return "lower-left";
    case EdgeKind::LowerRight: return "lower-right";
    case EdgeKind::Ordinary: return "ordinary";
  }
  return "?";
}

namespace detail {

// Parses "g_3", "g^1,4", "h_1,4", "h^3" into (kind letter, indices).
struct ParsedLabel {
  char family = 0;  // 'g' or 'h'
  bool upper = false;
  std::vector<Index> idx;
};

inline std::optional<ParsedLabel> parse_label(const std::string& s) {
  if (s.size() < 3 || (s[0] != 'g' && s[0] != 'h') || (s[1] != '_' && s[1] != '^')) return std::nullopt;
  ParsedLabel p;
  p.family = s[0];
  p.upper = s[1] == '^';
  std::size_t pos = 2;
  while (pos < s.size()) {
    std::size_t end = s.find(',', pos);
    if (end == std::string::npos) end = s.size();
    p.idx.push_back(Index(std::stoul(s.substr(pos, end - pos))));
    pos = end + 1;
  }
  return p;
}

}  // namespace detail

// Read off labels: (g_i, g^{i,j}) upper-left, (g_j, g^{i,j}) upper-right,
// (h_{i,j}, h^i) lower-left, (h_{i,j}, h^j) lower-right, for i < j.
inline EdgeKind classify_edge(const LabeledLattice& s0, Pair cover) {
  if (!s0.lattice.covers_pair(cover.first, cover.second))
    throw Error(ErrorKind::InvalidInput, "NotACover: " + pair_str(cover));
  for (const auto& lo_name : s0.names_of(cover.first))
    for (const auto& hi_name : s0.names_of(cover.second)) {
      auto lo = detail::parse_label(lo_name), hi = detail::parse_label(hi_name);
      if (!lo || !hi || lo->family != hi->family) continue;
      if (lo->family == 'g' && !lo->upper && hi->upper && lo->idx.size() == 1 && hi->idx.size() == 2) {
        if (lo->idx[0] == hi->idx[0]) return EdgeKind::UpperLeft;
        if (lo->idx[0] == hi->idx[1]) return EdgeKind::UpperRight;
      }
      if (lo->family == 'h' && !lo->upper && hi->upper && lo->idx.size() == 2 && hi->idx.size() == 1) {
        if (hi->idx[0] == lo->idx[0]) return EdgeKind::LowerLeft;
        if (hi->idx[0] == lo->idx[1]) return EdgeKind::LowerRight;
      }
    }
  return EdgeKind::Ordinary;
}

struct ReplacedEdge {
  EdgeKind kind;
  Pair at;
  Index first, second;  // label indices i < j
};

// The four families of edges of S_0(n), each in lexicographic label order.
inline std::vector<ReplacedEdge> replaced_edges(const LabeledLattice& s0, std::size_t n) {
  const Index N = Index(6 + n);
  std::vector<ReplacedEdge> r;
  for (EdgeKind k : {EdgeKind::UpperLeft, EdgeKind::UpperRight, EdgeKind::LowerLeft, EdgeKind::LowerRight})
    for (Index i = 0; i < N; ++i)
      for (Index j = i + 1; j < N; ++j) {
        Pair at;
        switch (k) {
          case EdgeKind::UpperLeft: at = {s0.at(g_atom(i)), s0.at(g_coatom(i, j))}; break;
          case EdgeKind::UpperRight: at = {s0.at(g_atom(j)), s0.at(g_coatom(i, j))}; break;
          case EdgeKind::LowerLeft: at = {s0.at(h_atom(i, j)), s0.at(h_coatom(i))}; break;
          default: at = {s0.at(h_atom(i, j)), s0.at(h_coatom(j))}; break;
        }
        r.push_back({k, at, i, j});
      }
  return r;
}

// Upper-left and lower-right edges get the edge block, the other two kinds
// its dual; every edge gets a disjoint copy.
inline LabeledLattice build_S(std::size_t n) {
  auto s0 = build_S0(n);
  auto eb = edge_block().lattice;
  auto ed = edge_block_dual().lattice;
  std::vector<Insertion> ins;
  for (const auto& e : replaced_edges(s0, n)) {
    bool plain = e.kind == EdgeKind::UpperLeft || e.kind == EdgeKind::LowerRight;
    ins.push_back({{e.at.first, e.at.second}, plain ? &eb : &ed});
  }
  auto b = insert_many(s0.lattice, ins);
  LabeledLattice s;
  s.lattice = std::move(b.lattice);
  s.labels = std::move(s0.labels);
  return s;
}

inline Report verify_S(const LabeledLattice& s, std::size_t n, std::uint64_t budget = kDefaultBudget) {
  Report r;
  const Lattice& l = s.lattice;
  const Index N = Index(6 + n);
  auto w = non_simple_witness(l);
  r.add("simple", !w, w ? "cover " + pair_str(*w) : "");
  auto aut = lattice_automorphisms(l, budget);
  r.add("rigid", aut.order() == 1, "|Aut| = " + std::to_string(aut.order()));
  auto sd = is_selfdual(l, budget);
  r.add("selfdual", sd.has_value());
  r.add("length 12", l.length() == 12, std::to_string(l.length()));
  r.add("ranked", l.is_ranked());
  Bits h4(l.size()), hs(l.size());
  for (Index x = 0; x < l.size(); ++x)
    if (l.height(x) == 4) h4.set(x);
  for (Index i = 0; i < N; ++i) hs.set(s.at(h_coatom(i)));
  r.add("height 4 is exactly the h^i", h4 == hs, std::to_string(h4.count()) + " elements of height 4");
  const std::size_t bc = l.upper_covers(l.bottom()).size();
  r.add("bottom covers", bc == std::size_t(N) * (N - 1) / 2, std::to_string(bc));
  bool labels = true;
  for (Index i = 0; i < N; ++i)
    for (Index j = i + 1; j < N; ++j)
      labels = labels && l.lt(s.at(g_atom(i)), s.at(g_coatom(i, j))) && l.lt(s.at(g_atom(j)), s.at(g_coatom(i, j))) &&
               l.lt(s.at(h_atom(i, j)), s.at(h_coatom(i))) && l.lt(s.at(h_atom(i, j)), s.at(h_coatom(j)));
  r.add("labels survive", labels);
  if (sd) {
    Bits hc(l.size());
    for (Index i = 0; i < N; ++i) hc.set(s.at(h_coatom(i)));
    bool maps = true;
    for (Index i = 0; i < N; ++i) maps = maps && hc[(*sd)[s.at(g_atom(i))]];
    r.add("anti-automorphism sends g-atoms to h-coatoms", maps);
  }
  return r;
}

}  // namespace latrep
