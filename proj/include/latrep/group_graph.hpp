#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "graph.hpp"
#include "symmetry.hpp"

namespace latrep {

inline GroupTable cyclic_group(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidTable, "cyclic group of order 0");
  GroupTable t;
  t.n = n;
  t.table.assign(n, std::vector<Index>(n));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) t.table[a][b] = (a + b) % n;
  return t;
}

// Symmetries of the n-gon, order 2n. Index i + n·e stands for r^i s^e, and
// s r = r^-1 s.
inline GroupTable dihedral_group(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidTable, "dihedral group of a 0-gon");
  GroupTable t;
  t.n = 2 * n;
  t.table.assign(t.n, std::vector<Index>(t.n));
  for (Index x = 0; x < t.n; ++x)
    for (Index y = 0; y < t.n; ++y) {
      Index i = x % n, a = x / n, j = y % n, b = y / n;
      Index rot = a ? (i + n - j) % n : (i + j) % n;
      t.table[x][y] = rot + Index(n) * ((a + b) % 2);
    }
  return t;
}

inline GroupTable symmetric_group(std::size_t k) {
  if (k == 0) throw Error(ErrorKind::InvalidTable, "symmetric group on 0 points");
  std::vector<Permutation> perms;
  Permutation p = identity_perm(k);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  if (perms.size() > kGroupBound) throw Error(ErrorKind::TooLarge, "symmetric group too large");
  return group_of(PermGroup::from_elements(k, perms));
}

inline GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  GroupTable t;
  t.n = a.n * b.n;
  t.table.assign(t.n, std::vector<Index>(t.n));
  for (Index x = 0; x < t.n; ++x)
    for (Index y = 0; y < t.n; ++y)
      t.table[x][y] = Index(a.mul(x / b.n, y / b.n) * b.n + b.mul(x % b.n, y % b.n));
  return t;
}

// Named families: "c<n>", "d<n>" (order 2n), "s<n>", "v4", and products
// joined by 'x' such as "c2xc3". Raw tables are read by the io layer.
inline GroupTable group_table(const std::string& spec) {
  std::string s;
  for (char c : spec) s += char(std::tolower(static_cast<unsigned char>(c)));
  auto x = s.find('x');
  if (x != std::string::npos) {
    auto t = direct_product(group_table(s.substr(0, x)), group_table(s.substr(x + 1)));
    if (t.n > kGroupBound) throw Error(ErrorKind::TooLarge, "group too large");
    return t;
  }
  if (s == "v4") return direct_product(cyclic_group(2), cyclic_group(2));
  if (s.size() < 2 || !std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(c); }))
    throw Error(ErrorKind::InvalidInput, "unknown group '" + spec + "'");
  std::size_t k = std::stoul(s.substr(1));
  GroupTable t;
  switch (s[0]) {
    case 'c': t = cyclic_group(k); break;
    case 'd': t = dihedral_group(k); break;
    case 's': t = symmetric_group(k); break;
    default: throw Error(ErrorKind::InvalidInput, "unknown group '" + spec + "'");
  }
  if (t.n > kGroupBound) throw Error(ErrorKind::TooLarge, "group too large");
  return t;
}

struct ColorDigraph {
  std::size_t n = 0;
  struct Arc { Index from, to, color; };
  std::vector<Arc> arcs;
  std::size_t colors = 0;

  // Each color class must be a permutation of the vertices.
  bool cayley_property() const {
    for (Index c = 0; c < colors; ++c) {
      std::vector<int> out(n, 0), in(n, 0);
      for (const auto& a : arcs)
        if (a.color == c) {
          ++out[a.from];
          ++in[a.to];
        }
      for (Index v = 0; v < n; ++v)
        if (out[v] != 1 || in[v] != 1) return false;
    }
    return true;
  }
};

inline ColorDigraph cayley_digraph(const GroupTable& g, const std::vector<Index>& gens) {
  auto c = g.closure(gens);
  if (!std::all_of(c.begin(), c.end(), [](bool b) { return b; }))
    throw Error(ErrorKind::NotGenerating, "generators do not generate the group");
  ColorDigraph d;
  d.n = g.n;
  d.colors = gens.size();
  for (Index i = 0; i < gens.size(); ++i)
    for (Index x = 0; x < g.n; ++x) d.arcs.push_back({x, g.mul(x, gens[i]), i});
  return d;
}

// Color-preserving automorphisms of a Cayley color digraph, by encoding each
// arc as a subdivision vertex colored by its arc color.
inline PermGroup color_digraph_automorphisms(const ColorDigraph& d) {
  ColoredDigraph g(d.n + d.arcs.size());
  for (Index v = 0; v < d.n; ++v) g.color[v] = 0;
  for (Index k = 0; k < d.arcs.size(); ++k) {
    Index m = Index(d.n + k);
    g.color[m] = d.arcs[k].color + 1;
    g.add_arc(d.arcs[k].from, m);
    g.add_arc(m, d.arcs[k].to);
  }
  g.finalize();
  auto all = all_isomorphisms(g, g);
  std::vector<Permutation> on_vertices;
  for (auto& p : all) on_vertices.emplace_back(p.begin(), p.begin() + d.n);
  return PermGroup::from_elements(d.n, on_vertices);
}

namespace detail {

inline Graph frucht_with_scale(const GroupTable& g, const std::vector<Index>& gens, Index scale) {
  auto d = cayley_digraph(g, gens);
  Graph gr(g.n);
  auto pendant = [&](Index at, Index len) {
    Index prev = at;
    for (Index k = 0; k < len; ++k) {
      Index v = gr.add_vertex();
      gr.add_edge(prev, v);
      prev = v;
    }
  };
  for (const auto& a : d.arcs) {
    Index u1 = gr.add_vertex(), u2 = gr.add_vertex();
    gr.add_edge(a.from, u1);
    gr.add_edge(u1, u2);
    gr.add_edge(u2, a.to);
    pendant(u1, 2 * a.color + 1 + scale);
    pendant(u2, 2 * a.color + 2 + scale);
  }
  return gr;
}

}  // namespace detail

// Reference oracle: plain backtracking over vertices in BFS order so every
// new vertex has an already mapped neighbor; degrees must match, nothing
// else is refined.
inline PermGroup brute_graph_automorphisms(const Graph& gr) {
  const Index n = gr.size();
  std::vector<Index> order;
  std::vector<bool> seen(n, false);
  for (Index s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    for (std::size_t h = order.size(), k = (order.push_back(s), h); k < order.size(); ++k)
      for (Index w : gr.neighbors(order[k]))
        if (!seen[w]) {
          seen[w] = true;
          order.push_back(w);
        }
  }
  std::vector<Index> pos(n);
  for (Index k = 0; k < n; ++k) pos[order[k]] = k;
  ColoredDigraph d(n);
  for (auto [u, v] : gr.edges()) {
    d.add_arc(pos[u], pos[v]);
    d.add_arc(pos[v], pos[u]);
  }
  for (Index v = 0; v < n; ++v) d.color[pos[v]] = Index(gr.neighbors(v).size());
  d.finalize();
  std::vector<Permutation> perms;
  for (const auto& m : brute_isomorphisms(d, d)) {
    Permutation p(n);
    for (Index k = 0; k < n; ++k) p[order[k]] = order[m[k]];
    perms.push_back(std::move(p));
  }
  return PermGroup::from_elements(n, perms);
}

inline bool graph_realizes(const Graph& gr, const GroupTable& g, std::uint64_t budget = kDefaultBudget) {
  auto aut = graph_automorphisms(gr, budget);
  if (aut.order() != g.n) return false;
  return groups_isomorphic(group_of(aut), g);
}

// Each color-i arc x -> y becomes a path x - u1 - u2 - y with pendant paths
// of lengths 2i+1 and 2i+2 at u1 and u2. Pendant lengths grow by 2 whenever
// certification fails.
inline Graph frucht_graph(const GroupTable& g, std::uint64_t budget = kDefaultBudget) {
  g.validate();
  if (g.n == 1) return Graph(1);
  auto gens = smallest_generating_set(g);
  for (Index scale = 0; scale <= 8; scale += 2) {
    auto gr = detail::frucht_with_scale(g, gens, scale);
    if (graph_realizes(gr, g, budget)) return gr;
  }
  throw Error(ErrorKind::CertificationFailed, "no certified Frucht graph after rescaling");
}

// Smallest graph (by vertices, then edge mask) on at most max_vertices
// vertices whose automorphism group is g; Frucht graph otherwise.
inline Graph graph_for_group(const GroupTable& g, std::size_t max_vertices = 6,
                             std::uint64_t budget = kDefaultBudget) {
  g.validate();
  for (std::size_t v = 1; v <= max_vertices; ++v) {
    std::vector<Pair> slots;
    for (Index a = 0; a < v; ++a)
      for (Index b = a + 1; b < v; ++b) slots.emplace_back(a, b);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << slots.size()); ++mask) {
      Graph gr(v);
      for (std::size_t k = 0; k < slots.size(); ++k)
        if (mask >> k & 1) gr.add_edge(slots[k].first, slots[k].second);
      if (graph_realizes(gr, g, budget)) return gr;
    }
  }
  return frucht_graph(g, budget);
}

}  // namespace latrep
