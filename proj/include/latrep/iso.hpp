#pragma once

#include <optional>
#include <vector>

#include "lattice.hpp"
#include "search.hpp"

namespace latrep {

inline ColoredDigraph cover_digraph(const Poset& p, bool reversed = false) {
  ColoredDigraph g(p.size());
  for (auto [x, y] : p.covers()) reversed ? g.add_arc(y, x) : g.add_arc(x, y);
  g.finalize();
  return g;
}

// Order isomorphism p -> q (covers determine the order, so matching cover
// digraphs is enough).
inline std::optional<std::vector<Index>> poset_isomorphic(const Poset& p, const Poset& q,
                                                          std::uint64_t budget = kDefaultBudget) {
  if (p.size() != q.size() || p.covers().size() != q.covers().size()) return std::nullopt;
  return find_isomorphism(cover_digraph(p), cover_digraph(q), budget);
}

inline std::optional<std::vector<Index>> lattice_isomorphic(const Lattice& a, const Lattice& b,
                                                            std::uint64_t budget = kDefaultBudget) {
  return poset_isomorphic(a.poset(), b.poset(), budget);
}

inline bool is_order_isomorphism(const Poset& p, const Poset& q, const std::vector<Index>& f) {
  if (f.size() != p.size() || p.size() != q.size()) return false;
  std::vector<bool> hit(q.size(), false);
  for (Index x : f) {
    if (x >= q.size() || hit[x]) return false;
    hit[x] = true;
  }
  for (Index x = 0; x < p.size(); ++x)
    for (Index y = 0; y < p.size(); ++y)
      if (p.leq(x, y) != q.leq(f[x], f[y])) return false;
  return true;
}

}  // namespace latrep
