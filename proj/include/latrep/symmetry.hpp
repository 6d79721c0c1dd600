#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "graph.hpp"
#include "iso.hpp"
#include "lattice.hpp"

namespace latrep {

using Permutation = std::vector<Index>;

inline Permutation identity_perm(std::size_t n) {
  Permutation p(n);
  for (Index i = 0; i < n; ++i) p[i] = i;
  return p;
}

// (p ∘ q)(x) = p(q(x)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(q.size());
  for (Index i = 0; i < q.size(); ++i) r[i] = p[q[i]];
  return r;
}

inline Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (Index i = 0; i < p.size(); ++i) r[p[i]] = i;
  return r;
}

inline bool is_permutation(const Permutation& p) {
  std::vector<bool> hit(p.size(), false);
  for (Index x : p) {
    if (x >= p.size() || hit[x]) return false;
    hit[x] = true;
  }
  return true;
}

// Explicit list of permutations, identity first, plus a generating subset.
class PermGroup {
 public:
  PermGroup() = default;

  // Closes the given permutations under composition.
  static PermGroup generated_by(std::size_t degree, const std::vector<Permutation>& gens) {
    PermGroup g;
    g.degree_ = degree;
    std::set<Permutation> seen{identity_perm(degree)};
    std::vector<Permutation> frontier{identity_perm(degree)};
    for (const auto& s : gens)
      if (!is_permutation(s) || s.size() != degree) throw Error(ErrorKind::InvalidInput, "not a permutation");
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (const auto& x : frontier)
        for (const auto& s : gens) {
          auto y = compose(x, s);
          if (seen.insert(y).second) next.push_back(std::move(y));
        }
      frontier.swap(next);
    }
    g.elements_.assign(seen.begin(), seen.end());
    g.order_identity_first();
    g.pick_generators();
    return g;
  }

  // The list must already be a group; checked.
  static PermGroup from_elements(std::size_t degree, std::vector<Permutation> elems) {
    PermGroup g;
    g.degree_ = degree;
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    g.elements_ = std::move(elems);
    std::set<Permutation> s(g.elements_.begin(), g.elements_.end());
    if (!s.count(identity_perm(degree))) throw Error(ErrorKind::InvalidInput, "identity missing");
    for (const auto& a : g.elements_)
      for (const auto& b : g.elements_)
        if (!s.count(compose(a, b))) throw Error(ErrorKind::InvalidInput, "not closed under composition");
    g.order_identity_first();
    g.pick_generators();
    return g;
  }

  std::size_t order() const { return elements_.size(); }
  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return gens_; }

 private:
  void order_identity_first() {
    auto id = identity_perm(degree_);
    auto it = std::find(elements_.begin(), elements_.end(), id);
    std::rotate(elements_.begin(), it, it + 1);
    std::sort(elements_.begin() + 1, elements_.end());
  }
  void pick_generators() {
    gens_.clear();
    std::set<Permutation> span{identity_perm(degree_)};
    for (const auto& e : elements_) {
      if (span.count(e)) continue;
      gens_.push_back(e);
      span = generated_by_set(gens_);
    }
  }
  std::set<Permutation> generated_by_set(const std::vector<Permutation>& gens) const {
    std::set<Permutation> seen{identity_perm(degree_)};
    std::vector<Permutation> frontier{identity_perm(degree_)};
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (const auto& x : frontier)
        for (const auto& s : gens) {
          auto y = compose(x, s);
          if (seen.insert(y).second) next.push_back(std::move(y));
        }
      frontier.swap(next);
    }
    return seen;
  }

  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::vector<Permutation> gens_;
};

// Cayley table of a finite group, identity at index 0; table[i][j] = i·j.
struct GroupTable {
  std::size_t n = 0;
  std::vector<std::vector<Index>> table;

  Index mul(Index a, Index b) const { return table[a][b]; }

  void validate() const {
    if (n == 0 || table.size() != n) throw Error(ErrorKind::InvalidTable, "table size mismatch");
    for (const auto& row : table) {
      if (row.size() != n) throw Error(ErrorKind::InvalidTable, "ragged table");
      for (Index x : row)
        if (x >= n) throw Error(ErrorKind::InvalidTable, "entry out of range");
    }
    for (Index a = 0; a < n; ++a)
      if (table[0][a] != a || table[a][0] != a) throw Error(ErrorKind::InvalidTable, "0 is not the identity");
    for (Index a = 0; a < n; ++a) {
      bool inv = false;
      for (Index b = 0; b < n; ++b) inv = inv || (table[a][b] == 0 && table[b][a] == 0);
      if (!inv) throw Error(ErrorKind::InvalidTable, "element " + std::to_string(a) + " has no inverse");
    }
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        for (Index c = 0; c < n; ++c)
          if (table[table[a][b]][c] != table[a][table[b][c]])
            throw Error(ErrorKind::InvalidTable, "not associative");
  }

  Index element_order(Index a) const {
    Index k = 1;
    for (Index x = a; x != 0; x = table[x][a]) ++k;
    return k;
  }

  std::vector<Index> order_profile() const {
    std::vector<Index> p;
    for (Index a = 0; a < n; ++a) p.push_back(element_order(a));
    std::sort(p.begin(), p.end());
    return p;
  }

  bool is_abelian() const {
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        if (table[a][b] != table[b][a]) return false;
    return true;
  }

  // Subgroup generated by gens, as a membership mask.
  std::vector<bool> closure(const std::vector<Index>& gens) const {
    std::vector<bool> in(n, false);
    std::vector<Index> stack{0};
    in[0] = true;
    while (!stack.empty()) {
      Index x = stack.back();
      stack.pop_back();
      for (Index g : gens) {
        Index y = table[x][g];
        if (!in[y]) {
          in[y] = true;
          stack.push_back(y);
        }
      }
    }
    return in;
  }
};

inline constexpr std::size_t kGroupBound = 64;

inline GroupTable group_of(const PermGroup& pg) {
  if (pg.order() > kGroupBound) throw Error(ErrorKind::TooLarge, "group larger than " + std::to_string(kGroupBound));
  const auto& el = pg.elements();
  std::map<Permutation, Index> pos;
  for (Index i = 0; i < el.size(); ++i) pos[el[i]] = i;
  GroupTable t;
  t.n = el.size();
  t.table.assign(t.n, std::vector<Index>(t.n));
  for (Index i = 0; i < t.n; ++i)
    for (Index j = 0; j < t.n; ++j) t.table[i][j] = pos.at(compose(el[i], el[j]));
  return t;
}

// Shortest generating set by increasing size; ties broken lexicographically.
inline std::vector<Index> smallest_generating_set(const GroupTable& g) {
  if (g.n == 1) return {};
  for (std::size_t k = 1; k <= g.n; ++k) {
    std::vector<Index> pick;
    std::optional<std::vector<Index>> hit;
    auto rec = [&](auto&& self, Index from) -> void {
      if (hit) return;
      if (pick.size() == k) {
        auto c = g.closure(pick);
        if (std::all_of(c.begin(), c.end(), [](bool b) { return b; })) hit = pick;
        return;
      }
      for (Index x = from; x < g.n; ++x) {
        pick.push_back(x);
        self(self, x + 1);
        pick.pop_back();
      }
    };
    rec(rec, 1);
    if (hit) return *hit;
  }
  throw Error(ErrorKind::NotGenerating, "no generating set");
}

// Isomorphism a -> b: generators of a are sent to same-order elements of b
// and the map is extended along words; accepted only if it is a bijective
// homomorphism.
inline std::optional<std::vector<Index>> group_isomorphism(const GroupTable& a, const GroupTable& b) {
  if (a.n > kGroupBound || b.n > kGroupBound) throw Error(ErrorKind::TooLarge, "group too large");
  if (a.n != b.n || a.order_profile() != b.order_profile()) return std::nullopt;
  if (a.is_abelian() != b.is_abelian()) return std::nullopt;
  auto gens = smallest_generating_set(a);
  std::vector<Index> img(gens.size());
  std::optional<std::vector<Index>> res;
  auto extend = [&]() -> std::optional<std::vector<Index>> {
    std::vector<Index> f(a.n, Index(-1));
    f[0] = 0;
    std::vector<Index> queue{0};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      Index x = queue[h];
      for (std::size_t k = 0; k < gens.size(); ++k) {
        Index y = a.mul(x, gens[k]);
        Index fy = b.mul(f[x], img[k]);
        if (f[y] == Index(-1)) {
          f[y] = fy;
          queue.push_back(y);
        } else if (f[y] != fy) {
          return std::nullopt;
        }
      }
    }
    std::vector<bool> hit(b.n, false);
    for (Index v : f) {
      if (v == Index(-1) || hit[v]) return std::nullopt;
      hit[v] = true;
    }
    for (Index x = 0; x < a.n; ++x)
      for (Index y = 0; y < a.n; ++y)
        if (f[a.mul(x, y)] != b.mul(f[x], f[y])) return std::nullopt;
    return f;
  };
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (res) return;
    if (k == gens.size()) {
      res = extend();
      return;
    }
    Index want = a.element_order(gens[k]);
    for (Index y = 0; y < b.n; ++y) {
      if (b.element_order(y) != want) continue;
      img[k] = y;
      self(self, k + 1);
      if (res) return;
    }
  };
  rec(rec, 0);
  return res;
}

inline bool groups_isomorphic(const GroupTable& a, const GroupTable& b) { return group_isomorphism(a, b).has_value(); }

inline PermGroup lattice_automorphisms(const Lattice& l, std::uint64_t budget = kDefaultBudget) {
  auto g = cover_digraph(l.poset());
  return PermGroup::from_elements(l.size(), all_isomorphisms(g, g, budget));
}

inline PermGroup poset_automorphisms(const Poset& p, std::uint64_t budget = kDefaultBudget) {
  auto g = cover_digraph(p);
  return PermGroup::from_elements(p.size(), all_isomorphisms(g, g, budget));
}

inline PermGroup graph_automorphisms(const Graph& gr, std::uint64_t budget = kDefaultBudget) {
  auto g = gr.digraph();
  return PermGroup::from_elements(gr.size(), all_isomorphisms(g, g, budget));
}

inline bool is_rigid(const Lattice& l, std::uint64_t budget = kDefaultBudget) {
  return lattice_automorphisms(l, budget).order() == 1;
}

// An order-reversing bijection of l onto itself.
inline std::optional<Permutation> is_selfdual(const Lattice& l, std::uint64_t budget = kDefaultBudget) {
  return find_isomorphism(cover_digraph(l.poset()), cover_digraph(l.poset(), true), budget);
}

inline bool is_automorphism(const Lattice& l, const Permutation& p) {
  if (p.size() != l.size() || !is_permutation(p)) return false;
  for (auto [x, y] : l.covers())
    if (!l.covers_pair(p[x], p[y])) return false;
  return true;
}

inline bool is_anti_automorphism(const Lattice& l, const Permutation& p) {
  if (p.size() != l.size() || !is_permutation(p)) return false;
  for (auto [x, y] : l.covers())
    if (!l.covers_pair(p[y], p[x])) return false;
  return true;
}

}  // namespace latrep
