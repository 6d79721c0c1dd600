#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "construct.hpp"
#include "iso.hpp"
#include "lattice.hpp"

namespace latrep {

// Equivalence on {0..n-1} in canonical form: blocks sorted by least element,
// elements sorted inside blocks.
class Partition {
 public:
  Partition() = default;

  // Any labelling works; equal labels mean same block.
  static Partition from_labels(const std::vector<Index>& label) {
    Partition p;
    const std::size_t n = label.size();
    p.block_of_.assign(n, 0);
    std::map<Index, Index> seen;
    for (Index x = 0; x < n; ++x) {
      auto [it, fresh] = seen.emplace(label[x], Index(p.blocks_.size()));
      if (fresh) p.blocks_.emplace_back();
      p.blocks_[it->second].push_back(x);
      p.block_of_[x] = it->second;
    }
    return p;
  }
  static Partition discrete(std::size_t n) {
    std::vector<Index> l(n);
    std::iota(l.begin(), l.end(), 0);
    return from_labels(l);
  }
  static Partition full(std::size_t n) { return from_labels(std::vector<Index>(n, 0)); }

  std::size_t size() const { return block_of_.size(); }
  std::size_t num_blocks() const { return blocks_.size(); }
  const std::vector<std::vector<Index>>& blocks() const { return blocks_; }
  Index block_of(Index x) const { return block_of_[x]; }
  bool same(Index x, Index y) const { return block_of_[x] == block_of_[y]; }
  bool is_discrete() const { return blocks_.size() == block_of_.size(); }
  bool is_full() const { return blocks_.size() <= 1; }

  // this ⊆ o as relations.
  bool refines(const Partition& o) const {
    for (const auto& b : blocks_)
      for (Index x : b)
        if (!o.same(b.front(), x)) return false;
    return true;
  }

  bool operator==(const Partition& o) const { return blocks_ == o.blocks_; }
  bool operator<(const Partition& o) const { return blocks_ < o.blocks_; }

 private:
  std::vector<std::vector<Index>> blocks_;
  std::vector<Index> block_of_;
};

namespace detail {

struct UnionFind {
  std::vector<Index> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  Index find(Index x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(Index a, Index b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
  Partition partition() {
    std::vector<Index> l(parent.size());
    for (Index x = 0; x < l.size(); ++x) l[x] = find(x);
    return Partition::from_labels(l);
  }
};

}  // namespace detail

// Least congruence containing the given pairs. Every pair that causes a merge
// is pushed through all translations x -> x∨z and x -> x∧z.
inline Partition congruence_closure(const Lattice& l, const std::vector<Pair>& gens) {
  const Index n = l.size();
  detail::UnionFind uf(n);
  std::vector<Pair> work(gens.begin(), gens.end());
  while (!work.empty()) {
    auto [u, v] = work.back();
    work.pop_back();
    if (!uf.unite(u, v)) continue;
    for (Index z = 0; z < n; ++z) {
      work.emplace_back(l.join(u, z), l.join(v, z));
      work.emplace_back(l.meet(u, z), l.meet(v, z));
    }
  }
  return uf.partition();
}

inline Partition principal_congruence(const Lattice& l, Index a, Index b) {
  if (a >= l.size() || b >= l.size()) throw Error(ErrorKind::IndexOutOfRange, "pair outside lattice");
  if (!l.leq(a, b))
    throw Error(ErrorKind::NotComparable, std::to_string(a) + " is not below " + std::to_string(b));
  return congruence_closure(l, {{a, b}});
}

inline bool is_congruence(const Lattice& l, const Partition& p) {
  const Index n = l.size();
  for (Index x = 0; x < n; ++x)
    for (Index y = x + 1; y < n; ++y) {
      if (!p.same(x, y)) continue;
      for (Index z = 0; z < n; ++z)
        if (!p.same(l.join(x, z), l.join(y, z)) || !p.same(l.meet(x, z), l.meet(y, z))) return false;
    }
  return true;
}

inline constexpr std::size_t kCongruenceOracleBound = 14;

// Every congruence, by restricted-growth enumeration of partitions. Each
// compatibility constraint "x~y ⇒ x∨z ~ y∨z" is checked as soon as its four
// elements are all placed, which prunes most of the partition tree.
inline std::vector<Partition> all_congruences(const Lattice& l, std::size_t bound = kCongruenceOracleBound) {
  const Index n = l.size();
  if (n > bound)
    throw Error(ErrorKind::TooLarge, std::to_string(n) + " elements exceeds oracle bound " + std::to_string(bound));
  struct C { Index x, y, r, s; };
  std::vector<std::vector<C>> bucket(n);
  std::set<std::array<Index, 4>> seen;
  for (Index x = 0; x < n; ++x)
    for (Index y = x + 1; y < n; ++y)
      for (Index z = 0; z < n; ++z)
        for (int op = 0; op < 2; ++op) {
          Index r = op ? l.join(x, z) : l.meet(x, z);
          Index s = op ? l.join(y, z) : l.meet(y, z);
          if (r == s) continue;
          if (r > s) std::swap(r, s);
          if (!seen.insert({x, y, r, s}).second) continue;
          bucket[std::max({x, y, r, s})].push_back({x, y, r, s});
        }
  std::vector<Partition> out;
  std::vector<Index> label(n, 0);
  auto rec = [&](auto&& self, Index k, Index used) -> void {
    if (k == n) {
      out.push_back(Partition::from_labels(label));
      return;
    }
    for (Index b = 0; b <= used; ++b) {
      label[k] = b;
      bool ok = true;
      for (const auto& c : bucket[k])
        if (label[c.x] == label[c.y] && label[c.r] != label[c.s]) { ok = false; break; }
      if (ok) self(self, k + 1, b == used ? used + 1 : used);
    }
  };
  if (n > 0) {
    label[0] = 0;
    bool ok = true;
    for (const auto& c : bucket[0]) ok = ok && !(label[c.x] == label[c.y] && label[c.r] != label[c.s]);
    if (ok) rec(rec, 1, 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Congruence structure through the dependency relation on join-irreducibles:
// p D q iff p ≠ q and some meet-irreducible m has p ≤ m*, p ≰ m, q_* ≤ m,
// q ≰ m. Then con(p_*, p) ≤ con(q_*, q) iff q is reachable from p, and a
// congruence is the set of join-irreducibles it collapses. Congruences are
// stored as bitsets over the strongly connected components of D.
class CongruenceStructure {
 public:
  explicit CongruenceStructure(const Lattice& l) : l_(&l) {
    const Index n = l.size();
    jpos_.assign(n, Index(-1));
    for (Index x = 0; x < n; ++x)
      if (l.join_irreducible(x)) {
        jpos_[x] = Index(J_.size());
        J_.push_back(x);
      }
    const Index nj = J_.size();
    jmask_ = Bits(n);
    for (Index j : J_) jmask_.set(j);

    std::vector<Bits> dep(nj, Bits(nj));
    for (Index m = 0; m < n; ++m) {
      if (!l.meet_irreducible(m)) continue;
      Index ms = l.upper_covers(m)[0];
      Bits a(nj);
      for (Index qi = 0; qi < nj; ++qi) {
        Index q = J_[qi];
        if (l.leq(l.lower_covers(q)[0], m) && !l.leq(q, m)) a.set(qi);
      }
      if (a.none()) continue;
      for (Index pi = 0; pi < nj; ++pi) {
        Index p = J_[pi];
        if (l.leq(p, ms) && !l.leq(p, m)) dep[pi] |= a;
      }
    }
    for (Index pi = 0; pi < nj; ++pi) dep[pi].reset(pi);
    tarjan(dep);

    // anc_[c]: components whose congruence lies below that of c.
    const Index nc = ncomp_;
    std::vector<std::vector<Index>> into(nc);
    for (Index pi = 0; pi < nj; ++pi)
      for_each_bit(dep[pi], [&](Index qi) {
        if (comp_[pi] != comp_[qi]) into[comp_[qi]].push_back(comp_[pi]);
      });
    anc_.assign(nc, Bits(nc));
    // Tarjan numbers components in reverse topological order of D, so sources
    // of arcs into c carry larger numbers.
    for (Index c = nc; c-- > 0;) {
      anc_[c].set(c);
      for (Index s : into[c]) anc_[c] |= anc_[s];
    }

    cover_bits_.reserve(l.covers().size());
    for (auto [x, y] : l.covers()) cover_bits_.push_back(interval_bits(x, y));
  }

  const Lattice& lattice() const { return *l_; }
  std::size_t components() const { return ncomp_; }
  const std::vector<Index>& join_irreducibles() const { return J_; }
  Index component_of(Index j) const { return comp_[jpos_[j]]; }
  bool is_simple() const { return l_->size() >= 2 && ncomp_ == 1; }

  Bits empty() const { return Bits(ncomp_); }
  Bits full() const { return Bits(ncomp_).set(); }

  // con(a, b) for a ≤ b.
  Bits interval_bits(Index a, Index b) const {
    Bits r(ncomp_);
    Bits js = l_->poset().down(b) - l_->poset().down(a);
    js &= jmask_;
    for_each_bit(js, [&](Index j) { r |= anc_[comp_[jpos_[j]]]; });
    return r;
  }
  Bits con(Index a, Index b) const {
    if (!l_->leq(a, b))
      throw Error(ErrorKind::NotComparable, std::to_string(a) + " is not below " + std::to_string(b));
    return interval_bits(a, b);
  }
  const Bits& cover_bits(std::size_t cover_index) const { return cover_bits_[cover_index]; }

  Partition partition(const Bits& theta) const {
    detail::UnionFind uf(l_->size());
    const auto& cov = l_->covers();
    for (std::size_t i = 0; i < cov.size(); ++i)
      if (cover_bits_[i].is_subset_of(theta)) uf.unite(cov[i].first, cov[i].second);
    return uf.partition();
  }

  // Distinct con(x, y) over all x ≤ y with a representative pair each, found
  // by extending con(x, y') along a cover y' ≺ y.
  std::vector<std::pair<Bits, Pair>> principal() const {
    const Lattice& l = *l_;
    const Index n = l.size();
    std::map<std::pair<Index, Index>, std::size_t> cover_idx;
    const auto& cov = l.covers();
    for (std::size_t i = 0; i < cov.size(); ++i) cover_idx[cov[i]] = i;
    std::vector<std::vector<std::pair<Index, std::size_t>>> lower(n);
    for (std::size_t i = 0; i < cov.size(); ++i) lower[cov[i].second].emplace_back(cov[i].first, i);

    std::map<Bits, Pair> found;
    found.emplace(empty(), Pair{l.bottom(), l.bottom()});
    std::vector<Bits> row(n, Bits(ncomp_));
    for (Index x = 0; x < n; ++x) {
      const Bits& up = l.poset().up(x);
      row[x].reset();
      for (Index y : l.poset().topo()) {
        if (y == x || !up[y]) continue;
        for (auto [yl, ci] : lower[y])
          if (up[yl]) {
            row[y] = row[yl];
            row[y] |= cover_bits_[ci];
            break;
          }
        found.emplace(row[y], Pair{x, y});
      }
    }
    return {found.begin(), found.end()};
  }

 private:
  void tarjan(const std::vector<Bits>& dep) {
    const Index nj = dep.size();
    comp_.assign(nj, Index(-1));
    std::vector<Index> idx(nj, Index(-1)), low(nj, 0), stack;
    std::vector<bool> on(nj, false);
    Index counter = 0;
    ncomp_ = 0;
    struct Frame { Index v; std::size_t next; };
    for (Index s = 0; s < nj; ++s) {
      if (idx[s] != Index(-1)) continue;
      std::vector<Frame> call{{s, 0}};
      idx[s] = low[s] = counter++;
      stack.push_back(s);
      on[s] = true;
      while (!call.empty()) {
        auto& f = call.back();
        Index v = f.v;
        std::size_t w = f.next == 0 ? dep[v].find_first() : dep[v].find_next(f.next - 1);
        if (w != Bits::npos) {
          f.next = w + 1;
          if (idx[w] == Index(-1)) {
            idx[w] = low[w] = counter++;
            stack.push_back(Index(w));
            on[w] = true;
            call.push_back({Index(w), 0});
          } else if (on[w]) {
            low[v] = std::min(low[v], idx[w]);
          }
          continue;
        }
        if (low[v] == idx[v]) {
          Index u;
          do {
            u = stack.back();
            stack.pop_back();
            on[u] = false;
            comp_[u] = ncomp_;
          } while (u != v);
          ++ncomp_;
        }
        call.pop_back();
        if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      }
    }
  }

  const Lattice* l_;
  std::vector<Index> J_, jpos_, comp_;
  Bits jmask_;
  Index ncomp_ = 0;
  std::vector<Bits> anc_;
  std::vector<Bits> cover_bits_;
};

inline bool is_simple(const Lattice& l) {
  if (l.size() < 2) return false;
  return CongruenceStructure(l).is_simple();
}

// A cover pair whose congruence is not ∇, if any.
inline std::optional<Pair> non_simple_witness(const Lattice& l) {
  CongruenceStructure cs(l);
  const auto& cov = l.covers();
  for (std::size_t i = 0; i < cov.size(); ++i)
    if (!cs.cover_bits(i).all()) return cov[i];
  return std::nullopt;
}

struct PrincipalPoset {
  Poset order;
  std::vector<Pair> reps;
  std::vector<Partition> congruences;
};

inline PrincipalPoset principal_poset(const Lattice& l) {
  CongruenceStructure cs(l);
  auto pr = cs.principal();
  // Sort by size so the Δ comes first and ∇ last.
  std::stable_sort(pr.begin(), pr.end(), [](const auto& a, const auto& b) { return a.first.count() < b.first.count(); });
  PrincipalPoset res;
  std::vector<Pair> rel;
  for (Index i = 0; i < pr.size(); ++i)
    for (Index j = 0; j < pr.size(); ++j)
      if (i != j && pr[i].first.is_subset_of(pr[j].first)) rel.emplace_back(i, j);
  res.order = poset_from_covers(pr.size(), rel);
  for (auto& [b, rep] : pr) {
    res.reps.push_back(rep);
    res.congruences.push_back(cs.partition(b));
  }
  return res;
}

// The same poset computed pair by pair with the direct closure; reference for
// small lattices.
inline PrincipalPoset principal_poset_direct(const Lattice& l) {
  std::map<Partition, Pair> found;
  for (Index x = 0; x < l.size(); ++x)
    for_each_bit(l.poset().up(x), [&](Index y) { found.emplace(principal_congruence(l, x, y), Pair{x, y}); });
  std::vector<std::pair<Partition, Pair>> pr(found.begin(), found.end());
  std::stable_sort(pr.begin(), pr.end(), [](const auto& a, const auto& b) { return a.first.num_blocks() > b.first.num_blocks(); });
  PrincipalPoset res;
  std::vector<Pair> rel;
  for (Index i = 0; i < pr.size(); ++i)
    for (Index j = 0; j < pr.size(); ++j)
      if (i != j && pr[i].first.refines(pr[j].first)) rel.emplace_back(i, j);
  res.order = poset_from_covers(pr.size(), rel);
  for (auto& [p, rep] : pr) {
    res.reps.push_back(rep);
    res.congruences.push_back(p);
  }
  return res;
}

// con(x, lo) = ∇ for every x < lo and con(hi, y) = ∇ for every y > hi.
inline bool check_insertion_precondition(const CongruenceStructure& cs, IntervalRef iv) {
  const Lattice& l = cs.lattice();
  if (!iv.prime_in(l)) throw Error(ErrorKind::NotPrime, "interval is not a covering pair");
  for (Index x : bits_to_vec(l.poset().down(iv.lo)))
    if (x != iv.lo && !cs.interval_bits(x, iv.lo).all()) return false;
  for (Index y : bits_to_vec(l.poset().up(iv.hi)))
    if (y != iv.hi && !cs.interval_bits(iv.hi, y).all()) return false;
  return true;
}

inline bool check_insertion_precondition(const Lattice& l, IntervalRef iv) {
  return check_insertion_precondition(CongruenceStructure(l), iv);
}

// Reflexive transitive relation on {0..h-1}; nu[x][y] means (x, y) ∈ ν.
struct QuasiOrder {
  std::vector<Bits> nu;

  std::size_t size() const { return nu.size(); }
  bool rel(Index x, Index y) const { return nu[x][y]; }

  void validate() const {
    const std::size_t h = nu.size();
    for (Index x = 0; x < h; ++x) {
      if (nu[x].size() != h) throw Error(ErrorKind::InvalidInput, "quasiorder row has wrong width");
      if (!nu[x][x]) throw Error(ErrorKind::InvalidInput, "quasiorder not reflexive at " + std::to_string(x));
      for_each_bit(nu[x], [&](Index y) {
        if (!nu[y].is_subset_of(nu[x]))
          throw Error(ErrorKind::InvalidInput, "quasiorder not transitive through " + std::to_string(y));
      });
    }
  }

  // Reflexive-transitive closure of arbitrary pairs.
  static QuasiOrder generated(std::size_t h, const std::vector<Pair>& pairs) {
    QuasiOrder q;
    q.nu.assign(h, Bits(h));
    for (Index x = 0; x < h; ++x) q.nu[x].set(x);
    for (auto [x, y] : pairs) q.nu[x].set(y);
    for (Index k = 0; k < h; ++k)
      for (Index x = 0; x < h; ++x)
        if (q.nu[x][k]) q.nu[x] |= q.nu[k];
    return q;
  }
};

struct Quotient {
  Poset order;
  std::vector<Index> class_of;
};

// H/Θ_ν ordered by ν/Θ_ν; classes numbered by their least member.
inline Quotient quotient_order(const QuasiOrder& q) {
  q.validate();
  const Index h = q.size();
  Quotient r;
  r.class_of.assign(h, Index(-1));
  std::vector<Index> rep;
  for (Index x = 0; x < h; ++x) {
    if (r.class_of[x] != Index(-1)) continue;
    Index c = rep.size();
    rep.push_back(x);
    for (Index y = x; y < h; ++y)
      if (q.rel(x, y) && q.rel(y, x)) r.class_of[y] = c;
  }
  std::vector<Pair> rel;
  for (Index i = 0; i < rep.size(); ++i)
    for (Index j = 0; j < rep.size(); ++j)
      if (i != j && q.rel(rep[i], rep[j])) rel.emplace_back(i, j);
  r.order = poset_from_covers(rep.size(), rel);
  return r;
}

// Color of every pair x ≤ y of a lattice; absent (-1) off the order.
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(std::size_t n) : n_(n), c_(n * n, Index(-1)) {}
  std::size_t size() const { return n_; }
  Index operator()(Index x, Index y) const { return c_[std::size_t(x) * n_ + y]; }
  void set(Index x, Index y, Index color) { c_[std::size_t(x) * n_ + y] = color; }

  // Extension to L(a, b, K): pairs inside the inserted block take the color
  // of [a, b]; pairs leaving it take the color of the pair through a or b.
  Coloring after_insertion(const Lattice& result, IntervalRef iv, const std::vector<Index>& kmap) const {
    const std::size_t m = result.size();
    Coloring g(m);
    std::vector<bool> inner(m, false);
    for (Index k : kmap)
      if (k != iv.lo && k != iv.hi) inner[k] = true;
    for (Index x = 0; x < m; ++x)
      for_each_bit(result.poset().up(x), [&](Index y) {
        Index c;
        if (x == y) c = 0;
        else if (!inner[x] && !inner[y]) c = (*this)(x, y);
        else if (inner[x] && inner[y]) c = (*this)(iv.lo, iv.hi);
        else if (inner[x]) c = (*this)(iv.lo, y);
        else c = (*this)(x, iv.hi);
        g.set(x, y, c);
      });
    return g;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Index> c_;
};

struct ColoringReport {
  bool ok = false;
  std::string failure;  // "", "C1", "C2", "surjective", "trivial", "Princ"
  Pair witness1{0, 0}, witness2{0, 0};
  std::vector<Index> princ_iso;  // Princ index -> quotient class
};

// (C1) and (C2) together say: (γ(p1), γ(p2)) ∈ ν iff con(p1) ≤ con(p2), for
// all pairs p1, p2. When they hold, Princ L ≅ H/Θ_ν is confirmed as well.
inline ColoringReport check_quasi_coloring(const Lattice& l, const Coloring& g, const QuasiOrder& q) {
  q.validate();
  ColoringReport rep;
  const Index n = l.size();
  if (g.size() != n) throw Error(ErrorKind::InvalidInput, "coloring size differs from lattice");
  CongruenceStructure cs(l);
  std::vector<Pair> pairs;
  std::vector<Bits> con;
  std::vector<bool> hit(q.size(), false);
  for (Index x = 0; x < n; ++x)
    for_each_bit(l.poset().up(x), [&](Index y) {
      Index c = g(x, y);
      if (c >= q.size()) throw Error(ErrorKind::InvalidInput, "pair without a valid color");
      hit[c] = true;
      pairs.emplace_back(x, y);
      con.push_back(cs.interval_bits(x, y));
    });
  for (Index x = 0; x < n; ++x)
    if (g(x, x) != 0) {
      rep.failure = "trivial";
      rep.witness1 = {x, x};
      return rep;
    }
  for (Index c = 0; c < q.size(); ++c)
    if (!hit[c]) {
      rep.failure = "surjective";
      return rep;
    }
  // Group pairs by color; a color class with two different congruences breaks
  // one of the axioms because ν is reflexive.
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      bool in_nu = q.rel(g(pairs[i].first, pairs[i].second), g(pairs[j].first, pairs[j].second));
      bool below = con[i].is_subset_of(con[j]);
      if (in_nu && !below) {
        rep.failure = "C1";
        rep.witness1 = pairs[i];
        rep.witness2 = pairs[j];
        return rep;
      }
      if (below && !in_nu) {
        rep.failure = "C2";
        rep.witness1 = pairs[i];
        rep.witness2 = pairs[j];
        return rep;
      }
    }
  auto pp = principal_poset(l);
  auto quo = quotient_order(q);
  auto iso = poset_isomorphic(pp.order, quo.order);
  if (!iso) {
    rep.failure = "Princ";
    return rep;
  }
  rep.ok = true;
  rep.princ_iso = *iso;
  return rep;
}

}  // namespace latrep
