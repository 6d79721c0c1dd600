#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "poset.hpp"

namespace latrep {

class Lattice {
 public:
  Lattice() = default;

  const Poset& poset() const { return p_; }
  std::size_t size() const { return p_.size(); }
  Index bottom() const { return bottom_; }
  Index top() const { return top_; }

  Index meet(Index x, Index y) const { return meet_[std::size_t(x) * size() + y]; }
  Index join(Index x, Index y) const { return join_[std::size_t(x) * size() + y]; }
  bool leq(Index x, Index y) const { return p_.leq(x, y); }
  bool lt(Index x, Index y) const { return p_.lt(x, y); }
  bool covers_pair(Index x, Index y) const { return p_.covers_pair(x, y); }
  const std::vector<Pair>& covers() const { return p_.covers(); }
  const std::vector<Index>& upper_covers(Index x) const { return p_.upper_covers(x); }
  const std::vector<Index>& lower_covers(Index x) const { return p_.lower_covers(x); }

  // Longest chain from the bottom to x, and from x to the top.
  Index height(Index x) const { return height_[x]; }
  Index depth(Index x) const { return depth_[x]; }
  Index length() const { return height_[top_]; }

  bool is_ranked() const {
    std::vector<Index> shortest(size(), 0);
    for (Index x : p_.topo()) {
      if (x == bottom_) continue;
      Index best = Index(-1);
      for (Index y : p_.lower_covers(x)) best = std::min(best, shortest[y] + 1);
      shortest[x] = best;
    }
    return shortest[top_] == height_[top_];
  }

  bool join_irreducible(Index x) const { return p_.lower_covers(x).size() == 1; }
  bool meet_irreducible(Index x) const { return p_.upper_covers(x).size() == 1; }

  Lattice dual() const {
    Lattice d;
    d.p_ = p_.dual();
    d.meet_ = join_;
    d.join_ = meet_;
    d.bottom_ = top_;
    d.top_ = bottom_;
    d.height_ = depth_;
    d.depth_ = height_;
    return d;
  }

  bool operator==(const Lattice& o) const {
    return p_ == o.p_ && bottom_ == o.bottom_ && top_ == o.top_ && meet_ == o.meet_ && join_ == o.join_;
  }

  friend Lattice as_lattice(Poset p);

 private:
  Poset p_;
  std::vector<Index> meet_, join_;
  Index bottom_ = 0, top_ = 0;
  std::vector<Index> height_, depth_;
};

namespace detail {

// Fill the join table row by row, highest elements first. For x, y
// incomparable every upper bound of {x, y} lies above some upper cover y' of
// y, so the least upper bound is the least of join(x, y') over those covers.
inline void fill_joins(const Poset& p, std::vector<Index>& tab, bool dual_names) {
  const std::size_t n = p.size();
  tab.assign(n * n, 0);
  const auto& topo = p.topo();
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    Index y = *it;
    Index* row = &tab[std::size_t(y) * n];
    for (Index x = 0; x < n; ++x) {
      if (p.leq(x, y)) { row[x] = y; continue; }
      if (p.leq(y, x)) { row[x] = x; continue; }
      const auto& ups = p.upper_covers(y);
      Index best = tab[std::size_t(ups[0]) * n + x];
      for (std::size_t k = 1; k < ups.size(); ++k) {
        Index c = tab[std::size_t(ups[k]) * n + x];
        if (p.leq(c, best)) best = c;
      }
      for (Index yy : ups) {
        Index c = tab[std::size_t(yy) * n + x];
        if (!p.leq(best, c))
          throw Error(ErrorKind::NotALattice,
                      std::string(dual_names ? "meet" : "join") + " of " + std::to_string(x) + " and " +
                          std::to_string(y) + " does not exist (bounds " + std::to_string(best) + ", " +
                          std::to_string(c) + " incomparable)");
      }
      row[x] = best;
    }
  }
}

inline std::vector<Index> longest_from(const Poset& p, bool upward) {
  std::vector<Index> h(p.size(), 0);
  const auto& topo = p.topo();
  if (upward) {
    for (Index x : topo)
      for (Index y : p.lower_covers(x)) h[x] = std::max(h[x], h[y] + 1);
  } else {
    for (auto it = topo.rbegin(); it != topo.rend(); ++it)
      for (Index y : p.upper_covers(*it)) h[*it] = std::max(h[*it], h[y] + 1);
  }
  return h;
}

}  // namespace detail

inline Lattice as_lattice(Poset p) {
  if (p.size() == 0) throw Error(ErrorKind::Unbounded, "empty poset");
  auto mins = p.minimal(), maxs = p.maximal();
  if (mins.size() != 1 || maxs.size() != 1)
    throw Error(ErrorKind::Unbounded, std::to_string(mins.size()) + " minimal and " +
                                          std::to_string(maxs.size()) + " maximal elements");
  Lattice l;
  l.bottom_ = mins[0];
  l.top_ = maxs[0];
  detail::fill_joins(p, l.join_, false);
  Poset d = p.dual();
  detail::fill_joins(d, l.meet_, true);
  l.height_ = detail::longest_from(p, true);
  l.depth_ = detail::longest_from(p, false);
  l.p_ = std::move(p);
  return l;
}

inline Lattice lattice_from_covers(std::size_t n, const std::vector<Pair>& covers) {
  return as_lattice(poset_from_covers(n, covers));
}

inline Lattice dual(const Lattice& l) { return l.dual(); }
inline Index length(const Lattice& l) { return l.length(); }
inline bool is_ranked(const Lattice& l) { return l.is_ranked(); }

// A lattice together with where the pieces it was built from ended up.
struct Built {
  Lattice lattice;
  std::vector<std::vector<Index>> maps;
};

// Interval [lo, hi] as a lattice; map[i] is the host index of element i.
inline Built interval(const Lattice& l, Index lo, Index hi) {
  if (!l.leq(lo, hi)) throw Error(ErrorKind::NotComparable, "interval bounds not ordered");
  Bits in = l.poset().up(lo) & l.poset().down(hi);
  std::vector<Index> elems = bits_to_vec(in);
  std::vector<Index> pos(l.size(), Index(-1));
  for (Index i = 0; i < elems.size(); ++i) pos[elems[i]] = i;
  std::vector<Pair> cov;
  for (Index x : elems)
    for (Index y : l.upper_covers(x))
      if (in[y]) cov.emplace_back(pos[x], pos[y]);
  return {lattice_from_covers(elems.size(), cov), {elems}};
}

}  // namespace latrep
