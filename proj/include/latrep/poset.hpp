#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "error.hpp"

namespace latrep {

// Finite strict order stored as its cover relation. Reachability (up/down
// sets) is derived once at construction and never mutated afterwards.
class Poset {
 public:
  Poset() = default;

  std::size_t size() const { return n_; }
  const std::vector<Pair>& covers() const { return covers_; }
  const std::vector<Index>& upper_covers(Index x) const { return upper_[x]; }
  const std::vector<Index>& lower_covers(Index x) const { return lower_[x]; }

  bool leq(Index x, Index y) const { return up_[x][y]; }
  bool lt(Index x, Index y) const { return x != y && up_[x][y]; }
  bool comparable(Index x, Index y) const { return up_[x][y] || up_[y][x]; }
  bool covers_pair(Index x, Index y) const {
    const auto& u = upper_[x];
    return std::binary_search(u.begin(), u.end(), y);
  }

  const Bits& up(Index x) const { return up_[x]; }
  const Bits& down(Index x) const { return down_[x]; }

  // Linear extension, minimal elements first.
  const std::vector<Index>& topo() const { return topo_; }

  std::vector<Index> minimal() const {
    std::vector<Index> r;
    for (Index x = 0; x < n_; ++x)
      if (lower_[x].empty()) r.push_back(x);
    return r;
  }
  std::vector<Index> maximal() const {
    std::vector<Index> r;
    for (Index x = 0; x < n_; ++x)
      if (upper_[x].empty()) r.push_back(x);
    return r;
  }

  std::size_t comparable_pairs() const {
    std::size_t c = 0;
    for (const auto& b : up_) c += b.count();
    return c;
  }

  Poset dual() const {
    Poset d;
    d.n_ = n_;
    d.upper_ = lower_;
    d.lower_ = upper_;
    d.up_ = down_;
    d.down_ = up_;
    d.topo_.assign(topo_.rbegin(), topo_.rend());
    d.covers_.reserve(covers_.size());
    for (auto [x, y] : covers_) d.covers_.emplace_back(y, x);
    std::sort(d.covers_.begin(), d.covers_.end());
    return d;
  }

  bool operator==(const Poset& o) const { return n_ == o.n_ && covers_ == o.covers_; }

  friend Poset poset_from_covers(std::size_t n, const std::vector<Pair>& covers);

 private:
  std::size_t n_ = 0;
  std::vector<Pair> covers_;
  std::vector<std::vector<Index>> upper_, lower_;
  std::vector<Bits> up_, down_;
  std::vector<Index> topo_;
};

// Accepts any acyclic relation and keeps only its transitive reduction.
inline Poset poset_from_covers(std::size_t n, const std::vector<Pair>& covers) {
  std::vector<std::vector<Index>> succ(n);
  for (auto [x, y] : covers) {
    if (x >= n || y >= n)
      throw Error(ErrorKind::IndexOutOfRange,
                  "cover (" + std::to_string(x) + "," + std::to_string(y) + ") with n=" + std::to_string(n));
    if (x == y) throw Error(ErrorKind::CycleDetected, "loop at " + std::to_string(x));
    succ[x].push_back(y);
  }
  for (auto& s : succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }

  std::vector<Index> indeg(n, 0);
  for (const auto& s : succ)
    for (Index y : s) ++indeg[y];
  std::vector<Index> topo;
  topo.reserve(n);
  for (Index x = 0; x < n; ++x)
    if (indeg[x] == 0) topo.push_back(x);
  for (std::size_t h = 0; h < topo.size(); ++h)
    for (Index y : succ[topo[h]])
      if (--indeg[y] == 0) topo.push_back(y);
  if (topo.size() != n) {
    Index w = 0;
    while (indeg[w] == 0) ++w;
    throw Error(ErrorKind::CycleDetected, "element " + std::to_string(w) + " lies on a cycle");
  }

  Poset p;
  p.n_ = n;
  p.topo_ = std::move(topo);
  p.up_.assign(n, Bits(n));
  for (auto it = p.topo_.rbegin(); it != p.topo_.rend(); ++it) {
    Index x = *it;
    p.up_[x].set(x);
    for (Index y : succ[x]) p.up_[x] |= p.up_[y];
  }
  p.upper_.assign(n, {});
  p.lower_.assign(n, {});
  for (Index x = 0; x < n; ++x) {
    for (Index y : succ[x]) {
      bool redundant = false;
      for (Index z : succ[x])
        if (z != y && p.up_[z][y]) { redundant = true; break; }
      if (!redundant) {
        p.upper_[x].push_back(y);
        p.lower_[y].push_back(x);
        p.covers_.emplace_back(x, y);
      }
    }
  }
  for (auto& l : p.lower_) std::sort(l.begin(), l.end());
  std::sort(p.covers_.begin(), p.covers_.end());
  p.down_.assign(n, Bits(n));
  for (Index x = 0; x < n; ++x)
    for_each_bit(p.up_[x], [&](Index y) { p.down_[y].set(x); });
  return p;
}

// Sub-poset induced on `keep` (in the given order); cover relation recomputed.
inline Poset induced(const Poset& p, const std::vector<Index>& keep) {
  std::vector<Pair> rel;
  for (Index i = 0; i < keep.size(); ++i)
    for (Index j = 0; j < keep.size(); ++j)
      if (i != j && p.leq(keep[i], keep[j])) rel.emplace_back(i, j);
  return poset_from_covers(keep.size(), rel);
}

}  // namespace latrep
