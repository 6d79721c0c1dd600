#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "bits.hpp"
#include "error.hpp"

namespace latrep {

struct ColoredDigraph {
  std::size_t n = 0;
  std::vector<std::vector<Index>> out, in;
  std::vector<Index> color;

  explicit ColoredDigraph(std::size_t n_ = 0) : n(n_), out(n_), in(n_), color(n_, 0) {}

  void add_arc(Index u, Index v) {
    out[u].push_back(v);
    in[v].push_back(u);
  }
  void finalize() {
    for (auto& o : out) std::sort(o.begin(), o.end());
    for (auto& i : in) std::sort(i.begin(), i.end());
  }
  bool has_arc(Index u, Index v) const { return std::binary_search(out[u].begin(), out[u].end(), v); }
  std::size_t arcs() const {
    std::size_t a = 0;
    for (const auto& o : out) a += o.size();
    return a;
  }
};

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

namespace detail {

// Individualization-refinement over the disjoint union A ⊔ B. Colors are
// renumbered canonically from sorted signatures, so equal colors on the two
// sides always mean the same thing.
class IsoSearch {
 public:
  IsoSearch(const ColoredDigraph& a, const ColoredDigraph& b, std::uint64_t budget)
      : a_(a), b_(b), n_(a.n), budget_(budget) {}

  std::vector<std::vector<Index>> run(bool all) {
    all_ = all;
    found_.clear();
    if (a_.n != b_.n || a_.arcs() != b_.arcs()) return found_;
    std::vector<Index> col(2 * n_);
    for (Index v = 0; v < n_; ++v) {
      col[v] = a_.color[v];
      col[n_ + v] = b_.color[v];
    }
    recurse(col);
    return found_;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  const std::vector<Index>& out(Index v) const { return v < n_ ? a_.out[v] : b_.out[v - n_]; }
  const std::vector<Index>& in(Index v) const { return v < n_ ? a_.in[v] : b_.in[v - n_]; }

  // Returns false when the two sides stop being balanced.
  bool refine(std::vector<Index>& col) const {
    const std::size_t m = 2 * n_;
    const Index off_a = 0;
    std::vector<std::vector<Index>> sig(m);
    std::vector<Index> order(m);
    std::size_t classes = 0;
    {
      std::vector<Index> c = col;
      std::sort(c.begin(), c.end());
      classes = std::unique(c.begin(), c.end()) - c.begin();
    }
    for (;;) {
      for (Index v = 0; v < m; ++v) {
        auto& s = sig[v];
        s.clear();
        s.push_back(col[v]);
        Index base = v < n_ ? off_a : Index(n_);
        std::size_t start = s.size();
        for (Index w : out(v)) s.push_back(col[w + base]);
        std::sort(s.begin() + start, s.end());
        s.push_back(Index(-1));
        start = s.size();
        for (Index w : in(v)) s.push_back(col[w + base]);
        std::sort(s.begin() + start, s.end());
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](Index x, Index y) { return sig[x] < sig[y]; });
      std::vector<Index> nc(m);
      Index id = 0;
      for (std::size_t k = 0; k < m; ++k) {
        if (k > 0 && sig[order[k]] != sig[order[k - 1]]) ++id;
        nc[order[k]] = id;
      }
      col.swap(nc);
      std::size_t now = m ? std::size_t(id) + 1 : 0;
      if (!balanced(col, now)) return false;
      if (now == classes) return true;
      classes = now;
    }
  }

  bool balanced(const std::vector<Index>& col, std::size_t classes) const {
    std::vector<std::int64_t> cnt(classes, 0);
    for (Index v = 0; v < n_; ++v) ++cnt[col[v]];
    for (Index v = 0; v < n_; ++v) --cnt[col[n_ + v]];
    for (auto c : cnt)
      if (c != 0) return false;
    return true;
  }

  void recurse(std::vector<Index>& col) {
    if (++nodes_ > budget_) throw Error(ErrorKind::BudgetExceeded, "search exceeded node budget");
    if (!refine(col)) return;
    Index classes = *std::max_element(col.begin(), col.end()) + 1;
    std::vector<Index> cnt(classes, 0);
    for (Index v = 0; v < n_; ++v) ++cnt[col[v]];
    Index cell = Index(-1);
    for (Index c = 0; c < classes; ++c)
      if (cnt[c] > 1 && (cell == Index(-1) || cnt[c] < cnt[cell])) cell = c;
    if (cell == Index(-1)) {
      std::vector<Index> byc(classes), map(n_);
      for (Index w = 0; w < n_; ++w) byc[col[n_ + w]] = w;
      for (Index v = 0; v < n_; ++v) map[v] = byc[col[v]];
      if (verify(map)) found_.push_back(std::move(map));
      return;
    }
    Index v = 0;
    while (col[v] != cell) ++v;
    for (Index w = 0; w < n_; ++w) {
      if (col[n_ + w] != cell) continue;
      std::vector<Index> next = col;
      next[v] = next[n_ + w] = classes;
      recurse(next);
      if (!all_ && !found_.empty()) return;
    }
  }

  bool verify(const std::vector<Index>& map) const {
    for (Index v = 0; v < n_; ++v) {
      if (a_.color[v] != b_.color[map[v]]) return false;
      for (Index w : a_.out[v])
        if (!b_.has_arc(map[v], map[w])) return false;
    }
    return true;
  }

  const ColoredDigraph& a_;
  const ColoredDigraph& b_;
  std::size_t n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool all_ = false;
  std::vector<std::vector<Index>> found_;
};

}  // namespace detail

inline std::optional<std::vector<Index>> find_isomorphism(const ColoredDigraph& a, const ColoredDigraph& b,
                                                          std::uint64_t budget = kDefaultBudget) {
  detail::IsoSearch s(a, b, budget);
  auto r = s.run(false);
  if (r.empty()) return std::nullopt;
  return r.front();
}

inline std::vector<std::vector<Index>> all_isomorphisms(const ColoredDigraph& a, const ColoredDigraph& b,
                                                        std::uint64_t budget = kDefaultBudget) {
  detail::IsoSearch s(a, b, budget);
  auto r = s.run(true);
  std::sort(r.begin(), r.end());
  return r;
}

// Plain backtracking with no pruning beyond partial adjacency; reference
// oracle for the refined search on tiny inputs.
inline std::vector<std::vector<Index>> brute_isomorphisms(const ColoredDigraph& a, const ColoredDigraph& b) {
  std::vector<std::vector<Index>> res;
  if (a.n != b.n) return res;
  const std::size_t n = a.n;
  std::vector<Index> map(n);
  std::vector<bool> used(n, false);
  auto ok = [&](Index v) {
    for (Index u = 0; u <= v; ++u) {
      if (a.has_arc(u, v) != b.has_arc(map[u], map[v])) return false;
      if (a.has_arc(v, u) != b.has_arc(map[v], map[u])) return false;
    }
    return a.color[v] == b.color[map[v]];
  };
  auto rec = [&](auto&& self, Index v) -> void {
    if (v == n) { res.push_back(map); return; }
    for (Index w = 0; w < n; ++w) {
      if (used[w]) continue;
      map[v] = w;
      used[w] = true;
      if (ok(v)) self(self, v + 1);
      used[w] = false;
    }
  };
  rec(rec, 0);
  return res;
}

}  // namespace latrep
