#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "bits.hpp"
#include "error.hpp"
#include "search.hpp"

namespace latrep {

// Simple undirected graph; edges stored as sorted pairs (u < v).
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : n_(n), adj_(n) {}

  std::size_t size() const { return n_; }
  const std::vector<Pair>& edges() const { return edges_; }
  const std::vector<Index>& neighbors(Index v) const { return adj_[v]; }
  bool adjacent(Index u, Index v) const { return std::binary_search(adj_[u].begin(), adj_[u].end(), v); }

  void add_edge(Index u, Index v) {
    if (u >= n_ || v >= n_) throw Error(ErrorKind::IndexOutOfRange, "edge endpoint outside graph");
    if (u == v) throw Error(ErrorKind::InvalidInput, "loop at " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (adjacent(u, v)) throw Error(ErrorKind::InvalidInput, "repeated edge");
    edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), Pair{u, v}), Pair{u, v});
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  }

  Index add_vertex() {
    adj_.emplace_back();
    return Index(n_++);
  }

  ColoredDigraph digraph() const {
    ColoredDigraph g(n_);
    for (auto [u, v] : edges_) {
      g.add_arc(u, v);
      g.add_arc(v, u);
    }
    g.finalize();
    return g;
  }

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  std::size_t n_ = 0;
  std::vector<Pair> edges_;
  std::vector<std::vector<Index>> adj_;
};

inline Graph graph_from_edges(std::size_t n, const std::vector<Pair>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

}  // namespace latrep
