#pragma once

#include <random>
#include <string>
#include <vector>

#include "latrep/latrep.hpp"

namespace latrep::fixtures {

// All lattices on at most 7 elements plus standard and glued samples, each
// with at most 12 elements.
inline std::vector<Lattice> oracle_corpus() {
  std::vector<Lattice> c;
  for (std::size_t n = 1; n <= 7; ++n)
    for (auto& l : all_lattices(n)) c.push_back(std::move(l));
  c.push_back(n5());
  c.push_back(m3());
  c.push_back(boolean_lattice(3));
  for (std::size_t k = 8; k <= 12; ++k) c.push_back(chain(k));
  c.push_back(insert_into_prime_interval(n5(), {1, 2}, m3()).lattice);
  c.push_back(insert_into_prime_interval(m3(), {0, 1}, n5()).lattice);
  c.push_back(zero_one_sum({n5(), chain(4), m3()}).lattice);
  c.push_back(glue_hall_dilworth(boolean_lattice(3), n5(), {3, 1, {{3, 0}, {7, 1}}}).lattice);
  return c;
}

// Least member of all_congruences containing (a, b) equals con(a, b) for
// every comparable pair. Returns a description of the first mismatch.
inline std::string least_member_mismatch(const Lattice& l) {
  auto all = all_congruences(l);
  for (Index a = 0; a < l.size(); ++a)
    for (Index b : bits_to_vec(l.poset().up(a))) {
      const Partition* least = nullptr;
      for (const auto& p : all)
        if (p.same(a, b) && (!least || p.refines(*least))) least = &p;
      if (!least || !(*least == principal_congruence(l, a, b))) return "con" + pair_str(Pair{a, b});
    }
  return {};
}

struct ColoredExample {
  std::string name;
  Lattice lattice;
  Coloring coloring;
  QuasiOrder nu;
};

inline Coloring coloring_from(std::size_t n, const std::vector<std::tuple<Index, Index, Index>>& pairs) {
  Coloring g(n);
  for (Index x = 0; x < n; ++x) g.set(x, x, 0);
  for (auto [x, y, c] : pairs) g.set(x, y, c);
  return g;
}

// Hand-built quasi-colorings with their principal-congruence posets.
inline std::vector<ColoredExample> quasi_colored_examples() {
  std::vector<ColoredExample> r;
  r.push_back({"2-chain", chain(2), coloring_from(2, {{0, 1, 1}}), QuasiOrder::generated(2, {{0, 1}})});
  // The two covers of the 3-chain are independent; the whole chain is ∇.
  r.push_back({"3-chain", chain(3), coloring_from(3, {{0, 1, 1}, {1, 2, 2}, {0, 2, 3}}),
               QuasiOrder::generated(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}})});
  // N5 = {0, a, b, c, 1} with a < b: α = con(a,b) lies below β = con(0,a) and
  // γ = con(0,c), which are incomparable.
  r.push_back({"N5", n5(),
               coloring_from(5, {{1, 2, 1}, {0, 1, 2}, {0, 2, 2}, {3, 4, 2}, {0, 3, 3}, {1, 4, 3}, {2, 4, 3}, {0, 4, 4}}),
               QuasiOrder::generated(5, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}})});
  return r;
}

// Every pair of the 3-chain gets the same nontrivial color: (C1) fails.
inline ColoredExample quasi_colored_negative() {
  return {"3-chain, one color", chain(3), coloring_from(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}),
          QuasiOrder::generated(2, {{0, 1}})};
}

// Simple lattices with at most 12 elements.
inline std::vector<Lattice> simple_pool() {
  std::vector<Lattice> pool;
  for (std::size_t n = 2; n <= 8; ++n)
    for (auto& l : all_lattices(n))
      if (is_simple(l)) pool.push_back(std::move(l));
  pool.push_back(middle_block().lattice);
  pool.push_back(anchor_block().lattice);
  pool.push_back(edge_block().lattice);
  pool.push_back(edge_block_dual().lattice);
  return pool;
}

struct InsertionCase {
  std::size_t host, block;
  Pair cover;
};

// Deterministic (host, K, prime interval) triples drawn from simple_pool.
inline std::vector<InsertionCase> insertion_cases(const std::vector<Lattice>& pool, std::size_t count) {
  std::mt19937 rng(20240917);
  std::vector<InsertionCase> cases;
  while (cases.size() < count) {
    std::size_t h = rng() % pool.size(), k = rng() % pool.size();
    const auto covers = pool[h].covers();
    cases.push_back({h, k, covers[rng() % covers.size()]});
  }
  return cases;
}

// Smallest and largest number of marked covers on a maximal chain.
inline std::pair<std::size_t, std::size_t> marked_cover_range(const Lattice& l, const std::set<Pair>& marked) {
  const std::size_t n = l.size();
  std::vector<std::size_t> lo(n, SIZE_MAX), hi(n, 0);
  auto topo = l.poset().topo();
  lo[l.bottom()] = 0;
  for (Index x : topo)
    for (Index y : l.upper_covers(x)) {
      std::size_t add = marked.count({x, y});
      lo[y] = std::min(lo[y], lo[x] + add);
      hi[y] = std::max(hi[y], hi[x] + add);
    }
  return {lo[l.top()], hi[l.top()]};
}

}  // namespace latrep::fixtures
