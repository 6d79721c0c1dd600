#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "lattice.hpp"

namespace latrep {

namespace detail {

// Strict order on k inner elements as a bitmask over pairs (i, j), i < j,
// meaning i < j in the order. Natural labelling only, so no pair (j, i).
inline std::size_t pair_bit(Index i, Index j, Index k) { return std::size_t(i) * k + j; }

inline std::vector<bool> inner_relation(std::uint64_t mask, Index k) {
  std::vector<bool> r(std::size_t(k) * k, false);
  std::size_t b = 0;
  for (Index i = 0; i < k; ++i)
    for (Index j = i + 1; j < k; ++j, ++b)
      if (mask >> b & 1) r[pair_bit(i, j, k)] = true;
  return r;
}

inline bool transitive(const std::vector<bool>& r, Index k) {
  for (Index i = 0; i < k; ++i)
    for (Index j = i + 1; j < k; ++j)
      if (r[pair_bit(i, j, k)])
        for (Index m = j + 1; m < k; ++m)
          if (r[pair_bit(j, m, k)] && !r[pair_bit(i, m, k)]) return false;
  return true;
}

// Smallest relation string over all relabellings.
inline std::vector<bool> canonical(const std::vector<bool>& r, Index k) {
  std::vector<Index> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> best;
  do {
    std::vector<bool> s(std::size_t(k) * k, false);
    for (Index i = 0; i < k; ++i)
      for (Index j = 0; j < k; ++j)
        if (r[pair_bit(i, j, k)]) s[pair_bit(perm[i], perm[j], k)] = true;
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace detail

// Every lattice with n elements, one per isomorphism class. Feasible up to
// n = 8 (six inner elements).
inline std::vector<Lattice> all_lattices(std::size_t n) {
  std::vector<Lattice> out;
  if (n == 0) return out;
  if (n == 1) {
    out.push_back(lattice_from_covers(1, {}));
    return out;
  }
  const Index k = Index(n - 2);
  const std::size_t npairs = std::size_t(k) * (k ? k - 1 : 0) / 2;
  std::set<std::vector<bool>> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << npairs); ++mask) {
    auto r = detail::inner_relation(mask, k);
    if (!detail::transitive(r, k)) continue;
    auto c = detail::canonical(r, k);
    if (!seen.insert(c).second) continue;
    // 0 is element 0, inner i is i + 1, top is n - 1.
    std::vector<Pair> rel;
    for (Index i = 0; i < k; ++i) {
      rel.emplace_back(0, i + 1);
      rel.emplace_back(i + 1, Index(n - 1));
      for (Index j = 0; j < k; ++j)
        if (c[detail::pair_bit(i, j, k)]) rel.emplace_back(i + 1, j + 1);
    }
    if (k == 0) rel.emplace_back(0, 1);
    try {
      out.push_back(lattice_from_covers(n, rel));
    } catch (const Error&) {
    }
  }
  return out;
}

}  // namespace latrep
