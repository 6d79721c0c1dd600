#pragma once

#include <map>
#include <set>
#include <vector>

#include "lattice.hpp"

namespace latrep {

struct IntervalRef {
  Index lo = 0, hi = 0;
  bool prime_in(const Lattice& l) const { return l.covers_pair(lo, hi); }
  auto operator<=>(const IntervalRef&) const = default;
};

// Filter ↑lower_filter_generator of the lower lattice is identified with the
// ideal ↓upper_ideal_generator of the upper one; iso maps filter -> ideal.
struct GlueSpec {
  Index lower_filter_generator = 0;
  Index upper_ideal_generator = 0;
  std::vector<Pair> iso;
};

inline Built glue_hall_dilworth(const Lattice& lower, const Lattice& upper, const GlueSpec& spec) {
  const auto& filt = lower.poset().up(spec.lower_filter_generator);
  const auto& ideal = upper.poset().down(spec.upper_ideal_generator);
  if (spec.iso.size() != filt.count() || spec.iso.size() != ideal.count())
    throw Error(ErrorKind::IsoInvalid, "filter and ideal sizes differ from iso size");
  std::map<Index, Index> fwd, back;
  for (auto [f, i] : spec.iso) {
    if (f >= lower.size() || i >= upper.size() || !filt[f] || !ideal[i])
      throw Error(ErrorKind::IsoInvalid, "iso pair outside filter/ideal");
    if (!fwd.emplace(f, i).second || !back.emplace(i, f).second)
      throw Error(ErrorKind::IsoInvalid, "iso is not a bijection");
  }
  for (auto [f1, i1] : fwd)
    for (auto [f2, i2] : fwd)
      if (lower.leq(f1, f2) != upper.leq(i1, i2))
        throw Error(ErrorKind::IsoInvalid, "iso does not preserve and reflect order");

  const Index n1 = lower.size();
  std::vector<Index> ml(n1), mu(upper.size());
  for (Index x = 0; x < n1; ++x) ml[x] = x;
  Index next = n1;
  for (Index u = 0; u < upper.size(); ++u) mu[u] = ideal[u] ? back[u] : next++;
  std::vector<Pair> cov = lower.covers();
  for (auto [x, y] : upper.covers()) cov.emplace_back(mu[x], mu[y]);
  return {lattice_from_covers(next, cov), {ml, mu}};
}

// All bottoms identified and all tops identified. Result: 0, then the interiors
// of the parts in order, then 1.
inline Built zero_one_sum(const std::vector<Lattice>& parts) {
  Index next = 1;
  std::vector<std::vector<Index>> maps;
  for (const auto& p : parts) {
    if (p.size() < 2) throw Error(ErrorKind::PartTooSmall, "part with fewer than two elements");
    std::vector<Index> m(p.size());
    for (Index x = 0; x < p.size(); ++x)
      if (x != p.bottom() && x != p.top()) m[x] = next++;
    maps.push_back(std::move(m));
  }
  const Index top = next;
  std::vector<Pair> cov;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    auto& m = maps[k];
    m[parts[k].bottom()] = 0;
    m[parts[k].top()] = top;
    for (auto [x, y] : parts[k].covers()) cov.emplace_back(m[x], m[y]);
  }
  if (parts.empty()) cov.emplace_back(0, 1);
  return {lattice_from_covers(top + 1, cov), std::move(maps)};
}

struct Insertion {
  IntervalRef at;
  const Lattice* block;
};

// Several prime intervals replaced at once; validated as a lattice only at the
// end. Host indices are preserved; maps[0] is the identity on the host and
// maps[k + 1] embeds the k-th block.
inline Built insert_many(const Lattice& host, const std::vector<Insertion>& ins) {
  std::set<Pair> removed;
  for (const auto& i : ins) {
    if (!i.at.prime_in(host))
      throw Error(ErrorKind::NotPrime,
                  "[" + std::to_string(i.at.lo) + "," + std::to_string(i.at.hi) + "] is not a covering pair");
    if (i.block->size() < 2) throw Error(ErrorKind::PartTooSmall, "inserted lattice has fewer than two elements");
    if (!removed.emplace(i.at.lo, i.at.hi).second)
      throw Error(ErrorKind::NotPrime, "interval used twice in one insertion batch");
  }
  std::vector<Pair> cov;
  cov.reserve(host.covers().size());
  for (auto c : host.covers())
    if (!removed.count(c)) cov.push_back(c);
  std::vector<std::vector<Index>> maps;
  std::vector<Index> id(host.size());
  for (Index x = 0; x < host.size(); ++x) id[x] = x;
  maps.push_back(std::move(id));
  Index next = host.size();
  for (const auto& i : ins) {
    const Lattice& k = *i.block;
    std::vector<Index> m(k.size());
    for (Index x = 0; x < k.size(); ++x) {
      if (x == k.bottom()) m[x] = i.at.lo;
      else if (x == k.top()) m[x] = i.at.hi;
      else m[x] = next++;
    }
    for (auto [x, y] : k.covers()) cov.emplace_back(m[x], m[y]);
    maps.push_back(std::move(m));
  }
  return {lattice_from_covers(next, cov), std::move(maps)};
}

inline Built insert_into_prime_interval(const Lattice& host, IntervalRef iv, const Lattice& k) {
  return insert_many(host, {{iv, &k}});
}

inline Lattice chain(std::size_t n) {
  std::vector<Pair> cov;
  for (Index i = 0; i + 1 < n; ++i) cov.emplace_back(i, i + 1);
  return lattice_from_covers(n, cov);
}

// 0, k pairwise incomparable atoms, 1.
inline Lattice diamond_family(std::size_t k) {
  std::vector<Pair> cov;
  for (Index i = 1; i <= k; ++i) {
    cov.emplace_back(0, i);
    cov.emplace_back(i, Index(k + 1));
  }
  if (k == 0) cov.emplace_back(0, 1);
  return lattice_from_covers(k == 0 ? 2 : k + 2, cov);
}

// 0=0, a=1, b=2, c=3, 1=4 with 0 < a < b < 1 and 0 < c < 1.
inline Lattice n5() { return lattice_from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}); }
inline Lattice m3() { return diamond_family(3); }
inline Lattice boolean_lattice(unsigned k) {
  const Index n = Index(1) << k;
  std::vector<Pair> cov;
  for (Index x = 0; x < n; ++x)
    for (unsigned b = 0; b < k; ++b)
      if (!(x & (1u << b))) cov.emplace_back(x, x | (1u << b));
  return lattice_from_covers(n, cov);
}

}  // namespace latrep
