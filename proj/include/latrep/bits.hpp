#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <vector>

namespace latrep {

using Index = std::uint32_t;
using Bits = boost::dynamic_bitset<std::uint64_t>;
using Pair = std::pair<Index, Index>;

template <class F>
inline void for_each_bit(const Bits& b, F&& f) {
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) f(static_cast<Index>(i));
}

inline std::vector<Index> bits_to_vec(const Bits& b) {
  std::vector<Index> v;
  v.reserve(b.count());
  for_each_bit(b, [&](Index i) { v.push_back(i); });
  return v;
}

}  // namespace latrep
