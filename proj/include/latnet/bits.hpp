#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <vector>

namespace latnet {

using Bits = boost::dynamic_bitset<>;

inline Bits full_bits(std::size_t n) {
  Bits b(n);
  b.set();
  return b;
}

inline std::vector<int> bit_members(const Bits& b) {
  std::vector<int> out;
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i))
    out.push_back(static_cast<int>(i));
  return out;
}

// a precedes b lectically when, at the first index where they differ, b has
// the bit. With index 0 read as the most significant digit this is plain
// numeric order on the encoded sets.
inline bool lectic_less(const Bits& a, const Bits& b) {
  const Bits d = a ^ b;
  const auto i = d.find_first();
  return i != Bits::npos && b.test(i);
}

}  // namespace latnet
