#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace funcrowd {

// Subsets of {1..n} as bitmasks (element i <-> bit i-1).

/// All r-subsets of {1..n} in colex order.
inline std::vector<uint32_t> subsets_colex(int n, int r) {
  std::vector<uint32_t> out;
  for (uint32_t m = 0; m < (1u << n); ++m)
    if (std::popcount(m) == r) out.push_back(m);
  // increasing masks are exactly colex order for fixed popcount
  return out;
}

/// #{i in I | i < j}
inline int eps_below(int j, uint32_t I) {
  return std::popcount(I & ((1u << (j - 1)) - 1));
}

/// sum_t (i_t - t) for I = {i_1 < ... < i_r}; parity-equivalent to the
/// minimal number of transpositions mapping I to {1..r}.
inline int eps_shift(uint32_t I) {
  int t = 0, e = 0;
  for (int i = 1; i <= 31 && (I >> (i - 1)); ++i)
    if (I & (1u << (i - 1))) e += i - (++t);
  return e;
}

inline std::vector<int> mask_elems(uint32_t m) {
  std::vector<int> v;
  for (int i = 1; i <= 31 && (m >> (i - 1)); ++i)
    if (m & (1u << (i - 1))) v.push_back(i);
  return v;
}

inline std::string mask_to_string(uint32_t m) {
  std::string s = "{";
  bool first = true;
  for (int i : mask_elems(m)) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

}  // namespace funcrowd
