#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "rtk/bits.hpp"
#include "rtk/rational.hpp"

namespace rtk {

/// Visits every set partition of {0..m-1} into between k_min and k_max
/// nonempty blocks as a restricted growth string (block label per element),
/// in lexicographic order. fn returns true to stop; the return value reports
/// whether the walk stopped early.
template <typename Fn>
bool for_each_rgs(int m, int k_min, int k_max, Fn&& fn) {
  if (m == 0) {
    std::vector<int> none;
    return k_min <= 0 ? fn(none) : false;
  }
  if (k_max < 1 || k_min > m) return false;
  std::vector<int> a(static_cast<std::size_t>(m), 0);
  // Iterative depth-first walk; blocks_before[i] = 1 + max(a[0..i-1]).
  std::vector<int> blocks_before(static_cast<std::size_t>(m) + 1, 0);
  int i = 0;
  a[0] = -1;
  blocks_before[0] = 0;
  while (i >= 0) {
    const int used = blocks_before[static_cast<std::size_t>(i)];
    const int limit = std::min(used, k_max - 1);
    int& v = a[static_cast<std::size_t>(i)];
    ++v;
    if (v > limit) {
      --i;
      continue;
    }
    const int now = std::max(used, v + 1);
    const int remaining = m - 1 - i;
    if (now + remaining < k_min) continue;
    if (i == m - 1) {
      if (now >= k_min && fn(static_cast<const std::vector<int>&>(a))) return true;
      continue;
    }
    blocks_before[static_cast<std::size_t>(i) + 1] = now;
    ++i;
    a[static_cast<std::size_t>(i)] = -1;
  }
  return false;
}

/// Blocks of an RGS as masks over the given element list.
inline std::vector<Mask> rgs_blocks(const std::vector<int>& rgs, const std::vector<int>& elements) {
  int k = 0;
  for (int v : rgs) k = std::max(k, v + 1);
  std::vector<Mask> blocks(static_cast<std::size_t>(k), 0);
  for (std::size_t i = 0; i < rgs.size(); ++i) {
    blocks[static_cast<std::size_t>(rgs[i])] |= Mask{1} << elements[i];
  }
  return blocks;
}

/// Stirling number of the second kind S(n, k).
BigInt stirling2(int n, int k);

BigInt binomial(int n, int k);

}  // namespace rtk
