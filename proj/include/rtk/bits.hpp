#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace rtk {

/// Index subsets of a ground set of at most 64 elements, bit i <-> element i.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxGround = 64;

constexpr Mask full_mask(std::size_t n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

constexpr int popcount(Mask m) { return std::popcount(m); }

constexpr bool contains(Mask set, std::size_t i) { return (set >> i) & 1U; }

constexpr bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

inline std::vector<int> to_indices(Mask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(m)));
  while (m != 0) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

inline Mask from_indices(const std::vector<int>& idx) {
  Mask m = 0;
  for (int i : idx) m |= Mask{1} << i;
  return m;
}

/// Packs the bits of `value` selected by `select` into the low bits
/// (software pext).
inline Mask compress(Mask value, Mask select) {
  Mask out = 0;
  int pos = 0;
  while (select != 0) {
    const Mask low = select & -select;
    if (value & low) out |= Mask{1} << pos;
    ++pos;
    select &= select - 1;
  }
  return out;
}

/// Inverse of compress: spreads the low bits of `value` onto the positions
/// of `select`.
inline Mask expand(Mask value, Mask select) {
  Mask out = 0;
  while (select != 0) {
    const Mask low = select & -select;
    if (value & 1U) out |= low;
    value >>= 1;
    select &= select - 1;
  }
  return out;
}

/// Calls fn(sub) for every subset of `set` of exactly k elements, in
/// increasing numeric order of the mask. Stops early if fn returns true;
/// returns whether it stopped early.
template <typename Fn>
bool for_each_k_subset(Mask set, int k, Fn&& fn) {
  const int n = std::popcount(set);
  if (k < 0 || k > n) return false;
  if (k == 0) return fn(Mask{0});
  // Gosper's hack in compressed coordinates, then spread back onto `set`.
  Mask local = (Mask{1} << k) - 1;
  const Mask limit = n >= 64 ? 0 : Mask{1} << n;
  while (true) {
    if (fn(expand(local, set))) return true;
    const Mask c = local & -local;
    const Mask r = local + c;
    if (r == 0 || (limit != 0 && r >= limit)) return false;
    local = (((r ^ local) >> 2) / c) | r;
    if (limit != 0 && local >= limit) return false;
  }
}

}  // namespace rtk
