#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rtk/geometry.hpp"
#include "rtk/set_system.hpp"

namespace rtk {

/// Finite convexity space: a ground set {0..n-1} and an explicit family of
/// convex sets, deduplicated and sorted by mask.
struct ConvexitySpace {
  std::size_t n = 0;
  std::vector<Mask> family;

  ConvexitySpace() = default;
  ConvexitySpace(std::size_t n, std::vector<Mask> family);
};

struct SpaceCheck {
  bool valid = true;
  std::string violation;
};

/// Both axioms: the empty set and the ground set belong to the family, and
/// the family is closed under pairwise intersection.
SpaceCheck validate_space(const ConvexitySpace& space);

/// Intersection of all members containing s.
Mask hull(const ConvexitySpace& space, Mask s);

/// Least k such that every k-subset splits into two nonempty parts with
/// meeting hulls; nullopt when no k <= n works.
std::optional<int> radon_number(const ConvexitySpace& space, std::uint64_t cap = 50'000'000);

/// As radon_number with r nonempty parts whose hulls share a point.
std::optional<int> tverberg_number(const ConvexitySpace& space, int r,
                                   std::uint64_t cap = 50'000'000);

/// Members whose complement is also a member.
SetSystem halfspaces(const ConvexitySpace& space);

struct SeparabilityCheck {
  bool separable = true;
  std::optional<std::pair<Mask, Mask>> violation;  // first disjoint pair with no halfspace
};

SeparabilityCheck is_separable(const ConvexitySpace& space, std::uint64_t cap = 50'000'000);

struct AbstractGoodPartition {
  std::optional<std::pair<Mask, Mask>> partition;
  std::uint64_t partitions_examined = 0;
  std::uint64_t cover_pairs_checked = 0;
};

/// First bipartition (A, B) of p, by |A| then lexicographically, such that
/// every union of at most s members containing A meets every union of at
/// most t members containing B. Decided by enumerating the unions directly.
AbstractGoodPartition abstract_good_partition(const ConvexitySpace& space, Mask p, int s, int t,
                                              std::uint64_t cap = 50'000'000);

/// Same decision through hulls of blocks: (A, B) is separable iff A and B
/// split into at most s and t blocks with every cross pair of block hulls
/// disjoint. Any union of members containing A contains the union of the
/// hulls of its traces on A, so the two procedures agree.
AbstractGoodPartition abstract_good_partition_by_blocks(const ConvexitySpace& space, Mask p, int s,
                                                        int t);

/// Intervals of the path 0-1-...-(n-1), plus the empty set.
ConvexitySpace interval_space(std::size_t n);

/// Subsets S of the points with CH(S) containing no other point of the set.
ConvexitySpace hull_closed_space(const PointSet& ps, unsigned jobs = 1);

}  // namespace rtk
