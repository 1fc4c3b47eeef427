#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rtk/bits.hpp"
#include "rtk/lp.hpp"
#include "rtk/rational.hpp"

namespace rtk {

using Point = RatVec;

/// Exact points in R^dim. Point indices 0..n-1 identify points everywhere
/// else in the library (index subsets are Masks).
struct PointSet {
  std::size_t dim = 0;
  std::vector<Point> points;
  std::vector<std::string> labels;  // empty, or one label per point

  std::size_t size() const { return points.size(); }
  Mask all() const { return full_mask(points.size()); }

  /// Throws InputError on dimension mismatch, more than 64 points or a
  /// label count that is neither 0 nor n.
  void validate() const;
};

/// Oriented hyperplane; the positive side is {x : normal.x > offset}.
struct Hyperplane {
  RatVec normal;
  Rat offset;

  /// normal.x - offset; positive on the positive side.
  Rat side(const Point& x) const { return dot(normal, x) - offset; }
};

/// Intersection of closed halfspaces {x : normal.x >= offset}, one per facet.
struct Polyhedron {
  std::vector<Hyperplane> facets;

  bool contains(const Point& x) const {
    for (const auto& h : facets) {
      if (sgn(h.side(x)) < 0) return false;
    }
    return true;
  }
  bool strictly_contains(const Point& x) const {
    for (const auto& h : facets) {
      if (sgn(h.side(x)) <= 0) return false;
    }
    return true;
  }
};

/// Outcome of the common-point query for hulls of several index groups.
struct HullIntersection {
  std::vector<Mask> groups;
  std::optional<Point> point;   // set iff the hulls share a point
  std::vector<RatVec> weights;  // per group, per member in increasing index
  RatVec farkas;                // over hull_system(groups) when empty

  bool nonempty() const { return point.has_value(); }
};

/// The LP behind hulls_common_point: one block of nonnegative weights per
/// group, a unit-sum row per group, and coordinate rows equating every
/// group's combination with the first group's. Deterministic in `groups`.
LinearSystem hull_system(const PointSet& ps, const std::vector<Mask>& groups);

/// Common point of CH(group_1), ..., CH(group_r) with exact convex weights,
/// or a Farkas certificate of emptiness. Empty groups are an InputError.
HullIntersection hulls_common_point(const PointSet& ps, const std::vector<Mask>& groups);

/// Re-checks a HullIntersection from scratch (weights or Farkas vector).
bool verify_hull_intersection(const PointSet& ps, const HullIntersection& hi);

/// A hyperplane with every point of `negative` strictly on the negative side
/// and every point of `positive` strictly on the positive side, or nullopt
/// when the two hulls meet. Overlapping or empty index sets are an
/// InputError. The normal is scaled so its first nonzero entry is +-1.
std::optional<Hyperplane> strict_separator(const PointSet& ps, Mask negative, Mask positive);

/// Result of the affine-dependence split.
struct RadonSplit {
  Mask a = 0;  // the smaller side; ties go to the side holding the lowest index
  Mask b = 0;
  Point point;  // lies in CH(a) and CH(b)
};

/// Splits `s` by the signs of an exact affine dependence. Throws
/// NoRadonPartition when the points of `s` are affinely independent.
RadonSplit radon_partition_classic(const PointSet& ps, Mask s);

/// A convex region given as closed halfspaces intersected with hulls of
/// index groups. Either list may be empty (an empty region is all of R^d).
struct Region {
  std::vector<Hyperplane> halfspaces;
  std::vector<Mask> hulls;
};

/// Feasibility LP for a region: variables x (free) then one nonnegative
/// weight block per hull.
LinearSystem region_system(const PointSet& ps, const Region& region);

/// Intersection of several polyhedra (halfspaces only) as a region.
Region polyhedra_region(const std::vector<const Polyhedron*>& parts);

/// Strictly separates CH(hull) (positive side) from a possibly unbounded
/// region (negative side). The region side is certified by LP duality, so
/// no vertex or facet enumeration of the region is needed. Returns nullopt
/// when CH(hull) meets the region.
std::optional<Hyperplane> separate_hull_from_region(const PointSet& ps, Mask hull,
                                                    const Region& region);

/// Scales so the first nonzero normal entry has absolute value one.
Hyperplane normalized(Hyperplane h);

}  // namespace rtk
