#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rtk/geometry.hpp"
#include "rtk/hull_oracle.hpp"
#include "rtk/set_system.hpp"

namespace rtk {

/// Distinct traces of a range family on n points, ascending by mask.
/// Provenance is "halfspace", "intersect:t" or "union:s", composed with '|'.
struct TraceFamily {
  std::size_t n = 0;
  std::vector<Mask> traces;
  std::string provenance;

  SetSystem as_system() const { return SetSystem(n, traces, provenance); }
};

/// Subsets S with CH(S) and CH(P \ S) disjoint, plus the empty and full set.
/// One hull LP per complementary pair; results are memoized in `oracle`.
TraceFamily halfspace_traces(HullOracle& oracle, unsigned jobs = 1, std::size_t max_points = 18);
TraceFamily halfspace_traces(const PointSet& ps, unsigned jobs = 1, std::size_t max_points = 18);

/// All intersections of 1..t traces plus the full set. Throws ResourceError
/// when the result would exceed `cap` sets.
TraceFamily intersect_close(const TraceFamily& tf, int t, std::size_t cap = std::size_t{1} << 22);

/// All unions of 1..s traces plus the empty set.
TraceFamily union_close(const TraceFamily& tf, int s, std::size_t cap = std::size_t{1} << 22);

/// Traces of unions of at most s polyhedra with at most t facets each.
SetSystem build_union_polytope_system(const PointSet& ps, int s, int t, unsigned jobs = 1,
                                      std::size_t cap = std::size_t{1} << 22);

/// d = 1 fast path: subsets that are unions of at most s runs of
/// consecutive points in sorted order, plus the empty set. Throws InputError
/// unless d = 1 and the points are distinct.
SetSystem interval_union_traces(const PointSet& ps, int s);

/// Point indices in increasing coordinate order (d = 1, distinct points).
std::vector<int> sorted_order_1d(const PointSet& ps);

}  // namespace rtk
