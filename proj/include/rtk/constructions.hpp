#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rtk/geometry.hpp"
#include "rtk/hull_oracle.hpp"
#include "rtk/partitions.hpp"
#include "rtk/rng.hpp"

namespace rtk {

using Coloring = std::vector<int>;

/// z_i = (t_i, t_i^2, ..., t_i^d). Default t_i = i/(n+1), i = 1..n. Throws
/// InputError unless t is strictly increasing inside (0, 1).
PointSet moment_curve(std::size_t n, std::size_t d, const std::vector<Rat>& t = {});

/// Moment-curve instance with m points in each of p consecutive intervals.
struct T42Instance {
  int d = 0, s = 0, r = 0;
  int m = 0;  // (floor(d/2) + 1) r / 2
  int p = 0;  // floor((s-1)/2) r / 2
  PointSet points;
  std::vector<int> interval;  // interval index of each point

  std::size_t n() const { return points.size(); }
};

/// Throws InputError unless s >= 3, r >= 2 even, d >= 1. Odd r reduces to
/// r - 1 by adding an empty color, so only even r is generated.
T42Instance t42_instance(int d, int s, int r);

/// Per color, the cover groups: the color's points in each interval chosen
/// for it, and its points over each maximal run of intervals not chosen for
/// it (empty groups dropped). Interval q picks the lowest color with at most
/// floor(d/2) points in q that has been picked fewer than floor((s-1)/2)
/// times. Throws InvariantError if no color is eligible.
std::vector<Cover> t42_adversary(const T42Instance& inst, const Coloring& coloring);

struct T42Check {
  bool passed = false;
  std::vector<Cover> covers;
  std::optional<EmptyIntersectionCertificate> certificate;
  std::string failure;  // empty when passed
};

T42Check verify_t42(HullOracle& oracle, const T42Instance& inst, const Coloring& coloring);

struct T42Sweep {
  std::uint64_t colorings = 0;
  std::uint64_t passed = 0;
  std::optional<std::uint64_t> first_failure;  // index in base-r order
  std::size_t max_groups = 0;
  std::uint64_t tuples_certified = 0;
};

/// Every coloring in r^n, coloring k having digit i = color of point i
/// (point 0 most significant).
T42Sweep sweep_t42(const T42Instance& inst, unsigned jobs = 1, std::uint64_t cap = 10'000'000);

/// color(p_i) = i mod r.
Coloring periodic_coloring(std::size_t n, int r);

struct T999Report {
  int r = 0, s = 0;
  std::size_t n = 0;
  bool verified = false;
  BigInt tuples_checked;
  int max_miss = 0;  // over all enumerated covers
  int miss_bound = 0;  // (s+1)(r-1)
  /// Per color, the intervals [first, last] (point indices) of a cover
  /// tuple with no common point, when one exists.
  std::optional<std::vector<std::vector<std::pair<int, int>>>> counterexample;
};

/// Points (i+1)/(n+1) on the line with the periodic coloring. Every choice
/// of covers of the color classes by at most s intervals is checked for a
/// common point; it suffices to take intervals spanning runs of same-color
/// points, since shrinking covers only makes a common point harder. n = 0
/// means r(r-1)(s+1)+1.
T999Report verify_t999(int r, int s, std::size_t n = 0, std::uint64_t cap = 100'000'000);

/// Points on the unit circle ((1-u^2)/(1+u^2), 2u/(1+u^2)) at
/// u_i = (2i - (n-1))/(n+1). Throws InputError for n < 3.
PointSet convex_position(std::size_t n);

/// Same parametrization at distinct random rational u in (-1, 1).
PointSet random_convex_position(std::size_t n, CounterRng& rng);

/// Moment curve at sorted distinct random t in (0, 1).
PointSet random_moment_curve(std::size_t n, std::size_t d, CounterRng& rng);

/// Distinct random rational points with coordinates p/q, |p| <= 60, q <= 4.
PointSet random_rational_points(std::size_t n, std::size_t d, CounterRng& rng);

/// (r-1)(d+1) points with no r-Tverberg partition, checked by
/// good_tverberg_partition. Random retries; throws ResourceError when
/// `attempts` runs out.
PointSet tverberg_tight_instance(int d, int r, std::uint64_t seed = 1, int attempts = 200,
                                 unsigned jobs = 1);

/// s copies shifted along the first axis by more than the set's width, so
/// the copies' hulls are pairwise disjoint.
PointSet translated_copies(const PointSet& ps, int s);

/// A 4-coloring under which no halfspace trace with at least two points is
/// monochromatic, found by backtracking in canonical order (each point
/// takes at most one color above those already used).
std::optional<Coloring> halfspace_4coloring(const PointSet& ps, unsigned jobs = 1,
                                            std::size_t max_points = 18);

}  // namespace rtk
