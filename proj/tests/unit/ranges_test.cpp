#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "rtk/constructions.hpp"
#include "rtk/errors.hpp"
#include "rtk/hull_oracle.hpp"
#include "rtk/ranges.hpp"
#include "rtk/set_system.hpp"

using namespace rtk;

namespace {

PointSet line(std::initializer_list<int> xs) {
  std::vector<std::vector<Rat>> c;
  for (int x : xs) c.push_back({Rat(x)});
  return oracle::make_points(1, c);
}

bool has(const std::vector<Mask>& v, Mask m) { return std::binary_search(v.begin(), v.end(), m); }

}  // namespace

TEST(HalfspaceTraces, TwoPointsOnALine) {
  const TraceFamily tf = halfspace_traces(line({0, 1}));
  EXPECT_EQ(tf.traces, (std::vector<Mask>{0, 1, 2, 3}));
  EXPECT_EQ(tf.provenance, "halfspace");
}

TEST(HalfspaceTraces, CollinearPrefixesAndSuffixes) {
  // Scrambled order; traces are prefixes and suffixes of the sorted order.
  const PointSet ps = line({4, -2, 7, 0, 3, 10});
  const std::vector<int> order = sorted_order_1d(ps);
  EXPECT_EQ(order, (std::vector<int>{1, 3, 4, 0, 2, 5}));
  std::vector<Mask> expect{0, ps.all()};
  Mask prefix = 0;
  for (std::size_t k = 0; k + 1 < order.size(); ++k) {
    prefix |= Mask{1} << order[k];
    expect.push_back(prefix);
    expect.push_back(ps.all() & ~prefix);
  }
  std::sort(expect.begin(), expect.end());
  const TraceFamily tf = halfspace_traces(ps);
  EXPECT_EQ(tf.traces, expect);
  EXPECT_EQ(tf.traces.size(), 2 * ps.size());  // 2n - 2 nontrivial, plus both trivial
}

TEST(HalfspaceTraces, FourPlanarPointsNotShattered) {
  CounterRng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const PointSet ps = oracle::random_points(rng, 4, 2);
    const TraceFamily tf = halfspace_traces(ps);
    EXPECT_LT(tf.traces.size(), 16U);
    EXPECT_LE(vc_dim(tf.as_system()), 3);
  }
}

TEST(HalfspaceTraces, MatchesDefinitionAndIsComplementClosed) {
  CounterRng rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t d = 1 + static_cast<std::size_t>(trial % 3);
    const PointSet ps = oracle::random_points(rng, 6, d, 6, 2);
    const TraceFamily tf = halfspace_traces(ps, 1 + trial % 3);
    EXPECT_EQ(tf.traces, oracle::halfspace_traces_def(ps)) << "trial " << trial;
    for (Mask m : tf.traces) EXPECT_TRUE(has(tf.traces, ps.all() & ~m));
    EXPECT_LE(vc_dim(tf.as_system()), static_cast<int>(d) + 1);
  }
}

TEST(HalfspaceTraces, CapIsEnforced) {
  CounterRng rng(1);
  const PointSet ps = oracle::random_points(rng, 8, 2);
  EXPECT_THROW(halfspace_traces(ps, 1, 7), ResourceError);
}

TEST(Closures, IdentityCases) {
  const TraceFamily tf = halfspace_traces(convex_position(5));
  const TraceFamily i1 = intersect_close(tf, 1);
  const TraceFamily u1 = union_close(tf, 1);
  EXPECT_EQ(i1.traces, tf.traces);  // already holds the full set and the empty set
  EXPECT_EQ(u1.traces, tf.traces);
  EXPECT_EQ(i1.provenance, "halfspace|intersect:1");
  EXPECT_EQ(u1.provenance, "halfspace|union:1");
}

TEST(Closures, IntervalsOnTheLine) {
  const PointSet ps = line({0, 1, 2, 3, 4, 5});
  const TraceFamily iv = intersect_close(halfspace_traces(ps), 2);
  std::vector<Mask> runs{0};
  for (int a = 0; a < 6; ++a) {
    for (int b = a; b < 6; ++b) runs.push_back(full_mask(b + 1) & ~full_mask(a));
  }
  std::sort(runs.begin(), runs.end());
  EXPECT_EQ(iv.traces, runs);
}

TEST(Closures, ConvexPentagonShatteredByTwoFacetPolyhedra) {
  // Every subset of a convex pentagon is cut off by a two-facet polyhedron.
  const PointSet ps = convex_position(5);
  const TraceFamily tf = intersect_close(halfspace_traces(ps), 2);
  EXPECT_EQ(tf.traces.size(), 32U);
  EXPECT_EQ(vc_dim(tf.as_system()), 5);
}

TEST(Closures, MonotoneGrowth) {
  CounterRng rng(8);
  const PointSet ps = oracle::random_points(rng, 6, 2);
  const TraceFamily tf = halfspace_traces(ps);
  const TraceFamily i2 = intersect_close(tf, 2);
  const TraceFamily u2 = union_close(i2, 2);
  for (Mask m : tf.traces) EXPECT_TRUE(has(i2.traces, m));
  for (Mask m : i2.traces) EXPECT_TRUE(has(u2.traces, m));
  EXPECT_THROW(union_close(i2, 3, 10), ResourceError);
}

TEST(UnionPolytopeSystem, SingleHalfspaceCase) {
  CounterRng rng(3);
  const PointSet ps = oracle::random_points(rng, 6, 2);
  EXPECT_EQ(build_union_polytope_system(ps, 1, 1).edges(), halfspace_traces(ps).traces);
}

TEST(UnionPolytopeSystem, ManyFacetsGiveHullClosedSets) {
  CounterRng rng(21);
  for (int trial = 0; trial < 4; ++trial) {
    const PointSet ps = oracle::random_points(rng, 6, 2, 5, 1);
    oracle::MeetCache mc(ps);
    std::vector<Mask> expect;
    for (Mask s = 0; s <= ps.all(); ++s) {
      if (oracle::hull_closed(mc, ps, s)) expect.push_back(s);
    }
    EXPECT_EQ(build_union_polytope_system(ps, 1, 6).edges(), expect) << "trial " << trial;
  }
}

TEST(UnionPolytopeSystem, TwoIntervalsOnSixPoints) {
  const PointSet ps = line({0, 1, 2, 3, 4, 5});
  const SetSystem sys = build_union_polytope_system(ps, 2, 2);
  EXPECT_EQ(vc_dim(sys), 4);
  EXPECT_EQ(sys.edges(), interval_union_traces(ps, 2).edges());
}

TEST(IntervalUnionTraces, SmallExample) {
  const SetSystem sys = interval_union_traces(line({0, 1, 2}), 1);
  EXPECT_EQ(sys.edges(), (std::vector<Mask>{0, 1, 2, 3, 4, 6, 7}));
  EXPECT_THROW(interval_union_traces(convex_position(4), 1), InputError);
  EXPECT_THROW(interval_union_traces(line({0, 1, 1}), 1), InputError);
}

TEST(IntervalUnionTraces, AgreesWithPolyhedraForSmallN) {
  CounterRng rng(17);
  for (std::size_t n = 1; n <= 8; ++n) {
    const PointSet ps = oracle::random_points(rng, n, 1, 40, 3);
    for (int s = 1; s <= 3; ++s) {
      EXPECT_EQ(interval_union_traces(ps, s).edges(),
                build_union_polytope_system(ps, s, 2).edges())
          << "n=" << n << " s=" << s;
    }
  }
}

TEST(IntervalUnionTraces, AlternatingSetNeedsOneMoreRun) {
  for (int s = 1; s <= 3; ++s) {
    const std::size_t n = static_cast<std::size_t>(2 * s + 1);
    std::vector<std::vector<Rat>> c;
    for (std::size_t i = 0; i < n; ++i) c.push_back({Rat(static_cast<long>(i))});
    const SetSystem sys = interval_union_traces(oracle::make_points(1, c), s);
    Mask odd = 0;
    for (std::size_t i = 0; i < n; i += 2) odd |= Mask{1} << i;
    EXPECT_FALSE(std::binary_search(sys.edges().begin(), sys.edges().end(), odd));
    EXPECT_EQ(vc_dim(sys), 2 * s);
  }
}

TEST(UnionPolytopeSystem, VcDimensionGrowsWithS) {
  CounterRng rng(9);
  for (int trial = 0; trial < 5; ++trial) {
    const PointSet ps = oracle::random_points(rng, 7, 2);
    const int poly_vc = vc_dim(intersect_close(halfspace_traces(ps), 2).as_system());
    const int union_vc = vc_dim(build_union_polytope_system(ps, 2, 2, 2));
    EXPECT_LE(poly_vc, union_vc);
    EXPECT_EQ(union_vc, oracle::vc_dim(build_union_polytope_system(ps, 2, 2).edges(), 7));
  }
}

TEST(UnionPolytopeSystem, DoesNotDependOnJobs) {
  CounterRng rng(4);
  const PointSet ps = oracle::random_points(rng, 7, 2);
  EXPECT_EQ(build_union_polytope_system(ps, 2, 2, 1).edges(),
            build_union_polytope_system(ps, 2, 2, 4).edges());
}
