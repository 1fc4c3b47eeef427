#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "rtk/constructions.hpp"
#include "rtk/errors.hpp"
#include "rtk/hull_oracle.hpp"
#include "rtk/partitions.hpp"
#include "rtk/ranges.hpp"

using namespace rtk;

TEST(MomentCurve, ExplicitPoint) {
  const PointSet ps = moment_curve(1, 2, {Rat(1, 2)});
  ASSERT_EQ(ps.size(), 1U);
  EXPECT_EQ(ps.points[0], (Point{Rat(1, 2), Rat(1, 4)}));
  const PointSet def = moment_curve(3, 3);
  EXPECT_EQ(def.points[2], (Point{Rat(3, 4), Rat(9, 16), Rat(27, 64)}));
}

TEST(MomentCurve, RejectsBadParameters) {
  EXPECT_THROW(moment_curve(2, 2, {Rat(1, 2), Rat(1, 3)}), InputError);
  EXPECT_THROW(moment_curve(2, 2, {Rat(1, 2), Rat(1, 2)}), InputError);
  EXPECT_THROW(moment_curve(1, 2, {Rat(1)}), InputError);
  EXPECT_THROW(moment_curve(2, 2, {Rat(1, 2)}), InputError);
}

TEST(MomentCurve, Neighborliness) {
  for (std::size_t d : {2U, 3U}) {
    for (std::size_t n = 2; n <= 8; ++n) {
      const PointSet ps = moment_curve(n, d);
      for (Mask s = 1; s < ps.all(); ++s) {
        if (popcount(s) > static_cast<int>(d / 2)) continue;
        const HullIntersection hi = hulls_common_point(ps, {s, ps.all() & ~s});
        EXPECT_FALSE(hi.nonempty()) << "d=" << d << " n=" << n << " s=" << s;
        EXPECT_TRUE(verify_hull_intersection(ps, hi));
        if (n <= 5) {
          EXPECT_FALSE(oracle::hulls_meet(ps, {s, ps.all() & ~s}));
        }
      }
    }
  }
}

TEST(T42, InstanceFormulas) {
  const T42Instance a = t42_instance(1, 3, 4);
  EXPECT_EQ(a.m, 2);
  EXPECT_EQ(a.p, 2);
  EXPECT_EQ(a.n(), 4U);
  EXPECT_EQ(a.interval, (std::vector<int>{0, 0, 1, 1}));
  const T42Instance b = t42_instance(2, 3, 4);
  EXPECT_EQ(b.m, 4);
  EXPECT_EQ(b.p, 2);
  EXPECT_EQ(b.n(), 8U);
  EXPECT_EQ(b.points.dim, 2U);
  const T42Instance c = t42_instance(1, 3, 2);
  EXPECT_EQ(c.m, 1);
  EXPECT_EQ(c.p, 1);
  EXPECT_EQ(c.n(), 1U);
  EXPECT_THROW(t42_instance(1, 2, 4), InputError);
  EXPECT_THROW(t42_instance(1, 3, 3), InputError);
  EXPECT_THROW(t42_instance(0, 3, 4), InputError);
}

TEST(T42, RainbowColoring) {
  const T42Instance inst = t42_instance(1, 3, 4);
  HullOracle oracle(inst.points);
  const T42Check chk = verify_t42(oracle, inst, {0, 1, 2, 3});
  EXPECT_TRUE(chk.passed) << chk.failure;
  ASSERT_TRUE(chk.certificate.has_value());
  EXPECT_TRUE(verify_cover_proofs(inst.points, *chk.certificate));
  for (const Cover& c : chk.covers) EXPECT_LE(c.size(), 3U);
}

TEST(T42, ConstantColoring) {
  const T42Instance inst = t42_instance(2, 3, 4);
  HullOracle oracle(inst.points);
  const T42Check chk = verify_t42(oracle, inst, Coloring(inst.n(), 2));
  EXPECT_TRUE(chk.passed) << chk.failure;
  int empty = 0;
  for (const Cover& c : chk.covers) empty += c.empty() ? 1 : 0;
  EXPECT_EQ(empty, 3);
}

TEST(T42, ExhaustiveSmallSweep) {
  const T42Instance inst = t42_instance(1, 3, 4);
  const T42Sweep sweep = sweep_t42(inst, 2);
  EXPECT_EQ(sweep.colorings, 256U);
  EXPECT_EQ(sweep.passed, 256U);
  EXPECT_FALSE(sweep.first_failure.has_value());
  EXPECT_LE(sweep.max_groups, 3U);
}

TEST(T42, AdversaryCoversAreIndependentlyEmpty) {
  // Re-check a handful of (2,3,4) colorings against the definition oracle.
  const T42Instance inst = t42_instance(2, 3, 4);
  oracle::MeetCache mc(inst.points);
  CounterRng rng(6);
  for (int trial = 0; trial < 12; ++trial) {
    Coloring col(inst.n());
    for (auto& c : col) c = static_cast<int>(rng.uniform(0, 3));
    const std::vector<Cover> covers = t42_adversary(inst, col);
    ASSERT_EQ(covers.size(), 4U);
    bool any_empty = false;
    for (int color = 0; color < 4; ++color) {
      Mask cover_union = 0;
      for (Mask g : covers[color]) cover_union |= g;
      Mask cls = 0;
      for (std::size_t i = 0; i < col.size(); ++i) {
        if (col[i] == color) cls |= Mask{1} << i;
      }
      EXPECT_EQ(cover_union, cls);
      EXPECT_LE(covers[color].size(), 3U);
      any_empty = any_empty || covers[color].empty();
    }
    if (any_empty) continue;
    std::vector<std::size_t> pick(4, 0);
    while (true) {
      std::vector<Mask> tuple;
      for (int i = 0; i < 4; ++i) tuple.push_back(covers[i][pick[i]]);
      EXPECT_FALSE(mc.meet(tuple));
      std::size_t k = 0;
      while (k < 4 && ++pick[k] == covers[k].size()) pick[k++] = 0;
      if (k == 4) break;
    }
  }
}

TEST(Periodic, Examples) {
  EXPECT_EQ(periodic_coloring(5, 2), (Coloring{0, 1, 0, 1, 0}));
  EXPECT_EQ(periodic_coloring(3, 3), (Coloring{0, 1, 2}));
  EXPECT_EQ(periodic_coloring(7, 2), (Coloring{0, 1, 0, 1, 0, 1, 0}));
}

TEST(T999, Examples) {
  const T999Report a = verify_t999(2, 1);
  EXPECT_EQ(a.n, 5U);
  EXPECT_TRUE(a.verified);
  const T999Report b = verify_t999(2, 2);
  EXPECT_EQ(b.n, 7U);
  EXPECT_TRUE(b.verified);
  EXPECT_LE(b.max_miss, b.miss_bound);
  EXPECT_EQ(b.miss_bound, 3);
  const T999Report c = verify_t999(2, 1, 2);
  EXPECT_FALSE(c.verified);
  ASSERT_TRUE(c.counterexample.has_value());
}

TEST(T999, AgreesWithJointCoverOracle) {
  // The periodic partition is good exactly when verify_t999 says so.
  for (int r = 2; r <= 3; ++r) {
    for (int s = 1; s <= 2; ++s) {
      for (std::size_t n : {static_cast<std::size_t>(r), static_cast<std::size_t>(r * (r - 1) * (s + 1) + 1)}) {
        if (n > 13) continue;
        std::vector<std::vector<Rat>> c;
        for (std::size_t i = 0; i < n; ++i) c.push_back({Rat(static_cast<long>(i + 1))});
        const PointSet ps = oracle::make_points(1, c);
        HullOracle oracle(ps);
        std::vector<Mask> parts(static_cast<std::size_t>(r), 0);
        const Coloring col = periodic_coloring(n, r);
        for (std::size_t i = 0; i < n; ++i) parts[col[i]] |= Mask{1} << i;
        const bool empty = joint_cover_empty(oracle, parts, std::vector<int>(r, s)).empty_cover_exists();
        EXPECT_EQ(verify_t999(r, s, n).verified, !empty) << r << " " << s << " " << n;
      }
    }
  }
}

TEST(ConvexPosition, ExtremePoints) {
  for (std::size_t n = 3; n <= 8; ++n) {
    const PointSet ps = convex_position(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Mask p = Mask{1} << i;
      EXPECT_FALSE(hulls_common_point(ps, {p, ps.all() & ~p}).nonempty());
      if (n <= 5) EXPECT_FALSE(oracle::hulls_meet(ps, {p, ps.all() & ~p}));
    }
  }
  EXPECT_THROW(convex_position(2), InputError);
  CounterRng rng(3);
  const PointSet rnd = random_convex_position(6, rng);
  for (std::size_t i = 0; i < 6; ++i) {
    const Mask p = Mask{1} << i;
    EXPECT_FALSE(hulls_common_point(rnd, {p, rnd.all() & ~p}).nonempty());
  }
}

TEST(TightInstance, NoTverbergPartition) {
  struct Case {
    int d, r;
    std::size_t n;
  };
  for (const Case& c : {Case{1, 2, 2}, Case{2, 2, 3}, Case{1, 3, 4}, Case{2, 3, 6}}) {
    const PointSet ps = tverberg_tight_instance(c.d, c.r, 7);
    EXPECT_EQ(ps.size(), c.n);
    EXPECT_EQ(ps.dim, static_cast<std::size_t>(c.d));
    HullOracle oracle(ps);
    EXPECT_FALSE(good_tverberg_partition(oracle, ps.all(), c.r, std::vector<int>(c.r, 1))
                     .good.has_value());
  }
}

TEST(TranslatedCopies, LowerBoundWitness) {
  const PointSet base = tverberg_tight_instance(1, 2, 1);
  EXPECT_EQ(translated_copies(base, 1).points, base.points);
  for (int d = 1; d <= 2; ++d) {
    const PointSet copies = translated_copies(tverberg_tight_instance(d, 2, 1), 2);
    EXPECT_EQ(copies.size(), static_cast<std::size_t>(2 * (d + 1)));
    HullOracle oracle(copies);
    for (Mask a = 1; a < copies.all(); ++a) {
      EXPECT_TRUE(st_separable(oracle, a, copies.all() & ~a, 2, 2).separable());
    }
  }
}

TEST(FourColoring, Examples) {
  CounterRng rng(10);
  const PointSet four = random_rational_points(4, 3, rng);
  const auto c4 = halfspace_4coloring(four);
  ASSERT_TRUE(c4.has_value());
  std::vector<int> sorted = *c4;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(sorted, (std::vector<int>{0, 1, 2, 3}));

  for (int trial = 0; trial < 3; ++trial) {
    const PointSet ps = random_rational_points(8, 3, rng);
    const auto col = halfspace_4coloring(ps);
    ASSERT_TRUE(col.has_value());
    for (Mask t : halfspace_traces(ps).traces) {
      if (popcount(t) < 2) continue;
      std::vector<int> seen;
      for (int i : to_indices(t)) seen.push_back((*col)[i]);
      EXPECT_NE(std::count(seen.begin(), seen.end(), seen[0]), static_cast<long>(seen.size()));
    }
  }
}

TEST(FourColoring, LargestClassCannotBeSeparated) {
  CounterRng rng(19);
  const PointSet ps = random_rational_points(9, 3, rng);
  const auto col = halfspace_4coloring(ps);
  ASSERT_TRUE(col.has_value());
  std::vector<Mask> classes(4, 0);
  for (std::size_t i = 0; i < ps.size(); ++i) classes[(*col)[i]] |= Mask{1} << i;
  const Mask b = *std::max_element(classes.begin(), classes.end(),
                                   [](Mask x, Mask y) { return popcount(x) < popcount(y); });
  EXPECT_GE(popcount(b), 3);
  EXPECT_FALSE(st_separable(ps, b, ps.all() & ~b, 2, 1).separable());
}
