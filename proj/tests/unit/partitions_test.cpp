#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "rtk/constructions.hpp"
#include "rtk/errors.hpp"
#include "rtk/hull_oracle.hpp"
#include "rtk/partitions.hpp"
#include "rtk/ranges.hpp"

using namespace rtk;

namespace {

PointSet line(std::initializer_list<int> xs) {
  std::vector<std::vector<Rat>> c;
  for (int x : xs) c.push_back({Rat(x)});
  return oracle::make_points(1, c);
}

PointSet unit_square() { return oracle::make_points(2, {{0, 0}, {1, 1}, {0, 1}, {1, 0}}); }

PointSet hexagon_center() {
  return oracle::make_points(2, {{2, 0}, {1, 2}, {-1, 2}, {-2, 0}, {-1, -2}, {1, -2}, {0, 0}});
}

Mask m(std::initializer_list<int> idx) { return from_indices(std::vector<int>(idx)); }

}  // namespace

TEST(StSeparable, SeparatedOnALine) {
  const PointSet ps = line({0, 1, 5, 6});
  const SeparabilityResult res = st_separable(ps, m({0, 1}), m({2, 3}), 1, 1);
  ASSERT_TRUE(res.separable());
  EXPECT_EQ(res.certificate->hyperplanes.size(), 1U);
  EXPECT_EQ(res.certificate->hyperplanes[0].size(), 1U);
  EXPECT_TRUE(verify_separation(ps, m({0, 1}), m({2, 3}), 1, 1, *res.certificate));
}

TEST(StSeparable, SquareDiagonals) {
  const PointSet ps = unit_square();
  const SeparabilityResult res = st_separable(ps, m({0, 1}), m({2, 3}), 1, 1);
  EXPECT_FALSE(res.separable());
  EXPECT_TRUE(res.transcript.complete());
  EXPECT_EQ(res.transcript.closed_form, 1);
  // Two groups on one side are enough.
  EXPECT_TRUE(st_separable(ps, m({0, 1}), m({2, 3}), 2, 1).separable());
}

TEST(StSeparable, InputErrors) {
  const PointSet ps = unit_square();
  EXPECT_THROW(st_separable(ps, m({0, 1}), m({1, 2}), 1, 1), InputError);
  EXPECT_THROW(st_separable(ps, 0, m({1, 2}), 1, 1), InputError);
  EXPECT_THROW(st_separable(ps, m({0}), m({1, 2}), 0, 1), InputError);
}

TEST(StSeparable, ConvexPentagonEverySplitTwoOne) {
  const PointSet ps = convex_position(5);
  HullOracle oracle(ps);
  for (Mask a = 1; a < ps.all(); ++a) {
    const Mask b = ps.all() & ~a;
    const SeparabilityResult res = st_separable(oracle, a, b, 2, 1);
    ASSERT_TRUE(res.separable()) << a;
    EXPECT_TRUE(verify_separation(ps, a, b, 2, 1, *res.certificate));
  }
}

TEST(StSeparable, TamperedCertificateRejected) {
  const PointSet ps = line({0, 1, 5, 6});
  SeparationCertificate cert = *st_separable(ps, m({0, 1}), m({2, 3}), 1, 1).certificate;
  cert.hyperplanes[0][0].offset += 10;
  EXPECT_FALSE(verify_separation(ps, m({0, 1}), m({2, 3}), 1, 1, cert));
  SeparationCertificate fewer = *st_separable(ps, m({0, 1}), m({2, 3}), 1, 1).certificate;
  fewer.a_groups = {m({0})};
  EXPECT_FALSE(verify_separation(ps, m({0, 1}), m({2, 3}), 1, 1, fewer));
}

TEST(StSeparable, CapRaisesResourceError) {
  const PointSet ps = convex_position(9);
  EXPECT_THROW(st_separable(ps, m({0, 2, 4, 6, 8}), m({1, 3, 5, 7}), 3, 3, 5), ResourceError);
}

TEST(GoodRadon, FourPlanarPointsAlwaysFound) {
  CounterRng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const PointSet ps = oracle::random_points(rng, 4, 2);
    HullOracle oracle(ps);
    const RadonSearchResult res = good_radon_partition(oracle, ps.all(), 1, 1);
    ASSERT_TRUE(res.good.has_value());
    const auto& parts = res.good->parts;
    EXPECT_TRUE(oracle::hulls_meet(ps, {parts[0], parts[1]}));
  }
}

TEST(GoodRadon, TriangleHasNone) {
  const PointSet ps = oracle::make_points(2, {{0, 0}, {3, 0}, {1, 2}});
  HullOracle oracle(ps);
  const RadonSearchResult res = good_radon_partition(oracle, ps.all(), 1, 1);
  EXPECT_FALSE(res.good.has_value());
  // Ordered bipartitions: each split is visited from both sides.
  EXPECT_EQ(res.partitions_examined, 6U);
  ASSERT_EQ(res.refutations.size(), 6U);
  for (const auto& [parts, cert] : res.refutations) {
    EXPECT_TRUE(verify_separation(ps, parts[0], parts[1], 1, 1, cert));
  }
}

TEST(GoodRadon, SearchOrderAndSquare) {
  const PointSet ps = unit_square();
  HullOracle oracle(ps);
  const RadonSearchResult res = good_radon_partition(oracle, ps.all(), 1, 1);
  ASSERT_TRUE(res.good.has_value());
  EXPECT_EQ(res.good->parts, (std::vector<Mask>{m({0, 1}), m({2, 3})}));
  // Size-1 sides come first: 4 of them, then {0,1} is the first of size 2.
  EXPECT_EQ(res.partitions_examined, 5U);
}

TEST(GoodRadon, ConvexPositionTwoOne) {
  {
    const PointSet ps = convex_position(5);
    HullOracle oracle(ps);
    EXPECT_FALSE(good_radon_partition(oracle, ps.all(), 2, 1).good.has_value());
  }
  {
    const PointSet ps = convex_position(6);
    HullOracle oracle(ps);
    EXPECT_TRUE(good_radon_partition(oracle, ps.all(), 2, 1).good.has_value());
  }
  CounterRng rng(2);
  for (int trial = 0; trial < 5; ++trial) {
    const PointSet ps = oracle::random_points(rng, 6, 2);
    HullOracle oracle(ps);
    EXPECT_TRUE(good_radon_partition(oracle, ps.all(), 2, 1).good.has_value());
  }
}

TEST(GoodRadon, IndependentOfJobs) {
  CounterRng rng(12);
  for (int trial = 0; trial < 6; ++trial) {
    const PointSet ps = oracle::random_points(rng, 6, 2);
    HullOracle o1(ps);
    HullOracle o4(ps);
    const RadonSearchResult a = good_radon_partition(o1, ps.all(), 2, 1, 1);
    const RadonSearchResult b = good_radon_partition(o4, ps.all(), 2, 1, 4);
    ASSERT_EQ(a.good.has_value(), b.good.has_value());
    if (a.good) EXPECT_EQ(a.good->parts, b.good->parts);
    EXPECT_EQ(a.partitions_examined, b.partitions_examined);
  }
}

TEST(JointCover, TverbergPartitionOnALine) {
  // 0..4 at positions 1..5; ({p3}, {p1,p4}, {p2,p5}) in one-based names.
  const PointSet ps = line({1, 2, 3, 4, 5});
  HullOracle oracle(ps);
  const JointCoverResult res = joint_cover_empty(oracle, {m({2}), m({0, 3}), m({1, 4})}, {1, 1, 1});
  EXPECT_FALSE(res.empty_cover_exists());
  EXPECT_TRUE(res.transcript.complete());
}

TEST(JointCover, FourCollinearPointsFailTverberg) {
  const PointSet ps = line({1, 2, 3, 4});
  HullOracle oracle(ps);
  const TverbergSearchResult res = good_tverberg_partition(oracle, ps.all(), 3, {1, 1, 1});
  EXPECT_FALSE(res.good.has_value());
  EXPECT_EQ(res.partitions_examined, 6U);  // S(4,3)
  for (const auto& [parts, cert] : res.refutations) {
    EXPECT_TRUE(verify_empty_intersection(ps, parts, {1, 1, 1}, cert));
  }
}

TEST(JointCover, CertificatesVerifyAndTamperingFails) {
  CounterRng rng(44);
  int certified = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const PointSet ps = oracle::random_points(rng, 7, 2);
    HullOracle oracle(ps);
    const std::vector<Mask> parts{m({0, 1, 2}), m({3, 4}), m({5, 6})};
    const JointCoverResult res = joint_cover_empty(oracle, parts, {2, 1, 1});
    oracle::MeetCache mc(ps);
    EXPECT_EQ(res.empty_cover_exists(), oracle::joint_empty_def(mc, parts, {2, 1, 1}));
    if (!res.empty_cover_exists()) continue;
    ++certified;
    EXPECT_TRUE(verify_empty_intersection(ps, parts, {2, 1, 1}, *res.certificate));
    EXPECT_FALSE(verify_empty_intersection(ps, parts, {1, 1, 1}, *res.certificate) &&
                 res.certificate->groupings[0].size() > 1);
    EmptyIntersectionCertificate bad = *res.certificate;
    for (auto& y : bad.tuples.back().farkas) y = -y;
    EXPECT_FALSE(verify_empty_intersection(ps, parts, {2, 1, 1}, bad));
  }
  EXPECT_GT(certified, 0);
}

TEST(GoodTverberg, Examples) {
  {
    const PointSet ps = line({1, 2, 3, 4, 5});
    HullOracle oracle(ps);
    EXPECT_TRUE(good_tverberg_partition(oracle, ps.all(), 3, {1, 1, 1}).good.has_value());
  }
  {
    const PointSet ps = hexagon_center();
    HullOracle oracle(ps);
    const TverbergSearchResult res = good_tverberg_partition(oracle, ps.all(), 3, {1, 1, 1});
    ASSERT_TRUE(res.good.has_value());
    EXPECT_TRUE(oracle::hulls_meet(ps, res.good->parts));
  }
  {
    const PointSet ps = line({1, 2, 3, 4, 5, 6, 7});
    HullOracle oracle(ps);
    EXPECT_TRUE(good_tverberg_partition(oracle, ps.all(), 2, {2, 2}).good.has_value());
  }
}

TEST(GoodTverberg, UnequalSListUsesOrderedParts) {
  // Three collinear points with s = (1, 2): labelings in lex order are
  // 001, 010, 011, 100, 101, 110 (digit = part of point i). The first whose
  // part 0 cannot be covered apart from a two-interval cover of part 1 is
  // 101: part 0 = {1} sits between the points of part 1.
  const PointSet ps = line({1, 2, 3});
  HullOracle oracle(ps);
  const TverbergSearchResult res = good_tverberg_partition(oracle, ps.all(), 2, {2, 1});
  ASSERT_TRUE(res.good.has_value());
  EXPECT_EQ(res.good->parts, (std::vector<Mask>{m({1}), m({0, 2})}));
  EXPECT_EQ(res.partitions_examined, 5U);
  // Equal s: unordered parts, the RGS 010 comes second after 001.
  const TverbergSearchResult eq = good_tverberg_partition(oracle, ps.all(), 2, {1, 1});
  ASSERT_TRUE(eq.good.has_value());
  EXPECT_EQ(eq.good->parts, (std::vector<Mask>{m({0, 2}), m({1})}));
  EXPECT_EQ(eq.partitions_examined, 2U);
}

// On small seeded planar sets, every bipartition and s, t <= 2: the library
// oracle against the definition, the r = 2 joint-cover oracle, the trace test
// for t = 1 and the one-sided union-polytope trace test.
TEST(CrossValidation, SmallPlanarCorpus) {
  CounterRng rng(1234);
  for (int trial = 0; trial < 6; ++trial) {
    const std::size_t n = 4 + static_cast<std::size_t>(trial % 3);
    const PointSet ps = oracle::random_points(rng, n, 2, 6, 2);
    HullOracle oracle(ps);
    oracle::MeetCache mc(ps);
    const TraceFamily half = halfspace_traces(oracle);
    for (int s = 1; s <= 2; ++s) {
      const TraceFamily poly = intersect_close(half, s);
      for (int t = 1; t <= 2; ++t) {
        const SetSystem upl = build_union_polytope_system(ps, s, t);
        for (Mask a = 1; a < ps.all(); ++a) {
          const Mask b = ps.all() & ~a;
          const bool sep = st_separable(oracle, a, b, s, t).separable();
          ASSERT_EQ(sep, oracle::separable_def(mc, a, b, s, t)) << trial << " " << a;
          ASSERT_EQ(sep, joint_cover_empty(oracle, {a, b}, {s, t}).empty_cover_exists());
          if (t == 1) {
            // A is covered by s halfspace complements iff some edge holds B and misses A.
            const bool trace = std::any_of(poly.traces.begin(), poly.traces.end(), [&](Mask e) {
              return is_subset(b, e) && (e & a) == 0;
            });
            ASSERT_EQ(sep, trace) << trial << " " << a << " s=" << s;
          }
          if (sep) {
            ASSERT_TRUE(std::binary_search(upl.edges().begin(), upl.edges().end(), a));
          }
        }
      }
    }
  }
}

TEST(BuildK, SeparatedSegments) {
  const PointSet ps = oracle::make_points(2, {{0, 0}, {0, 1}, {3, 0}, {3, 1}});
  const std::vector<Polyhedron> ks = build_K_polyhedra(ps, {m({0, 1})}, {m({2, 3})});
  ASSERT_EQ(ks.size(), 1U);
  EXPECT_EQ(ks[0].facets.size(), 1U);
  EXPECT_TRUE(ks[0].contains(ps.points[0]));
  EXPECT_FALSE(ks[0].contains(ps.points[2]));
}

TEST(BuildK, PreconditionCarriesCommonPoint) {
  const PointSet ps = unit_square();
  try {
    build_K_polyhedra(ps, {m({0, 1})}, {m({2, 3})});
    FAIL() << "expected PreconditionError";
  } catch (const PreconditionError& e) {
    const Point half{Rat(1, 2), Rat(1, 2)};
    EXPECT_EQ(e.common_point(), half);
  }
}

TEST(BuildK, WedgeTwoOne) {
  // B sits inside the wedge between two A groups.
  const PointSet ps = oracle::make_points(2, {{-3, 2}, {-2, 3}, {3, 2}, {2, 3}, {0, 0}, {0, 1}});
  const Cover a{m({0, 1}), m({2, 3})};
  const std::vector<Polyhedron> ks = build_K_polyhedra(ps, a, {m({4, 5})});
  ASSERT_EQ(ks.size(), 2U);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(ks[i].facets.size(), 1U);
    for (int p : to_indices(a[i])) EXPECT_TRUE(ks[i].contains(ps.points[p]));
    for (int p : {4, 5}) EXPECT_FALSE(ks[i].contains(ps.points[p]));
  }
}

TEST(BuildK, RandomDisjointConfigurations) {
  CounterRng rng(77);
  int built = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t d = 1 + static_cast<std::size_t>(trial % 3);
    const PointSet ps = oracle::random_points(rng, 7, d);
    const Mask a = static_cast<Mask>(rng.uniform(1, 126));
    const Mask b = ps.all() & ~a;
    const int s = static_cast<int>(rng.uniform(1, 3));
    const int t = static_cast<int>(rng.uniform(1, 3));
    const SeparabilityResult res = st_separable(ps, a, b, s, t);
    if (!res.separable()) continue;
    ++built;
    const auto& cert = *res.certificate;
    const std::vector<Polyhedron> ks = build_K_polyhedra(ps, cert.a_groups, cert.b_groups);
    ASSERT_EQ(ks.size(), cert.a_groups.size());
    for (std::size_t i = 0; i < ks.size(); ++i) {
      EXPECT_LE(ks[i].facets.size(), static_cast<std::size_t>(t));
      for (int p : to_indices(cert.a_groups[i])) EXPECT_TRUE(ks[i].contains(ps.points[p]));
      for (int p : to_indices(b)) EXPECT_FALSE(ks[i].contains(ps.points[p]));
    }
  }
  EXPECT_GT(built, 20);
}

TEST(RSeparation, TwoCoversGiveOneHalfspace) {
  const PointSet ps = line({0, 1, 5, 6});
  const RSeparation sep = build_r_separation(ps, {{m({0, 1})}, {m({2, 3})}});
  const RSeparationAudit audit = audit_r_separation(ps, {{m({0, 1})}, {m({2, 3})}}, sep);
  EXPECT_TRUE(audit.ok());
  EXPECT_EQ(audit.max_facets, 1U);
}

TEST(RSeparation, RandomThreeCoversOfTwo) {
  CounterRng rng(99);
  int built = 0;
  for (int trial = 0; trial < 40 && built < 10; ++trial) {
    const PointSet ps = oracle::random_points(rng, 7, 2);
    HullOracle oracle(ps);
    const std::vector<Mask> parts{m({0, 1, 2}), m({3, 4}), m({5, 6})};
    const JointCoverResult jc = joint_cover_empty(oracle, parts, {2, 2, 2});
    if (!jc.empty_cover_exists()) continue;
    ++built;
    const auto& covers = jc.certificate->groupings;
    const RSeparation sep = build_r_separation(ps, covers);
    const RSeparationAudit audit = audit_r_separation(ps, covers, sep);
    EXPECT_TRUE(audit.contains_covers);
    EXPECT_TRUE(audit.empty_intersection);
    EXPECT_LE(audit.max_facets, 4U);
    EXPECT_TRUE(audit.ok());
  }
  EXPECT_GT(built, 0);
}

TEST(RSeparation, MeetingCoversRejected) {
  const PointSet ps = unit_square();
  EXPECT_THROW(build_r_separation(ps, {{m({0, 1})}, {m({2, 3})}}), PreconditionError);
}

TEST(OverlapLevel, Examples) {
  const PointSet ps = unit_square();
  HullOracle oracle(ps);
  EXPECT_EQ(overlap_level(oracle, {}), 0);
  EXPECT_EQ(overlap_level(oracle, {m({0}), m({1})}), 1);
  EXPECT_EQ(overlap_level(oracle, {m({0, 1}), m({2, 3})}), 2);
}
