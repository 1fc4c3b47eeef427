#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rtk/constructions.hpp"
#include "rtk/errors.hpp"
#include "rtk/fsearch.hpp"
#include "rtk/hull_oracle.hpp"
#include "rtk/io.hpp"

using namespace rtk;

namespace {

Mask m(std::initializer_list<int> idx) { return from_indices(std::vector<int>(idx)); }

PointSet unit_square() { return oracle::make_points(2, {{0, 0}, {1, 1}, {0, 1}, {1, 0}}); }

// Round trip through text, as a file would.
Json reparse(const Json& j) { return parse_json(dump(j)); }

}  // namespace

TEST(Io, PointSetRoundTrip) {
  PointSet ps = oracle::make_points(2, {{Rat(1, 3), Rat(-2)}, {Rat(0), Rat(7, 5)}});
  ps.labels = {"a", "b"};
  const Json j = to_json(ps);
  EXPECT_EQ(j["points"][0][0], "1/3");
  const PointSet back = point_set_from_json(reparse(j));
  EXPECT_EQ(back.points, ps.points);
  EXPECT_EQ(back.labels, ps.labels);
  EXPECT_EQ(dump(to_json(back)), dump(j));
}

TEST(Io, PointSetAcceptsIntegersAndRejectsJunk) {
  const PointSet ps = point_set_from_json(parse_json(R"({"dim":1,"points":[[3],["-1/2"]]})"));
  EXPECT_EQ(ps.points[0][0], Rat(3));
  EXPECT_EQ(ps.points[1][0], Rat(-1, 2));
  EXPECT_THROW(point_set_from_json(parse_json(R"({"dim":2,"points":[[1]]})")), InputError);
  EXPECT_THROW(point_set_from_json(parse_json(R"({"points":[[1]]})")), InputError);
  EXPECT_THROW(point_set_from_json(parse_json(R"({"dim":1,"points":[[1.5]]})")), InputError);
  EXPECT_THROW(parse_json("{"), InputError);
}

TEST(Io, SetSystemAndSpaceRoundTrip) {
  const SetSystem sys(4, {m({0, 1}), m({2}), m({})}, "halfspace");
  const Json j = to_json(sys);
  EXPECT_EQ(j["meta"]["provenance"], "halfspace");
  const SetSystem back = set_system_from_json(reparse(j));
  EXPECT_EQ(back, sys);
  EXPECT_EQ(back.provenance(), "halfspace");
  EXPECT_THROW(set_system_from_json(parse_json(R"({"n":2,"edges":[[0,2]]})")), InputError);

  const ConvexitySpace sp = interval_space(4);
  EXPECT_EQ(convexity_space_from_json(reparse(to_json(sp))).family, sp.family);
  EXPECT_THROW(convexity_space_from_json(parse_json(R"({"n":2,"family":[[0]]})")), InputError);
}

TEST(Io, ProfileCsvHasSchemaLine) {
  const SetSystem sys(3, {0, 1, 2, 3}, "");
  const std::string csv = profile_csv(check_sauer(sys, 3));
  EXPECT_EQ(csv.rfind("# schema: shatter-profile v1", 0), 0U);
  EXPECT_NE(csv.find("\nm,computed,bound,pass\n"), std::string::npos);
  EXPECT_NE(csv.find("\n2,4,4,true\n"), std::string::npos);
}

TEST(Certificates, SeparationRoundTripAndTamper) {
  const PointSet ps = oracle::make_points(1, {{0}, {1}, {5}, {6}});
  const auto res = st_separable(ps, m({0, 2}), m({1, 3}), 2, 2);
  ASSERT_TRUE(res.separable());
  Json cert = reparse(separation_certificate(ps, m({0, 2}), m({1, 3}), 2, 2, *res.certificate));
  EXPECT_TRUE(verify_certificate(cert).valid);
  cert["t"] = 1;
  EXPECT_FALSE(verify_certificate(cert).valid);
}

TEST(Certificates, EmptyIntersectionRoundTripAndTamper) {
  const PointSet ps = oracle::make_points(1, {{1}, {2}, {3}, {4}});
  HullOracle oracle(ps);
  const std::vector<Mask> parts{m({0}), m({1, 2}), m({3})};
  const JointCoverResult res = joint_cover_empty(oracle, parts, {1, 1, 1});
  ASSERT_TRUE(res.empty_cover_exists());
  Json cert = reparse(empty_intersection_certificate(ps, parts, {1, 1, 1}, *res.certificate));
  EXPECT_TRUE(verify_certificate(cert).valid);
  cert["points"]["points"][1][0] = "9/2";
  EXPECT_FALSE(verify_certificate(cert).valid);
}

TEST(Certificates, GoodPartitionIsRecheckedByEnumeration) {
  const PointSet ps = unit_square();
  HullOracle oracle(ps);
  const RadonSearchResult res = good_radon_partition(oracle, ps.all(), 1, 1);
  ASSERT_TRUE(res.good.has_value());
  Json cert = reparse(good_partition_certificate(ps, res.good->parts, {1, 1}, *res.good));
  const CertificateCheck ok = verify_certificate(cert);
  EXPECT_TRUE(ok.valid) << ok.detail;
  // With two groups allowed, the diagonals can be covered apart.
  Json loose = cert;
  loose["s_list"] = {2, 1};
  loose["transcript"]["closed_form"] = "1";
  loose["transcript"]["enumerated"] = "1";
  EXPECT_FALSE(verify_certificate(loose).valid);
  Json wrong_count = cert;
  wrong_count["transcript"]["enumerated"] = "2";
  EXPECT_FALSE(verify_certificate(wrong_count).valid);
}

TEST(Certificates, HullIntersectionBothOutcomes) {
  const PointSet ps = unit_square();
  const Json meet = reparse(hull_intersection_certificate(ps, hulls_common_point(ps, {m({0, 1}), m({2, 3})})));
  EXPECT_TRUE(meet.contains("point"));
  EXPECT_TRUE(verify_certificate(meet).valid);
  const Json apart = reparse(hull_intersection_certificate(ps, hulls_common_point(ps, {m({0, 2}), m({1, 3})})));
  EXPECT_TRUE(apart.contains("farkas"));
  EXPECT_TRUE(verify_certificate(apart).valid);
  Json bad = meet;
  bad["point"][0] = "1/3";
  EXPECT_FALSE(verify_certificate(bad).valid);
}

TEST(Certificates, RSeparationRoundTripAndTamper) {
  const PointSet ps = oracle::make_points(1, {{0}, {1}, {5}, {6}, {10}, {11}});
  const std::vector<Cover> covers{{m({0, 1})}, {m({2, 3})}, {m({4, 5})}};
  const RSeparation sep = build_r_separation(ps, covers);
  const RSeparationAudit audit = audit_r_separation(ps, covers, sep);
  ASSERT_TRUE(audit.ok());
  Json cert = reparse(r_separation_certificate(ps, covers, sep, audit));
  EXPECT_TRUE(verify_certificate(cert).valid);
  // K_1 has no facets here (the later hulls are already disjoint); the
  // last set carries the separating facets.
  EXPECT_TRUE(cert["sets"][0][0].empty());
  cert["sets"][2][0].clear();
  EXPECT_FALSE(verify_certificate(cert).valid);
}

TEST(Certificates, UnknownKind) {
  EXPECT_THROW(verify_certificate(parse_json(R"({"kind":"nope","points":{"dim":1,"points":[]}})")),
               InputError);
}

TEST(FSearch, Examples) {
  FSearchConfig cfg;
  cfg.d = 2;
  cfg.s_list = {1, 1};
  cfg.n = 4;
  cfg.samples = 8;
  EXPECT_TRUE(f_search(cfg).all_good());

  cfg.s_list = {2, 1};
  cfg.n = 5;
  cfg.samples = 2;
  cfg.sampler = Sampler::kConvexPosition;
  const FSearchReport conv = f_search(cfg);
  ASSERT_TRUE(conv.witness_index.has_value());
  EXPECT_EQ(*conv.witness_index, 0U);
  EXPECT_EQ(conv.witness->size(), 5U);

  cfg.d = 1;
  cfg.s_list = {1, 1, 1};
  cfg.n = 4;
  cfg.samples = 3;
  cfg.sampler = Sampler::kRandomRational;
  EXPECT_EQ(f_search(cfg).good_count, 0U);
}

TEST(FSearch, SamplesDependOnlyOnSeedAndIndex) {
  FSearchConfig cfg;
  cfg.n = 6;
  cfg.seed = 42;
  const PointSet a = draw_sample(cfg, 3);
  cfg.jobs = 4;
  cfg.samples = 100;
  EXPECT_EQ(draw_sample(cfg, 3).points, a.points);
  cfg.seed = 43;
  EXPECT_NE(draw_sample(cfg, 3).points, a.points);
  EXPECT_EQ(parse_sampler("moment-curve"), Sampler::kMomentCurve);
  EXPECT_EQ(sampler_name(Sampler::kFile), "file");
  EXPECT_THROW(parse_sampler("bogus"), InputError);
}
