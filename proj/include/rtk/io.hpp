#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rtk/constructions.hpp"
#include "rtk/convexity.hpp"
#include "rtk/geometry.hpp"
#include "rtk/partitions.hpp"
#include "rtk/set_system.hpp"

namespace rtk {

using Json = nlohmann::json;

/// Reads a whole file; InputError when it cannot be opened.
std::string read_file(const std::string& path);
/// Parses JSON text; malformed input is an InputError.
Json parse_json(const std::string& text);
/// Writes `text` to `path`, creating parent directories.
void write_file(const std::string& path, const std::string& text);
/// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);

Json mask_to_json(Mask m);
Mask mask_from_json(const Json& j, std::size_t n);
Json rat_vec_to_json(const RatVec& v);
RatVec rat_vec_from_json(const Json& j);

/// {"dim": d, "points": [["p/q", ...], ...], "labels": [...]}
Json to_json(const PointSet& ps);
PointSet point_set_from_json(const Json& j);

/// {"n": n, "edges": [[indices], ...], "meta": {"provenance": ...}}
Json to_json(const SetSystem& sys);
SetSystem set_system_from_json(const Json& j);

/// {"n": n, "family": [[indices], ...]}
Json to_json(const ConvexitySpace& space);
ConvexitySpace convexity_space_from_json(const Json& j);

Json to_json(const Hyperplane& h);
Hyperplane hyperplane_from_json(const Json& j);
Json to_json(const ExhaustionTranscript& t);

/// Self-contained certificates; every one embeds its point set and a
/// "kind" tag understood by verify_certificate.
Json separation_certificate(const PointSet& ps, Mask a, Mask b, int s, int t,
                            const SeparationCertificate& cert);
Json empty_intersection_certificate(const PointSet& ps, const std::vector<Mask>& parts,
                                    const std::vector<int>& s_list,
                                    const EmptyIntersectionCertificate& cert);
Json good_partition_certificate(const PointSet& ps, const std::vector<Mask>& parts,
                                const std::vector<int>& s_list, const GoodPartition& good);
Json hull_intersection_certificate(const PointSet& ps, const HullIntersection& hi);
Json r_separation_certificate(const PointSet& ps, const std::vector<Cover>& covers,
                              const RSeparation& sep, const RSeparationAudit& audit);

struct CertificateCheck {
  bool valid = false;
  std::string kind;
  std::string detail;
};

/// Re-checks a certificate using exact kernel predicates only. Good-partition
/// certificates are re-checked by enumerating every grouping again and
/// testing each with hulls_common_point.
CertificateCheck verify_certificate(const Json& cert);

/// CSV with a versioned schema comment line first.
std::string profile_csv(const ShatterProfile& profile);
Json to_json(const ShatterProfile& profile);

}  // namespace rtk
