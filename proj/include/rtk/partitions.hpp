#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rtk/errors.hpp"
#include "rtk/geometry.hpp"
#include "rtk/hull_oracle.hpp"

namespace rtk {

/// Index groups whose hulls make up an s-convex set (the union of the hulls).
using Cover = std::vector<Mask>;

/// Raised when a construction needs disjoint hulls but two of them meet.
class PreconditionError : public InputError {
 public:
  PreconditionError(const std::string& what, Point common_point)
      : InputError(what), common_point_(std::move(common_point)) {}
  const Point& common_point() const { return common_point_; }

 private:
  Point common_point_;
};

/// Record of an exhaustive grouping enumeration. Part i is split into
/// exactly block_counts[i] = min(s_i, |part i|) blocks: refining a block keeps
/// every cross hull empty, so allowing fewer blocks adds no new covers.
struct ExhaustionTranscript {
  std::vector<int> part_sizes;
  std::vector<int> block_counts;
  BigInt enumerated;   // candidate grouping tuples visited
  BigInt closed_form;  // prod_i S(part_sizes[i], block_counts[i])
  std::uint64_t cap = 0;
  bool complete() const { return enumerated == closed_form; }
};

/// Groupings of A and B with every cross pair strictly separated. Row i of
/// `hyperplanes` has X_i on the positive side of each h_{i,j} and Y_j on
/// the negative side.
struct SeparationCertificate {
  Cover a_groups;
  Cover b_groups;
  std::vector<std::vector<Hyperplane>> hyperplanes;

  /// K_i = intersection of the closed positive sides of row i.
  std::vector<Polyhedron> polyhedra() const;
};

struct SeparabilityResult {
  std::optional<SeparationCertificate> certificate;
  ExhaustionTranscript transcript;
  bool separable() const { return certificate.has_value(); }
};

/// Decides whether some union of at most s convex sets containing A misses
/// some union of at most t convex sets containing B. Throws InputError on
/// overlapping or empty sides or s, t < 1; ResourceError past `cap`
/// grouping pairs.
SeparabilityResult st_separable(HullOracle& oracle, Mask a, Mask b, int s, int t,
                                std::uint64_t cap = 10'000'000);
SeparabilityResult st_separable(const PointSet& ps, Mask a, Mask b, int s, int t,
                                std::uint64_t cap = 10'000'000);

/// Re-checks a separation certificate from scratch.
bool verify_separation(const PointSet& ps, Mask a, Mask b, int s, int t,
                       const SeparationCertificate& cert);

/// Per cross tuple of groups (one group per part, tuples in lexicographic
/// order of `choice`), a sub-tuple of those groups and a Farkas vector over
/// hull_system(proof_groups).
struct TupleProof {
  std::vector<int> choice;
  std::vector<Mask> proof_groups;
  RatVec farkas;
};

struct EmptyIntersectionCertificate {
  std::vector<Cover> groupings;
  std::vector<TupleProof> tuples;
};

struct JointCoverResult {
  std::optional<EmptyIntersectionCertificate> certificate;
  ExhaustionTranscript transcript;
  bool empty_cover_exists() const { return certificate.has_value(); }
};

/// Decides whether covers C_i of parts[i] by at most s_list[i] convex sets
/// exist with empty common intersection.
JointCoverResult joint_cover_empty(HullOracle& oracle, const std::vector<Mask>& parts,
                                   const std::vector<int>& s_list,
                                   std::uint64_t cap = 10'000'000);

/// Certifies that the hull covers have empty joint intersection: one proof
/// per cross tuple, each re-checked. Returns nullopt (and the common point
/// through `witness`) when some tuple of hulls meets.
std::optional<EmptyIntersectionCertificate> certify_covers_disjoint(
    HullOracle& oracle, const std::vector<Cover>& covers, Point* witness = nullptr);

/// Checks the tuple proofs of a certificate against its own groupings:
/// every cross tuple is present in order and each Farkas vector verifies.
bool verify_cover_proofs(const PointSet& ps, const EmptyIntersectionCertificate& cert);

/// verify_cover_proofs plus: groupings[i] partitions parts[i] into at most
/// s_list[i] groups.
bool verify_empty_intersection(const PointSet& ps, const std::vector<Mask>& parts,
                               const std::vector<int>& s_list,
                               const EmptyIntersectionCertificate& cert);

/// A partition every cover of which must meet, with the exhaustion record.
struct GoodPartition {
  std::vector<Mask> parts;
  ExhaustionTranscript transcript;
};

struct RadonSearchResult {
  std::optional<GoodPartition> good;
  std::uint64_t partitions_examined = 0;
  /// When no good partition exists: every bipartition (A, B) with its
  /// separation certificate, in search order.
  std::vector<std::pair<std::vector<Mask>, SeparationCertificate>> refutations;
};

/// Bipartitions (A, S \ A) with A and S \ A nonempty, by increasing |A| and
/// lexicographically (by sorted index list) within a size. Returns the first
/// one that is not (s,t)-separable.
RadonSearchResult good_radon_partition(HullOracle& oracle, Mask s_set, int s, int t,
                                       unsigned jobs = 1, std::uint64_t cap = 10'000'000);

struct TverbergSearchResult {
  std::optional<GoodPartition> good;
  std::uint64_t partitions_examined = 0;
  std::vector<std::pair<std::vector<Mask>, EmptyIntersectionCertificate>> refutations;
};

/// Partitions of S into r nonempty parts. With all s_list entries equal the
/// parts are unordered and visited in restricted-growth-string order;
/// otherwise ordered, by lexicographic part-label vectors.
TverbergSearchResult good_tverberg_partition(HullOracle& oracle, Mask s_set, int r,
                                             const std::vector<int>& s_list, unsigned jobs = 1,
                                             std::uint64_t cap = 10'000'000);

/// K_i as the intersection of separators h_{i,j}, with the postconditions
/// checked exactly. Throws PreconditionError when some CH(X_i) meets CH(Y_j).
std::vector<Polyhedron> build_K_polyhedra(const PointSet& ps, const Cover& a_groups,
                                          const Cover& b_groups);

/// sets[i][k] is a polyhedron containing CH(covers[i][k]).
struct RSeparation {
  std::vector<std::vector<Polyhedron>> sets;
};

/// Builds K_1, ..., K_r one at a time: K_i's components separate the hulls
/// of C_i from every nonempty piece formed by one component of each K_j
/// (j < i) and one hull of each C_j (j > i). Throws PreconditionError when
/// the covers have a common point.
RSeparation build_r_separation(const PointSet& ps, const std::vector<Cover>& covers);

struct PolyhedraTupleProof {
  std::vector<int> choice;
  RatVec farkas;  // over region_system(polyhedra_region(tuple))
};

struct RSeparationAudit {
  bool contains_covers = false;
  bool empty_intersection = false;
  std::size_t max_facets = 0;
  BigInt facet_bound;  // s^(r-1), s = largest cover size
  int overlap = 0;     // largest number of components of one cover sharing a point
  std::vector<PolyhedraTupleProof> tuples;
  bool ok() const { return contains_covers && empty_intersection && BigInt(static_cast<unsigned long>(max_facets)) <= facet_bound; }
};

RSeparationAudit audit_r_separation(const PointSet& ps, const std::vector<Cover>& covers,
                                    const RSeparation& sep);

/// Largest k such that some k groups of the cover have a common point (0
/// for an empty cover).
int overlap_level(HullOracle& oracle, const Cover& groups);

}  // namespace rtk
