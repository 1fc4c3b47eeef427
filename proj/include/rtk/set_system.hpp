#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "rtk/bits.hpp"
#include "rtk/rational.hpp"

namespace rtk {

/// Finite hypergraph on {0..n-1}: edges are deduplicated and kept in
/// increasing mask order.
class SetSystem {
 public:
  SetSystem() = default;
  /// Throws InputError if n > 64 or an edge leaves the ground set.
  SetSystem(std::size_t n, std::vector<Mask> edges, std::string provenance = {});

  std::size_t ground_size() const { return n_; }
  Mask ground() const { return full_mask(n_); }
  const std::vector<Mask>& edges() const { return edges_; }
  const std::string& provenance() const { return provenance_; }

  bool operator==(const SetSystem& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  std::size_t n_ = 0;
  std::vector<Mask> edges_;
  std::string provenance_;
};

/// Distinct traces e & s, ascending.
std::vector<Mask> traces_on(const SetSystem& sys, Mask s);

bool is_shattered(const SetSystem& sys, Mask s);

struct DimensionResult {
  int dimension = 0;
  Mask witness = 0;  // lowest-mask set of that size achieving it
};

/// Size-descending exhaustive search; sizes k with 2^k > |E| are skipped
/// since they cannot be shattered. `cap` bounds the number of subsets tested.
DimensionResult vc_dimension(const SetSystem& sys, std::uint64_t cap = 50'000'000);
inline int vc_dim(const SetSystem& sys) { return vc_dimension(sys).dimension; }

/// max over |S| = m of the number of distinct traces on S. Throws
/// ResourceError when C(n, m) exceeds `cap`.
std::uint64_t primal_shatter(const SetSystem& sys, int m, std::uint64_t cap = 1'000'000);

/// sum_{i <= d} C(m, i)
BigInt sauer_bound(int m, int d);

/// sum_{i <= t} C(m, i) (r-1)^(m-i)
BigInt r_shatter_bound(int m, int t, int r);

struct ShatterRow {
  int m = 0;
  BigInt computed;
  BigInt bound;
  bool pass = true;
};

struct ShatterProfile {
  int dimension = 0;  // vc_dim, or r_vc_dim for r-profiles
  int r = 2;
  std::vector<ShatterRow> rows;

  bool all_pass() const {
    for (const auto& row : rows) {
      if (!row.pass) return false;
    }
    return true;
  }
};

ShatterProfile check_sauer(const SetSystem& sys, int m_max, std::uint64_t cap = 1'000'000);

/// Ordered r-partition of `base`; empty parts are allowed.
struct RPartition {
  Mask base = 0;
  std::vector<Mask> parts;

  /// Throws InputError unless the parts are disjoint and cover `base`.
  void validate() const;
};

/// Answers realizability queries for partitions of one fixed base set by
/// reachability over running intersections of traces on that set.
class RealizabilityOracle {
 public:
  RealizabilityOracle(const SetSystem& sys, Mask base);

  /// parts are global masks, disjoint, with union == base.
  bool realizable(const std::vector<Mask>& parts);

  Mask base() const { return base_; }

 private:
  const std::vector<Mask>& minimal_supersets(Mask local);

  Mask base_;
  int width_;
  std::vector<Mask> traces_;  // local (compressed) coordinates
  std::unordered_map<Mask, std::vector<Mask>> minimal_cache_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t generation_ = 0;
};

bool is_realizable(const SetSystem& sys, const RPartition& part);

/// Every partition of s into r parts is realizable. Realizability does not
/// depend on the order of the parts, so each unordered partition is tested
/// once (set partitions into at most r blocks, padded with empty parts).
bool is_r_shattered(const SetSystem& sys, Mask s, int r);

/// Largest r-shattered set, found level by level; r-shattering is
/// hereditary so level k only tests sets all of whose (k-1)-subsets passed.
/// `cap` bounds the number of tested sets. Throws InputError for r < 2.
DimensionResult r_vc_dimension(const SetSystem& sys, int r, std::uint64_t cap = 1'000'000);
inline int r_vc_dim(const SetSystem& sys, int r) { return r_vc_dimension(sys, r).dimension; }

/// Number of realizable ordered r-partitions of s. Throws ResourceError when
/// r^|s| exceeds `cap`.
BigInt count_realizable(const SetSystem& sys, Mask s, int r, std::uint64_t cap = 100'000'000);

/// max over |S| = m of count_realizable, with the binomial-type bound for
/// t = r_vc_dim, for m = 0..m_max.
ShatterProfile check_r_shatter(const SetSystem& sys, int r, int m_max,
                               std::uint64_t cap = 1'000'000);

/// Least f with (sum_{i<=d} C(f,i))^r < (r/(r-1))^f, evaluated in exact
/// integers as (sum)^r (r-1)^f < r^f. Any r-shattered set in a system of
/// VC-dimension d has at most f-1 elements. Requires d >= 0, r >= 2.
int min_f_counting(int d, int r);

}  // namespace rtk
