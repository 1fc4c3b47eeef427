#pragma once

#include <memory>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "rtk/geometry.hpp"

namespace rtk {

/// Verdict on whether the hulls of a tuple of index groups share a point.
/// When they do not, `proof_groups` is a sub-tuple whose hulls already have
/// empty intersection and `farkas` certifies it over hull_system(proof_groups).
struct TupleVerdict {
  bool empty = false;
  std::vector<Mask> proof_groups;
  RatVec farkas;
};

/// Memoized hull-intersection queries over one point set. Keys are sorted
/// group lists, and each verdict is a deterministic function of its key, so
/// results do not depend on which thread filled the cache first.
class HullOracle {
 public:
  explicit HullOracle(const PointSet& ps) : ps_(ps) {}
  HullOracle(const HullOracle&) = delete;
  HullOracle& operator=(const HullOracle&) = delete;

  const PointSet& points() const { return ps_; }

  /// CH(a) and CH(b) are disjoint (both nonempty).
  bool disjoint(Mask a, Mask b) { return verdict({a, b})->empty; }

  /// Checks sub-tuples first (dropping one group at a time) so the stored
  /// proof is the first empty sub-tuple found in canonical order.
  std::shared_ptr<const TupleVerdict> verdict(std::vector<Mask> groups);

  std::size_t cache_size() const;

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<Mask>& k) const noexcept {
      std::size_t h = 0xcbf29ce484222325ULL;
      for (Mask m : k) h = (h ^ (m * 0x9e3779b97f4a7c15ULL)) * 0x100000001b3ULL;
      return h;
    }
  };

  const PointSet& ps_;
  mutable std::shared_mutex mu_;
  std::unordered_map<std::vector<Mask>, std::shared_ptr<const TupleVerdict>, KeyHash> cache_;
};

}  // namespace rtk
