#include "rtk/hull_oracle.hpp"

#include <algorithm>
#include <mutex>

#include "rtk/errors.hpp"

namespace rtk {

std::shared_ptr<const TupleVerdict> HullOracle::verdict(std::vector<Mask> groups) {
  std::sort(groups.begin(), groups.end());
  groups.erase(std::unique(groups.begin(), groups.end()), groups.end());
  if (groups.empty() || groups.front() == 0) {
    throw InputError("hull tuple queries need nonempty groups");
  }
  {
    std::shared_lock lock(mu_);
    auto it = cache_.find(groups);
    if (it != cache_.end()) return it->second;
  }
  auto out = std::make_shared<TupleVerdict>();
  bool decided = false;
  if (groups.size() >= 3) {
    for (std::size_t drop = 0; drop < groups.size() && !decided; ++drop) {
      std::vector<Mask> sub;
      for (std::size_t i = 0; i < groups.size(); ++i) {
        if (i != drop) sub.push_back(groups[i]);
      }
      auto v = verdict(std::move(sub));
      if (v->empty) {
        *out = *v;
        decided = true;
      }
    }
  }
  if (!decided && groups.size() >= 2) {
    HullIntersection hi = hulls_common_point(ps_, groups);
    if (!hi.nonempty()) {
      out->empty = true;
      out->proof_groups = groups;
      out->farkas = std::move(hi.farkas);
    }
  }
  std::unique_lock lock(mu_);
  auto [it, inserted] = cache_.emplace(std::move(groups), std::move(out));
  return it->second;
}

std::size_t HullOracle::cache_size() const {
  std::shared_lock lock(mu_);
  return cache_.size();
}

}  // namespace rtk
