#include "rtk/convexity.hpp"

#include <algorithm>
#include <unordered_set>

#include "rtk/enumerate.hpp"
#include "rtk/errors.hpp"
#include "rtk/hull_oracle.hpp"
#include "rtk/parallel.hpp"

namespace rtk {
namespace {

std::string mask_text(Mask m) {
  std::string out = "{";
  for (int i : to_indices(m)) {
    if (out.size() > 1) out += ",";
    out += std::to_string(i);
  }
  return out + "}";
}

// Nonempty proper subsets A of p by |A|, then lexicographic index order.
std::vector<Mask> ordered_sides(Mask p) {
  const std::vector<int> el = to_indices(p);
  const int n = static_cast<int>(el.size());
  std::vector<Mask> out;
  for (int k = 1; k < n; ++k) {
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
      Mask m = 0;
      for (int i : pick) m |= Mask{1} << el[static_cast<std::size_t>(i)];
      out.push_back(m);
      int i = k - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j) - 1] + 1;
    }
  }
  return out;
}

std::vector<Mask> unions_of(const std::vector<Mask>& family, int k, std::uint64_t cap) {
  std::unordered_set<Mask> seen(family.begin(), family.end());
  seen.insert(0);
  std::vector<Mask> frontier = family;
  for (int level = 2; level <= k && !frontier.empty(); ++level) {
    std::vector<Mask> next;
    for (Mask a : frontier) {
      for (Mask b : family) {
        if (seen.insert(a | b).second) next.push_back(a | b);
      }
    }
    if (seen.size() > cap) throw ResourceError("union enumeration exceeds the cap");
    frontier = std::move(next);
  }
  std::vector<Mask> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ConvexitySpace::ConvexitySpace(std::size_t n_, std::vector<Mask> fam) : n(n_), family(std::move(fam)) {
  if (n > kMaxGround) throw InputError("convexity spaces support at most 64 points");
  for (Mask m : family) {
    if (!is_subset(m, full_mask(n))) throw InputError("family member leaves the ground set");
  }
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

SpaceCheck validate_space(const ConvexitySpace& space) {
  SpaceCheck out;
  const std::unordered_set<Mask> members(space.family.begin(), space.family.end());
  if (!members.count(0)) return {false, "empty set missing"};
  if (!members.count(full_mask(space.n))) return {false, "ground set missing"};
  for (std::size_t i = 0; i < space.family.size(); ++i) {
    for (std::size_t j = i + 1; j < space.family.size(); ++j) {
      const Mask c = space.family[i] & space.family[j];
      if (!members.count(c)) {
        return {false, "intersection of " + mask_text(space.family[i]) + " and " +
                           mask_text(space.family[j]) + " missing"};
      }
    }
  }
  return out;
}

Mask hull(const ConvexitySpace& space, Mask s) {
  Mask h = full_mask(space.n);
  for (Mask c : space.family) {
    if (is_subset(s, c)) h &= c;
  }
  return h;
}

std::optional<int> tverberg_number(const ConvexitySpace& space, int r, std::uint64_t cap) {
  if (r < 2) throw InputError("r must be at least 2");
  const Mask all = full_mask(space.n);
  std::uint64_t work = 0;
  // Every k-subset admitting such a partition implies the same for k+1,
  // so the least k is found by scanning upward.
  for (int k = r; k <= static_cast<int>(space.n); ++k) {
    bool every = true;
    for_each_k_subset(all, k, [&](Mask sub) {
      const std::vector<int> el = to_indices(sub);
      const bool found = for_each_rgs(k, r, r, [&](const std::vector<int>& rgs) {
        if (++work > cap) throw ResourceError("partition enumeration exceeds the cap");
        Mask inter = all;
        for (Mask b : rgs_blocks(rgs, el)) inter &= hull(space, b);
        return inter != 0;
      });
      if (!found) every = false;
      return !every;
    });
    if (every) return k;
  }
  return std::nullopt;
}

std::optional<int> radon_number(const ConvexitySpace& space, std::uint64_t cap) {
  return tverberg_number(space, 2, cap);
}

SetSystem halfspaces(const ConvexitySpace& space) {
  const std::unordered_set<Mask> members(space.family.begin(), space.family.end());
  const Mask all = full_mask(space.n);
  std::vector<Mask> out;
  for (Mask c : space.family) {
    if (members.count(all & ~c)) out.push_back(c);
  }
  return SetSystem(space.n, out, "abstract-halfspace");
}

SeparabilityCheck is_separable(const ConvexitySpace& space, std::uint64_t cap) {
  const SetSystem hsys = halfspaces(space);
  const std::vector<Mask>& hs = hsys.edges();
  std::uint64_t work = 0;
  SeparabilityCheck out;
  for (std::size_t i = 0; i < space.family.size(); ++i) {
    for (std::size_t j = 0; j < space.family.size(); ++j) {
      const Mask c1 = space.family[i], c2 = space.family[j];
      if ((c1 & c2) != 0) continue;
      if (++work > cap) throw ResourceError("pair enumeration exceeds the cap");
      const bool split = std::any_of(hs.begin(), hs.end(), [&](Mask h) {
        return is_subset(c1, h) && (c2 & h) == 0;
      });
      if (!split) {
        out.separable = false;
        out.violation = std::make_pair(c1, c2);
        return out;
      }
    }
  }
  return out;
}

AbstractGoodPartition abstract_good_partition(const ConvexitySpace& space, Mask p, int s, int t,
                                              std::uint64_t cap) {
  if (s < 1 || t < 1) throw InputError("s and t must be at least 1");
  if (!is_subset(p, full_mask(space.n))) throw InputError("point subset leaves the ground set");
  const std::vector<Mask> us = unions_of(space.family, s, cap);
  const std::vector<Mask> ut = unions_of(space.family, t, cap);
  AbstractGoodPartition out;
  for (Mask a : ordered_sides(p)) {
    const Mask b = p & ~a;
    ++out.partitions_examined;
    std::vector<Mask> ua, ub;
    for (Mask u : us) {
      if (is_subset(a, u)) ua.push_back(u);
    }
    for (Mask v : ut) {
      if (is_subset(b, v)) ub.push_back(v);
    }
    bool separated = false;
    for (Mask u : ua) {
      for (Mask v : ub) {
        if (++out.cover_pairs_checked > cap) throw ResourceError("cover enumeration exceeds the cap");
        if ((u & v) == 0) {
          separated = true;
          break;
        }
      }
      if (separated) break;
    }
    if (!separated) {
      out.partition = std::make_pair(a, b);
      return out;
    }
  }
  return out;
}

AbstractGoodPartition abstract_good_partition_by_blocks(const ConvexitySpace& space, Mask p, int s,
                                                        int t) {
  if (s < 1 || t < 1) throw InputError("s and t must be at least 1");
  AbstractGoodPartition out;
  auto groupings = [&](Mask part, int k) {
    std::vector<std::vector<Mask>> res;
    const std::vector<int> el = to_indices(part);
    const int kk = std::min(k, static_cast<int>(el.size()));
    for_each_rgs(static_cast<int>(el.size()), kk, kk, [&](const std::vector<int>& rgs) {
      std::vector<Mask> hulls;
      for (Mask blk : rgs_blocks(rgs, el)) hulls.push_back(hull(space, blk));
      res.push_back(std::move(hulls));
      return false;
    });
    return res;
  };
  for (Mask a : ordered_sides(p)) {
    const Mask b = p & ~a;
    ++out.partitions_examined;
    const auto ga = groupings(a, s);
    const auto gb = groupings(b, t);
    bool separated = false;
    for (const auto& x : ga) {
      Mask ux = 0;
      for (Mask h : x) ux |= h;
      for (const auto& y : gb) {
        ++out.cover_pairs_checked;
        Mask uy = 0;
        for (Mask h : y) uy |= h;
        if ((ux & uy) == 0) {
          separated = true;
          break;
        }
      }
      if (separated) break;
    }
    if (!separated) {
      out.partition = std::make_pair(a, b);
      return out;
    }
  }
  return out;
}

ConvexitySpace interval_space(std::size_t n) {
  std::vector<Mask> fam = {0};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) fam.push_back(full_mask(j + 1) & ~full_mask(i));
  }
  return ConvexitySpace(n, fam);
}

ConvexitySpace hull_closed_space(const PointSet& ps, unsigned jobs) {
  ps.validate();
  const std::size_t n = ps.size();
  if (n > 20) throw ResourceError("hull-closed enumeration supports at most 20 points");
  HullOracle oracle(ps);
  const std::size_t count = std::size_t{1} << n;
  std::vector<char> closed(count, 0);
  parallel_for(count, jobs, [&](std::size_t k) {
    const Mask s = static_cast<Mask>(k);
    if (s == 0) {
      closed[k] = 1;
      return;
    }
    for (std::size_t p = 0; p < n; ++p) {
      if (contains(s, p)) continue;
      if (!oracle.verdict({s, Mask{1} << p})->empty) return;
    }
    closed[k] = 1;
  });
  std::vector<Mask> fam;
  for (std::size_t k = 0; k < count; ++k) {
    if (closed[k]) fam.push_back(static_cast<Mask>(k));
  }
  return ConvexitySpace(n, fam);
}

}  // namespace rtk
