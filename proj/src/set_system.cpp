#include "rtk/set_system.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "rtk/enumerate.hpp"
#include "rtk/errors.hpp"

namespace rtk {

SetSystem::SetSystem(std::size_t n, std::vector<Mask> edges, std::string provenance)
    : n_(n), edges_(std::move(edges)), provenance_(std::move(provenance)) {
  if (n_ > kMaxGround) {
    throw InputError("ground sets are limited to " + std::to_string(kMaxGround) + " elements");
  }
  for (Mask e : edges_) {
    if (!is_subset(e, ground())) throw InputError("edge leaves the ground set");
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

std::vector<Mask> traces_on(const SetSystem& sys, Mask s) {
  std::vector<Mask> out;
  out.reserve(sys.edges().size());
  for (Mask e : sys.edges()) out.push_back(e & s);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Number of distinct traces on s, stopping once `stop_at` is reached.
std::uint64_t count_traces(const SetSystem& sys, Mask s, std::vector<char>& seen,
                           std::uint64_t stop_at) {
  const int k = popcount(s);
  if (k > 24) return traces_on(sys, s).size();
  seen.assign(std::size_t{1} << k, 0);
  std::uint64_t count = 0;
  for (Mask e : sys.edges()) {
    const Mask local = compress(e & s, s);
    if (!seen[local]) {
      seen[local] = 1;
      if (++count >= stop_at) break;
    }
  }
  return count;
}

bool shattered_with(const SetSystem& sys, Mask s, std::vector<char>& seen) {
  const int k = popcount(s);
  if (k >= 63) return false;
  const std::uint64_t need = std::uint64_t{1} << k;
  if (sys.edges().size() < need) return false;
  return count_traces(sys, s, seen, need) == need;
}

int floor_log2(std::size_t v) { return v == 0 ? -1 : static_cast<int>(std::bit_width(v)) - 1; }

}  // namespace

bool is_shattered(const SetSystem& sys, Mask s) {
  std::vector<char> seen;
  return shattered_with(sys, s, seen);
}

DimensionResult vc_dimension(const SetSystem& sys, std::uint64_t cap) {
  if (sys.edges().empty()) return {};
  const int top = std::min(static_cast<int>(sys.ground_size()), floor_log2(sys.edges().size()));
  std::vector<char> seen;
  std::uint64_t tested = 0;
  for (int k = top; k >= 1; --k) {
    Mask found = 0;
    const bool hit = for_each_k_subset(sys.ground(), k, [&](Mask s) {
      if (++tested > cap) {
        throw ResourceError("vc_dim exceeded the subset cap of " + std::to_string(cap));
      }
      if (shattered_with(sys, s, seen)) {
        found = s;
        return true;
      }
      return false;
    });
    if (hit) return {k, found};
  }
  return {0, 0};
}

std::uint64_t primal_shatter(const SetSystem& sys, int m, std::uint64_t cap) {
  const int n = static_cast<int>(sys.ground_size());
  if (m < 0 || m > n) throw InputError("shatter size m must lie in [0, n]");
  const BigInt subsets = binomial(n, m);
  if (subsets > BigInt(std::to_string(cap))) {
    throw ResourceError("primal_shatter: C(" + std::to_string(n) + "," + std::to_string(m) +
                        ") exceeds the cap of " + std::to_string(cap));
  }
  std::vector<char> seen;
  std::uint64_t best = 0;
  const std::uint64_t ceiling = m >= 63 ? UINT64_MAX : std::uint64_t{1} << m;
  for_each_k_subset(sys.ground(), m, [&](Mask s) {
    best = std::max(best, count_traces(sys, s, seen, UINT64_MAX));
    return best == ceiling;
  });
  return best;
}

BigInt sauer_bound(int m, int d) {
  BigInt total = 0;
  for (int i = 0; i <= d; ++i) total += binomial(m, i);
  return total;
}

BigInt r_shatter_bound(int m, int t, int r) {
  BigInt total = 0;
  for (int i = 0; i <= std::min(t, m); ++i) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(r - 1),
                  static_cast<unsigned long>(m - i));
    total += binomial(m, i) * p;
  }
  return total;
}

ShatterProfile check_sauer(const SetSystem& sys, int m_max, std::uint64_t cap) {
  ShatterProfile out;
  out.dimension = vc_dim(sys);
  for (int m = 0; m <= m_max; ++m) {
    ShatterRow row;
    row.m = m;
    row.computed = static_cast<unsigned long>(primal_shatter(sys, m, cap));
    row.bound = sauer_bound(m, out.dimension);
    row.pass = row.computed <= row.bound;
    out.rows.push_back(std::move(row));
  }
  return out;
}

void RPartition::validate() const {
  Mask seen = 0;
  for (Mask p : parts) {
    if ((seen & p) != 0) throw InputError("partition parts overlap");
    seen |= p;
  }
  if (seen != base) throw InputError("partition parts do not cover the base set");
}

RealizabilityOracle::RealizabilityOracle(const SetSystem& sys, Mask base)
    : base_(base), width_(popcount(base)) {
  if (width_ > 24) throw ResourceError("realizability queries are limited to 24-element sets");
  for (Mask e : sys.edges()) traces_.push_back(compress(e & base, base));
  std::sort(traces_.begin(), traces_.end());
  traces_.erase(std::unique(traces_.begin(), traces_.end()), traces_.end());
  stamp_.assign(std::size_t{1} << width_, 0);
}

const std::vector<Mask>& RealizabilityOracle::minimal_supersets(Mask local) {
  auto it = minimal_cache_.find(local);
  if (it != minimal_cache_.end()) return it->second;
  std::vector<Mask> cand;
  for (Mask t : traces_) {
    if (is_subset(local, t)) cand.push_back(t);
  }
  std::stable_sort(cand.begin(), cand.end(),
                   [](Mask a, Mask b) { return popcount(a) < popcount(b); });
  std::vector<Mask> kept;
  for (Mask t : cand) {
    bool dominated = false;
    for (Mask k : kept) {
      if (is_subset(k, t)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(t);
  }
  return minimal_cache_.emplace(local, std::move(kept)).first->second;
}

bool RealizabilityOracle::realizable(const std::vector<Mask>& parts) {
  if (traces_.empty() || parts.empty()) return false;
  std::vector<const std::vector<Mask>*> cands;
  cands.reserve(parts.size());
  for (Mask p : parts) {
    const auto& c = minimal_supersets(compress(p, base_));
    if (c.empty()) return false;
    cands.push_back(&c);
  }
  const Mask full = full_mask(static_cast<std::size_t>(width_));
  if (full == 0) return true;
  std::stable_sort(cands.begin(), cands.end(),
                   [](const auto* a, const auto* b) { return a->size() < b->size(); });
  std::vector<Mask> current{full}, next;
  for (const auto* c : cands) {
    if (++generation_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      generation_ = 1;
    }
    next.clear();
    for (Mask inter : current) {
      for (Mask t : *c) {
        const Mask j = inter & t;
        if (j == 0) return true;
        if (stamp_[j] != generation_) {
          stamp_[j] = generation_;
          next.push_back(j);
        }
      }
    }
    current.swap(next);
  }
  return false;
}

bool is_realizable(const SetSystem& sys, const RPartition& part) {
  part.validate();
  RealizabilityOracle oracle(sys, part.base);
  return oracle.realizable(part.parts);
}

namespace {

void check_r(int r) {
  if (r < 2) throw InputError("r must be at least 2");
}

}  // namespace

bool is_r_shattered(const SetSystem& sys, Mask s, int r) {
  check_r(r);
  RealizabilityOracle oracle(sys, s);
  const auto elements = to_indices(s);
  const int m = static_cast<int>(elements.size());
  bool ok = true;
  std::vector<Mask> parts;
  for_each_rgs(m, m == 0 ? 0 : 1, r, [&](const std::vector<int>& rgs) {
    parts = rgs_blocks(rgs, elements);
    parts.resize(static_cast<std::size_t>(r), 0);
    if (!oracle.realizable(parts)) {
      ok = false;
      return true;
    }
    return false;
  });
  return ok;
}

DimensionResult r_vc_dimension(const SetSystem& sys, int r, std::uint64_t cap) {
  check_r(r);
  std::uint64_t tested = 1;
  if (!is_r_shattered(sys, 0, r)) return {};
  DimensionResult best{0, 0};
  std::vector<Mask> level{0};
  const int n = static_cast<int>(sys.ground_size());
  for (int k = 1; k <= n; ++k) {
    const std::unordered_set<Mask> prev(level.begin(), level.end());
    std::vector<Mask> next;
    for (Mask t : level) {
      const int start = t == 0 ? 0 : static_cast<int>(std::bit_width(t));
      for (int x = start; x < n; ++x) {
        const Mask c = t | (Mask{1} << x);
        bool all_sub = true;
        for (Mask rest = c; rest != 0 && all_sub; rest &= rest - 1) {
          const Mask drop = rest & -rest;
          if (drop != (Mask{1} << x) && !prev.count(c & ~drop)) all_sub = false;
        }
        if (!all_sub) continue;
        if (++tested > cap) {
          throw ResourceError("r_vc_dim exceeded the subset cap of " + std::to_string(cap));
        }
        if (is_r_shattered(sys, c, r)) next.push_back(c);
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    best = {k, next.front()};
    level.swap(next);
  }
  return best;
}

BigInt count_realizable(const SetSystem& sys, Mask s, int r, std::uint64_t cap) {
  check_r(r);
  const int m = popcount(s);
  BigInt total_partitions;
  mpz_ui_pow_ui(total_partitions.get_mpz_t(), static_cast<unsigned long>(r),
                static_cast<unsigned long>(m));
  if (total_partitions > BigInt(std::to_string(cap))) {
    throw ResourceError("count_realizable: r^|S| exceeds the cap of " + std::to_string(cap));
  }
  // Ordered arrangements of a k-block partition among r labelled parts.
  std::vector<BigInt> falling(static_cast<std::size_t>(r) + 1, 1);
  for (int k = 1; k <= r; ++k) falling[static_cast<std::size_t>(k)] = falling[k - 1] * (r - k + 1);

  RealizabilityOracle oracle(sys, s);
  const auto elements = to_indices(s);
  BigInt count = 0;
  std::vector<Mask> parts;
  for_each_rgs(m, m == 0 ? 0 : 1, r, [&](const std::vector<int>& rgs) {
    parts = rgs_blocks(rgs, elements);
    const std::size_t k = parts.size();
    parts.resize(static_cast<std::size_t>(r), 0);
    if (oracle.realizable(parts)) count += falling[k];
    return false;
  });
  return count;
}

ShatterProfile check_r_shatter(const SetSystem& sys, int r, int m_max, std::uint64_t cap) {
  ShatterProfile out;
  out.r = r;
  out.dimension = r_vc_dim(sys, r);
  const int n = static_cast<int>(sys.ground_size());
  for (int m = 0; m <= m_max; ++m) {
    if (binomial(n, m) > BigInt(std::to_string(cap))) {
      throw ResourceError("r-shatter profile: C(n,m) exceeds the cap of " + std::to_string(cap));
    }
    ShatterRow row;
    row.m = m;
    row.computed = 0;
    for_each_k_subset(sys.ground(), m, [&](Mask s) {
      const BigInt c = count_realizable(sys, s, r);
      if (c > row.computed) row.computed = c;
      return false;
    });
    row.bound = r_shatter_bound(m, out.dimension, r);
    row.pass = row.computed <= row.bound;
    out.rows.push_back(std::move(row));
  }
  return out;
}

int min_f_counting(int d, int r) {
  check_r(r);
  if (d < 0) throw InputError("d must be nonnegative");
  for (int f = 1; f <= 1'000'000; ++f) {
    BigInt sum = sauer_bound(f, d);
    BigInt lhs, tail, rhs;
    mpz_pow_ui(lhs.get_mpz_t(), sum.get_mpz_t(), static_cast<unsigned long>(r));
    mpz_ui_pow_ui(tail.get_mpz_t(), static_cast<unsigned long>(r - 1), static_cast<unsigned long>(f));
    mpz_ui_pow_ui(rhs.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(f));
    if (lhs * tail < rhs) return f;
  }
  throw ResourceError("min_f_counting did not terminate below f = 10^6");
}

}  // namespace rtk
