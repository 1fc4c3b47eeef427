#include "rtk/constructions.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <string>

#include "rtk/enumerate.hpp"
#include "rtk/errors.hpp"
#include "rtk/parallel.hpp"
#include "rtk/ranges.hpp"

namespace rtk {
namespace {

Rat frac(long p, long q) {
  Rat v(p, q);
  v.canonicalize();
  return v;
}

Point circle_point(const Rat& u) {
  const Rat u2 = u * u;
  return Point{(1 - u2) / (1 + u2), 2 * u / (1 + u2)};
}

// Distinct rationals in the open interval (lo, hi), sorted.
std::vector<Rat> random_sorted_open(std::size_t n, CounterRng& rng, const Rat& lo, const Rat& hi) {
  std::vector<Rat> out;
  constexpr long kDen = 1000;
  while (out.size() < n) {
    const Rat unit = frac(static_cast<long>(rng.uniform(1, kDen - 1)), kDen);
    const Rat v = lo + (hi - lo) * unit;
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

PointSet moment_curve(std::size_t n, std::size_t d, const std::vector<Rat>& t) {
  if (d < 1) throw InputError("moment curve needs d >= 1");
  std::vector<Rat> ts = t;
  if (ts.empty()) {
    for (std::size_t i = 1; i <= n; ++i) ts.push_back(frac(static_cast<long>(i), static_cast<long>(n + 1)));
  }
  if (ts.size() != n) throw InputError("expected one t-value per point");
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(ts[i]) <= 0 || ts[i] >= 1) throw InputError("t-values must lie in (0, 1)");
    if (i > 0 && ts[i] <= ts[i - 1]) throw InputError("t-values must be strictly increasing");
  }
  PointSet ps;
  ps.dim = d;
  for (const Rat& v : ts) {
    Point z(d);
    Rat pw = v;
    for (std::size_t k = 0; k < d; ++k) {
      z[k] = pw;
      pw *= v;
    }
    ps.points.push_back(std::move(z));
  }
  return ps;
}

T42Instance t42_instance(int d, int s, int r) {
  if (d < 1) throw InputError("t42 instances need d >= 1");
  if (s < 3) throw InputError("t42 instances need s >= 3");
  if (r < 2 || r % 2 != 0) throw InputError("t42 instances need an even r >= 2");
  T42Instance inst;
  inst.d = d;
  inst.s = s;
  inst.r = r;
  inst.m = (d / 2 + 1) * r / 2;
  inst.p = (s - 1) / 2 * r / 2;
  const std::size_t n = static_cast<std::size_t>(inst.m) * static_cast<std::size_t>(inst.p);
  if (n > kMaxGround) throw ResourceError("t42 instance exceeds 64 points");
  inst.points = moment_curve(n, static_cast<std::size_t>(d));
  for (std::size_t i = 0; i < n; ++i) inst.interval.push_back(static_cast<int>(i) / inst.m);
  return inst;
}

std::vector<Cover> t42_adversary(const T42Instance& inst, const Coloring& coloring) {
  const std::size_t n = inst.n();
  if (coloring.size() != n) throw InputError("coloring length must equal the point count");
  for (int c : coloring) {
    if (c < 0 || c >= inst.r) throw InputError("color out of range");
  }
  const int per_interval = inst.d / 2;
  const int quota = (inst.s - 1) / 2;
  // points[q][c]: mask of color-c points in interval q.
  std::vector<std::vector<Mask>> pts(static_cast<std::size_t>(inst.p),
                                     std::vector<Mask>(static_cast<std::size_t>(inst.r), 0));
  for (std::size_t i = 0; i < n; ++i) {
    pts[static_cast<std::size_t>(inst.interval[i])][static_cast<std::size_t>(coloring[i])] |= Mask{1} << i;
  }
  std::vector<int> chosen(static_cast<std::size_t>(inst.p), -1);
  std::vector<int> picks(static_cast<std::size_t>(inst.r), 0);
  for (int q = 0; q < inst.p; ++q) {
    for (int c = 0; c < inst.r; ++c) {
      if (popcount(pts[static_cast<std::size_t>(q)][static_cast<std::size_t>(c)]) <= per_interval &&
          picks[static_cast<std::size_t>(c)] < quota) {
        chosen[static_cast<std::size_t>(q)] = c;
        ++picks[static_cast<std::size_t>(c)];
        break;
      }
    }
    if (chosen[static_cast<std::size_t>(q)] < 0) {
      throw InvariantError("no eligible color for interval " + std::to_string(q));
    }
  }
  std::vector<Cover> covers(static_cast<std::size_t>(inst.r));
  for (int c = 0; c < inst.r; ++c) {
    Cover& cover = covers[static_cast<std::size_t>(c)];
    Mask run = 0;
    for (int q = 0; q < inst.p; ++q) {
      const Mask here = pts[static_cast<std::size_t>(q)][static_cast<std::size_t>(c)];
      if (chosen[static_cast<std::size_t>(q)] == c) {
        if (run != 0) cover.push_back(run);
        run = 0;
        if (here != 0) cover.push_back(here);
      } else {
        run |= here;
      }
    }
    if (run != 0) cover.push_back(run);
  }
  return covers;
}

T42Check verify_t42(HullOracle& oracle, const T42Instance& inst, const Coloring& coloring) {
  T42Check out;
  out.covers = t42_adversary(inst, coloring);
  for (int c = 0; c < inst.r; ++c) {
    const Cover& cover = out.covers[static_cast<std::size_t>(c)];
    if (static_cast<int>(cover.size()) > inst.s) {
      out.failure = "cover of color " + std::to_string(c) + " has more than s groups";
      return out;
    }
    Mask want = 0, got = 0;
    for (std::size_t i = 0; i < coloring.size(); ++i) {
      if (coloring[i] == c) want |= Mask{1} << i;
    }
    for (Mask g : cover) got |= g;
    if (got != want) {
      out.failure = "cover of color " + std::to_string(c) + " does not match its class";
      return out;
    }
  }
  Point common;
  out.certificate = certify_covers_disjoint(oracle, out.covers, &common);
  if (!out.certificate) {
    out.failure = "adversary covers share a point";
    return out;
  }
  if (!verify_cover_proofs(oracle.points(), *out.certificate)) {
    out.failure = "emptiness certificate failed to re-verify";
    return out;
  }
  out.passed = true;
  return out;
}

T42Sweep sweep_t42(const T42Instance& inst, unsigned jobs, std::uint64_t cap) {
  const std::size_t n = inst.n();
  BigInt total;
  mpz_ui_pow_ui(total.get_mpz_t(), static_cast<unsigned long>(inst.r), static_cast<unsigned long>(n));
  if (total > BigInt(std::to_string(cap))) {
    throw ResourceError("coloring sweep needs " + total.get_str() + " colorings, above the cap");
  }
  const std::uint64_t count = total.get_ui();
  HullOracle oracle(inst.points);
  std::vector<char> ok(count, 0);
  std::vector<std::uint32_t> groups(count, 0), tuples(count, 0);
  parallel_for(count, jobs, [&](std::size_t k) {
    Coloring col(n);
    std::uint64_t v = k;
    for (std::size_t i = n; i-- > 0;) {
      col[i] = static_cast<int>(v % static_cast<std::uint64_t>(inst.r));
      v /= static_cast<std::uint64_t>(inst.r);
    }
    const T42Check chk = verify_t42(oracle, inst, col);
    ok[k] = chk.passed ? 1 : 0;
    std::size_t g = 0;
    for (const Cover& c : chk.covers) g = std::max(g, c.size());
    groups[k] = static_cast<std::uint32_t>(g);
    tuples[k] = chk.certificate ? static_cast<std::uint32_t>(chk.certificate->tuples.size()) : 0;
  });
  T42Sweep sw;
  sw.colorings = count;
  for (std::uint64_t k = 0; k < count; ++k) {
    if (ok[k]) {
      ++sw.passed;
    } else if (!sw.first_failure) {
      sw.first_failure = k;
    }
    sw.max_groups = std::max<std::size_t>(sw.max_groups, groups[k]);
    sw.tuples_certified += tuples[k];
  }
  return sw;
}

Coloring periodic_coloring(std::size_t n, int r) {
  if (r < 1) throw InputError("r must be at least 1");
  Coloring c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<int>(i % static_cast<std::size_t>(r));
  return c;
}

T999Report verify_t999(int r, int s, std::size_t n, std::uint64_t cap) {
  if (r < 2 || s < 1) throw InputError("verify_t999 needs r >= 2 and s >= 1");
  T999Report rep;
  rep.r = r;
  rep.s = s;
  rep.n = n == 0 ? static_cast<std::size_t>(r * (r - 1) * (s + 1) + 1) : n;
  rep.miss_bound = (s + 1) * (r - 1);
  if (rep.n > kMaxGround) throw ResourceError("verify_t999 supports at most 64 points");
  // Points (i+1)/(n+1) are already sorted, so index order is line order.
  const Coloring col = periodic_coloring(rep.n, r);

  // Per color: every split of its sorted points into at most s runs, as the
  // covered mask plus the interval list.
  struct Option {
    Mask covered;
    std::vector<std::pair<int, int>> intervals;
  };
  std::vector<std::vector<Option>> options(static_cast<std::size_t>(r));
  BigInt product = 1;
  for (int c = 0; c < r; ++c) {
    std::vector<int> cls;
    for (std::size_t i = 0; i < rep.n; ++i) {
      if (col[i] == c) cls.push_back(static_cast<int>(i));
    }
    auto& opts = options[static_cast<std::size_t>(c)];
    if (cls.empty()) {
      opts.push_back(Option{0, {}});
    } else {
      const int gaps = static_cast<int>(cls.size()) - 1;
      for (int cuts = 0; cuts <= std::min(s - 1, gaps); ++cuts) {
        for_each_k_subset(full_mask(static_cast<std::size_t>(gaps)), cuts, [&](Mask cut) {
          Option o{0, {}};
          int start = cls.front();
          for (int g = 0; g < gaps; ++g) {
            if (contains(cut, static_cast<std::size_t>(g))) {
              o.intervals.emplace_back(start, cls[static_cast<std::size_t>(g)]);
              start = cls[static_cast<std::size_t>(g) + 1];
            }
          }
          o.intervals.emplace_back(start, cls.back());
          for (auto [a, b] : o.intervals) {
            for (int i = a; i <= b; ++i) o.covered |= Mask{1} << i;
          }
          opts.push_back(std::move(o));
          return false;
        });
      }
    }
    for (const auto& o : opts) {
      rep.max_miss = std::max(rep.max_miss, static_cast<int>(rep.n) - popcount(o.covered));
    }
    product *= static_cast<unsigned long>(opts.size());
  }
  if (product > BigInt(std::to_string(cap))) {
    throw ResourceError("verify_t999 needs " + product.get_str() + " cover tuples, above the cap");
  }
  // Closed intervals with endpoints at data points: a nonempty common
  // intersection always contains a data point, so masks decide it exactly.
  std::vector<int> pick(static_cast<std::size_t>(r), 0);
  rep.tuples_checked = 0;
  const Mask all = full_mask(rep.n);
  while (true) {
    Mask inter = all;
    for (int c = 0; c < r; ++c) inter &= options[static_cast<std::size_t>(c)][static_cast<std::size_t>(pick[static_cast<std::size_t>(c)])].covered;
    ++rep.tuples_checked;
    if (inter == 0) {
      std::vector<std::vector<std::pair<int, int>>> ce;
      for (int c = 0; c < r; ++c) ce.push_back(options[static_cast<std::size_t>(c)][static_cast<std::size_t>(pick[static_cast<std::size_t>(c)])].intervals);
      rep.counterexample = std::move(ce);
      break;
    }
    int k = r - 1;
    while (k >= 0 && ++pick[static_cast<std::size_t>(k)] == static_cast<int>(options[static_cast<std::size_t>(k)].size())) {
      pick[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
  }
  rep.verified = !rep.counterexample && rep.max_miss <= rep.miss_bound;
  return rep;
}

PointSet convex_position(std::size_t n) {
  if (n < 3) throw InputError("convex_position needs n >= 3");
  PointSet ps;
  ps.dim = 2;
  for (std::size_t i = 0; i < n; ++i) {
    ps.points.push_back(circle_point(frac(2 * static_cast<long>(i) - static_cast<long>(n - 1), static_cast<long>(n + 1))));
  }
  return ps;
}

PointSet random_convex_position(std::size_t n, CounterRng& rng) {
  PointSet ps;
  ps.dim = 2;
  for (const Rat& u : random_sorted_open(n, rng, Rat(-1), Rat(1))) ps.points.push_back(circle_point(u));
  return ps;
}

PointSet random_moment_curve(std::size_t n, std::size_t d, CounterRng& rng) {
  return moment_curve(n, d, random_sorted_open(n, rng, Rat(0), Rat(1)));
}

PointSet random_rational_points(std::size_t n, std::size_t d, CounterRng& rng) {
  PointSet ps;
  ps.dim = d;
  while (ps.points.size() < n) {
    Point p(d);
    for (auto& c : p) c = rng.rational(60, 4);
    if (std::find(ps.points.begin(), ps.points.end(), p) == ps.points.end()) ps.points.push_back(std::move(p));
  }
  return ps;
}

PointSet tverberg_tight_instance(int d, int r, std::uint64_t seed, int attempts, unsigned jobs) {
  if (d < 1 || r < 2) throw InputError("tight instances need d >= 1 and r >= 2");
  const std::size_t n = static_cast<std::size_t>((r - 1) * (d + 1));
  CounterRng rng(seed, 0x7469676874ULL);
  for (int a = 0; a < attempts; ++a) {
    const PointSet ps = random_rational_points(n, static_cast<std::size_t>(d), rng);
    HullOracle oracle(ps);
    const auto res = good_tverberg_partition(oracle, ps.all(), r, std::vector<int>(static_cast<std::size_t>(r), 1), jobs);
    if (!res.good) return ps;
  }
  throw ResourceError("no Tverberg-tight instance found within " + std::to_string(attempts) +
                      " attempts");
}

PointSet translated_copies(const PointSet& ps, int s) {
  ps.validate();
  if (s < 1) throw InputError("s must be at least 1");
  if (ps.size() * static_cast<std::size_t>(s) > kMaxGround) throw InputError("too many points");
  PointSet out;
  out.dim = ps.dim;
  if (ps.size() == 0) return out;
  Rat lo = ps.points[0][0], hi = lo;
  for (const auto& p : ps.points) {
    lo = std::min(lo, p[0]);
    hi = std::max(hi, p[0]);
  }
  const Rat shift = hi - lo + 1;
  for (int k = 0; k < s; ++k) {
    for (std::size_t i = 0; i < ps.size(); ++i) {
      Point q = ps.points[i];
      q[0] += shift * k;
      out.points.push_back(std::move(q));
      if (!ps.labels.empty()) out.labels.push_back(ps.labels[i] + "#" + std::to_string(k));
    }
  }
  return out;
}

std::optional<Coloring> halfspace_4coloring(const PointSet& ps, unsigned jobs,
                                            std::size_t max_points) {
  const TraceFamily tf = halfspace_traces(ps, jobs, max_points);
  const std::size_t n = ps.size();
  // Traces with at least two points, bucketed by their highest point so a
  // trace is checked once all its points are colored.
  std::vector<std::vector<Mask>> by_last(n);
  for (Mask t : tf.traces) {
    if (popcount(t) >= 2) by_last[static_cast<std::size_t>(63 - std::countl_zero(t))].push_back(t);
  }
  Coloring col(n, -1);
  std::vector<Mask> classes(4, 0);
  // Iterative backtracking; used[i] = number of colors used by points < i.
  std::vector<int> used(n + 1, 0);
  std::size_t i = 0;
  while (true) {
    if (i == n) return col;
    int& c = col[i];
    if (c >= 0) classes[static_cast<std::size_t>(c)] &= ~(Mask{1} << i);
    ++c;
    const int limit = std::min(3, used[i]);
    if (c > limit) {
      c = -1;
      if (i == 0) return std::nullopt;
      --i;
      continue;
    }
    classes[static_cast<std::size_t>(c)] |= Mask{1} << i;
    bool ok = true;
    for (Mask t : by_last[i]) {
      if (is_subset(t, classes[static_cast<std::size_t>(c)])) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    used[i + 1] = std::max(used[i], c + 1);
    ++i;
  }
}

}  // namespace rtk
