#include "rtk/ranges.hpp"

#include <algorithm>
#include <unordered_set>

#include "rtk/errors.hpp"
#include "rtk/parallel.hpp"

namespace rtk {
namespace {

std::vector<Mask> sorted_unique(std::unordered_set<Mask> set) {
  std::vector<Mask> out(set.begin(), set.end());
  std::sort(out.begin(), out.end());
  return out;
}

// Closure of `base` under up to k-fold applications of `op`, seeded with
// `unit`. Only sets new at level j-1 are combined at level j.
template <typename Op>
std::vector<Mask> k_fold_closure(const std::vector<Mask>& base, int k, Mask unit, std::size_t cap,
                                 Op op) {
  if (k < 1) throw InputError("closure depth must be at least 1");
  std::unordered_set<Mask> seen(base.begin(), base.end());
  seen.insert(unit);
  std::vector<Mask> frontier(base.begin(), base.end());
  for (int level = 2; level <= k && !frontier.empty(); ++level) {
    std::vector<Mask> next;
    for (Mask a : frontier) {
      for (Mask b : base) {
        const Mask c = op(a, b);
        if (seen.insert(c).second) {
          if (seen.size() > cap) {
            throw ResourceError("trace family exceeds cap of " + std::to_string(cap) + " sets");
          }
          next.push_back(c);
        }
      }
    }
    frontier = std::move(next);
  }
  if (seen.size() > cap) {
    throw ResourceError("trace family exceeds cap of " + std::to_string(cap) + " sets");
  }
  return sorted_unique(std::move(seen));
}

}  // namespace

TraceFamily halfspace_traces(HullOracle& oracle, unsigned jobs, std::size_t max_points) {
  const PointSet& ps = oracle.points();
  ps.validate();
  const std::size_t n = ps.size();
  if (n > max_points) {
    throw ResourceError("halfspace trace enumeration capped at n <= " + std::to_string(max_points));
  }
  TraceFamily tf;
  tf.n = n;
  tf.provenance = "halfspace";
  if (n == 0) {
    tf.traces = {0};
    return tf;
  }
  const Mask full = ps.all();
  // Subsets containing point 0, excluding the full set; complements mirror.
  const std::size_t count = std::size_t{1} << (n - 1);
  std::vector<char> is_trace(count, 0);
  parallel_for(count - 1, jobs, [&](std::size_t k) {
    const Mask s = (static_cast<Mask>(k) << 1) | 1;
    is_trace[k] = oracle.disjoint(s, full & ~s) ? 1 : 0;
  });
  tf.traces = {0, full};
  for (std::size_t k = 0; k + 1 < count; ++k) {
    if (!is_trace[k]) continue;
    const Mask s = (static_cast<Mask>(k) << 1) | 1;
    tf.traces.push_back(s);
    tf.traces.push_back(full & ~s);
  }
  std::sort(tf.traces.begin(), tf.traces.end());
  tf.traces.erase(std::unique(tf.traces.begin(), tf.traces.end()), tf.traces.end());
  return tf;
}

TraceFamily halfspace_traces(const PointSet& ps, unsigned jobs, std::size_t max_points) {
  HullOracle oracle(ps);
  return halfspace_traces(oracle, jobs, max_points);
}

TraceFamily intersect_close(const TraceFamily& tf, int t, std::size_t cap) {
  TraceFamily out;
  out.n = tf.n;
  out.provenance = tf.provenance + "|intersect:" + std::to_string(t);
  out.traces = k_fold_closure(tf.traces, t, full_mask(tf.n), cap, [](Mask a, Mask b) { return a & b; });
  return out;
}

TraceFamily union_close(const TraceFamily& tf, int s, std::size_t cap) {
  TraceFamily out;
  out.n = tf.n;
  out.provenance = tf.provenance + "|union:" + std::to_string(s);
  out.traces = k_fold_closure(tf.traces, s, 0, cap, [](Mask a, Mask b) { return a | b; });
  return out;
}

SetSystem build_union_polytope_system(const PointSet& ps, int s, int t, unsigned jobs,
                                      std::size_t cap) {
  if (s < 1 || t < 1) throw InputError("s and t must be at least 1");
  const TraceFamily hs = halfspace_traces(ps, jobs);
  return union_close(intersect_close(hs, t, cap), s, cap).as_system();
}

std::vector<int> sorted_order_1d(const PointSet& ps) {
  ps.validate();
  if (ps.dim != 1) throw InputError("expected points on a line (dim = 1)");
  std::vector<int> order(ps.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return ps.points[a][0] < ps.points[b][0]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (ps.points[order[i - 1]][0] == ps.points[order[i]][0]) {
      throw InputError("points on the line must be distinct");
    }
  }
  return order;
}

SetSystem interval_union_traces(const PointSet& ps, int s) {
  if (s < 1) throw InputError("s must be at least 1");
  const std::vector<int> order = sorted_order_1d(ps);
  const std::size_t n = order.size();
  // Runs of sorted positions [i, j] as global masks.
  std::vector<Mask> runs;
  for (std::size_t i = 0; i < n; ++i) {
    Mask m = 0;
    for (std::size_t j = i; j < n; ++j) {
      m |= Mask{1} << order[j];
      runs.push_back(m);
    }
  }
  TraceFamily tf{n, runs, "interval"};
  SetSystem sys = union_close(tf, s).as_system();
  return SetSystem(n, sys.edges(), "interval|union:" + std::to_string(s));
}

}  // namespace rtk
