#include "rtk/geometry.hpp"

#include <algorithm>
#include <string>

#include "rtk/errors.hpp"

namespace rtk {

void PointSet::validate() const {
  if (dim == 0) throw InputError("point set dimension must be positive");
  if (points.size() > kMaxGround) {
    throw InputError("point sets are limited to " + std::to_string(kMaxGround) + " points");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != dim) {
      throw InputError("point " + std::to_string(i) + " has " +
                       std::to_string(points[i].size()) + " coordinates, expected " +
                       std::to_string(dim));
    }
  }
  if (!labels.empty() && labels.size() != points.size()) {
    throw InputError("label count does not match point count");
  }
}

namespace {

void check_mask(const PointSet& ps, Mask m, const char* what) {
  if (!is_subset(m, ps.all())) {
    throw InputError(std::string(what) + " refers to a point index out of range");
  }
}

}  // namespace

Hyperplane normalized(Hyperplane h) {
  for (const auto& v : h.normal) {
    if (sgn(v) != 0) {
      const Rat scale = abs(v);
      for (auto& c : h.normal) c /= scale;
      h.offset /= scale;
      break;
    }
  }
  return h;
}

LinearSystem hull_system(const PointSet& ps, const std::vector<Mask>& groups) {
  LinearSystem sys;
  std::vector<std::vector<int>> members;
  std::vector<std::size_t> offset;
  for (Mask g : groups) {
    offset.push_back(sys.num_vars);
    members.push_back(to_indices(g));
    sys.num_vars += members.back().size();
  }
  sys.nonnegative.assign(sys.num_vars, true);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    RatVec row(sys.num_vars);
    for (std::size_t k = 0; k < members[g].size(); ++k) row[offset[g] + k] = 1;
    sys.add(std::move(row), Relation::kEqual, 1);
  }
  for (std::size_t g = 1; g < groups.size(); ++g) {
    for (std::size_t c = 0; c < ps.dim; ++c) {
      RatVec row(sys.num_vars);
      for (std::size_t k = 0; k < members[0].size(); ++k) {
        row[offset[0] + k] = ps.points[members[0][k]][c];
      }
      for (std::size_t k = 0; k < members[g].size(); ++k) {
        row[offset[g] + k] = -ps.points[members[g][k]][c];
      }
      sys.add(std::move(row), Relation::kEqual, 0);
    }
  }
  return sys;
}

HullIntersection hulls_common_point(const PointSet& ps, const std::vector<Mask>& groups) {
  for (Mask g : groups) {
    if (g == 0) throw InputError("hull query with an empty group");
    check_mask(ps, g, "hull group");
  }
  HullIntersection out;
  out.groups = groups;
  if (groups.empty()) throw InputError("hull query needs at least one group");
  const LinearSystem sys = hull_system(ps, groups);
  const LpOutcome res = lp_feasible(sys);
  if (!res.feasible()) {
    out.farkas = res.farkas();
    return out;
  }
  const RatVec& lambda = res.solution();
  std::size_t pos = 0;
  for (Mask g : groups) {
    RatVec w;
    for (int idx : to_indices(g)) {
      (void)idx;
      w.push_back(lambda[pos++]);
    }
    out.weights.push_back(std::move(w));
  }
  Point p(ps.dim);
  const auto first = to_indices(groups[0]);
  for (std::size_t k = 0; k < first.size(); ++k) {
    for (std::size_t c = 0; c < ps.dim; ++c) p[c] += out.weights[0][k] * ps.points[first[k]][c];
  }
  out.point = std::move(p);
  return out;
}

bool verify_hull_intersection(const PointSet& ps, const HullIntersection& hi) {
  if (hi.groups.empty()) return false;
  for (Mask g : hi.groups) {
    if (g == 0 || !is_subset(g, ps.all())) return false;
  }
  if (!hi.nonempty()) return is_farkas_certificate(hull_system(ps, hi.groups), hi.farkas);
  if (hi.weights.size() != hi.groups.size()) return false;
  for (std::size_t g = 0; g < hi.groups.size(); ++g) {
    const auto idx = to_indices(hi.groups[g]);
    if (hi.weights[g].size() != idx.size()) return false;
    Rat total = 0;
    Point p(ps.dim);
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (sgn(hi.weights[g][k]) < 0) return false;
      total += hi.weights[g][k];
      for (std::size_t c = 0; c < ps.dim; ++c) p[c] += hi.weights[g][k] * ps.points[idx[k]][c];
    }
    if (total != 1 || p != *hi.point) return false;
  }
  return true;
}

std::optional<Hyperplane> strict_separator(const PointSet& ps, Mask negative, Mask positive) {
  check_mask(ps, negative, "separator side");
  check_mask(ps, positive, "separator side");
  if (negative == 0 || positive == 0) throw InputError("separator sides must be nonempty");
  if ((negative & positive) != 0) throw InputError("separator sides overlap");
  const std::size_t d = ps.dim;
  LinearSystem sys;
  sys.num_vars = d + 1;
  for (int i : to_indices(negative)) {
    RatVec row(ps.points[i]);
    row.push_back(-1);
    sys.add(std::move(row), Relation::kLessEqual, -1);
  }
  for (int i : to_indices(positive)) {
    RatVec row(ps.points[i]);
    row.push_back(-1);
    sys.add(std::move(row), Relation::kGreaterEqual, 1);
  }
  const LpOutcome res = lp_feasible(sys);
  if (!res.feasible()) return std::nullopt;
  Hyperplane h;
  h.normal.assign(res.solution().begin(), res.solution().begin() + static_cast<long>(d));
  h.offset = res.solution()[d];
  h = normalized(std::move(h));
  for (int i : to_indices(negative)) {
    if (sgn(h.side(ps.points[i])) >= 0) throw InvariantError("separator misclassifies a point");
  }
  for (int i : to_indices(positive)) {
    if (sgn(h.side(ps.points[i])) <= 0) throw InvariantError("separator misclassifies a point");
  }
  return h;
}

RadonSplit radon_partition_classic(const PointSet& ps, Mask s) {
  check_mask(ps, s, "Radon subset");
  const auto idx = to_indices(s);
  const std::size_t k = idx.size();
  const std::size_t rows = ps.dim + 1;
  // Columns are the lifted points (x, 1); a kernel vector is an affine dependence.
  std::vector<RatVec> m(rows, RatVec(k));
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t c = 0; c < ps.dim; ++c) m[c][j] = ps.points[idx[j]][c];
    m[ps.dim][j] = 1;
  }
  std::vector<std::size_t> pivot_of_row;
  std::vector<bool> is_pivot(k, false);
  std::size_t r = 0;
  for (std::size_t col = 0; col < k && r < rows; ++col) {
    std::size_t sel = r;
    while (sel < rows && sgn(m[sel][col]) == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    const Rat inv = 1 / m[r][col];
    for (auto& v : m[r]) v *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m[i][col]) == 0) continue;
      const Rat f = m[i][col];
      for (std::size_t j = 0; j < k; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_of_row.push_back(col);
    is_pivot[col] = true;
    ++r;
  }
  std::size_t free_col = k;
  for (std::size_t j = 0; j < k; ++j) {
    if (!is_pivot[j]) {
      free_col = j;
      break;
    }
  }
  if (free_col == k) throw NoRadonPartition("points are affinely independent");
  RatVec lambda(k);
  lambda[free_col] = 1;
  for (std::size_t i = 0; i < pivot_of_row.size(); ++i) lambda[pivot_of_row[i]] = -m[i][free_col];

  Mask plus = 0, minus = 0;
  Rat plus_total = 0;
  Point p(ps.dim);
  for (std::size_t j = 0; j < k; ++j) {
    if (sgn(lambda[j]) > 0) {
      plus |= Mask{1} << idx[j];
      plus_total += lambda[j];
      for (std::size_t c = 0; c < ps.dim; ++c) p[c] += lambda[j] * ps.points[idx[j]][c];
    } else if (sgn(lambda[j]) < 0) {
      minus |= Mask{1} << idx[j];
    }
  }
  for (auto& v : p) v /= plus_total;
  RadonSplit out;
  const int cp = popcount(plus), cm = popcount(minus);
  const bool plus_first =
      cp < cm || (cp == cm && std::countr_zero(plus) < std::countr_zero(minus));
  out.a = plus_first ? plus : minus;
  out.b = s & ~out.a;
  out.point = std::move(p);
  return out;
}

LinearSystem region_system(const PointSet& ps, const Region& region) {
  const std::size_t d = ps.dim;
  LinearSystem sys;
  std::vector<std::vector<int>> members;
  std::vector<std::size_t> offset;
  sys.num_vars = d;
  for (Mask g : region.hulls) {
    offset.push_back(sys.num_vars);
    members.push_back(to_indices(g));
    sys.num_vars += members.back().size();
  }
  sys.nonnegative.assign(sys.num_vars, true);
  for (std::size_t c = 0; c < d; ++c) sys.nonnegative[c] = false;
  for (const auto& h : region.halfspaces) {
    RatVec row(sys.num_vars);
    for (std::size_t c = 0; c < d; ++c) row[c] = h.normal[c];
    sys.add(std::move(row), Relation::kGreaterEqual, h.offset);
  }
  for (std::size_t g = 0; g < region.hulls.size(); ++g) {
    RatVec sum(sys.num_vars);
    for (std::size_t k = 0; k < members[g].size(); ++k) sum[offset[g] + k] = 1;
    sys.add(std::move(sum), Relation::kEqual, 1);
    for (std::size_t c = 0; c < d; ++c) {
      RatVec row(sys.num_vars);
      row[c] = 1;
      for (std::size_t k = 0; k < members[g].size(); ++k) {
        row[offset[g] + k] = -ps.points[members[g][k]][c];
      }
      sys.add(std::move(row), Relation::kEqual, 0);
    }
  }
  return sys;
}

Region polyhedra_region(const std::vector<const Polyhedron*>& parts) {
  Region r;
  for (const Polyhedron* p : parts) {
    r.halfspaces.insert(r.halfspaces.end(), p->facets.begin(), p->facets.end());
  }
  return r;
}

std::optional<Hyperplane> separate_hull_from_region(const PointSet& ps, Mask hull,
                                                    const Region& region) {
  if (hull == 0) throw InputError("cannot separate an empty hull");
  check_mask(ps, hull, "separated hull");
  const std::size_t d = ps.dim;
  const std::size_t nh = region.halfspaces.size();
  const std::size_t nk = region.hulls.size();
  // Variables: a (d), c, y (nh, >= 0), then per hull k: w_k (d), sigma_k.
  const std::size_t a0 = 0, c0 = d, y0 = d + 1, w0 = d + 1 + nh;
  LinearSystem sys;
  sys.num_vars = w0 + nk * (d + 1);
  sys.nonnegative.assign(sys.num_vars, false);
  for (std::size_t h = 0; h < nh; ++h) sys.nonnegative[y0 + h] = true;
  auto w_at = [&](std::size_t k, std::size_t c) { return w0 + k * (d + 1) + c; };
  auto sigma_at = [&](std::size_t k) { return w0 + k * (d + 1) + d; };

  // a.u - c >= 1 for every point of the hull.
  for (int i : to_indices(hull)) {
    RatVec row(sys.num_vars);
    for (std::size_t j = 0; j < d; ++j) row[a0 + j] = ps.points[i][j];
    row[c0] = -1;
    sys.add(std::move(row), Relation::kGreaterEqual, 1);
  }
  // -a = sum_h y_h n_h + sum_k w_k  (dual feasibility of min -a.x over region).
  for (std::size_t j = 0; j < d; ++j) {
    RatVec row(sys.num_vars);
    row[a0 + j] = 1;
    for (std::size_t h = 0; h < nh; ++h) row[y0 + h] = region.halfspaces[h].normal[j];
    for (std::size_t k = 0; k < nk; ++k) row[w_at(k, j)] = 1;
    sys.add(std::move(row), Relation::kEqual, 0);
  }
  // w_k.v >= sigma_k for every generator v of hull k.
  for (std::size_t k = 0; k < nk; ++k) {
    for (int i : to_indices(region.hulls[k])) {
      RatVec row(sys.num_vars);
      for (std::size_t j = 0; j < d; ++j) row[w_at(k, j)] = ps.points[i][j];
      row[sigma_at(k)] = -1;
      sys.add(std::move(row), Relation::kGreaterEqual, 0);
    }
  }
  // Dual objective: sum y_h g_h + sum sigma_k >= 1 - c.
  {
    RatVec row(sys.num_vars);
    for (std::size_t h = 0; h < nh; ++h) row[y0 + h] = region.halfspaces[h].offset;
    for (std::size_t k = 0; k < nk; ++k) row[sigma_at(k)] = 1;
    row[c0] = 1;
    sys.add(std::move(row), Relation::kGreaterEqual, 1);
  }
  const LpOutcome res = lp_feasible(sys);
  if (!res.feasible()) return std::nullopt;
  Hyperplane h;
  h.normal.assign(res.solution().begin(), res.solution().begin() + static_cast<long>(d));
  h.offset = res.solution()[c0];
  if (std::all_of(h.normal.begin(), h.normal.end(), [](const Rat& v) { return sgn(v) == 0; })) {
    throw InvariantError("region separator has a zero normal");
  }
  return normalized(std::move(h));
}

}  // namespace rtk
