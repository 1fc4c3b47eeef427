#include "rtk/partitions.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "rtk/enumerate.hpp"
#include "rtk/parallel.hpp"

namespace rtk {
namespace {

void check_subset(const PointSet& ps, Mask m, const char* what) {
  if (!is_subset(m, ps.all())) {
    throw InputError(std::string(what) + " refers to points outside the set");
  }
}

BigInt pow_ui(const BigInt& base, unsigned long e) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

void check_cap(const BigInt& count, std::uint64_t cap, const char* what) {
  if (count > BigInt(std::to_string(cap))) {
    throw ResourceError(std::string(what) + " needs " + count.get_str() +
                        " candidates, above the cap of " + std::to_string(cap));
  }
}

// Set partitions of `part` into exactly k blocks, in restricted-growth order.
std::vector<Cover> groupings(Mask part, int k) {
  const std::vector<int> el = to_indices(part);
  std::vector<Cover> out;
  for_each_rgs(static_cast<int>(el.size()), k, k, [&](const std::vector<int>& rgs) {
    out.push_back(rgs_blocks(rgs, el));
    return false;
  });
  return out;
}

// k-subsets of `set` in lexicographic order of their sorted index lists.
std::vector<Mask> k_subsets_lex(Mask set, int k) {
  const std::vector<int> el = to_indices(set);
  const int n = static_cast<int>(el.size());
  std::vector<Mask> out;
  if (k < 0 || k > n) return out;
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  while (true) {
    Mask m = 0;
    for (int i : pick) m |= Mask{1} << el[static_cast<std::size_t>(i)];
    out.push_back(m);
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return out;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j) - 1] + 1;
    }
  }
}

// Odometer over a mixed-radix vector, last digit fastest. Returns false
// after the final vector.
bool advance(std::vector<int>& digits, const std::vector<int>& radix) {
  for (std::size_t k = digits.size(); k-- > 0;) {
    if (++digits[k] < radix[k]) return true;
    digits[k] = 0;
  }
  return false;
}

// Evaluates candidates in fixed-size blocks and stops after the first block
// holding a hit. The block size depends only on `jobs` for scheduling; the
// reported index is the lowest hit, so the answer is jobs-independent.
template <typename R, typename Eval, typename Hit>
std::optional<std::size_t> scan_blocks(std::size_t count, unsigned jobs, std::vector<R>& results,
                                       Eval&& eval, Hit&& hit) {
  results.assign(count, R{});
  const std::size_t block = std::size_t{16} * std::max(1U, jobs);
  for (std::size_t start = 0; start < count; start += block) {
    const std::size_t len = std::min(block, count - start);
    parallel_for(len, jobs, [&](std::size_t k) { results[start + k] = eval(start + k); });
    for (std::size_t k = 0; k < len; ++k) {
      if (hit(results[start + k])) return start + k;
    }
  }
  return std::nullopt;
}

bool partitions_into(const Cover& groups, Mask whole, std::size_t max_groups) {
  if (groups.size() > max_groups) return false;
  Mask seen = 0;
  for (Mask g : groups) {
    if (g == 0 || (g & seen) != 0) return false;
    seen |= g;
  }
  return seen == whole;
}

}  // namespace

std::vector<Polyhedron> SeparationCertificate::polyhedra() const {
  std::vector<Polyhedron> out;
  for (const auto& row : hyperplanes) out.push_back(Polyhedron{row});
  return out;
}

SeparabilityResult st_separable(HullOracle& oracle, Mask a, Mask b, int s, int t,
                                std::uint64_t cap) {
  const PointSet& ps = oracle.points();
  if (s < 1 || t < 1) throw InputError("group counts s and t must be at least 1");
  if (a == 0 || b == 0) throw InputError("both sides of a separation query must be nonempty");
  if ((a & b) != 0) throw InputError("the two sides of a separation query overlap");
  check_subset(ps, a | b, "separation query");

  const int ka = std::min(s, popcount(a));
  const int kb = std::min(t, popcount(b));
  SeparabilityResult res;
  auto& tr = res.transcript;
  tr.part_sizes = {popcount(a), popcount(b)};
  tr.block_counts = {ka, kb};
  tr.closed_form = stirling2(popcount(a), ka) * stirling2(popcount(b), kb);
  tr.cap = cap;
  check_cap(tr.closed_form, cap, "separability check");

  const std::vector<Cover> a_list = groupings(a, ka);
  const std::vector<Cover> b_list = groupings(b, kb);
  tr.enumerated = 0;
  for (const Cover& ga : a_list) {
    // A block of B is compatible when its hull misses every X_i.
    std::unordered_map<Mask, bool> compatible;
    auto ok = [&](Mask y) {
      auto it = compatible.find(y);
      if (it != compatible.end()) return it->second;
      bool all = true;
      for (Mask x : ga) {
        if (!oracle.disjoint(x, y)) {
          all = false;
          break;
        }
      }
      compatible.emplace(y, all);
      return all;
    };
    for (const Cover& gb : b_list) {
      ++tr.enumerated;
      if (!std::all_of(gb.begin(), gb.end(), ok)) continue;
      SeparationCertificate cert{ga, gb, {}};
      for (Mask x : ga) {
        std::vector<Hyperplane> row;
        for (Mask y : gb) {
          auto h = strict_separator(ps, y, x);
          if (!h) throw InvariantError("cached disjoint pair has no separator");
          row.push_back(std::move(*h));
        }
        cert.hyperplanes.push_back(std::move(row));
      }
      res.certificate = std::move(cert);
      return res;
    }
  }
  if (!tr.complete()) throw InvariantError("grouping enumeration count mismatch");
  return res;
}

SeparabilityResult st_separable(const PointSet& ps, Mask a, Mask b, int s, int t,
                                std::uint64_t cap) {
  HullOracle oracle(ps);
  return st_separable(oracle, a, b, s, t, cap);
}

bool verify_separation(const PointSet& ps, Mask a, Mask b, int s, int t,
                       const SeparationCertificate& cert) {
  if (!partitions_into(cert.a_groups, a, static_cast<std::size_t>(std::max(s, 0)))) return false;
  if (!partitions_into(cert.b_groups, b, static_cast<std::size_t>(std::max(t, 0)))) return false;
  if (cert.hyperplanes.size() != cert.a_groups.size()) return false;
  for (std::size_t i = 0; i < cert.a_groups.size(); ++i) {
    if (cert.hyperplanes[i].size() != cert.b_groups.size()) return false;
    for (std::size_t j = 0; j < cert.b_groups.size(); ++j) {
      const Hyperplane& h = cert.hyperplanes[i][j];
      if (h.normal.size() != ps.dim) return false;
      if (std::all_of(h.normal.begin(), h.normal.end(), [](const Rat& v) { return sgn(v) == 0; })) {
        return false;
      }
      for (int p : to_indices(cert.a_groups[i])) {
        if (sgn(h.side(ps.points[p])) <= 0) return false;
      }
      for (int p : to_indices(cert.b_groups[j])) {
        if (sgn(h.side(ps.points[p])) >= 0) return false;
      }
    }
  }
  const auto ks = cert.polyhedra();
  for (std::size_t i = 0; i < ks.size(); ++i) {
    for (int p : to_indices(cert.a_groups[i])) {
      if (!ks[i].strictly_contains(ps.points[p])) return false;
    }
    for (int p : to_indices(b)) {
      if (ks[i].contains(ps.points[p])) return false;
    }
  }
  return true;
}

std::optional<EmptyIntersectionCertificate> certify_covers_disjoint(
    HullOracle& oracle, const std::vector<Cover>& covers, Point* witness) {
  EmptyIntersectionCertificate cert;
  cert.groupings = covers;
  for (const Cover& c : covers) {
    if (c.empty()) return cert;  // an empty union meets nothing
  }
  std::vector<int> radix, choice(covers.size(), 0);
  for (const Cover& c : covers) radix.push_back(static_cast<int>(c.size()));
  do {
    std::vector<Mask> tuple;
    for (std::size_t i = 0; i < covers.size(); ++i) tuple.push_back(covers[i][static_cast<std::size_t>(choice[i])]);
    auto v = oracle.verdict(tuple);
    if (!v->empty) {
      if (witness != nullptr) {
        const HullIntersection hi = hulls_common_point(oracle.points(), tuple);
        if (hi.point) *witness = *hi.point;
      }
      return std::nullopt;
    }
    cert.tuples.push_back(TupleProof{choice, v->proof_groups, v->farkas});
  } while (advance(choice, radix));
  return cert;
}

JointCoverResult joint_cover_empty(HullOracle& oracle, const std::vector<Mask>& parts,
                                   const std::vector<int>& s_list, std::uint64_t cap) {
  const PointSet& ps = oracle.points();
  if (parts.size() < 2) throw InputError("joint cover queries need at least two parts");
  if (s_list.size() != parts.size()) throw InputError("s_list length must equal the part count");
  Mask seen = 0;
  for (Mask p : parts) {
    if (p == 0) throw InputError("parts must be nonempty");
    if ((p & seen) != 0) throw InputError("parts must be pairwise disjoint");
    seen |= p;
  }
  check_subset(ps, seen, "joint cover query");
  for (int s : s_list) {
    if (s < 1) throw InputError("group counts must be at least 1");
  }

  JointCoverResult res;
  auto& tr = res.transcript;
  tr.closed_form = 1;
  tr.cap = cap;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const int n = popcount(parts[i]);
    const int k = std::min(s_list[i], n);
    tr.part_sizes.push_back(n);
    tr.block_counts.push_back(k);
    tr.closed_form *= stirling2(n, k);
  }
  check_cap(tr.closed_form, cap, "joint cover check");

  std::vector<std::vector<Cover>> lists;
  std::vector<int> radix;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    lists.push_back(groupings(parts[i], tr.block_counts[i]));
    radix.push_back(static_cast<int>(lists.back().size()));
  }
  std::vector<int> pick(parts.size(), 0);
  tr.enumerated = 0;
  do {
    ++tr.enumerated;
    std::vector<Cover> covers;
    for (std::size_t i = 0; i < parts.size(); ++i) covers.push_back(lists[i][static_cast<std::size_t>(pick[i])]);
    auto cert = certify_covers_disjoint(oracle, covers);
    if (cert) {
      res.certificate = std::move(cert);
      return res;
    }
  } while (advance(pick, radix));
  if (!tr.complete()) throw InvariantError("grouping enumeration count mismatch");
  return res;
}

bool verify_cover_proofs(const PointSet& ps, const EmptyIntersectionCertificate& cert) {
  const auto& covers = cert.groupings;
  if (std::any_of(covers.begin(), covers.end(), [](const Cover& c) { return c.empty(); })) {
    return true;
  }
  std::vector<int> radix, choice(covers.size(), 0);
  for (const Cover& c : covers) radix.push_back(static_cast<int>(c.size()));
  std::size_t k = 0;
  do {
    if (k >= cert.tuples.size()) return false;
    const TupleProof& tp = cert.tuples[k++];
    if (tp.choice != choice || tp.proof_groups.empty()) return false;
    for (Mask g : tp.proof_groups) {
      bool member = false;
      for (std::size_t i = 0; i < covers.size(); ++i) {
        if (covers[i][static_cast<std::size_t>(choice[i])] == g) member = true;
      }
      if (!member || g == 0 || !is_subset(g, ps.all())) return false;
    }
    if (!is_farkas_certificate(hull_system(ps, tp.proof_groups), tp.farkas)) return false;
  } while (advance(choice, radix));
  return k == cert.tuples.size();
}

bool verify_empty_intersection(const PointSet& ps, const std::vector<Mask>& parts,
                               const std::vector<int>& s_list,
                               const EmptyIntersectionCertificate& cert) {
  if (cert.groupings.size() != parts.size() || s_list.size() != parts.size()) return false;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!partitions_into(cert.groupings[i], parts[i], static_cast<std::size_t>(std::max(s_list[i], 0)))) {
      return false;
    }
  }
  return verify_cover_proofs(ps, cert);
}

RadonSearchResult good_radon_partition(HullOracle& oracle, Mask s_set, int s, int t,
                                       unsigned jobs, std::uint64_t cap) {
  check_subset(oracle.points(), s_set, "partition search");
  const int n = popcount(s_set);
  if (n < 2) throw InputError("a bipartition search needs at least two points");
  std::vector<Mask> candidates;
  for (int k = 1; k < n; ++k) {
    for (Mask a : k_subsets_lex(s_set, k)) candidates.push_back(a);
  }
  std::vector<SeparabilityResult> results;
  const auto hit = scan_blocks(
      candidates.size(), jobs, results,
      [&](std::size_t i) { return st_separable(oracle, candidates[i], s_set & ~candidates[i], s, t, cap); },
      [](const SeparabilityResult& r) { return !r.separable(); });
  RadonSearchResult out;
  if (hit) {
    out.partitions_examined = *hit + 1;
    out.good = GoodPartition{{candidates[*hit], s_set & ~candidates[*hit]}, results[*hit].transcript};
    return out;
  }
  out.partitions_examined = candidates.size();
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    out.refutations.emplace_back(std::vector<Mask>{candidates[i], s_set & ~candidates[i]},
                                 std::move(*results[i].certificate));
  }
  return out;
}

TverbergSearchResult good_tverberg_partition(HullOracle& oracle, Mask s_set, int r,
                                             const std::vector<int>& s_list, unsigned jobs,
                                             std::uint64_t cap) {
  check_subset(oracle.points(), s_set, "partition search");
  const std::vector<int> el = to_indices(s_set);
  const int n = static_cast<int>(el.size());
  if (r < 2) throw InputError("r must be at least 2");
  if (n < r) throw InputError("a Tverberg search needs at least r points");
  if (static_cast<int>(s_list.size()) != r) throw InputError("s_list length must equal r");
  const bool symmetric =
      std::all_of(s_list.begin(), s_list.end(), [&](int v) { return v == s_list.front(); });

  std::vector<std::vector<Mask>> candidates;
  if (symmetric) {
    check_cap(stirling2(n, r), cap, "Tverberg partition search");
    for_each_rgs(n, r, r, [&](const std::vector<int>& rgs) {
      candidates.push_back(rgs_blocks(rgs, el));
      return false;
    });
  } else {
    check_cap(pow_ui(BigInt(r), static_cast<unsigned long>(n)), cap, "Tverberg partition search");
    std::vector<int> label(static_cast<std::size_t>(n), 0);
    const std::vector<int> radix(static_cast<std::size_t>(n), r);
    do {
      std::vector<Mask> parts(static_cast<std::size_t>(r), 0);
      for (int i = 0; i < n; ++i) parts[static_cast<std::size_t>(label[static_cast<std::size_t>(i)])] |= Mask{1} << el[static_cast<std::size_t>(i)];
      if (std::none_of(parts.begin(), parts.end(), [](Mask m) { return m == 0; })) {
        candidates.push_back(std::move(parts));
      }
    } while (advance(label, radix));
  }

  std::vector<JointCoverResult> results;
  const auto hit = scan_blocks(
      candidates.size(), jobs, results,
      [&](std::size_t i) { return joint_cover_empty(oracle, candidates[i], s_list, cap); },
      [](const JointCoverResult& jr) { return !jr.empty_cover_exists(); });
  TverbergSearchResult out;
  if (hit) {
    out.partitions_examined = *hit + 1;
    out.good = GoodPartition{candidates[*hit], results[*hit].transcript};
    return out;
  }
  out.partitions_examined = candidates.size();
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    out.refutations.emplace_back(candidates[i], std::move(*results[i].certificate));
  }
  return out;
}

std::vector<Polyhedron> build_K_polyhedra(const PointSet& ps, const Cover& a_groups,
                                          const Cover& b_groups) {
  Mask b_all = 0;
  for (Mask y : b_groups) b_all |= y;
  std::vector<Polyhedron> ks;
  for (std::size_t i = 0; i < a_groups.size(); ++i) {
    Polyhedron k;
    for (std::size_t j = 0; j < b_groups.size(); ++j) {
      auto h = strict_separator(ps, b_groups[j], a_groups[i]);
      if (!h) {
        const HullIntersection hi = hulls_common_point(ps, {a_groups[i], b_groups[j]});
        throw PreconditionError("hulls of A-group " + std::to_string(i) + " and B-group " +
                                    std::to_string(j) + " intersect",
                                hi.point.value_or(Point{}));
      }
      k.facets.push_back(std::move(*h));
    }
    ks.push_back(std::move(k));
  }
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (ks[i].facets.size() > b_groups.size()) throw InvariantError("too many facets");
    for (int p : to_indices(a_groups[i])) {
      if (!ks[i].strictly_contains(ps.points[p])) throw InvariantError("K_i misses its group");
    }
    for (int p : to_indices(b_all)) {
      if (ks[i].contains(ps.points[p])) throw InvariantError("K_i contains a point of B");
    }
  }
  return ks;
}

RSeparation build_r_separation(const PointSet& ps, const std::vector<Cover>& covers) {
  const std::size_t r = covers.size();
  if (r < 2) throw InputError("an r-separation needs at least two covers");
  for (const Cover& c : covers) {
    for (Mask g : c) {
      if (g == 0) throw InputError("cover groups must be nonempty");
      check_subset(ps, g, "cover");
    }
  }
  HullOracle oracle(ps);
  Point common;
  if (!certify_covers_disjoint(oracle, covers, &common)) {
    throw PreconditionError("the covers share a common point", common);
  }
  RSeparation sep;
  sep.sets.resize(r);
  for (std::size_t i = 0; i < r; ++i) {
    // Nonempty pieces: one component of each earlier K_j, one hull of each
    // later C_j.
    std::vector<Region> pieces;
    std::vector<int> radix;
    for (std::size_t j = 0; j < r; ++j) {
      if (j == i) continue;
      radix.push_back(static_cast<int>(j < i ? sep.sets[j].size() : covers[j].size()));
    }
    const bool any_piece = std::none_of(radix.begin(), radix.end(), [](int v) { return v == 0; });
    if (any_piece) {
      std::vector<int> choice(radix.size(), 0);
      do {
        Region q;
        std::size_t k = 0;
        for (std::size_t j = 0; j < r; ++j) {
          if (j == i) continue;
          const auto c = static_cast<std::size_t>(choice[k++]);
          if (j < i) {
            const auto& f = sep.sets[j][c].facets;
            q.halfspaces.insert(q.halfspaces.end(), f.begin(), f.end());
          } else {
            q.hulls.push_back(covers[j][c]);
          }
        }
        if (lp_feasible(region_system(ps, q)).feasible()) pieces.push_back(std::move(q));
      } while (advance(choice, radix));
    }
    for (Mask x : covers[i]) {
      Polyhedron k;
      for (const Region& q : pieces) {
        auto h = separate_hull_from_region(ps, x, q);
        if (!h) throw InvariantError("a cover hull meets a piece it must avoid");
        k.facets.push_back(std::move(*h));
      }
      sep.sets[i].push_back(std::move(k));
    }
  }
  return sep;
}

int overlap_level(HullOracle& oracle, const Cover& groups) {
  const int n = static_cast<int>(groups.size());
  for (int k = n; k >= 1; --k) {
    bool found = false;
    for_each_k_subset(full_mask(static_cast<std::size_t>(n)), k, [&](Mask pick) {
      std::vector<Mask> tuple;
      for (int i : to_indices(pick)) tuple.push_back(groups[static_cast<std::size_t>(i)]);
      found = !oracle.verdict(tuple)->empty;
      return found;
    });
    if (found) return k;
  }
  return 0;
}

RSeparationAudit audit_r_separation(const PointSet& ps, const std::vector<Cover>& covers,
                                    const RSeparation& sep) {
  RSeparationAudit audit;
  const std::size_t r = covers.size();
  std::size_t s = 0;
  for (const Cover& c : covers) s = std::max(s, c.size());
  audit.facet_bound = pow_ui(BigInt(static_cast<unsigned long>(s)), static_cast<unsigned long>(r - 1));
  audit.contains_covers = sep.sets.size() == r;
  for (std::size_t i = 0; i < r && audit.contains_covers; ++i) {
    if (sep.sets[i].size() != covers[i].size()) {
      audit.contains_covers = false;
      break;
    }
    for (std::size_t k = 0; k < covers[i].size(); ++k) {
      for (int p : to_indices(covers[i][k])) {
        if (!sep.sets[i][k].contains(ps.points[p])) audit.contains_covers = false;
      }
    }
  }
  if (!audit.contains_covers) return audit;
  for (const auto& set : sep.sets) {
    for (const auto& poly : set) audit.max_facets = std::max(audit.max_facets, poly.facets.size());
  }
  HullOracle oracle(ps);
  for (const Cover& c : covers) audit.overlap = std::max(audit.overlap, overlap_level(oracle, c));

  audit.empty_intersection = true;
  std::vector<int> radix;
  for (const auto& set : sep.sets) radix.push_back(static_cast<int>(set.size()));
  if (std::any_of(radix.begin(), radix.end(), [](int v) { return v == 0; })) return audit;
  std::vector<int> choice(r, 0);
  do {
    std::vector<const Polyhedron*> tuple;
    for (std::size_t i = 0; i < r; ++i) tuple.push_back(&sep.sets[i][static_cast<std::size_t>(choice[i])]);
    const LinearSystem sys = region_system(ps, polyhedra_region(tuple));
    const LpOutcome out = lp_feasible(sys);
    if (out.feasible() || !is_farkas_certificate(sys, out.farkas())) {
      audit.empty_intersection = false;
      return audit;
    }
    audit.tuples.push_back(PolyhedraTupleProof{choice, out.farkas()});
  } while (advance(choice, radix));
  return audit;
}

}  // namespace rtk
