// rtk: command-line front end for the set-system, partition and
// construction routines. Reports go to stdout as JSON (or CSV for shatter
// profiles); certificates are embedded in the report, or written as files
// when --out-dir is given.

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rtk/constructions.hpp"
#include "rtk/convexity.hpp"
#include "rtk/errors.hpp"
#include "rtk/fsearch.hpp"
#include "rtk/hull_oracle.hpp"
#include "rtk/io.hpp"
#include "rtk/partitions.hpp"
#include "rtk/ranges.hpp"
#include "rtk/set_system.hpp"

using namespace rtk;

namespace {

constexpr int kOk = 0;
constexpr int kRefuted = 2;
constexpr int kCap = 3;
constexpr int kInput = 4;

struct Options {
  std::string input;
  int d = 2;
  int s = 1;
  int t = 1;
  int r = 2;
  std::string s_list;
  std::size_t n = 0;
  std::uint64_t cap = 10'000'000;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  std::string format;  // json by default; bound-e31 prints a bare number unless json is asked for
  std::string out_dir;
  std::string a;
  std::string b;
  std::size_t samples = 10;
  std::string sampler = "random-rational";
  int m = -1;
  std::vector<std::string> covers;
  std::string coloring;
  std::string kind;
};

std::vector<int> parse_int_list(const std::string& text, char sep = ',') {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError("expected an integer, got '" + item + "'");
    }
  }
  return out;
}

Mask parse_index_set(const std::string& text, std::size_t n) {
  Mask out = 0;
  for (int i : parse_int_list(text)) {
    if (i < 0 || static_cast<std::size_t>(i) >= n) {
      throw InputError("index " + std::to_string(i) + " out of range");
    }
    out |= Mask{1} << i;
  }
  return out;
}

// "0,1|2,3" -> groups {0,1} and {2,3}.
Cover parse_cover(const std::string& text, std::size_t n) {
  Cover out;
  std::stringstream ss(text);
  std::string group;
  while (std::getline(ss, group, '|')) {
    const Mask g = parse_index_set(group, n);
    if (g == 0) throw InputError("empty group in cover '" + text + "'");
    out.push_back(g);
  }
  return out;
}

Json load_input(const Options& o) {
  if (o.input.empty()) throw InputError("--input is required");
  return parse_json(read_file(o.input));
}

PointSet load_points(const Options& o) { return point_set_from_json(load_input(o)); }

// A SetSystem file, or a point set whose union-polytope traces (--s, --t)
// form the system.
SetSystem load_system(const Options& o) {
  const Json j = load_input(o);
  if (j.contains("edges")) return set_system_from_json(j);
  const PointSet ps = point_set_from_json(j);
  return build_union_polytope_system(ps, o.s, o.t, o.jobs);
}

std::vector<int> s_list_for(const Options& o, int r) {
  if (!o.s_list.empty()) {
    std::vector<int> v = parse_int_list(o.s_list);
    if (static_cast<int>(v.size()) != r) throw InputError("--s-list needs one entry per part");
    return v;
  }
  return std::vector<int>(static_cast<std::size_t>(r), o.s);
}

Json masks_json(const std::vector<Mask>& ms) {
  Json out = Json::array();
  for (Mask x : ms) out.push_back(mask_to_json(x));
  return out;
}

// Collects the report and its certificates and emits both.
class Output {
 public:
  Output(const Options& o, std::string command) : opts_(o) { report_["command"] = std::move(command); }

  Json& report() { return report_; }

  void certificate(const std::string& name, Json cert) { certs_.emplace(name, std::move(cert)); }

  int finish(int code) {
    report_["exit_code"] = code;
    if (opts_.out_dir.empty()) {
      if (!certs_.empty()) {
        Json all = Json::object();
        for (auto& [name, c] : certs_) all[name] = c;
        report_["certificates"] = all;
      }
    } else {
      Json names = Json::array();
      for (auto& [name, c] : certs_) {
        write_file(opts_.out_dir + "/" + name, dump(c));
        names.push_back(name);
      }
      if (!certs_.empty()) report_["certificate_files"] = names;
      write_file(opts_.out_dir + "/report.json", dump(report_));
    }
    std::cout << dump(report_);
    return code;
  }

 private:
  const Options& opts_;
  Json report_;
  std::map<std::string, Json> certs_;
};

std::string numbered(const std::string& stem, std::size_t k) {
  std::ostringstream ss;
  ss << stem << "-" << std::setw(4) << std::setfill('0') << k << ".json";
  return ss.str();
}

int emit_profile(const Options& o, const std::string& command, const ShatterProfile& profile) {
  const int code = profile.all_pass() ? kOk : kRefuted;
  if (o.format == "csv") {
    const std::string csv = profile_csv(profile);
    if (!o.out_dir.empty()) write_file(o.out_dir + "/profile.csv", csv);
    std::cout << csv;
    return code;
  }
  Output out(o, command);
  out.report()["profile"] = to_json(profile);
  return out.finish(code);
}

int cmd_vcdim(const Options& o) {
  const SetSystem sys = load_system(o);
  const DimensionResult res = vc_dimension(sys, o.cap);
  Output out(o, "vcdim");
  out.report()["n"] = sys.ground_size();
  out.report()["edges"] = sys.edges().size();
  out.report()["vc_dim"] = res.dimension;
  out.report()["witness"] = mask_to_json(res.witness);
  return out.finish(kOk);
}

int cmd_rvcdim(const Options& o) {
  const SetSystem sys = load_system(o);
  const DimensionResult res = r_vc_dimension(sys, o.r, o.cap);
  const int vc = vc_dim(sys);
  const int bound = min_f_counting(vc, o.r) - 1;
  Output out(o, "rvcdim");
  out.report()["n"] = sys.ground_size();
  out.report()["r"] = o.r;
  out.report()["r_vc_dim"] = res.dimension;
  out.report()["witness"] = mask_to_json(res.witness);
  out.report()["vc_dim"] = vc;
  out.report()["counting_bound"] = bound;
  return out.finish(res.dimension <= bound ? kOk : kRefuted);
}

int cmd_shatter(const Options& o) {
  const SetSystem sys = load_system(o);
  const int m_max = o.m >= 0 ? o.m : static_cast<int>(sys.ground_size());
  return emit_profile(o, "shatter", check_sauer(sys, m_max, o.cap));
}

int cmd_rshatter(const Options& o) {
  const SetSystem sys = load_system(o);
  const int m_max = o.m >= 0 ? o.m : static_cast<int>(sys.ground_size());
  return emit_profile(o, "rshatter", check_r_shatter(sys, o.r, m_max, o.cap));
}

int cmd_bound(const Options& o) {
  const int f = min_f_counting(o.d, o.r);
  if (o.format == "json") {
    Output out(o, "bound-e31");
    out.report()["d"] = o.d;
    out.report()["r"] = o.r;
    out.report()["f"] = f;
    return out.finish(kOk);
  }
  std::cout << f << "\n";
  return kOk;
}

int cmd_traces(const Options& o) {
  const PointSet ps = load_points(o);
  const SetSystem sys = build_union_polytope_system(ps, o.s, o.t, o.jobs);
  const Json j = to_json(sys);
  if (!o.out_dir.empty()) write_file(o.out_dir + "/traces.json", dump(j));
  std::cout << dump(j);
  return kOk;
}

int cmd_radon(const Options& o) {
  const PointSet ps = load_points(o);
  HullOracle oracle(ps);
  const RadonSearchResult res = good_radon_partition(oracle, ps.all(), o.s, o.t, o.jobs, o.cap);
  Output out(o, "radon");
  out.report()["n"] = ps.size();
  out.report()["s"] = o.s;
  out.report()["t"] = o.t;
  out.report()["partitions_examined"] = res.partitions_examined;
  out.report()["found"] = res.good.has_value();
  if (res.good) {
    out.report()["partition"] = masks_json(res.good->parts);
    out.report()["transcript"] = to_json(res.good->transcript);
    out.certificate("good-partition.json",
                    good_partition_certificate(ps, res.good->parts, {o.s, o.t}, *res.good));
    if (o.s == 1 && o.t == 1) {
      out.certificate("hull-intersection.json",
                      hull_intersection_certificate(ps, hulls_common_point(ps, res.good->parts)));
    }
    return out.finish(kOk);
  }
  for (std::size_t k = 0; k < res.refutations.size(); ++k) {
    const auto& [parts, cert] = res.refutations[k];
    out.certificate(numbered("separation", k),
                    separation_certificate(ps, parts[0], parts[1], o.s, o.t, cert));
  }
  return out.finish(kRefuted);
}

int cmd_tverberg(const Options& o) {
  const PointSet ps = load_points(o);
  const std::vector<int> s_list = s_list_for(o, o.r);
  HullOracle oracle(ps);
  const TverbergSearchResult res = good_tverberg_partition(oracle, ps.all(), o.r, s_list, o.jobs, o.cap);
  Output out(o, "tverberg");
  out.report()["n"] = ps.size();
  out.report()["r"] = o.r;
  out.report()["s_list"] = s_list;
  out.report()["partitions_examined"] = res.partitions_examined;
  out.report()["found"] = res.good.has_value();
  if (res.good) {
    out.report()["partition"] = masks_json(res.good->parts);
    out.report()["transcript"] = to_json(res.good->transcript);
    out.certificate("good-partition.json",
                    good_partition_certificate(ps, res.good->parts, s_list, *res.good));
    return out.finish(kOk);
  }
  for (std::size_t k = 0; k < res.refutations.size(); ++k) {
    const auto& [parts, cert] = res.refutations[k];
    out.certificate(numbered("empty-intersection", k),
                    empty_intersection_certificate(ps, parts, s_list, cert));
  }
  return out.finish(kRefuted);
}

int cmd_separate(const Options& o) {
  const PointSet ps = load_points(o);
  const Mask a = parse_index_set(o.a, ps.size());
  const Mask b = o.b.empty() ? ps.all() & ~a : parse_index_set(o.b, ps.size());
  const SeparabilityResult res = st_separable(ps, a, b, o.s, o.t, o.cap);
  Output out(o, "separate");
  out.report()["a"] = mask_to_json(a);
  out.report()["b"] = mask_to_json(b);
  out.report()["s"] = o.s;
  out.report()["t"] = o.t;
  out.report()["separable"] = res.separable();
  out.report()["transcript"] = to_json(res.transcript);
  if (res.separable()) {
    Json ks = Json::array();
    for (const Polyhedron& k : res.certificate->polyhedra()) {
      Json facets = Json::array();
      for (const Hyperplane& h : k.facets) facets.push_back(to_json(h));
      ks.push_back(facets);
    }
    out.report()["polyhedra"] = ks;
    out.certificate("separation.json", separation_certificate(ps, a, b, o.s, o.t, *res.certificate));
    return out.finish(kOk);
  }
  GoodPartition gp{{a, b}, res.transcript};
  out.certificate("good-partition.json", good_partition_certificate(ps, gp.parts, {o.s, o.t}, gp));
  return out.finish(kRefuted);
}

int cmd_build_separation(const Options& o) {
  const PointSet ps = load_points(o);
  std::vector<Cover> covers;
  for (const std::string& c : o.covers) covers.push_back(parse_cover(c, ps.size()));
  if (covers.size() < 2) throw InputError("give at least two --cover arguments");
  Output out(o, "build-separation");
  out.report()["covers"] = Json::array();
  for (const Cover& c : covers) out.report()["covers"].push_back(masks_json(c));
  try {
    const RSeparation sep = build_r_separation(ps, covers);
    const RSeparationAudit audit = audit_r_separation(ps, covers, sep);
    out.report()["contains_covers"] = audit.contains_covers;
    out.report()["empty_intersection"] = audit.empty_intersection;
    out.report()["max_facets"] = audit.max_facets;
    out.report()["facet_bound"] = audit.facet_bound.get_str();
    out.report()["overlap"] = audit.overlap;
    out.certificate("r-separation.json", r_separation_certificate(ps, covers, sep, audit));
    return out.finish(audit.ok() ? kOk : kRefuted);
  } catch (const PreconditionError& e) {
    out.report()["error"] = e.what();
    out.report()["common_point"] = rat_vec_to_json(e.common_point());
    return out.finish(kRefuted);
  }
}

PointSet periodic_points(std::size_t n, int r) {
  PointSet ps;
  ps.dim = 1;
  const Coloring col = periodic_coloring(n, r);
  for (std::size_t i = 0; i < n; ++i) {
    Rat x(static_cast<long>(i + 1), static_cast<unsigned long>(n + 1));
    x.canonicalize();
    ps.points.push_back({x});
    ps.labels.push_back("color " + std::to_string(col[i]));
  }
  return ps;
}

int cmd_gen(const Options& o) {
  PointSet ps;
  if (o.kind == "moment-curve") {
    ps = moment_curve(o.n, static_cast<std::size_t>(o.d));
  } else if (o.kind == "convex-position") {
    ps = convex_position(o.n);
  } else if (o.kind == "periodic") {
    ps = periodic_points(o.n, o.r);
  } else if (o.kind == "tight") {
    ps = tverberg_tight_instance(o.d, o.r, o.seed, 200, o.jobs);
  } else if (o.kind == "copies") {
    ps = translated_copies(load_points(o), o.s);
  } else if (o.kind == "t42") {
    const T42Instance inst = t42_instance(o.d, o.s, o.r);
    ps = inst.points;
    ps.labels.clear();
    for (int q : inst.interval) ps.labels.push_back("interval " + std::to_string(q));
  } else {
    throw InputError("unknown generator '" + o.kind + "'");
  }
  const Json j = to_json(ps);
  if (!o.out_dir.empty()) write_file(o.out_dir + "/points.json", dump(j));
  std::cout << dump(j);
  return kOk;
}

int verify_t999_cmd(const Options& o) {
  const T999Report rep = verify_t999(o.r, o.s, o.n, o.cap);
  Output out(o, "verify t999");
  out.report()["r"] = rep.r;
  out.report()["s"] = rep.s;
  out.report()["n"] = rep.n;
  out.report()["verified"] = rep.verified;
  out.report()["tuples_checked"] = rep.tuples_checked.get_str();
  out.report()["max_miss"] = rep.max_miss;
  out.report()["miss_bound"] = rep.miss_bound;
  if (rep.counterexample) {
    Json ce = Json::array();
    for (const auto& color : *rep.counterexample) {
      Json iv = Json::array();
      for (const auto& [lo, hi] : color) iv.push_back({lo, hi});
      ce.push_back(iv);
    }
    out.report()["counterexample"] = ce;
  }
  const bool ok = rep.verified && rep.max_miss <= rep.miss_bound;
  return out.finish(ok ? kOk : kRefuted);
}

int verify_t42_cmd(const Options& o) {
  const T42Instance inst = t42_instance(o.d, o.s, o.r);
  Output out(o, "verify t42");
  out.report()["d"] = o.d;
  out.report()["s"] = o.s;
  out.report()["r"] = o.r;
  out.report()["m"] = inst.m;
  out.report()["p"] = inst.p;
  out.report()["n"] = inst.n();
  if (!o.coloring.empty()) {
    const std::vector<int> col = parse_int_list(o.coloring);
    if (col.size() != inst.n()) throw InputError("--coloring needs one color per point");
    for (int c : col) {
      if (c < 0 || c >= o.r) throw InputError("colors must lie in [0, r)");
    }
    HullOracle oracle(inst.points);
    const T42Check chk = verify_t42(oracle, inst, col);
    out.report()["coloring"] = col;
    out.report()["passed"] = chk.passed;
    Json covers = Json::array();
    for (const Cover& c : chk.covers) covers.push_back(masks_json(c));
    out.report()["covers"] = covers;
    if (!chk.passed) out.report()["failure"] = chk.failure;
    if (chk.certificate) {
      std::vector<Mask> parts(static_cast<std::size_t>(o.r), 0);
      for (std::size_t i = 0; i < col.size(); ++i) parts[static_cast<std::size_t>(col[i])] |= Mask{1} << i;
      // Empty color classes have no cover; the certificate covers the rest.
      std::vector<Mask> used_parts;
      std::vector<int> s_list;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] == 0) continue;
        used_parts.push_back(parts[i]);
        s_list.push_back(o.s);
      }
      if (used_parts.size() == parts.size()) {
        out.certificate("empty-intersection.json",
                        empty_intersection_certificate(inst.points, used_parts, s_list, *chk.certificate));
      }
    }
    return out.finish(chk.passed ? kOk : kRefuted);
  }
  const T42Sweep sweep = sweep_t42(inst, o.jobs, o.cap);
  out.report()["colorings"] = sweep.colorings;
  out.report()["passed"] = sweep.passed;
  out.report()["max_groups"] = sweep.max_groups;
  out.report()["tuples_certified"] = sweep.tuples_certified;
  if (sweep.first_failure) out.report()["first_failure"] = *sweep.first_failure;
  const bool ok = sweep.passed == sweep.colorings && sweep.max_groups <= static_cast<std::size_t>(o.s);
  return out.finish(ok ? kOk : kRefuted);
}

int verify_rshatter_cmd(const Options& o) {
  const SetSystem sys = load_system(o);
  const int m_max = o.m >= 0 ? o.m : static_cast<int>(sys.ground_size());
  const ShatterProfile profile = check_r_shatter(sys, o.r, m_max, o.cap);
  const int vc = vc_dim(sys);
  const int bound = min_f_counting(vc, o.r) - 1;
  if (o.format == "csv") return emit_profile(o, "verify rshatter", profile);
  Output out(o, "verify rshatter");
  out.report()["profile"] = to_json(profile);
  out.report()["vc_dim"] = vc;
  out.report()["counting_bound"] = bound;
  const bool ok = profile.all_pass() && profile.dimension <= bound;
  return out.finish(ok ? kOk : kRefuted);
}

int verify_f3_cmd(const Options& o) {
  PointSet ps;
  if (!o.input.empty()) {
    ps = load_points(o);
  } else {
    CounterRng rng(o.seed);
    ps = random_rational_points(o.n ? o.n : static_cast<std::size_t>(4 * o.s + 1), 3, rng);
  }
  if (ps.dim != 3) throw InputError("verify f3 needs points in R^3");
  Output out(o, "verify f3");
  out.report()["n"] = ps.size();
  out.report()["s"] = o.s;
  const auto col = halfspace_4coloring(ps, o.jobs);
  out.report()["coloring_found"] = col.has_value();
  if (!col) return out.finish(kRefuted);
  out.report()["coloring"] = *col;
  std::vector<Mask> classes(4, 0);
  for (std::size_t i = 0; i < ps.size(); ++i) classes[static_cast<std::size_t>((*col)[i])] |= Mask{1} << i;
  Mask b = classes[0];
  for (Mask c : classes) {
    if (popcount(c) > popcount(b)) b = c;
  }
  const Mask a = ps.all() & ~b;
  out.report()["largest_class"] = mask_to_json(b);
  if (a == 0) return out.finish(kRefuted);
  const SeparabilityResult res = st_separable(ps, b, a, o.s, 1, o.cap);
  out.report()["separable"] = res.separable();
  out.report()["transcript"] = to_json(res.transcript);
  if (res.separable()) {
    out.certificate("separation.json", separation_certificate(ps, b, a, o.s, 1, *res.certificate));
    return out.finish(kRefuted);
  }
  GoodPartition gp{{b, a}, res.transcript};
  out.certificate("good-partition.json", good_partition_certificate(ps, gp.parts, {o.s, 1}, gp));
  return out.finish(kOk);
}

int verify_abstract_cmd(const Options& o) {
  const ConvexitySpace space = !o.input.empty() ? convexity_space_from_json(load_input(o))
                                                : interval_space(o.n ? o.n : 8);
  Output out(o, "verify abstract");
  const SpaceCheck chk = validate_space(space);
  out.report()["n"] = space.n;
  out.report()["family_size"] = space.family.size();
  out.report()["valid"] = chk.valid;
  if (!chk.valid) {
    out.report()["violation"] = chk.violation;
    return out.finish(kRefuted);
  }
  const auto radon = radon_number(space, o.cap);
  const int r = std::max(o.r, 2);
  const auto tverberg = tverberg_number(space, r, o.cap);
  const SeparabilityCheck sep = is_separable(space, o.cap);
  const int hvc = vc_dim(halfspaces(space));
  out.report()["radon_number"] = radon ? Json(*radon) : Json("infinity");
  out.report()["r"] = r;
  out.report()["tverberg_number"] = tverberg ? Json(*tverberg) : Json("infinity");
  out.report()["separable"] = sep.separable;
  if (sep.violation) {
    out.report()["separability_violation"] = {mask_to_json(sep.violation->first),
                                              mask_to_json(sep.violation->second)};
  }
  out.report()["halfspace_vc_dim"] = hvc;
  const AbstractGoodPartition gp = abstract_good_partition(space, full_mask(space.n), o.s, o.t, o.cap);
  out.report()["good_partition"] =
      gp.partition ? Json{mask_to_json(gp.partition->first), mask_to_json(gp.partition->second)}
                   : Json(nullptr);
  // The halfspace bound is claimed for separable spaces with finite Radon number.
  const bool bound_ok = !sep.separable || !radon || hvc <= *radon - 1;
  out.report()["halfspace_bound_holds"] = bound_ok;
  return out.finish(bound_ok ? kOk : kRefuted);
}

int cmd_verify(const Options& o) {
  if (o.kind == "t999") return verify_t999_cmd(o);
  if (o.kind == "t42") return verify_t42_cmd(o);
  if (o.kind == "sauer") {
    const SetSystem sys = load_system(o);
    const int m_max = o.m >= 0 ? o.m : static_cast<int>(sys.ground_size());
    return emit_profile(o, "verify sauer", check_sauer(sys, m_max, o.cap));
  }
  if (o.kind == "rshatter") return verify_rshatter_cmd(o);
  if (o.kind == "f3") return verify_f3_cmd(o);
  if (o.kind == "abstract") return verify_abstract_cmd(o);
  throw InputError("unknown verifier '" + o.kind + "'");
}

int cmd_fsearch(const Options& o) {
  FSearchConfig cfg;
  cfg.d = static_cast<std::size_t>(o.d);
  if (!o.s_list.empty()) {
    cfg.s_list = parse_int_list(o.s_list);
  } else if (o.r > 2) {
    cfg.s_list.assign(static_cast<std::size_t>(o.r), o.s);
  } else {
    cfg.s_list = {o.s, o.t};
  }
  cfg.n = o.n ? o.n : 4;
  cfg.samples = o.samples;
  cfg.sampler = parse_sampler(o.sampler);
  if (cfg.sampler == Sampler::kFile) {
    cfg.file = load_points(o);
    cfg.n = cfg.file->size();
    cfg.d = cfg.file->dim;
  }
  cfg.seed = o.seed;
  cfg.jobs = o.jobs;
  cfg.cap = o.cap;
  const FSearchReport rep = f_search(cfg);
  Output out(o, "fsearch");
  out.report()["d"] = cfg.d;
  out.report()["n"] = cfg.n;
  out.report()["s_list"] = cfg.s_list;
  out.report()["sampler"] = sampler_name(cfg.sampler);
  out.report()["seed"] = cfg.seed;
  out.report()["samples"] = rep.samples.size();
  out.report()["good_count"] = rep.good_count;
  Json per = Json::array();
  for (const FSearchSample& s : rep.samples) {
    per.push_back(Json{{"good_found", s.good_found},
                       {"partition", masks_json(s.partition)},
                       {"partitions_examined", s.partitions_examined}});
  }
  out.report()["per_sample"] = per;
  if (!rep.witness) {
    out.report()["result"] = "good partition found for all samples";
    return out.finish(kOk);
  }
  out.report()["result"] = "lower-bound witness";
  out.report()["witness_index"] = *rep.witness_index;
  out.report()["witness"] = to_json(*rep.witness);
  // Refutation certificates for every partition of the witness.
  const PointSet& ps = *rep.witness;
  HullOracle oracle(ps);
  if (cfg.s_list.size() == 2) {
    const RadonSearchResult res =
        good_radon_partition(oracle, ps.all(), cfg.s_list[0], cfg.s_list[1], cfg.jobs, cfg.cap);
    for (std::size_t k = 0; k < res.refutations.size(); ++k) {
      const auto& [parts, cert] = res.refutations[k];
      out.certificate(numbered("separation", k),
                      separation_certificate(ps, parts[0], parts[1], cfg.s_list[0], cfg.s_list[1], cert));
    }
  } else {
    const TverbergSearchResult res = good_tverberg_partition(
        oracle, ps.all(), static_cast<int>(cfg.s_list.size()), cfg.s_list, cfg.jobs, cfg.cap);
    for (std::size_t k = 0; k < res.refutations.size(); ++k) {
      const auto& [parts, cert] = res.refutations[k];
      out.certificate(numbered("empty-intersection", k),
                      empty_intersection_certificate(ps, parts, cfg.s_list, cert));
    }
  }
  return out.finish(kRefuted);
}

int cmd_verify_cert(const Options& o) {
  const CertificateCheck chk = verify_certificate(load_input(o));
  Output out(o, "verify-cert");
  out.report()["kind"] = chk.kind;
  out.report()["valid"] = chk.valid;
  out.report()["detail"] = chk.detail;
  return out.finish(chk.valid ? kOk : kRefuted);
}

void add_flags(CLI::App* sub, Options& o) {
  sub->add_option("--input", o.input, "Input JSON file");
  sub->add_option("--d", o.d, "Dimension");
  sub->add_option("--s", o.s, "Convex sets per cover (first side)");
  sub->add_option("--t", o.t, "Convex sets per cover (second side) or facets per polyhedron");
  sub->add_option("--r", o.r, "Number of parts");
  sub->add_option("--s-list", o.s_list, "Comma-separated s per part");
  sub->add_option("--n", o.n, "Number of points");
  sub->add_option("--cap", o.cap, "Enumeration cap");
  sub->add_option("--seed", o.seed, "Sampler seed");
  sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--out-dir", o.out_dir, "Directory for the report and certificate files");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radon and Tverberg partitions for unions of convex sets, in exact arithmetic"};
  app.require_subcommand(1);
  Options o;
  std::map<std::string, int (*)(const Options&)> handlers{
      {"vcdim", cmd_vcdim},       {"rvcdim", cmd_rvcdim},     {"shatter", cmd_shatter},
      {"rshatter", cmd_rshatter}, {"bound-e31", cmd_bound},   {"traces", cmd_traces},
      {"radon", cmd_radon},       {"tverberg", cmd_tverberg}, {"separate", cmd_separate},
      {"build-separation", cmd_build_separation},             {"gen", cmd_gen},
      {"verify", cmd_verify},     {"fsearch", cmd_fsearch},   {"verify-cert", cmd_verify_cert}};
  const std::map<std::string, std::string> help{
      {"vcdim", "VC-dimension of a set system (or of a point set's traces)"},
      {"rvcdim", "r-VC-dimension and the counting bound"},
      {"shatter", "Shatter function against the Sauer bound"},
      {"rshatter", "Realizable r-partition counts against their bound"},
      {"bound-e31", "Least f with (sum_{i<=d} C(f,i))^r < (r/(r-1))^f"},
      {"traces", "Traces of unions of s polyhedra with t facets"},
      {"radon", "Search for a good bipartition"},
      {"tverberg", "Search for a good r-partition"},
      {"separate", "Decide (s,t)-separability of two index sets"},
      {"build-separation", "Polyhedral separation of covers with empty intersection"},
      {"gen", "Generate a point set"},
      {"verify", "Run a verifier"},
      {"fsearch", "Sample point sets and search for good partitions"},
      {"verify-cert", "Re-check a certificate file"}};
  for (const auto& [name, fn] : handlers) {
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    add_flags(sub, o);
    if (name == "gen") {
      sub->add_option("kind", o.kind, "moment-curve|convex-position|periodic|tight|copies|t42")
          ->required();
    }
    if (name == "verify") {
      sub->add_option("kind", o.kind, "t999|t42|sauer|rshatter|f3|abstract")->required();
      sub->add_option("--coloring", o.coloring, "Single comma-separated coloring for t42");
    }
    if (name == "separate") {
      sub->add_option("--a", o.a, "Comma-separated indices of A")->required();
      sub->add_option("--b", o.b, "Comma-separated indices of B (default: the rest)");
    }
    if (name == "build-separation") {
      sub->add_option("--cover", o.covers, "Cover as groups 'i,j|k' (repeat per part)")->required();
    }
    if (name == "fsearch") {
      sub->add_option("--samples", o.samples, "Number of samples");
      sub->add_option("--sampler", o.sampler, "random-rational|convex-position|moment-curve|file");
    }
    if (name == "shatter" || name == "rshatter" || name == "verify") {
      sub->add_option("--m", o.m, "Largest subset size profiled");
    }
  }
  if (argc <= 1) {
    std::cout << app.help();
    return kInput;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }
  const std::string name = app.get_subcommands().front()->get_name();
  try {
    return handlers.at(name)(o);
  } catch (const ResourceError& e) {
    std::cerr << "rtk: resource cap: " << e.what() << "\n";
    return kCap;
  } catch (const InputError& e) {
    std::cerr << "rtk: input error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "rtk: internal error: " << e.what() << "\n";
    return 1;
  }
}
