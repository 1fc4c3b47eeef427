#include "rtk/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rtk/enumerate.hpp"
#include "rtk/errors.hpp"

namespace rtk {
namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

std::vector<Mask> masks_from_json(const Json& j, std::size_t n) {
  if (!j.is_array()) throw InputError("expected an array of index lists");
  std::vector<Mask> out;
  for (const auto& e : j) out.push_back(mask_from_json(e, n));
  return out;
}

Json masks_to_json(const std::vector<Mask>& ms) {
  Json out = Json::array();
  for (Mask m : ms) out.push_back(mask_to_json(m));
  return out;
}

std::vector<int> ints_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected an integer array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw InputError("expected an integer");
    out.push_back(v.get<int>());
  }
  return out;
}

// Independent exhaustion check for good-partition certificates: regenerate
// every grouping tuple and confirm some cross tuple of hulls meets.
CertificateCheck check_good_partition(const Json& cert) {
  CertificateCheck out{false, "good-partition", ""};
  const PointSet ps = point_set_from_json(field(cert, "points"));
  const std::vector<Mask> parts = masks_from_json(field(cert, "parts"), ps.size());
  const std::vector<int> s_list = ints_from_json(field(cert, "s_list"));
  const Json& tr = field(cert, "transcript");
  if (parts.size() < 2 || s_list.size() != parts.size()) {
    out.detail = "part and s_list sizes disagree";
    return out;
  }
  Mask seen = 0;
  for (Mask p : parts) {
    if (p == 0 || (p & seen) != 0) {
      out.detail = "parts are not a partition";
      return out;
    }
    seen |= p;
  }
  std::vector<std::vector<std::vector<Mask>>> lists;
  BigInt closed = 1;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const std::vector<int> el = to_indices(parts[i]);
    const int k = std::min<int>(s_list[i], static_cast<int>(el.size()));
    closed *= stirling2(static_cast<int>(el.size()), k);
    std::vector<std::vector<Mask>> l;
    for_each_rgs(static_cast<int>(el.size()), k, k, [&](const std::vector<int>& rgs) {
      l.push_back(rgs_blocks(rgs, el));
      return false;
    });
    lists.push_back(std::move(l));
  }
  if (BigInt(tr.at("closed_form").get<std::string>()) != closed ||
      BigInt(tr.at("enumerated").get<std::string>()) != closed) {
    out.detail = "transcript counts do not match the closed form";
    return out;
  }
  std::vector<std::size_t> pick(parts.size(), 0);
  BigInt visited = 0;
  while (true) {
    ++visited;
    // Some cross tuple must have meeting hulls.
    std::vector<std::size_t> choice(parts.size(), 0);
    bool meets = false;
    while (!meets) {
      std::vector<Mask> tuple;
      for (std::size_t i = 0; i < parts.size(); ++i) tuple.push_back(lists[i][pick[i]][choice[i]]);
      const HullIntersection hi = hulls_common_point(ps, tuple);
      if (hi.nonempty() && verify_hull_intersection(ps, hi)) meets = true;
      std::size_t k = parts.size();
      while (k-- > 0) {
        if (++choice[k] < lists[k][pick[k]].size()) break;
        choice[k] = 0;
      }
      if (k == static_cast<std::size_t>(-1)) break;
    }
    if (!meets) {
      out.detail = "a grouping with empty joint intersection exists";
      return out;
    }
    std::size_t k = parts.size();
    while (k-- > 0) {
      if (++pick[k] < lists[k].size()) break;
      pick[k] = 0;
    }
    if (k == static_cast<std::size_t>(-1)) break;
  }
  out.valid = visited == closed;
  out.detail = out.valid ? "all " + closed.get_str() + " groupings re-checked" : "count mismatch";
  return out;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json mask_to_json(Mask m) {
  Json out = Json::array();
  for (int i : to_indices(m)) out.push_back(i);
  return out;
}

Mask mask_from_json(const Json& j, std::size_t n) {
  if (!j.is_array()) throw InputError("expected an index list");
  Mask m = 0;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw InputError("indices must be integers");
    const auto i = v.get<long long>();
    if (i < 0 || static_cast<std::size_t>(i) >= n) {
      throw InputError("index " + std::to_string(i) + " out of range");
    }
    m |= Mask{1} << i;
  }
  return m;
}

Json rat_vec_to_json(const RatVec& v) {
  Json out = Json::array();
  for (const Rat& x : v) out.push_back(format_rat(x));
  return out;
}

RatVec rat_vec_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of rationals");
  RatVec out;
  for (const auto& v : j) {
    if (v.is_string()) {
      out.push_back(parse_rat(v.get<std::string>()));
    } else if (v.is_number_integer()) {
      out.push_back(parse_rat(std::to_string(v.get<long long>())));
    } else {
      throw InputError("rationals must be \"p/q\" strings or integers");
    }
  }
  return out;
}

Json to_json(const PointSet& ps) {
  Json pts = Json::array();
  for (const auto& p : ps.points) pts.push_back(rat_vec_to_json(p));
  Json out{{"dim", ps.dim}, {"points", pts}};
  if (!ps.labels.empty()) out["labels"] = ps.labels;
  return out;
}

PointSet point_set_from_json(const Json& j) {
  PointSet ps;
  const Json& dim = field(j, "dim");
  if (!dim.is_number_integer() || dim.get<long long>() < 1) throw InputError("dim must be a positive integer");
  ps.dim = dim.get<std::size_t>();
  for (const auto& p : field(j, "points")) ps.points.push_back(rat_vec_from_json(p));
  if (j.contains("labels")) {
    for (const auto& l : j.at("labels")) {
      if (!l.is_string()) throw InputError("labels must be strings");
      ps.labels.push_back(l.get<std::string>());
    }
  }
  ps.validate();
  return ps;
}

Json to_json(const SetSystem& sys) {
  Json out{{"n", sys.ground_size()}, {"edges", masks_to_json(sys.edges())}};
  out["meta"] = Json{{"provenance", sys.provenance()}};
  return out;
}

SetSystem set_system_from_json(const Json& j) {
  const Json& n = field(j, "n");
  if (!n.is_number_integer() || n.get<long long>() < 0 || n.get<long long>() > 64) {
    throw InputError("n must be an integer in [0, 64]");
  }
  const std::size_t size = n.get<std::size_t>();
  std::string prov;
  if (j.contains("meta") && j.at("meta").contains("provenance")) {
    prov = j.at("meta").at("provenance").get<std::string>();
  }
  return SetSystem(size, masks_from_json(field(j, "edges"), size), prov);
}

Json to_json(const ConvexitySpace& space) {
  return Json{{"n", space.n}, {"family", masks_to_json(space.family)}};
}

ConvexitySpace convexity_space_from_json(const Json& j) {
  const Json& n = field(j, "n");
  if (!n.is_number_integer() || n.get<long long>() < 0 || n.get<long long>() > 64) {
    throw InputError("n must be an integer in [0, 64]");
  }
  const std::size_t size = n.get<std::size_t>();
  ConvexitySpace space(size, masks_from_json(field(j, "family"), size));
  const SpaceCheck chk = validate_space(space);
  if (!chk.valid) throw InputError("invalid convexity space: " + chk.violation);
  return space;
}

Json to_json(const Hyperplane& h) {
  return Json{{"normal", rat_vec_to_json(h.normal)}, {"offset", format_rat(h.offset)}};
}

Hyperplane hyperplane_from_json(const Json& j) {
  return Hyperplane{rat_vec_from_json(field(j, "normal")),
                    parse_rat(field(j, "offset").get<std::string>())};
}

Json to_json(const ExhaustionTranscript& t) {
  return Json{{"part_sizes", t.part_sizes},
              {"block_counts", t.block_counts},
              {"enumerated", t.enumerated.get_str()},
              {"closed_form", t.closed_form.get_str()},
              {"cap", t.cap}};
}

Json separation_certificate(const PointSet& ps, Mask a, Mask b, int s, int t,
                            const SeparationCertificate& cert) {
  Json hs = Json::array();
  for (const auto& row : cert.hyperplanes) {
    Json r = Json::array();
    for (const auto& h : row) r.push_back(to_json(h));
    hs.push_back(r);
  }
  return Json{{"kind", "separation"},    {"points", to_json(ps)},
              {"a", mask_to_json(a)},    {"b", mask_to_json(b)},
              {"s", s},                  {"t", t},
              {"a_groups", masks_to_json(cert.a_groups)},
              {"b_groups", masks_to_json(cert.b_groups)},
              {"hyperplanes", hs}};
}

Json empty_intersection_certificate(const PointSet& ps, const std::vector<Mask>& parts,
                                    const std::vector<int>& s_list,
                                    const EmptyIntersectionCertificate& cert) {
  Json groupings = Json::array();
  for (const auto& g : cert.groupings) groupings.push_back(masks_to_json(g));
  Json tuples = Json::array();
  for (const auto& tp : cert.tuples) {
    tuples.push_back(Json{{"choice", tp.choice},
                          {"groups", masks_to_json(tp.proof_groups)},
                          {"farkas", rat_vec_to_json(tp.farkas)}});
  }
  return Json{{"kind", "empty-intersection"}, {"points", to_json(ps)},
              {"parts", masks_to_json(parts)},  {"s_list", s_list},
              {"groupings", groupings},         {"tuples", tuples}};
}

Json good_partition_certificate(const PointSet& ps, const std::vector<Mask>& parts,
                                const std::vector<int>& s_list, const GoodPartition& good) {
  return Json{{"kind", "good-partition"},
              {"points", to_json(ps)},
              {"parts", masks_to_json(parts)},
              {"s_list", s_list},
              {"transcript", to_json(good.transcript)}};
}

Json hull_intersection_certificate(const PointSet& ps, const HullIntersection& hi) {
  Json weights = Json::array();
  for (const auto& w : hi.weights) weights.push_back(rat_vec_to_json(w));
  Json out{{"kind", "hull-intersection"}, {"points", to_json(ps)}, {"groups", masks_to_json(hi.groups)}};
  if (hi.point) {
    out["point"] = rat_vec_to_json(*hi.point);
    out["weights"] = weights;
  } else {
    out["farkas"] = rat_vec_to_json(hi.farkas);
  }
  return out;
}

Json r_separation_certificate(const PointSet& ps, const std::vector<Cover>& covers,
                              const RSeparation& sep, const RSeparationAudit& audit) {
  Json cov = Json::array();
  for (const auto& c : covers) cov.push_back(masks_to_json(c));
  Json sets = Json::array();
  for (const auto& set : sep.sets) {
    Json polys = Json::array();
    for (const auto& poly : set) {
      Json facets = Json::array();
      for (const auto& h : poly.facets) facets.push_back(to_json(h));
      polys.push_back(facets);
    }
    sets.push_back(polys);
  }
  Json tuples = Json::array();
  for (const auto& tp : audit.tuples) {
    tuples.push_back(Json{{"choice", tp.choice}, {"farkas", rat_vec_to_json(tp.farkas)}});
  }
  return Json{{"kind", "r-separation"}, {"points", to_json(ps)}, {"covers", cov},
              {"sets", sets},           {"tuples", tuples}};
}

CertificateCheck verify_certificate(const Json& cert) {
  const std::string kind = field(cert, "kind").get<std::string>();
  CertificateCheck out{false, kind, ""};
  if (kind == "good-partition") return check_good_partition(cert);
  const PointSet ps = point_set_from_json(field(cert, "points"));
  const std::size_t n = ps.size();
  if (kind == "separation") {
    SeparationCertificate sc;
    sc.a_groups = masks_from_json(field(cert, "a_groups"), n);
    sc.b_groups = masks_from_json(field(cert, "b_groups"), n);
    for (const auto& row : field(cert, "hyperplanes")) {
      std::vector<Hyperplane> r;
      for (const auto& h : row) r.push_back(hyperplane_from_json(h));
      sc.hyperplanes.push_back(std::move(r));
    }
    out.valid = verify_separation(ps, mask_from_json(field(cert, "a"), n),
                                  mask_from_json(field(cert, "b"), n), field(cert, "s").get<int>(),
                                  field(cert, "t").get<int>(), sc);
  } else if (kind == "empty-intersection") {
    EmptyIntersectionCertificate ec;
    for (const auto& g : field(cert, "groupings")) ec.groupings.push_back(masks_from_json(g, n));
    for (const auto& tp : field(cert, "tuples")) {
      ec.tuples.push_back(TupleProof{ints_from_json(field(tp, "choice")),
                                     masks_from_json(field(tp, "groups"), n),
                                     rat_vec_from_json(field(tp, "farkas"))});
    }
    out.valid = verify_empty_intersection(ps, masks_from_json(field(cert, "parts"), n),
                                          ints_from_json(field(cert, "s_list")), ec);
  } else if (kind == "hull-intersection") {
    HullIntersection hi;
    hi.groups = masks_from_json(field(cert, "groups"), n);
    if (cert.contains("point")) {
      hi.point = rat_vec_from_json(cert.at("point"));
      for (const auto& w : field(cert, "weights")) hi.weights.push_back(rat_vec_from_json(w));
    } else {
      hi.farkas = rat_vec_from_json(field(cert, "farkas"));
    }
    out.valid = verify_hull_intersection(ps, hi);
  } else if (kind == "r-separation") {
    std::vector<Cover> covers;
    for (const auto& c : field(cert, "covers")) covers.push_back(masks_from_json(c, n));
    RSeparation sep;
    for (const auto& set : field(cert, "sets")) {
      std::vector<Polyhedron> polys;
      for (const auto& facets : set) {
        Polyhedron p;
        for (const auto& h : facets) p.facets.push_back(hyperplane_from_json(h));
        polys.push_back(std::move(p));
      }
      sep.sets.push_back(std::move(polys));
    }
    // Containment and facet counts directly; emptiness from the stored
    // Farkas vectors, one per cross tuple in order.
    bool ok = sep.sets.size() == covers.size();
    std::size_t s = 0;
    for (const auto& c : covers) s = std::max(s, c.size());
    BigInt bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), s, covers.size() - 1);
    for (std::size_t i = 0; ok && i < covers.size(); ++i) {
      ok = sep.sets[i].size() == covers[i].size();
      for (std::size_t k = 0; ok && k < covers[i].size(); ++k) {
        if (BigInt(static_cast<unsigned long>(sep.sets[i][k].facets.size())) > bound) ok = false;
        for (int p : to_indices(covers[i][k])) {
          if (!sep.sets[i][k].contains(ps.points[p])) ok = false;
        }
      }
    }
    const Json& tuples = field(cert, "tuples");
    std::vector<int> choice(covers.size(), 0);
    bool any_empty = false;
    for (const auto& set : sep.sets) any_empty = any_empty || set.empty();
    std::size_t idx = 0;
    while (ok && !any_empty) {
      if (idx >= tuples.size() || ints_from_json(field(tuples[idx], "choice")) != choice) {
        ok = false;
        break;
      }
      std::vector<const Polyhedron*> tuple;
      for (std::size_t i = 0; i < covers.size(); ++i) tuple.push_back(&sep.sets[i][static_cast<std::size_t>(choice[i])]);
      const LinearSystem sys = region_system(ps, polyhedra_region(tuple));
      if (!is_farkas_certificate(sys, rat_vec_from_json(field(tuples[idx], "farkas")))) ok = false;
      ++idx;
      std::size_t k = covers.size();
      while (k-- > 0) {
        if (++choice[k] < static_cast<int>(sep.sets[k].size())) break;
        choice[k] = 0;
      }
      if (k == static_cast<std::size_t>(-1)) break;
    }
    out.valid = ok && (any_empty || idx == tuples.size());
  } else {
    throw InputError("unknown certificate kind '" + kind + "'");
  }
  out.detail = out.valid ? "verified" : "rejected";
  return out;
}

std::string profile_csv(const ShatterProfile& profile) {
  std::ostringstream ss;
  ss << "# schema: shatter-profile v1 (r=" << profile.r << ", dimension=" << profile.dimension
     << ")\n";
  ss << "m,computed,bound,pass\n";
  for (const auto& row : profile.rows) {
    ss << row.m << "," << row.computed.get_str() << "," << row.bound.get_str() << ","
       << (row.pass ? "true" : "false") << "\n";
  }
  return ss.str();
}

Json to_json(const ShatterProfile& profile) {
  Json rows = Json::array();
  for (const auto& row : profile.rows) {
    rows.push_back(Json{{"m", row.m},
                        {"computed", row.computed.get_str()},
                        {"bound", row.bound.get_str()},
                        {"pass", row.pass}});
  }
  return Json{{"dimension", profile.dimension}, {"r", profile.r}, {"rows", rows},
              {"all_pass", profile.all_pass()}};
}

}  // namespace rtk
