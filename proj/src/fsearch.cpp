#include "rtk/fsearch.hpp"

#include "rtk/constructions.hpp"
#include "rtk/errors.hpp"
#include "rtk/partitions.hpp"

namespace rtk {

Sampler parse_sampler(const std::string& name) {
  if (name == "random-rational") return Sampler::kRandomRational;
  if (name == "convex-position") return Sampler::kConvexPosition;
  if (name == "moment-curve") return Sampler::kMomentCurve;
  if (name == "file") return Sampler::kFile;
  throw InputError("unknown sampler '" + name + "'");
}

std::string sampler_name(Sampler s) {
  switch (s) {
    case Sampler::kRandomRational:
      return "random-rational";
    case Sampler::kConvexPosition:
      return "convex-position";
    case Sampler::kMomentCurve:
      return "moment-curve";
    case Sampler::kFile:
      return "file";
  }
  return "unknown";
}

PointSet draw_sample(const FSearchConfig& cfg, std::size_t k) {
  CounterRng rng(cfg.seed, k);
  switch (cfg.sampler) {
    case Sampler::kRandomRational:
      return random_rational_points(cfg.n, cfg.d, rng);
    case Sampler::kConvexPosition:
      if (cfg.d != 2) throw InputError("the convex-position sampler is planar (d = 2)");
      return random_convex_position(cfg.n, rng);
    case Sampler::kMomentCurve:
      return random_moment_curve(cfg.n, cfg.d, rng);
    case Sampler::kFile:
      if (!cfg.file) throw InputError("the file sampler needs an input point set");
      return *cfg.file;
  }
  throw InputError("unknown sampler");
}

FSearchReport f_search(const FSearchConfig& cfg) {
  if (cfg.s_list.size() < 2) throw InputError("f_search needs at least two parts");
  const std::size_t count = cfg.sampler == Sampler::kFile ? 1 : cfg.samples;
  FSearchReport rep;
  for (std::size_t k = 0; k < count; ++k) {
    const PointSet ps = draw_sample(cfg, k);
    ps.validate();
    HullOracle oracle(ps);
    FSearchSample sample;
    if (cfg.s_list.size() == 2) {
      const auto res =
          good_radon_partition(oracle, ps.all(), cfg.s_list[0], cfg.s_list[1], cfg.jobs, cfg.cap);
      sample.partitions_examined = res.partitions_examined;
      if (res.good) {
        sample.good_found = true;
        sample.partition = res.good->parts;
      }
    } else {
      const auto res = good_tverberg_partition(oracle, ps.all(), static_cast<int>(cfg.s_list.size()),
                                               cfg.s_list, cfg.jobs, cfg.cap);
      sample.partitions_examined = res.partitions_examined;
      if (res.good) {
        sample.good_found = true;
        sample.partition = res.good->parts;
      }
    }
    if (sample.good_found) {
      ++rep.good_count;
    } else if (!rep.witness_index) {
      rep.witness_index = k;
      rep.witness = ps;
    }
    rep.samples.push_back(std::move(sample));
  }
  return rep;
}

}  // namespace rtk
