#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rtk/geometry.hpp"

namespace rtk {

enum class Sampler { kRandomRational, kConvexPosition, kMomentCurve, kFile };

Sampler parse_sampler(const std::string& name);
std::string sampler_name(Sampler s);

struct FSearchConfig {
  std::size_t d = 2;
  std::vector<int> s_list = {1, 1};  // one entry per part; r = size
  std::size_t n = 4;
  std::size_t samples = 10;
  Sampler sampler = Sampler::kRandomRational;
  std::optional<PointSet> file;  // the only sample for Sampler::kFile
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  std::uint64_t cap = 10'000'000;
};

struct FSearchSample {
  bool good_found = false;
  std::vector<Mask> partition;  // the good partition when found
  std::uint64_t partitions_examined = 0;
};

struct FSearchReport {
  std::vector<FSearchSample> samples;
  std::size_t good_count = 0;
  std::optional<std::size_t> witness_index;  // first sample with no good partition
  std::optional<PointSet> witness;
  bool all_good() const { return good_count == samples.size(); }
};

/// Sample k is drawn from CounterRng(seed, k), so samples do not depend on
/// the order or thread count of the searches.
PointSet draw_sample(const FSearchConfig& cfg, std::size_t k);

FSearchReport f_search(const FSearchConfig& cfg);

}  // namespace rtk
