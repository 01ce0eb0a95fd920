#pragma once

#include <string>
#include <vector>

namespace slsim {

// Mapping from the cumulative media rate of a layer stack to a perceptual
// quality score. Either a logarithmic curve q(r) = a*ln(1 + r/r0) or an
// explicit per-level table.
struct QualityMap {
  enum class Kind { Log, Table };
  Kind kind = Kind::Log;
  double a = 8.2;
  double r0_bps = 50e3;
  std::vector<double> table;  // one entry per level, Kind::Table only
};

// Layered video: one base layer plus L enhancement layers per segment.
// Segments are homogeneous; every segment uses the same layer rates.
struct VideoSpec {
  double segment_duration_s = 1.0;
  int num_segments = 1200;
  double base_rate_bps = 100e3;
  std::vector<double> enh_rates_bps = {100e3, 100e3, 300e3, 300e3, 600e3};
  double svc_overhead_frac = 0.10;
  QualityMap quality_map;

  int num_layers() const { return static_cast<int>(enh_rates_bps.size()); }

  // Throws std::invalid_argument when rates are non-positive or the quality
  // curve is not strictly increasing and concave in the cumulative rate.
  void validate() const;
};

// Average media rate of the first `level` enhancement layers plus the base
// layer. The coding overhead applies to enhancement layers only; level 0 is
// the plain base representation.
double cumulative_rate(const VideoSpec& spec, int level);

// Bits needed to deliver one segment's single layer (0 = base).
double layer_bits(const VideoSpec& spec, int layer_index);

// Quality score obtained from delivering the first `level` enhancement
// layers of a segment.
double quality(const VideoSpec& spec, int level);

inline double max_quality(const VideoSpec& spec) {
  return quality(spec, spec.num_layers());
}

}  // namespace slsim
