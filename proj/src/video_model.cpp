#include "slsim/video_model.hpp"

#include <cmath>
#include <stdexcept>

namespace slsim {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

double quality_of_rate(const QualityMap& m, double rate_bps, int level) {
  if (m.kind == QualityMap::Kind::Log) {
    return m.a * std::log1p(rate_bps / m.r0_bps);
  }
  return m.table.at(static_cast<size_t>(level));
}

}  // namespace

void VideoSpec::validate() const {
  require(segment_duration_s > 0, "segment duration must be positive");
  require(num_segments >= 1, "need at least one segment");
  require(base_rate_bps > 0, "base rate must be positive");
  require(svc_overhead_frac >= 0, "overhead cannot be negative");
  for (double r : enh_rates_bps) {
    require(r > 0, "enhancement rates must be positive");
  }
  if (quality_map.kind == QualityMap::Kind::Log) {
    require(quality_map.a > 0 && quality_map.r0_bps > 0,
            "log quality map needs positive a and r0");
  } else {
    require(quality_map.table.size() == enh_rates_bps.size() + 1,
            "quality table must have one entry per level");
  }
  // Quality must be strictly increasing in level and concave in the
  // cumulative rate (gain per added bit non-increasing).
  double prev_q = quality(*this, 0);
  double prev_slope = 0;
  for (int l = 1; l <= num_layers(); ++l) {
    double q = quality(*this, l);
    require(q > prev_q, "quality must be strictly increasing in level");
    double dr = cumulative_rate(*this, l) - cumulative_rate(*this, l - 1);
    double slope = (q - prev_q) / dr;
    if (l > 1) {
      require(slope <= prev_slope * (1 + 1e-9),
              "quality gains per added bit must be non-increasing");
    }
    prev_q = q;
    prev_slope = slope;
  }
}

double cumulative_rate(const VideoSpec& spec, int level) {
  if (level < 0 || level > spec.num_layers()) {
    throw std::domain_error("quality level out of range");
  }
  double rate = spec.base_rate_bps;
  for (int j = 1; j <= level; ++j) {
    rate += spec.enh_rates_bps[static_cast<size_t>(j - 1)] *
            (1.0 + spec.svc_overhead_frac);
  }
  return rate;
}

double layer_bits(const VideoSpec& spec, int layer_index) {
  if (layer_index < 0 || layer_index > spec.num_layers()) {
    throw std::domain_error("layer index out of range");
  }
  if (layer_index == 0) {
    return spec.base_rate_bps * spec.segment_duration_s;
  }
  return spec.enh_rates_bps[static_cast<size_t>(layer_index - 1)] *
         (1.0 + spec.svc_overhead_frac) * spec.segment_duration_s;
}

double quality(const VideoSpec& spec, int level) {
  double rate = cumulative_rate(spec, level);  // also range-checks
  return quality_of_rate(spec.quality_map, rate, level);
}

}  // namespace slsim
