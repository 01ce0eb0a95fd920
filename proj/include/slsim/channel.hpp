#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace slsim {

// Peak achievable rate of every user in every slot. Immutable once built.
struct ChannelTrace {
  std::vector<std::vector<double>> peak_rates;  // [user][slot], bits/second
  double slot_duration_s = 0.01;

  int num_users() const { return static_cast<int>(peak_rates.size()); }
  int num_slots() const {
    return peak_rates.empty() ? 0 : static_cast<int>(peak_rates[0].size());
  }
  void validate() const;  // positive rates, rectangular matrix
};

// Parameters of the synthetic channel process: a per-user first-order
// autoregressive process on the log rate, stationary lognormal marginals
// with the requested mean and coefficient of variation, truncated below at
// 1% of the mean.
struct TraceGenParams {
  double mean_rate_bps = 2e6;
  double correlation = 0.98;  // lag-1 autocorrelation of the log rate
  double cv = 0.5;            // coefficient of variation of the rate
  uint64_t seed = 1;

  void validate() const;
};

ChannelTrace generate_trace(const TraceGenParams& params, int num_users,
                            int num_slots, double slot_duration_s);

// Plain CSV, one row per user, preceded by a `# slots=<K> slot_s=<t>` header.
ChannelTrace load_trace(const std::string& path);
void write_trace(const ChannelTrace& trace, const std::string& path);

// Normalized load of an allocation against the per-user peaks.
double simplex_load(const std::vector<double>& rates_bps,
                    const std::vector<double>& peaks_bps);

// Capacity test: sum of r_i / rho_i <= 1 up to a 1e-9 relative tolerance.
bool feasible(const std::vector<double>& rates_bps,
              const std::vector<double>& peaks_bps);

}  // namespace slsim
