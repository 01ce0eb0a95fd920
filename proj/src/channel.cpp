#include "slsim/channel.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "slsim/common.hpp"

namespace slsim {

void ChannelTrace::validate() const {
  if (peak_rates.empty()) throw std::invalid_argument("trace has no users");
  size_t slots = peak_rates[0].size();
  if (slots == 0) throw std::invalid_argument("trace has no slots");
  if (slot_duration_s <= 0) throw std::invalid_argument("slot duration must be positive");
  for (const auto& row : peak_rates) {
    if (row.size() != slots) throw std::invalid_argument("trace rows have unequal length");
    for (double r : row) {
      if (!(r > 0)) throw std::invalid_argument("peak rates must be positive");
    }
  }
}

void TraceGenParams::validate() const {
  if (!(mean_rate_bps > 0)) throw std::invalid_argument("mean rate must be positive");
  if (!(correlation >= 0 && correlation < 1)) {
    throw std::invalid_argument("correlation must lie in [0,1)");
  }
  if (!(cv >= 0)) throw std::invalid_argument("coefficient of variation must be >= 0");
}

ChannelTrace generate_trace(const TraceGenParams& params, int num_users,
                            int num_slots, double slot_duration_s) {
  params.validate();
  if (num_users < 1 || num_slots < 1) {
    throw std::invalid_argument("trace dimensions must be positive");
  }

  // Lognormal stationary marginals: sigma_ln^2 = ln(1+cv^2) and the mean of
  // the log process chosen so that E[rate] = mean_rate.
  const double var_ln = std::log1p(params.cv * params.cv);
  const double sigma_ln = std::sqrt(var_ln);
  const double mu_ln = std::log(params.mean_rate_bps) - 0.5 * var_ln;
  const double phi = params.correlation;
  const double sigma_innov = sigma_ln * std::sqrt(1.0 - phi * phi);
  const double floor_rate = 0.01 * params.mean_rate_bps;

  ChannelTrace trace;
  trace.slot_duration_s = slot_duration_s;
  trace.peak_rates.assign(static_cast<size_t>(num_users),
                          std::vector<double>(static_cast<size_t>(num_slots)));
  for (int i = 0; i < num_users; ++i) {
    std::mt19937_64 rng(mix_seed(params.seed, static_cast<uint64_t>(i)));
    std::normal_distribution<double> gauss(0.0, 1.0);
    double x = mu_ln + sigma_ln * gauss(rng);  // start in the stationary law
    auto& row = trace.peak_rates[static_cast<size_t>(i)];
    for (int k = 0; k < num_slots; ++k) {
      row[static_cast<size_t>(k)] = std::max(std::exp(x), floor_rate);
      x = mu_ln + phi * (x - mu_ln) + sigma_innov * gauss(rng);
    }
  }
  return trace;
}

ChannelTrace load_trace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open trace file: " + path);

  std::string line;
  if (!std::getline(in, line) || line.rfind("#", 0) != 0) {
    throw std::runtime_error("trace file missing header line");
  }
  long declared_slots = -1;
  double slot_s = -1;
  {
    std::istringstream hs(line.substr(1));
    std::string tok;
    while (hs >> tok) {
      if (tok.rfind("slots=", 0) == 0) declared_slots = std::stol(tok.substr(6));
      if (tok.rfind("slot_s=", 0) == 0) slot_s = std::stod(tok.substr(7));
    }
  }
  if (declared_slots <= 0 || slot_s <= 0) {
    throw std::runtime_error("trace header must declare slots= and slot_s=");
  }

  ChannelTrace trace;
  trace.slot_duration_s = slot_s;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      double v = std::stod(cell);
      if (!(v > 0)) throw std::runtime_error("trace contains a non-positive rate");
      row.push_back(v);
    }
    if (static_cast<long>(row.size()) != declared_slots) {
      throw std::runtime_error("trace row length does not match header");
    }
    trace.peak_rates.push_back(std::move(row));
  }
  trace.validate();
  return trace;
}

void write_trace(const ChannelTrace& trace, const std::string& path) {
  trace.validate();
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open trace file for writing: " + path);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "# slots=%d slot_s=%.17g", trace.num_slots(),
                trace.slot_duration_s);
  out << buf << "\n";
  for (const auto& row : trace.peak_rates) {
    for (size_t k = 0; k < row.size(); ++k) {
      std::snprintf(buf, sizeof(buf), "%.17g", row[k]);
      out << (k ? "," : "") << buf;
    }
    out << "\n";
  }
}

double simplex_load(const std::vector<double>& rates_bps,
                    const std::vector<double>& peaks_bps) {
  if (rates_bps.size() != peaks_bps.size()) {
    throw std::invalid_argument("rate/peak dimension mismatch");
  }
  double load = 0;
  for (size_t i = 0; i < rates_bps.size(); ++i) {
    load += rates_bps[i] / peaks_bps[i];
  }
  return load;
}

bool feasible(const std::vector<double>& rates_bps,
              const std::vector<double>& peaks_bps) {
  return simplex_load(rates_bps, peaks_bps) <= 1.0 + 1e-9;
}

}  // namespace slsim
