// Copyright 2026 The Descant Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "descant/rt60.hpp"

#include <cmath>
#include <cstddef>
#include <vector>

namespace descant {
namespace {

struct LineFit {
  double slope = 0.0;
  double r_squared = 0.0;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const auto n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
    syy += y[i] * y[i];
  }
  const double cov = n * sxy - sx * sy;
  const double var_x = n * sxx - sx * sx;
  const double var_y = n * syy - sy * sy;
  LineFit fit;
  if (var_x <= 0.0) return fit;
  fit.slope = cov / var_x;
  fit.r_squared = var_y > 0.0 ? (cov * cov) / (var_x * var_y) : 1.0;
  return fit;
}

}  // namespace

std::optional<double> estimate_rt60(const AudioBuffer& buf,
                                    const Rt60Params& params) {
  const std::size_t n = buf.samples.size();
  if (n < 2 || buf.sample_rate <= 0) return std::nullopt;
  const double sr = buf.sample_rate;

  std::size_t peak = 0;
  double peak_energy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = buf.samples[i] * buf.samples[i];
    if (e > peak_energy) {
      peak_energy = e;
      peak = i;
    }
  }
  if (peak_energy <= 0.0) return std::nullopt;
  // Energy still rising at the end of the clip: nothing to fit.
  if (peak >= n - 1 || peak > (n * 9) / 10) return std::nullopt;

  // Backward energy integral over the tail, normalized to its start.
  const std::size_t tail = n - peak;
  std::vector<double> edc(tail);
  double acc = 0.0;
  for (std::size_t i = n; i-- > peak;) {
    acc += buf.samples[i] * buf.samples[i];
    edc[i - peak] = acc;
  }
  const double total = edc[0];

  // Interpolated crossing times of the fit-window bounds.
  auto crossing = [&](double level_db) -> std::optional<double> {
    const double target = total * std::pow(10.0, level_db / 10.0);
    for (std::size_t i = 1; i < tail; ++i) {
      if (edc[i] <= target) {
        const double lo = 10.0 * std::log10(edc[i] / total + 1e-300);
        const double hi = 10.0 * std::log10(edc[i - 1] / total + 1e-300);
        const double frac = hi > lo ? (hi - level_db) / (hi - lo) : 0.0;
        return (static_cast<double>(i - 1) + frac) / sr;
      }
    }
    return std::nullopt;
  };

  const auto t_upper = crossing(params.fit_upper_db);
  const auto t_lower = crossing(params.fit_lower_db);
  if (!t_upper || !t_lower || *t_lower <= *t_upper) return std::nullopt;

  // A lower bound met only in the last stretch of the tail means the EDC
  // ran out of samples (constant or truncated signal), not a real decay.
  const double tail_seconds = static_cast<double>(tail) / sr;
  if (*t_lower > 0.9 * tail_seconds) return std::nullopt;

  std::vector<double> ts, dbs;
  const auto i_first = static_cast<std::size_t>(std::ceil(*t_upper * sr));
  const auto i_last = static_cast<std::size_t>(std::floor(*t_lower * sr));
  for (std::size_t i = i_first; i <= i_last && i < tail; ++i) {
    ts.push_back(static_cast<double>(i) / sr);
    dbs.push_back(10.0 * std::log10(edc[i] / total + 1e-300));
  }

  const double db_span = params.fit_upper_db - params.fit_lower_db;
  if (ts.size() < 5) {
    // Near-instant decay; extrapolate straight from the crossing times.
    return (*t_lower - *t_upper) * 60.0 / db_span;
  }

  const LineFit fit = fit_line(ts, dbs);
  if (fit.slope >= 0.0 || fit.r_squared < params.min_r_squared) {
    return std::nullopt;
  }
  return -60.0 / fit.slope;
}

}  // namespace descant
