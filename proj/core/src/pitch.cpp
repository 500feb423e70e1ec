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

#include "descant/pitch.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "descant/errors.hpp"
#include "descant/fft.hpp"

namespace descant {
namespace {

// d(tau) = sum_{j<W} (x[j] - x[j+tau])^2, expanded into energy terms plus a
// cross-correlation so one FFT round trip covers all lags.
std::vector<double> difference_function(std::span<const double> segment,
                                        std::size_t window,
                                        std::size_t tau_max) {
  std::vector<double> d(tau_max + 1, 0.0);

  std::vector<double> prefix_sq(segment.size() + 1, 0.0);
  for (std::size_t i = 0; i < segment.size(); ++i) {
    prefix_sq[i + 1] = prefix_sq[i] + segment[i] * segment[i];
  }
  const double kernel_energy = prefix_sq[window];

  const std::vector<double> corr = cross_correlate(
      segment, segment.subspan(0, window), tau_max);

  for (std::size_t tau = 0; tau <= tau_max; ++tau) {
    const double shifted_energy = prefix_sq[tau + window] - prefix_sq[tau];
    const double v = kernel_energy + shifted_energy - 2.0 * corr[tau];
    d[tau] = std::max(v, 0.0);  // clamp FFT roundoff
  }
  return d;
}

// In-place cumulative-mean normalization; d'[0] = 1.
void cumulative_normalize(std::vector<double>& d) {
  double running = 0.0;
  d[0] = 1.0;
  for (std::size_t tau = 1; tau < d.size(); ++tau) {
    running += d[tau];
    d[tau] = running > 0.0 ? d[tau] * static_cast<double>(tau) / running : 1.0;
  }
}

double parabolic_refine(const std::vector<double>& d, std::size_t tau) {
  if (tau == 0 || tau + 1 >= d.size()) return static_cast<double>(tau);
  const double s0 = d[tau - 1];
  const double s1 = d[tau];
  const double s2 = d[tau + 1];
  const double denom = 2.0 * (2.0 * s1 - s2 - s0);
  if (denom == 0.0) return static_cast<double>(tau);
  const double offset = (s2 - s0) / denom;
  if (std::abs(offset) > 1.0) return static_cast<double>(tau);
  return static_cast<double>(tau) + offset;
}

std::optional<double> frame_f0(std::span<const double> segment,
                               std::size_t window, std::size_t tau_min,
                               std::size_t tau_max, double threshold,
                               double sample_rate) {
  std::vector<double> d = difference_function(segment, window, tau_max);
  if (d[0] <= 0.0) return std::nullopt;  // silent frame
  cumulative_normalize(d);

  for (std::size_t tau = tau_min; tau <= tau_max; ++tau) {
    if (d[tau] < threshold) {
      // Slide to the bottom of this dip before interpolating.
      while (tau + 1 <= tau_max && d[tau + 1] < d[tau]) ++tau;
      const double refined = parabolic_refine(d, tau);
      if (refined <= 0.0) return std::nullopt;
      return sample_rate / refined;
    }
  }
  return std::nullopt;
}

}  // namespace

PitchEstimate estimate_pitch_octave(const AudioBuffer& buf,
                                    const YinParams& params,
                                    double octave_ref_hz) {
  if (buf.sample_rate <= 0) {
    throw InvalidInputError("pitch: sample rate must be positive");
  }
  const double sr = buf.sample_rate;
  if (buf.duration_seconds() < 0.1) {
    throw TooShortError("pitch: need at least 100 ms of audio");
  }

  const auto window =
      static_cast<std::size_t>(std::llround(params.frame_seconds * sr));
  const auto hop =
      static_cast<std::size_t>(std::llround(params.hop_seconds * sr));
  const auto tau_min = std::max<std::size_t>(
      2, static_cast<std::size_t>(std::floor(sr / params.fmax_hz)));
  const auto tau_max =
      static_cast<std::size_t>(std::ceil(sr / params.fmin_hz));
  const std::size_t segment_len = window + tau_max;
  if (buf.samples.size() < segment_len || hop == 0) {
    throw TooShortError("pitch: signal shorter than one analysis segment");
  }

  std::vector<double> voiced_f0;
  std::size_t total_frames = 0;
  for (std::size_t start = 0; start + segment_len <= buf.samples.size();
       start += hop) {
    ++total_frames;
    const std::span<const double> segment(buf.samples.data() + start,
                                          segment_len);
    const auto f0 = frame_f0(segment, window, tau_min, tau_max,
                             params.threshold, sr);
    if (f0 && *f0 >= params.fmin_hz && *f0 <= params.fmax_hz) {
      voiced_f0.push_back(*f0);
    }
  }

  PitchEstimate est;
  est.voiced_fraction = total_frames > 0
                            ? static_cast<double>(voiced_f0.size()) /
                                  static_cast<double>(total_frames)
                            : 0.0;
  if (voiced_f0.empty() ||
      est.voiced_fraction < params.min_voiced_fraction) {
    return est;
  }

  std::sort(voiced_f0.begin(), voiced_f0.end());
  const std::size_t mid = voiced_f0.size() / 2;
  const double median = voiced_f0.size() % 2 == 1
                            ? voiced_f0[mid]
                            : 0.5 * (voiced_f0[mid - 1] + voiced_f0[mid]);
  est.f0_hz = median;
  est.octave = std::log2(median / octave_ref_hz);
  return est;
}

}  // namespace descant
