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

#include "descant/resample.hpp"

#include <cmath>
#include <numbers>

#include "descant/errors.hpp"

namespace descant {
namespace {

constexpr int kHalfTaps = 32;  // 64-tap kernel

double sinc(double x) {
  if (std::abs(x) < 1e-12) return 1.0;
  double px = std::numbers::pi * x;
  return std::sin(px) / px;
}

// Blackman window over [-kHalfTaps, kHalfTaps].
double window(double x) {
  double t = (x + kHalfTaps) / (2.0 * kHalfTaps);
  if (t < 0.0 || t > 1.0) return 0.0;
  constexpr double two_pi = 2.0 * std::numbers::pi;
  return 0.42 - 0.5 * std::cos(two_pi * t) + 0.08 * std::cos(2.0 * two_pi * t);
}

}  // namespace

AudioBuffer resample(const AudioBuffer& buf, int target_rate) {
  if (target_rate <= 0) {
    throw InvalidInputError("resample: target rate must be positive");
  }
  if (buf.sample_rate <= 0) {
    throw InvalidInputError("resample: source rate must be positive");
  }
  if (target_rate == buf.sample_rate) return buf;

  const double ratio =
      static_cast<double>(target_rate) / static_cast<double>(buf.sample_rate);
  const std::size_t out_len = static_cast<std::size_t>(
      std::llround(static_cast<double>(buf.samples.size()) * ratio));

  AudioBuffer out;
  out.sample_rate = target_rate;
  out.samples.resize(out_len);

  // Cutoff sits at the lower of the two Nyquist limits, slightly below to
  // leave room for the kernel's transition band.
  const double cutoff = 0.5 * std::min(1.0, ratio) * 0.95;
  const double gain = 2.0 * cutoff;
  const auto n = static_cast<std::ptrdiff_t>(buf.samples.size());

  for (std::size_t i = 0; i < out_len; ++i) {
    const double t = static_cast<double>(i) / ratio;
    const auto center = static_cast<std::ptrdiff_t>(std::floor(t));
    const double frac = t - static_cast<double>(center);
    double acc = 0.0;
    for (std::ptrdiff_t k = -kHalfTaps + 1; k <= kHalfTaps; ++k) {
      const std::ptrdiff_t src = center + k;
      if (src < 0 || src >= n) continue;
      const double x = static_cast<double>(k) - frac;
      acc += buf.samples[static_cast<std::size_t>(src)] * gain *
             sinc(gain * x) * window(x);
    }
    out.samples[i] = acc;
  }
  return out;
}

}  // namespace descant
