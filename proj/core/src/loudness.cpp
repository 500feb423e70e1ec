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

#include "descant/loudness.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "descant/errors.hpp"

namespace descant {
namespace detail {

// Sample-rate adaption of the BS.1770 pre-filter after Mansbridge, Finn and
// Reiss, "Implementation and Evaluation of Autonomous Multi-track Fader
// Control", AES 132nd Convention, 2012.
BiquadCoeffs design_k_shelf(double sample_rate) {
  const double db = 3.999843853973347;
  const double f0 = 1681.974450955533;
  const double q = 0.7071752369554196;
  const double k = std::tan(std::numbers::pi * f0 / sample_rate);

  const double vh = std::pow(10.0, db / 20.0);
  const double vb = std::pow(vh, 0.4996667741545416);
  const double a0 = 1.0 + k / q + k * k;

  return BiquadCoeffs{
      (vh + vb * k / q + k * k) / a0,
      2.0 * (k * k - vh) / a0,
      (vh - vb * k / q + k * k) / a0,
      2.0 * (k * k - 1.0) / a0,
      (1.0 - k / q + k * k) / a0,
  };
}

BiquadCoeffs design_k_highpass(double sample_rate) {
  const double f0 = 38.13547087602444;
  const double q = 0.5003270373238773;
  const double k = std::tan(std::numbers::pi * f0 / sample_rate);
  const double a0 = 1.0 + k / q + k * k;

  return BiquadCoeffs{
      1.0,
      -2.0,
      1.0,
      2.0 * (k * k - 1.0) / a0,
      (1.0 - k / q + k * k) / a0,
  };
}

}  // namespace detail

namespace {

constexpr double kAbsoluteGateLkfs = -70.0;
constexpr double kRelativeGateLu = 10.0;
constexpr double kLoudnessOffset = -0.691;

// Direct form II transposed.
struct Biquad {
  detail::BiquadCoeffs c;
  double z1 = 0.0, z2 = 0.0;

  double process(double x) {
    const double y = c.b0 * x + z1;
    z1 = c.b1 * x - c.a1 * y + z2;
    z2 = c.b2 * x - c.a2 * y;
    return y;
  }
};

double block_loudness(double mean_square) {
  return kLoudnessOffset + 10.0 * std::log10(mean_square + 1e-30);
}

}  // namespace

std::optional<double> measure_loudness_lkfs(const AudioBuffer& buf) {
  if (buf.sample_rate <= 0) {
    throw InvalidInputError("loudness: sample rate must be positive");
  }
  const auto block = static_cast<std::size_t>(
      std::llround(0.4 * buf.sample_rate));
  const std::size_t hop = block / 4;  // 75% overlap
  if (buf.samples.size() < block) {
    throw TooShortError("loudness: signal shorter than one 400 ms block");
  }

  Biquad shelf{detail::design_k_shelf(buf.sample_rate)};
  Biquad highpass{detail::design_k_highpass(buf.sample_rate)};

  std::vector<double> weighted(buf.samples.size());
  for (std::size_t i = 0; i < buf.samples.size(); ++i) {
    weighted[i] = highpass.process(shelf.process(buf.samples[i]));
  }

  // Running block powers via a prefix sum of squares; mono channel weight
  // is 1.0 per BS.1770.
  std::vector<double> prefix(weighted.size() + 1, 0.0);
  for (std::size_t i = 0; i < weighted.size(); ++i) {
    prefix[i + 1] = prefix[i] + weighted[i] * weighted[i];
  }

  std::vector<double> block_power;
  for (std::size_t start = 0; start + block <= weighted.size();
       start += hop) {
    block_power.push_back((prefix[start + block] - prefix[start]) /
                          static_cast<double>(block));
  }

  double sum = 0.0;
  std::size_t count = 0;
  for (double z : block_power) {
    if (block_loudness(z) > kAbsoluteGateLkfs) {
      sum += z;
      ++count;
    }
  }
  if (count == 0) return std::nullopt;  // below-gate signal

  const double relative_gate =
      block_loudness(sum / static_cast<double>(count)) - kRelativeGateLu;
  sum = 0.0;
  count = 0;
  for (double z : block_power) {
    const double l = block_loudness(z);
    if (l > kAbsoluteGateLkfs && l > relative_gate) {
      sum += z;
      ++count;
    }
  }
  if (count == 0) return std::nullopt;
  return block_loudness(sum / static_cast<double>(count));
}

}  // namespace descant
