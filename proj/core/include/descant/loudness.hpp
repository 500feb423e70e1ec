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

#pragma once

#include <optional>

#include "descant/audio_buffer.hpp"

namespace descant {

/// Integrated loudness per ITU-R BS.1770-4: K-weighting, 400 ms blocks with
/// 75% overlap, -70 LKFS absolute gate, then a -10 LU relative gate.
/// Returns nullopt when every block sits below the absolute gate (the
/// loudness descriptor is then undefined). Throws TooShortError for signals
/// shorter than one gating block.
std::optional<double> measure_loudness_lkfs(const AudioBuffer& buf);

namespace detail {

struct BiquadCoeffs {
  double b0, b1, b2;  // numerator
  double a1, a2;      // denominator (a0 normalized to 1)
};

// K-weighting stages designed for an arbitrary rate; at 48 kHz they match
// the tabulated BS.1770 coefficients.
BiquadCoeffs design_k_shelf(double sample_rate);
BiquadCoeffs design_k_highpass(double sample_rate);

}  // namespace detail

}  // namespace descant
