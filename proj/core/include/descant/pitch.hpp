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

struct YinParams {
  double threshold = 0.15;  // aperiodicity tolerance on the normalized dip
  double fmin_hz = 30.0;
  double fmax_hz = 2000.0;
  double frame_seconds = 0.025;
  double hop_seconds = 0.010;
  double min_voiced_fraction = 0.2;
};

/// Default octave reference: C0 in scientific pitch notation.
inline constexpr double kOctaveRefHz = 16.3516;

struct PitchEstimate {
  /// log2(f0 / reference) of the median voiced f0; empty when the clip is
  /// judged unvoiced (voiced fraction below the configured minimum).
  std::optional<double> octave;
  std::optional<double> f0_hz;
  double voiced_fraction = 0.0;
};

/// YIN estimator (difference function + cumulative-mean normalization +
/// parabolic interpolation), aggregated as the median over voiced frames.
/// Throws TooShortError below 100 ms of audio.
PitchEstimate estimate_pitch_octave(const AudioBuffer& buf,
                                    const YinParams& params = {},
                                    double octave_ref_hz = kOctaveRefHz);

}  // namespace descant
