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

struct Rt60Params {
  double fit_upper_db = -5.0;   // start of the decay-curve fit window
  double fit_lower_db = -25.0;  // end of the fit window
  double min_r_squared = 0.8;   // reject non-exponential decays
};

/// Reverberation time via Schroeder backward integration: the energy decay
/// curve after the clip's main energy peak is fit between fit_upper_db and
/// fit_lower_db and extrapolated to -60 dB. Returns nullopt when the clip
/// has no measurable decay (energy still rising at the end, a truncated
/// tail, or a fit below the R^2 floor).
std::optional<double> estimate_rt60(const AudioBuffer& buf,
                                    const Rt60Params& params = {});

}  // namespace descant
