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

#include <cstddef>
#include <span>
#include <vector>

#include "descant/errors.hpp"

namespace descant {

/// Mono sample sequence at a fixed rate. Samples are nominally in [-1, 1];
/// intermediate processing may exceed that until written out.
struct AudioBuffer {
  std::vector<double> samples;
  int sample_rate = 0;

  bool empty() const { return samples.empty(); }
  std::size_t size() const { return samples.size(); }
  double duration_seconds() const {
    return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate
                           : 0.0;
  }
};

/// Decoded-but-not-yet-downmixed audio.
struct MultiChannelBuffer {
  std::vector<std::vector<double>> channels;
  int sample_rate = 0;

  std::size_t channel_count() const { return channels.size(); }
  std::size_t frame_count() const {
    return channels.empty() ? 0 : channels.front().size();
  }
};

/// Unweighted mean across channels. Mono input passes through unchanged.
AudioBuffer to_mono(const MultiChannelBuffer& multi);

double peak_abs(std::span<const double> samples);

}  // namespace descant
