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

#include "descant/audio_buffer.hpp"

namespace descant {

/// Band-limited rate conversion with a 64-tap Blackman-windowed sinc.
/// Output length is round(len * target / source). When target equals the
/// source rate the input is returned unchanged.
AudioBuffer resample(const AudioBuffer& buf, int target_rate);

}  // namespace descant
