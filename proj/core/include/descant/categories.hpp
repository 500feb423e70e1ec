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
#include <string_view>

// Category vocabularies for the seven descriptors. The string forms are the
// caption surface forms ("very wet", "silent background"), so they are the
// wire format — do not reword them.

namespace descant {

enum class LoudnessCategory { very_soft, soft, loud, very_loud };
enum class PitchCategory { low, high };
enum class ReverbCategory { dry, slightly_wet, wet, very_wet };
enum class NoiseCategory { silent_background, noisy_background };
enum class BrightnessCategory { dull, bright };
enum class FadeKind { in, out };

std::string_view to_string(LoudnessCategory c);
std::string_view to_string(PitchCategory c);
std::string_view to_string(ReverbCategory c);
std::string_view to_string(NoiseCategory c);
std::string_view to_string(BrightnessCategory c);
std::string_view to_string(FadeKind c);

std::optional<LoudnessCategory> loudness_category_from(std::string_view s);
std::optional<PitchCategory> pitch_category_from(std::string_view s);
std::optional<ReverbCategory> reverb_category_from(std::string_view s);
std::optional<NoiseCategory> noise_category_from(std::string_view s);
std::optional<BrightnessCategory> brightness_category_from(std::string_view s);
std::optional<FadeKind> fade_kind_from(std::string_view s);

}  // namespace descant
