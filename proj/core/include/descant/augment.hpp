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

#include <cstdint>
#include <optional>
#include <string_view>

#include "descant/audio_buffer.hpp"
#include "descant/categories.hpp"

namespace descant {

struct ReverbParams {
  double rt60_s = 0.0;
  double wet_mix = 0.0;  // fraction of convolved signal in the blend
  double pre_delay_ms = 10.0;
};

/// Wetness-category settings. The defaults span a clearly separated RT60
/// range; dry maps to a no-op by definition.
struct ReverbCategoryMap {
  ReverbParams slightly_wet{0.3, 0.2};
  ReverbParams wet{0.8, 0.4};
  ReverbParams very_wet{1.8, 0.6};

  /// nullptr for dry.
  const ReverbParams* for_category(ReverbCategory cat) const;
};

struct FadeParams {
  double clip_fraction = 0.25;  // of clip length
  double max_seconds = 2.0;
};

/// Per-effect and per-descriptor caption-inclusion probabilities.
struct AugmentProbabilities {
  double reverb = 0.3;
  double fade = 0.3;
  double include_duration = 0.5;
  double include_loudness = 1.0;
  double include_pitch = 1.0;
  double include_noise = 1.0;
  double include_brightness = 1.0;
};

/// Seeded per-entry decisions. Fully determined by (entry id, global seed,
/// probabilities); the same triple always yields the same plan and the same
/// augmented audio bytes.
struct AugmentationPlan {
  std::optional<ReverbCategory> reverb;  // dry is a valid, signal-preserving plan
  std::optional<FadeKind> fade;
  bool include_duration = true;
  bool include_loudness = true;
  bool include_pitch = true;
  bool include_noise = true;
  bool include_brightness = true;
  std::uint64_t seed = 0;  // per-entry key, also drives effect synthesis

  bool modifies_signal() const {
    return (reverb && *reverb != ReverbCategory::dry) || fade.has_value();
  }
};

AugmentationPlan plan_augmentation(std::string_view entry_id,
                                   std::uint64_t global_seed,
                                   const AugmentProbabilities& probs = {});

/// Exponentially decaying Gaussian noise, unit energy, length
/// 1.5 * rt60 * sample_rate samples. The Schroeder RT60 measured on the
/// result lands within 10% of the request.
AudioBuffer synthesize_impulse_response(double rt60_s, int sample_rate,
                                        std::uint64_t seed);

/// Wet/dry convolution blend, peak-normalized to the input peak. Output is
/// trimmed to input length plus tail_keep * rt60 seconds of tail. `dry`
/// returns the input bit-identically.
AudioBuffer apply_reverb(const AudioBuffer& buf, ReverbCategory cat,
                         std::uint64_t seed, const ReverbCategoryMap& map = {},
                         double tail_keep = 1.0);

/// Linear amplitude ramp over min(fade_seconds, half the clip). Fade-in
/// starts at zero, fade-out ends at zero; the untouched region is
/// bit-identical.
AudioBuffer apply_fade(const AudioBuffer& buf, FadeKind kind,
                       double fade_seconds);

/// Run the plan's effects: reverb first, then fade.
AudioBuffer apply_plan(const AudioBuffer& buf, const AugmentationPlan& plan,
                       const ReverbCategoryMap& map = {},
                       const FadeParams& fade = {}, double tail_keep = 1.0);

}  // namespace descant
