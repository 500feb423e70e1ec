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
#include <string>

#include "descant/audio_buffer.hpp"
#include "descant/categories.hpp"
#include "descant/dsp.hpp"
#include "descant/pitch.hpp"
#include "descant/rt60.hpp"

namespace descant {

struct AugmentationPlan;

/// Every category boundary and analysis parameter in one place. The
/// defaults are the published thresholds; classifiers hold no constants of
/// their own.
struct ThresholdConfig {
  // Loudness bands (LKFS). Half-open [lo, hi) except the top band; values
  // in [soft_max, loud_min) and below very_soft_min are uncategorized.
  double very_soft_min = -70.0;
  double soft_min = -55.0;
  double soft_max = -40.0;
  double loud_min = -30.0;
  double very_loud_min = -15.0;

  // Pitch (octaves above the reference); (low_max, high_min) is a gap.
  double pitch_low_max = 1.5;
  double pitch_high_min = 3.5;
  double octave_ref_hz = kOctaveRefHz;

  // SNR (dB); the middle of the range is left unlabeled.
  double noisy_max_db = 2.0;
  double silent_min_db = 6.0;
  double snr_percentile = 0.10;  // fraction of frames in each set

  // Brightness (mel-bin centroid); [dull_max, bright_min] is a gap.
  double brightness_dull_max = 45.0;
  double brightness_bright_min = 65.0;

  MelParams mel;
  YinParams yin;
  Rt60Params rt60;
};

std::optional<LoudnessCategory> classify_loudness(
    double lkfs, const ThresholdConfig& cfg = {});
std::optional<PitchCategory> classify_pitch(double octave,
                                            const ThresholdConfig& cfg = {});
std::optional<NoiseCategory> classify_noise(double snr_db,
                                            const ThresholdConfig& cfg = {});
std::optional<BrightnessCategory> classify_brightness(
    double centroid, const ThresholdConfig& cfg = {});

/// Dynamic-range SNR: per-frame level is 10*log10(mean mel power + eps);
/// the value is the mean level of the loudest `percentile` of frames minus
/// the mean level of the softest. Non-negative by construction. Empty when
/// the spectrogram carries no energy; throws TooShortError under 10 frames.
std::optional<double> estimate_snr(const MelSpectrogram& mel,
                                   double percentile);

/// Measured values plus the categories they map to. Categories are absent
/// exactly when the value is undefined or falls in an unlabeled gap.
/// reverb and fade are copied from the applied augmentation plan, never
/// measured.
struct DescriptorSet {
  std::optional<double> loudness_lkfs;
  std::optional<LoudnessCategory> loudness;
  std::optional<double> pitch_octave;
  std::optional<PitchCategory> pitch;
  std::optional<ReverbCategory> reverb;
  std::optional<double> snr_db;
  std::optional<NoiseCategory> noise;
  std::optional<double> brightness_centroid;
  std::optional<BrightnessCategory> brightness;
  std::optional<FadeKind> fade;
  double duration_s = 0.0;
};

/// Run every measurement on `buf` (the post-augmentation audio when a plan
/// was applied). Individual measurement failures leave that descriptor
/// absent; only empty audio is an error.
DescriptorSet analyze(const AudioBuffer& buf, const ThresholdConfig& cfg = {},
                      const AugmentationPlan* applied = nullptr);

/// JSON object with the fixed keys loudness/pitch/reverb/noise/brightness/
/// fade/duration plus raw *_value fields; absent descriptors are omitted.
std::string to_json_string(const DescriptorSet& set);

}  // namespace descant
