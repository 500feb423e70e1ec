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

#include "descant/descriptors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <json.hpp>

#include "descant/augment.hpp"
#include "descant/errors.hpp"
#include "descant/loudness.hpp"

namespace descant {

std::string_view to_string(LoudnessCategory c) {
  switch (c) {
    case LoudnessCategory::very_soft: return "very soft";
    case LoudnessCategory::soft: return "soft";
    case LoudnessCategory::loud: return "loud";
    case LoudnessCategory::very_loud: return "very loud";
  }
  return "";
}

std::string_view to_string(PitchCategory c) {
  return c == PitchCategory::low ? "low" : "high";
}

std::string_view to_string(ReverbCategory c) {
  switch (c) {
    case ReverbCategory::dry: return "dry";
    case ReverbCategory::slightly_wet: return "slightly wet";
    case ReverbCategory::wet: return "wet";
    case ReverbCategory::very_wet: return "very wet";
  }
  return "";
}

std::string_view to_string(NoiseCategory c) {
  return c == NoiseCategory::silent_background ? "silent background"
                                               : "noisy background";
}

std::string_view to_string(BrightnessCategory c) {
  return c == BrightnessCategory::dull ? "dull" : "bright";
}

std::string_view to_string(FadeKind c) {
  return c == FadeKind::in ? "in" : "out";
}

std::optional<LoudnessCategory> loudness_category_from(std::string_view s) {
  if (s == "very soft") return LoudnessCategory::very_soft;
  if (s == "soft") return LoudnessCategory::soft;
  if (s == "loud") return LoudnessCategory::loud;
  if (s == "very loud") return LoudnessCategory::very_loud;
  return std::nullopt;
}

std::optional<PitchCategory> pitch_category_from(std::string_view s) {
  if (s == "low") return PitchCategory::low;
  if (s == "high") return PitchCategory::high;
  return std::nullopt;
}

std::optional<ReverbCategory> reverb_category_from(std::string_view s) {
  if (s == "dry") return ReverbCategory::dry;
  if (s == "slightly wet") return ReverbCategory::slightly_wet;
  if (s == "wet") return ReverbCategory::wet;
  if (s == "very wet") return ReverbCategory::very_wet;
  return std::nullopt;
}

std::optional<NoiseCategory> noise_category_from(std::string_view s) {
  if (s == "silent background") return NoiseCategory::silent_background;
  if (s == "noisy background") return NoiseCategory::noisy_background;
  return std::nullopt;
}

std::optional<BrightnessCategory> brightness_category_from(
    std::string_view s) {
  if (s == "dull") return BrightnessCategory::dull;
  if (s == "bright") return BrightnessCategory::bright;
  return std::nullopt;
}

std::optional<FadeKind> fade_kind_from(std::string_view s) {
  if (s == "in") return FadeKind::in;
  if (s == "out") return FadeKind::out;
  return std::nullopt;
}

std::optional<LoudnessCategory> classify_loudness(double lkfs,
                                                  const ThresholdConfig& cfg) {
  if (!std::isfinite(lkfs)) return std::nullopt;
  if (lkfs >= cfg.very_loud_min) return LoudnessCategory::very_loud;
  if (lkfs >= cfg.loud_min) return LoudnessCategory::loud;
  if (lkfs >= cfg.soft_max) return std::nullopt;  // unlabeled middle band
  if (lkfs >= cfg.soft_min) return LoudnessCategory::soft;
  if (lkfs >= cfg.very_soft_min) return LoudnessCategory::very_soft;
  return std::nullopt;  // below the gate
}

std::optional<PitchCategory> classify_pitch(double octave,
                                            const ThresholdConfig& cfg) {
  if (!std::isfinite(octave)) return std::nullopt;
  if (octave < cfg.pitch_low_max) return PitchCategory::low;
  if (octave > cfg.pitch_high_min) return PitchCategory::high;
  return std::nullopt;
}

std::optional<NoiseCategory> classify_noise(double snr_db,
                                            const ThresholdConfig& cfg) {
  if (!std::isfinite(snr_db)) return std::nullopt;
  if (snr_db >= cfg.silent_min_db) return NoiseCategory::silent_background;
  if (snr_db <= cfg.noisy_max_db) return NoiseCategory::noisy_background;
  return std::nullopt;  // unreliable mid-range
}

std::optional<BrightnessCategory> classify_brightness(
    double centroid, const ThresholdConfig& cfg) {
  if (!std::isfinite(centroid)) return std::nullopt;
  if (centroid < cfg.brightness_dull_max) return BrightnessCategory::dull;
  if (centroid > cfg.brightness_bright_min) return BrightnessCategory::bright;
  return std::nullopt;
}

std::optional<double> estimate_snr(const MelSpectrogram& mel,
                                   double percentile) {
  if (mel.frames() < 10) {
    throw TooShortError("snr: need at least 10 spectrogram frames");
  }
  constexpr double kPowerFloor = 1e-10;

  double total = 0.0;
  std::vector<double> levels(mel.frames());
  for (std::size_t f = 0; f < mel.frames(); ++f) {
    const auto& row = mel.energies[f];
    const double mean_power =
        std::accumulate(row.begin(), row.end(), 0.0) /
        static_cast<double>(row.size());
    total += mean_power;
    levels[f] = 10.0 * std::log10(mean_power + kPowerFloor);
  }
  if (total <= 0.0) return std::nullopt;  // no energy anywhere

  std::sort(levels.begin(), levels.end());
  const auto set_size = std::max<std::size_t>(
      1, static_cast<std::size_t>(
             std::floor(percentile * static_cast<double>(levels.size()))));

  const double bottom =
      std::accumulate(levels.begin(), levels.begin() + set_size, 0.0) /
      static_cast<double>(set_size);
  const double top =
      std::accumulate(levels.end() - set_size, levels.end(), 0.0) /
      static_cast<double>(set_size);
  return top - bottom;
}

DescriptorSet analyze(const AudioBuffer& buf, const ThresholdConfig& cfg,
                      const AugmentationPlan* applied) {
  if (buf.empty()) throw InvalidInputError("analyze: empty audio");
  if (buf.sample_rate <= 0) {
    throw InvalidInputError("analyze: sample rate must be positive");
  }

  DescriptorSet set;
  set.duration_s = buf.duration_seconds();

  try {
    set.loudness_lkfs = measure_loudness_lkfs(buf);
  } catch (const TooShortError&) {
  }
  if (set.loudness_lkfs) {
    set.loudness = classify_loudness(*set.loudness_lkfs, cfg);
  }

  try {
    YinParams yin = cfg.yin;
    const PitchEstimate pitch =
        estimate_pitch_octave(buf, yin, cfg.octave_ref_hz);
    set.pitch_octave = pitch.octave;
  } catch (const TooShortError&) {
  }
  if (set.pitch_octave) set.pitch = classify_pitch(*set.pitch_octave, cfg);

  try {
    MelParams mel_params = cfg.mel;
    mel_params.fmax_hz =
        std::min(mel_params.fmax_hz, buf.sample_rate / 2.0);
    const MelSpectrogram mel = mel_spectrogram(buf, mel_params);
    try {
      set.snr_db = estimate_snr(mel, cfg.snr_percentile);
    } catch (const TooShortError&) {
    }
    set.brightness_centroid = spectral_centroid_mel(mel);
  } catch (const InvalidInputError&) {
    // Rates below 2*fmin have no usable band; leave both absent.
  }
  if (set.snr_db) set.noise = classify_noise(*set.snr_db, cfg);
  if (set.brightness_centroid) {
    set.brightness = classify_brightness(*set.brightness_centroid, cfg);
  }

  // reverb/fade label what was done to the audio, not what it sounds like.
  if (applied) {
    set.reverb = applied->reverb;
    set.fade = applied->fade;
  }
  return set;
}

std::string to_json_string(const DescriptorSet& set) {
  nlohmann::json j = nlohmann::json::object();
  if (set.loudness) j["loudness"] = to_string(*set.loudness);
  if (set.loudness_lkfs) j["loudness_value"] = *set.loudness_lkfs;
  if (set.pitch) j["pitch"] = to_string(*set.pitch);
  if (set.pitch_octave) j["pitch_value"] = *set.pitch_octave;
  if (set.reverb) j["reverb"] = to_string(*set.reverb);
  if (set.noise) j["noise"] = to_string(*set.noise);
  if (set.snr_db) j["noise_value"] = *set.snr_db;
  if (set.brightness) j["brightness"] = to_string(*set.brightness);
  if (set.brightness_centroid) {
    j["brightness_value"] = *set.brightness_centroid;
  }
  if (set.fade) j["fade"] = to_string(*set.fade);
  j["duration"] = set.duration_s;
  return j.dump();
}

}  // namespace descant
