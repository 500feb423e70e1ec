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

#include "descant/augment.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "descant/errors.hpp"
#include "descant/fft.hpp"
#include "descant/rng.hpp"

namespace descant {
namespace {

// Fixed counter slots so adding a decision never shifts the others.
enum DecisionSlot : std::uint64_t {
  kReverbFire = 0,
  kReverbCategory = 1,
  kFadeFire = 2,
  kFadeKind = 3,
  kIncludeDuration = 4,
  kIncludeLoudness = 5,
  kIncludePitch = 6,
  kIncludeNoise = 7,
  kIncludeBrightness = 8,
  kImpulseNoise = 16,  // base of the IR synthesis stream
};

bool fires(std::uint64_t key, std::uint64_t slot, double prob) {
  return counter_uniform(key, slot) < prob;
}

}  // namespace

const ReverbParams* ReverbCategoryMap::for_category(ReverbCategory cat) const {
  switch (cat) {
    case ReverbCategory::dry: return nullptr;
    case ReverbCategory::slightly_wet: return &slightly_wet;
    case ReverbCategory::wet: return &wet;
    case ReverbCategory::very_wet: return &very_wet;
  }
  return nullptr;
}

AugmentationPlan plan_augmentation(std::string_view entry_id,
                                   std::uint64_t global_seed,
                                   const AugmentProbabilities& probs) {
  const std::uint64_t key = entry_key(global_seed, entry_id);
  AugmentationPlan plan;
  plan.seed = key;

  if (fires(key, kReverbFire, probs.reverb)) {
    const auto pick = static_cast<int>(
        counter_uniform(key, kReverbCategory) * 4.0);
    static constexpr ReverbCategory kCats[4] = {
        ReverbCategory::dry, ReverbCategory::slightly_wet,
        ReverbCategory::wet, ReverbCategory::very_wet};
    plan.reverb = kCats[std::min(pick, 3)];
  }
  if (fires(key, kFadeFire, probs.fade)) {
    plan.fade = counter_uniform(key, kFadeKind) < 0.5 ? FadeKind::in
                                                      : FadeKind::out;
  }
  plan.include_duration = fires(key, kIncludeDuration, probs.include_duration);
  plan.include_loudness = fires(key, kIncludeLoudness, probs.include_loudness);
  plan.include_pitch = fires(key, kIncludePitch, probs.include_pitch);
  plan.include_noise = fires(key, kIncludeNoise, probs.include_noise);
  plan.include_brightness =
      fires(key, kIncludeBrightness, probs.include_brightness);
  return plan;
}

AudioBuffer synthesize_impulse_response(double rt60_s, int sample_rate,
                                        std::uint64_t seed) {
  if (rt60_s <= 0.0) {
    throw InvalidInputError("impulse response: rt60 must be positive");
  }
  if (sample_rate <= 0) {
    throw InvalidInputError("impulse response: sample rate must be positive");
  }

  const auto len = static_cast<std::size_t>(
      std::llround(1.5 * rt60_s * sample_rate));
  AudioBuffer ir;
  ir.sample_rate = sample_rate;
  ir.samples.resize(std::max<std::size_t>(len, 1));

  // Amplitude envelope 10^(-3n / (rt60*sr)) decays 60 dB per rt60.
  const double decay = -3.0 / (rt60_s * sample_rate);
  CounterRng rng(mix64(seed ^ kImpulseNoise));
  double energy = 0.0;
  for (std::size_t n = 0; n < ir.samples.size(); ++n) {
    const double s =
        rng.gaussian() * std::pow(10.0, decay * static_cast<double>(n));
    ir.samples[n] = s;
    energy += s * s;
  }
  const double scale = energy > 0.0 ? 1.0 / std::sqrt(energy) : 1.0;
  for (double& s : ir.samples) s *= scale;
  return ir;
}

AudioBuffer apply_reverb(const AudioBuffer& buf, ReverbCategory cat,
                         std::uint64_t seed, const ReverbCategoryMap& map,
                         double tail_keep) {
  if (buf.empty()) throw InvalidInputError("reverb: empty buffer");
  const ReverbParams* params = map.for_category(cat);
  if (params == nullptr) return buf;  // dry labels the audio, nothing else

  const AudioBuffer ir =
      synthesize_impulse_response(params->rt60_s, buf.sample_rate, seed);
  const std::vector<double> wet = convolve(buf.samples, ir.samples);

  const auto pre_delay = static_cast<std::size_t>(
      std::llround(params->pre_delay_ms * 1e-3 * buf.sample_rate));
  const auto tail = static_cast<std::size_t>(
      std::llround(std::max(tail_keep, 0.0) * params->rt60_s *
                   buf.sample_rate));

  AudioBuffer out;
  out.sample_rate = buf.sample_rate;
  out.samples.assign(buf.samples.size() + tail, 0.0);
  const double dry_gain = 1.0 - params->wet_mix;
  for (std::size_t n = 0; n < out.samples.size(); ++n) {
    double v = 0.0;
    if (n < buf.samples.size()) v += dry_gain * buf.samples[n];
    if (n >= pre_delay && n - pre_delay < wet.size()) {
      v += params->wet_mix * wet[n - pre_delay];
    }
    out.samples[n] = v;
  }

  const double in_peak = peak_abs(buf.samples);
  const double out_peak = peak_abs(out.samples);
  if (in_peak > 0.0 && out_peak > 0.0) {
    const double gain = in_peak / out_peak;
    for (double& s : out.samples) s *= gain;
  }
  return out;
}

AudioBuffer apply_fade(const AudioBuffer& buf, FadeKind kind,
                       double fade_seconds) {
  if (buf.empty()) throw InvalidInputError("fade: empty buffer");
  const auto requested = static_cast<std::size_t>(
      std::llround(std::max(fade_seconds, 0.0) * buf.sample_rate));
  const std::size_t ramp =
      std::max<std::size_t>(1, std::min(requested, buf.samples.size() / 2));

  AudioBuffer out = buf;
  const auto n = out.samples.size();
  if (kind == FadeKind::in) {
    for (std::size_t i = 0; i < ramp && i < n; ++i) {
      out.samples[i] *= static_cast<double>(i) / static_cast<double>(ramp);
    }
  } else {
    for (std::size_t i = 0; i < ramp && i < n; ++i) {
      out.samples[n - 1 - i] *=
          static_cast<double>(i) / static_cast<double>(ramp);
    }
  }
  return out;
}

AudioBuffer apply_plan(const AudioBuffer& buf, const AugmentationPlan& plan,
                       const ReverbCategoryMap& map, const FadeParams& fade,
                       double tail_keep) {
  AudioBuffer out = buf;
  if (plan.reverb) {
    out = apply_reverb(out, *plan.reverb, plan.seed, map, tail_keep);
  }
  if (plan.fade) {
    const double seconds = std::min(
        fade.clip_fraction * out.duration_seconds(), fade.max_seconds);
    out = apply_fade(out, *plan.fade, seconds);
  }
  return out;
}

}  // namespace descant
