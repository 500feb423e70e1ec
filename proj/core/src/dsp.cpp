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

#include "descant/dsp.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <tuple>

#include "descant/errors.hpp"
#include "descant/fft.hpp"

namespace descant {

double hz_to_mel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }

double mel_to_hz(double mel) {
  return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
}

Spectrogram stft_magnitude(const AudioBuffer& buf, std::size_t frame_size,
                           std::size_t hop) {
  if (frame_size == 0 || (frame_size & (frame_size - 1)) != 0) {
    throw InvalidInputError("stft: frame size must be a power of two");
  }
  if (hop == 0 || hop > frame_size) {
    throw InvalidInputError("stft: hop must be in (0, frame_size]");
  }

  Spectrogram spec;
  spec.frame_size = frame_size;
  spec.hop = hop;
  spec.sample_rate = buf.sample_rate;

  const std::size_t len = buf.samples.size();
  if (len < frame_size) return spec;
  const std::size_t frames = 1 + (len - frame_size) / hop;
  const std::size_t bins = frame_size / 2 + 1;

  std::vector<double> window(frame_size);
  for (std::size_t i = 0; i < frame_size; ++i) {
    window[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * i /
                                     static_cast<double>(frame_size));
  }

  spec.magnitudes.assign(frames, std::vector<double>(bins));
  std::vector<std::complex<double>> work(frame_size);
  for (std::size_t f = 0; f < frames; ++f) {
    const double* src = buf.samples.data() + f * hop;
    for (std::size_t i = 0; i < frame_size; ++i) {
      work[i] = {src[i] * window[i], 0.0};
    }
    fft_inplace(work, false);
    for (std::size_t k = 0; k < bins; ++k) {
      spec.magnitudes[f][k] = std::abs(work[k]);
    }
  }
  return spec;
}

namespace {

// One triangular filter as (first bin, weights). Filters are cached per
// parameter set; batch workers share the table read-only.
struct MelFilter {
  std::size_t first_bin = 0;
  std::vector<double> weights;
};

using FilterBank = std::vector<MelFilter>;
using FilterKey = std::tuple<int, std::size_t, std::size_t, double, double>;

std::shared_ptr<const FilterBank> build_filterbank(int sample_rate,
                                                   std::size_t frame_size,
                                                   std::size_t n_mels,
                                                   double fmin, double fmax) {
  const std::size_t bins = frame_size / 2 + 1;
  const double bin_hz = static_cast<double>(sample_rate) /
                        static_cast<double>(frame_size);

  const double mel_lo = hz_to_mel(fmin);
  const double mel_hi = hz_to_mel(fmax);
  std::vector<double> edges_hz(n_mels + 2);
  for (std::size_t i = 0; i < n_mels + 2; ++i) {
    const double mel = mel_lo + (mel_hi - mel_lo) * static_cast<double>(i) /
                                    static_cast<double>(n_mels + 1);
    edges_hz[i] = mel_to_hz(mel);
  }

  auto bank = std::make_shared<FilterBank>(n_mels);
  for (std::size_t m = 0; m < n_mels; ++m) {
    const double lo = edges_hz[m];
    const double mid = edges_hz[m + 1];
    const double hi = edges_hz[m + 2];
    MelFilter& filt = (*bank)[m];
    double sum = 0.0;
    for (std::size_t k = 0; k < bins; ++k) {
      const double f = bin_hz * static_cast<double>(k);
      double w = 0.0;
      if (f > lo && f < hi) {
        w = f <= mid ? (f - lo) / (mid - lo) : (hi - f) / (hi - mid);
      }
      if (w > 0.0) {
        if (filt.weights.empty()) filt.first_bin = k;
        filt.weights.push_back(w);
        sum += w;
      } else if (!filt.weights.empty()) {
        break;  // past the triangle
      }
    }
    if (sum <= 0.0) {
      // Triangle narrower than one bin: snap full weight onto the nearest
      // bin so the filter still responds (keeps every band observable).
      filt.first_bin = static_cast<std::size_t>(
          std::min<double>(std::round(mid / bin_hz),
                           static_cast<double>(bins - 1)));
      filt.weights = {1.0};
    }
  }
  return bank;
}

std::shared_ptr<const FilterBank> filterbank_for(int sample_rate,
                                                 std::size_t frame_size,
                                                 std::size_t n_mels,
                                                 double fmin, double fmax) {
  static std::mutex mu;
  static std::map<FilterKey, std::shared_ptr<const FilterBank>> cache;
  const FilterKey key{sample_rate, frame_size, n_mels, fmin, fmax};
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto bank = build_filterbank(sample_rate, frame_size, n_mels, fmin, fmax);
  cache.emplace(key, bank);
  return bank;
}

}  // namespace

MelSpectrogram mel_spectrogram(const AudioBuffer& buf,
                               const MelParams& params) {
  if (params.n_mels < 2) {
    throw InvalidInputError("mel: n_mels must be at least 2");
  }
  if (!(params.fmin_hz < params.fmax_hz) ||
      params.fmax_hz > buf.sample_rate / 2.0 + 1e-9) {
    throw InvalidInputError("mel: need fmin < fmax <= sample_rate/2");
  }

  const Spectrogram spec =
      stft_magnitude(buf, params.frame_size, params.hop);
  const auto bank = filterbank_for(buf.sample_rate, params.frame_size,
                                   params.n_mels, params.fmin_hz,
                                   params.fmax_hz);

  MelSpectrogram mel;
  mel.n_mels = params.n_mels;
  mel.fmin_hz = params.fmin_hz;
  mel.fmax_hz = params.fmax_hz;
  mel.frame_size = params.frame_size;
  mel.hop = params.hop;
  mel.sample_rate = buf.sample_rate;
  mel.energies.assign(spec.frames(), std::vector<double>(params.n_mels));

  for (std::size_t f = 0; f < spec.frames(); ++f) {
    const auto& mags = spec.magnitudes[f];
    auto& row = mel.energies[f];
    for (std::size_t m = 0; m < params.n_mels; ++m) {
      const MelFilter& filt = (*bank)[m];
      double acc = 0.0;
      for (std::size_t j = 0; j < filt.weights.size(); ++j) {
        const double mag = mags[filt.first_bin + j];
        acc += filt.weights[j] * mag * mag;
      }
      row[m] = acc;
    }
  }
  return mel;
}

std::optional<double> spectral_centroid_mel(const MelSpectrogram& mel) {
  double weighted = 0.0;
  double total = 0.0;
  for (const auto& row : mel.energies) {
    double frame_energy = 0.0;
    double frame_moment = 0.0;
    for (std::size_t m = 0; m < row.size(); ++m) {
      frame_energy += row[m];
      frame_moment += static_cast<double>(m) * row[m];
    }
    if (frame_energy <= 0.0) continue;
    // Per-frame centroid weighted by frame energy, so silent frames do not
    // dilute the clip value.
    weighted += frame_moment;
    total += frame_energy;
  }
  if (total <= 0.0) return std::nullopt;
  return weighted / total;
}

}  // namespace descant
