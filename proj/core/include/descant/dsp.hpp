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
#include <optional>
#include <vector>

#include "descant/audio_buffer.hpp"

namespace descant {

/// Hann-windowed magnitude spectrogram. A signal shorter than one frame
/// yields zero frames, which is a valid (empty) spectrogram.
struct Spectrogram {
  std::vector<std::vector<double>> magnitudes;  // [frame][bin]
  std::size_t frame_size = 0;
  std::size_t hop = 0;
  int sample_rate = 0;

  std::size_t frames() const { return magnitudes.size(); }
  std::size_t bins() const { return frame_size / 2 + 1; }
};

Spectrogram stft_magnitude(const AudioBuffer& buf, std::size_t frame_size,
                           std::size_t hop);

struct MelParams {
  std::size_t frame_size = 2048;
  std::size_t hop = 512;
  std::size_t n_mels = 128;
  double fmin_hz = 20.0;
  double fmax_hz = 24000.0;
};

/// Power spectrogram projected through triangular HTK-mel filters,
/// linear scale.
struct MelSpectrogram {
  std::vector<std::vector<double>> energies;  // [frame][mel band]
  std::size_t n_mels = 0;
  double fmin_hz = 0.0;
  double fmax_hz = 0.0;
  std::size_t frame_size = 0;
  std::size_t hop = 0;
  int sample_rate = 0;

  std::size_t frames() const { return energies.size(); }
};

MelSpectrogram mel_spectrogram(const AudioBuffer& buf, const MelParams& params);

/// Energy-weighted mean of per-frame centroids, in mel-bin units
/// ([0, n_mels - 1]). Empty when the spectrogram carries no energy at all,
/// in which case the brightness descriptor is undefined.
std::optional<double> spectral_centroid_mel(const MelSpectrogram& mel);

double hz_to_mel(double hz);
double mel_to_hz(double mel);

}  // namespace descant
