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
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "descant/audio_buffer.hpp"

namespace descant {

enum class WavEncoding : std::uint8_t { pcm16, float32 };

/// Decode a RIFF/WAVE container holding PCM16, PCM24 or Float32 samples.
/// Integer samples are scaled by 1/2^(bits-1). A data chunk that claims more
/// bytes than the container holds is a DecodeError, not partial audio.
MultiChannelBuffer decode_wav(std::span<const std::uint8_t> bytes);

struct EncodedWav {
  std::vector<std::uint8_t> bytes;
  std::size_t clipped_samples = 0;  // inputs outside [-1, 1], clamped on write
};

EncodedWav write_wav(const AudioBuffer& buf, WavEncoding encoding);

MultiChannelBuffer read_wav_file(const std::filesystem::path& path);

/// Returns the clipped-sample count.
std::size_t write_wav_file(const std::filesystem::path& path,
                           const AudioBuffer& buf, WavEncoding encoding);

}  // namespace descant
