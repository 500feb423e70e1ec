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

#include "descant/wav.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <string>

#include "descant/errors.hpp"

namespace descant {
namespace {

constexpr std::uint16_t kFormatPcm = 0x0001;
constexpr std::uint16_t kFormatFloat = 0x0003;
constexpr std::uint16_t kFormatExtensible = 0xfffe;

struct Reader {
  std::span<const std::uint8_t> data;
  std::size_t pos = 0;

  std::size_t remaining() const { return data.size() - pos; }

  void require(std::size_t n, const char* what) const {
    if (remaining() < n) {
      throw DecodeError(std::string("wav: truncated ") + what);
    }
  }

  std::uint32_t u32(const char* what) {
    require(4, what);
    std::uint32_t v = static_cast<std::uint32_t>(data[pos]) |
                      static_cast<std::uint32_t>(data[pos + 1]) << 8 |
                      static_cast<std::uint32_t>(data[pos + 2]) << 16 |
                      static_cast<std::uint32_t>(data[pos + 3]) << 24;
    pos += 4;
    return v;
  }

  std::uint16_t u16(const char* what) {
    require(2, what);
    std::uint16_t v = static_cast<std::uint16_t>(
        data[pos] | static_cast<std::uint16_t>(data[pos + 1]) << 8);
    pos += 2;
    return v;
  }

  std::uint32_t fourcc(const char* what) { return u32(what); }

  void skip(std::size_t n, const char* what) {
    require(n, what);
    pos += n;
  }
};

constexpr std::uint32_t tag(char a, char b, char c, char d) {
  return static_cast<std::uint32_t>(static_cast<std::uint8_t>(a)) |
         static_cast<std::uint32_t>(static_cast<std::uint8_t>(b)) << 8 |
         static_cast<std::uint32_t>(static_cast<std::uint8_t>(c)) << 16 |
         static_cast<std::uint32_t>(static_cast<std::uint8_t>(d)) << 24;
}

struct FmtInfo {
  std::uint16_t format = 0;
  std::uint16_t channels = 0;
  std::uint32_t sample_rate = 0;
  std::uint16_t bits_per_sample = 0;
};

FmtInfo parse_fmt(Reader& r, std::uint32_t chunk_size) {
  if (chunk_size < 16) throw DecodeError("wav: fmt chunk too small");
  std::size_t end = r.pos + chunk_size;
  FmtInfo fmt;
  fmt.format = r.u16("fmt");
  fmt.channels = r.u16("fmt");
  fmt.sample_rate = r.u32("fmt");
  r.u32("fmt");  // byte rate
  r.u16("fmt");  // block align
  fmt.bits_per_sample = r.u16("fmt");
  if (fmt.format == kFormatExtensible) {
    // cbSize(2) + valid bits(2) + channel mask(4) + GUID(16); the first two
    // GUID bytes are the actual format tag.
    if (chunk_size < 40) throw DecodeError("wav: extensible fmt too small");
    r.skip(2, "fmt");
    r.skip(2, "fmt");
    r.skip(4, "fmt");
    fmt.format = r.u16("fmt");
  }
  if (end < r.pos || end > r.data.size()) {
    throw DecodeError("wav: fmt chunk overruns file");
  }
  r.pos = end;
  return fmt;
}

double decode_sample(const std::uint8_t* p, std::uint16_t bits,
                     std::uint16_t format) {
  if (format == kFormatFloat) {
    std::uint32_t raw = static_cast<std::uint32_t>(p[0]) |
                        static_cast<std::uint32_t>(p[1]) << 8 |
                        static_cast<std::uint32_t>(p[2]) << 16 |
                        static_cast<std::uint32_t>(p[3]) << 24;
    return static_cast<double>(std::bit_cast<float>(raw));
  }
  if (bits == 16) {
    auto v = static_cast<std::int16_t>(p[0] | (p[1] << 8));
    return v / 32768.0;
  }
  // 24-bit, sign-extended
  std::int32_t v = p[0] | (p[1] << 8) | (p[2] << 16);
  if (v & 0x800000) v |= ~0xffffff;
  return v / 8388608.0;
}

}  // namespace

MultiChannelBuffer decode_wav(std::span<const std::uint8_t> bytes) {
  Reader r{bytes};
  if (r.fourcc("RIFF header") != tag('R', 'I', 'F', 'F')) {
    throw DecodeError("wav: missing RIFF tag");
  }
  r.u32("RIFF size");
  if (r.fourcc("WAVE tag") != tag('W', 'A', 'V', 'E')) {
    throw DecodeError("wav: missing WAVE tag");
  }

  FmtInfo fmt;
  bool have_fmt = false;
  while (true) {
    if (r.remaining() == 0) throw DecodeError("wav: no data chunk");
    std::uint32_t id = r.fourcc("chunk id");
    std::uint32_t size = r.u32("chunk size");
    if (id == tag('f', 'm', 't', ' ')) {
      fmt = parse_fmt(r, size);
      have_fmt = true;
    } else if (id == tag('d', 'a', 't', 'a')) {
      if (!have_fmt) throw DecodeError("wav: data chunk precedes fmt");
      if (fmt.channels == 0) throw DecodeError("wav: zero channels");
      if (fmt.sample_rate == 0) throw DecodeError("wav: zero sample rate");
      if (fmt.format == kFormatFloat) {
        if (fmt.bits_per_sample != 32) {
          throw UnsupportedFormatError("wav: only 32-bit float supported");
        }
      } else if (fmt.format == kFormatPcm) {
        if (fmt.bits_per_sample != 16 && fmt.bits_per_sample != 24) {
          throw UnsupportedFormatError(
              "wav: PCM depth " + std::to_string(fmt.bits_per_sample) +
              " not supported (16/24-bit only)");
        }
      } else {
        throw UnsupportedFormatError("wav: codec tag " +
                                     std::to_string(fmt.format) +
                                     " not supported");
      }
      if (size > r.remaining()) {
        throw DecodeError("wav: data chunk truncated");
      }

      const std::size_t bytes_per_sample = fmt.bits_per_sample / 8;
      const std::size_t frame_bytes = bytes_per_sample * fmt.channels;
      const std::size_t frames = size / frame_bytes;

      MultiChannelBuffer out;
      out.sample_rate = static_cast<int>(fmt.sample_rate);
      out.channels.assign(fmt.channels, std::vector<double>(frames));
      const std::uint8_t* p = bytes.data() + r.pos;
      for (std::size_t f = 0; f < frames; ++f) {
        for (std::size_t c = 0; c < fmt.channels; ++c) {
          out.channels[c][f] = decode_sample(p, fmt.bits_per_sample, fmt.format);
          p += bytes_per_sample;
        }
      }
      return out;
    } else {
      // Unknown chunk: skip payload plus pad byte.
      r.skip(size + (size & 1), "chunk payload");
      continue;
    }
    // Chunks are word-aligned.
    if ((size & 1) && r.remaining() > 0) r.skip(1, "pad byte");
  }
}

namespace {

void put_u32(std::vector<std::uint8_t>& v, std::uint32_t x) {
  v.push_back(x & 0xff);
  v.push_back((x >> 8) & 0xff);
  v.push_back((x >> 16) & 0xff);
  v.push_back((x >> 24) & 0xff);
}

void put_u16(std::vector<std::uint8_t>& v, std::uint16_t x) {
  v.push_back(x & 0xff);
  v.push_back((x >> 8) & 0xff);
}

}  // namespace

EncodedWav write_wav(const AudioBuffer& buf, WavEncoding encoding) {
  if (buf.sample_rate <= 0) {
    throw InvalidInputError("write_wav: sample_rate must be positive");
  }
  const bool is_float = encoding == WavEncoding::float32;
  const std::uint16_t bits = is_float ? 32 : 16;
  const std::uint32_t data_bytes =
      static_cast<std::uint32_t>(buf.samples.size() * (bits / 8));

  EncodedWav out;
  auto& v = out.bytes;
  v.reserve(44 + data_bytes);
  put_u32(v, tag('R', 'I', 'F', 'F'));
  put_u32(v, 36 + data_bytes);
  put_u32(v, tag('W', 'A', 'V', 'E'));
  put_u32(v, tag('f', 'm', 't', ' '));
  put_u32(v, 16);
  put_u16(v, is_float ? kFormatFloat : kFormatPcm);
  put_u16(v, 1);  // mono
  put_u32(v, static_cast<std::uint32_t>(buf.sample_rate));
  put_u32(v, static_cast<std::uint32_t>(buf.sample_rate) * (bits / 8));
  put_u16(v, bits / 8);
  put_u16(v, bits);
  put_u32(v, tag('d', 'a', 't', 'a'));
  put_u32(v, data_bytes);

  for (double s : buf.samples) {
    double clamped = std::clamp(s, -1.0, 1.0);
    if (clamped != s) ++out.clipped_samples;
    if (is_float) {
      std::uint32_t raw = std::bit_cast<std::uint32_t>(
          static_cast<float>(clamped));
      put_u32(v, raw);
    } else {
      double scaled = std::round(clamped * 32768.0);
      auto q = static_cast<std::int16_t>(
          std::clamp(scaled, -32768.0, 32767.0));
      put_u16(v, static_cast<std::uint16_t>(q));
    }
  }
  return out;
}

MultiChannelBuffer read_wav_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DecodeError("wav: cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return decode_wav(bytes);
}

std::size_t write_wav_file(const std::filesystem::path& path,
                           const AudioBuffer& buf, WavEncoding encoding) {
  EncodedWav encoded = write_wav(buf, encoding);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("wav: cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(encoded.bytes.data()),
            static_cast<std::streamsize>(encoded.bytes.size()));
  if (!out) throw Error("wav: short write to " + path.string());
  return encoded.clipped_samples;
}

AudioBuffer to_mono(const MultiChannelBuffer& multi) {
  if (multi.channels.empty()) {
    throw InvalidInputError("to_mono: buffer has no channels");
  }
  AudioBuffer out;
  out.sample_rate = multi.sample_rate;
  if (multi.channels.size() == 1) {
    out.samples = multi.channels.front();
    return out;
  }
  const std::size_t frames = multi.frame_count();
  out.samples.resize(frames);
  const double scale = 1.0 / static_cast<double>(multi.channels.size());
  for (std::size_t f = 0; f < frames; ++f) {
    double acc = 0.0;
    for (const auto& ch : multi.channels) acc += ch[f];
    out.samples[f] = acc * scale;
  }
  return out;
}

double peak_abs(std::span<const double> samples) {
  double peak = 0.0;
  for (double s : samples) peak = std::max(peak, std::abs(s));
  return peak;
}

}  // namespace descant
