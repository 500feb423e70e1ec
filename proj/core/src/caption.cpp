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

#include "descant/caption.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "descant/errors.hpp"

namespace descant {
namespace {

constexpr std::string_view kKeyNames[] = {
    "loudness", "pitch", "reverb", "noise", "brightness", "fade", "duration",
};

bool is_blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isspace(c) != 0;
  });
}

bool legal_value(DescriptorKey key, std::string_view value) {
  switch (key) {
    case DescriptorKey::loudness:
      return loudness_category_from(value).has_value();
    case DescriptorKey::pitch:
      return pitch_category_from(value).has_value();
    case DescriptorKey::reverb:
      return reverb_category_from(value).has_value();
    case DescriptorKey::noise:
      return noise_category_from(value).has_value();
    case DescriptorKey::brightness:
      return brightness_category_from(value).has_value();
    case DescriptorKey::fade:
      return fade_kind_from(value).has_value();
    case DescriptorKey::duration: {
      // "<digits> seconds"
      const auto space = value.find(' ');
      if (space == std::string_view::npos || space == 0) return false;
      if (value.substr(space + 1) != "seconds") return false;
      const std::string_view digits = value.substr(0, space);
      return std::all_of(digits.begin(), digits.end(), [](unsigned char c) {
        return std::isdigit(c) != 0;
      });
    }
  }
  return false;
}

}  // namespace

std::string_view to_string(DescriptorKey key) {
  return kKeyNames[static_cast<int>(key)];
}

std::optional<DescriptorKey> descriptor_key_from(std::string_view s) {
  for (int i = 0; i < 7; ++i) {
    if (s == kKeyNames[i]) return static_cast<DescriptorKey>(i);
  }
  return std::nullopt;
}

void CaptionRecord::set(DescriptorKey key, std::string value) {
  auto pos = std::find_if(descriptors.begin(), descriptors.end(),
                          [&](const auto& kv) { return kv.first >= key; });
  if (pos != descriptors.end() && pos->first == key) {
    pos->second = std::move(value);
  } else {
    descriptors.emplace(pos, key, std::move(value));
  }
}

const std::string* CaptionRecord::find(DescriptorKey key) const {
  for (const auto& [k, v] : descriptors) {
    if (k == key) return &v;
  }
  return nullptr;
}

bool coarse_contains_separator(std::string_view coarse) {
  return coarse.find(kDescriptorSeparator) != std::string_view::npos;
}

std::string format_caption(const CaptionRecord& record) {
  if (is_blank(record.coarse)) {
    throw InvalidInputError("caption: coarse text is empty");
  }
  if (record.descriptors.empty()) return record.coarse;

  std::string_view coarse = record.coarse;
  if (coarse.ends_with('.')) coarse.remove_suffix(1);

  std::string out(coarse);
  for (const auto& [key, value] : record.descriptors) {
    out += kDescriptorSeparator;
    out += to_string(key);
    out += ": ";
    out += value;
  }
  out += '.';
  return out;
}

CaptionRecord parse_caption(std::string_view text) {
  CaptionRecord record;
  const std::size_t first_sep = text.find(kDescriptorSeparator);
  if (first_sep == std::string_view::npos) {
    record.coarse = std::string(text);
    return record;
  }
  record.coarse = std::string(text.substr(0, first_sep));

  std::size_t pos = first_sep;
  while (pos < text.size()) {
    pos += kDescriptorSeparator.size();
    std::size_t end = text.find(kDescriptorSeparator, pos);
    bool last = end == std::string_view::npos;
    if (last) end = text.size();

    std::string_view segment = text.substr(pos, end - pos);
    if (last && segment.ends_with('.')) segment.remove_suffix(1);

    const std::size_t colon = segment.find(": ");
    if (colon == std::string_view::npos) {
      throw CaptionParseError("caption: segment is not 'key: value'", pos);
    }
    const auto key = descriptor_key_from(segment.substr(0, colon));
    if (!key) {
      throw CaptionParseError("caption: unknown descriptor '" +
                                  std::string(segment.substr(0, colon)) + "'",
                              pos);
    }
    const std::string_view value = segment.substr(colon + 2);
    if (!legal_value(*key, value)) {
      throw CaptionParseError("caption: illegal value '" +
                                  std::string(value) + "' for descriptor '" +
                                  std::string(to_string(*key)) + "'",
                              pos + colon + 2);
    }
    if (record.find(*key) != nullptr) {
      throw CaptionParseError("caption: duplicate descriptor '" +
                                  std::string(to_string(*key)) + "'",
                              pos);
    }
    record.set(*key, std::string(value));
    pos = end;
  }
  return record;
}

std::string duration_phrase(double seconds) {
  const auto whole = static_cast<long long>(std::floor(seconds + 0.5));
  return std::to_string(whole < 0 ? 0 : whole) + " seconds";
}

CaptionRecord caption_from_descriptors(std::string coarse,
                                       const DescriptorSet& set,
                                       const AugmentationPlan* plan) {
  CaptionRecord record;
  record.coarse = std::move(coarse);

  if (set.loudness && (!plan || plan->include_loudness)) {
    record.set(DescriptorKey::loudness, std::string(to_string(*set.loudness)));
  }
  if (set.pitch && (!plan || plan->include_pitch)) {
    record.set(DescriptorKey::pitch, std::string(to_string(*set.pitch)));
  }
  if (set.reverb) {
    record.set(DescriptorKey::reverb, std::string(to_string(*set.reverb)));
  }
  if (set.noise && (!plan || plan->include_noise)) {
    record.set(DescriptorKey::noise, std::string(to_string(*set.noise)));
  }
  if (set.brightness && (!plan || plan->include_brightness)) {
    record.set(DescriptorKey::brightness,
               std::string(to_string(*set.brightness)));
  }
  if (set.fade) {
    record.set(DescriptorKey::fade, std::string(to_string(*set.fade)));
  }
  if (!plan || plan->include_duration) {
    record.set(DescriptorKey::duration, duration_phrase(set.duration_s));
  }
  return record;
}

}  // namespace descant
