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
#include <string_view>
#include <utility>
#include <vector>

#include "descant/augment.hpp"
#include "descant/descriptors.hpp"

namespace descant {

/// Descriptor keys in their fixed caption order.
enum class DescriptorKey {
  loudness,
  pitch,
  reverb,
  noise,
  brightness,
  fade,
  duration,
};

std::string_view to_string(DescriptorKey key);
std::optional<DescriptorKey> descriptor_key_from(std::string_view s);

/// The literal token separating caption segments.
inline constexpr std::string_view kDescriptorSeparator = ", & ";

/// A coarse caption plus its descriptor tail. Descriptors are kept in the
/// fixed key order with unique keys; values are caption surface forms.
struct CaptionRecord {
  std::string coarse;
  std::vector<std::pair<DescriptorKey, std::string>> descriptors;

  /// Insert or replace, keeping fixed key order.
  void set(DescriptorKey key, std::string value);
  const std::string* find(DescriptorKey key) const;

  bool operator==(const CaptionRecord&) const = default;
};

/// True when a coarse caption cannot be carried verbatim because it
/// contains the separator token; such captions are rejected at ingestion
/// rather than escaped.
bool coarse_contains_separator(std::string_view coarse);

/// "<coarse>, & key: value, & key: value." with one trailing period; the
/// coarse text loses one trailing period first. A record with no
/// descriptors returns the coarse caption unchanged.
std::string format_caption(const CaptionRecord& record);

/// Inverse of format_caption. Splits on ", & "; the first segment is the
/// coarse caption, every other segment must be "key: value" with a known
/// key and a legal value. Text without the token parses coarse-only.
CaptionRecord parse_caption(std::string_view text);

/// Surface form of a duration, rounded half-up to whole seconds.
std::string duration_phrase(double seconds);

/// Tail assembly: descriptors measured on the clip, filtered by the plan's
/// inclusion flags (no plan means every defined descriptor is included).
CaptionRecord caption_from_descriptors(std::string coarse,
                                       const DescriptorSet& set,
                                       const AugmentationPlan* plan = nullptr);

}  // namespace descant
