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

#include <filesystem>
#include <string>
#include <vector>

namespace descant {

/// One line of an input manifest. `metadata_json` preserves the optional
/// free-form metadata object verbatim (empty when absent).
struct ManifestEntry {
  std::string id;
  std::string audio_path;
  std::string coarse_caption;
  std::string metadata_json;
};

struct DatasetManifest {
  std::vector<ManifestEntry> entries;
};

/// Line-delimited JSON, one entry per line, order preserved. Malformed
/// lines and duplicate ids raise ManifestError with the 1-based line
/// number; a duplicate id names both lines.
DatasetManifest load_manifest(const std::filesystem::path& path);

DatasetManifest parse_manifest(std::string_view text);

}  // namespace descant
