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

#include "descant/manifest.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "descant/errors.hpp"

namespace descant {
namespace {

std::string required_string(const nlohmann::json& j, const char* field,
                            std::size_t line) {
  auto it = j.find(field);
  if (it == j.end()) {
    throw ManifestError("manifest line " + std::to_string(line) +
                            ": missing \"" + field + "\"",
                        line);
  }
  if (!it->is_string()) {
    throw ManifestError("manifest line " + std::to_string(line) + ": \"" +
                            field + "\" must be a string",
                        line);
  }
  return it->get<std::string>();
}

}  // namespace

DatasetManifest parse_manifest(std::string_view text) {
  DatasetManifest manifest;
  std::unordered_map<std::string, std::size_t> seen;  // id -> line

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (line.empty() ||
        line.find_first_not_of(" \t\r") == std::string_view::npos) {
      if (pos > text.size()) break;
      continue;
    }

    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ManifestError("manifest line " + std::to_string(line_no) +
                              ": invalid JSON (" + e.what() + ")",
                          line_no);
    }
    if (!j.is_object()) {
      throw ManifestError("manifest line " + std::to_string(line_no) +
                              ": expected a JSON object",
                          line_no);
    }

    ManifestEntry entry;
    entry.id = required_string(j, "id", line_no);
    entry.audio_path = required_string(j, "audio_path", line_no);
    entry.coarse_caption = required_string(j, "coarse_caption", line_no);
    if (auto it = j.find("metadata"); it != j.end() && !it->is_null()) {
      entry.metadata_json = it->dump();
    }

    auto [slot, inserted] = seen.emplace(entry.id, line_no);
    if (!inserted) {
      throw ManifestError("manifest line " + std::to_string(line_no) +
                              ": duplicate id \"" + entry.id +
                              "\" (first seen on line " +
                              std::to_string(slot->second) + ")",
                          line_no);
    }
    manifest.entries.push_back(std::move(entry));
  }
  return manifest;
}

DatasetManifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ManifestError("manifest: cannot open " + path.string(), 0);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_manifest(buffer.str());
}

}  // namespace descant
