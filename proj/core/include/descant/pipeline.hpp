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

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "descant/augment.hpp"
#include "descant/descriptors.hpp"
#include "descant/manifest.hpp"

namespace descant {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// Everything a batch run depends on. The canonical JSON serialization of
/// this struct is hashed into every output line, so outputs are traceable
/// to their exact settings.
struct PipelineConfig {
  std::uint64_t global_seed = 0;
  int workers = 0;  // 0: DESCANT_WORKERS env var, then hardware concurrency
  int canonical_sample_rate = 48000;
  bool measure_after_augment = true;
  double reverb_tail_keep = 1.0;  // seconds of kept tail per second of rt60
  AugmentProbabilities probabilities;
  ThresholdConfig thresholds;
  ReverbCategoryMap reverb_map;
  FadeParams fade;
};

PipelineConfig pipeline_config_from_json(std::string_view text);
PipelineConfig load_pipeline_config(const std::filesystem::path& path);

/// Key-sorted JSON of the full effective config; identical configs always
/// serialize to identical bytes.
std::string canonical_config_json(const PipelineConfig& cfg);
std::uint64_t config_hash(const PipelineConfig& cfg);

/// Worker count after applying the env-var and hardware fallbacks.
int resolve_worker_count(const PipelineConfig& cfg);

struct AugmentedEntry {
  std::string id;
  std::string audio_path;  // written augmented file, or the source reference
  std::string caption;
  DescriptorSet descriptors;
  AugmentationPlan plan;
  std::string tool_version;
  std::string config_hash_hex;
};

std::string augmented_entry_to_json_line(const AugmentedEntry& entry);
std::vector<AugmentedEntry> load_output_manifest(
    const std::filesystem::path& path);

/// Decode, canonicalize (mono, canonical rate), plan, apply effects,
/// analyze the post-augmentation audio, and format the caption. Augmented
/// audio is written under out_dir only when an effect changed samples;
/// otherwise the entry keeps referencing its source file.
AugmentedEntry process_entry(const ManifestEntry& entry,
                             const PipelineConfig& cfg,
                             const std::filesystem::path& manifest_dir,
                             const std::filesystem::path& out_dir);

struct EntryFailure {
  std::string id;
  std::string message;
};

struct RunReport {
  std::size_t total = 0;
  std::size_t succeeded = 0;
  std::size_t failed = 0;
  std::vector<EntryFailure> failures;
  /// descriptor key -> category surface form -> count over emitted captions
  std::map<std::string, std::map<std::string, std::size_t>> category_counts;
};

std::string run_report_to_json(const RunReport& report);

/// Process every entry with up to worker-count threads. Output manifest
/// line order equals input order no matter how entries were scheduled;
/// failures are isolated per entry. Writes out_dir/manifest.jsonl and
/// out_dir/report.json.
RunReport run_pipeline(const DatasetManifest& manifest,
                       const PipelineConfig& cfg,
                       const std::filesystem::path& manifest_dir,
                       const std::filesystem::path& out_dir);

// ---- Alignment evaluation (prompt descriptors vs measured audio) ----

struct EvalPair {
  std::string caption;     // prompt with a descriptor tail
  std::string audio_path;  // generated audio
};

std::vector<EvalPair> load_eval_pairs(const std::filesystem::path& path);

struct EvalCell {
  std::size_t prompted = 0;  // pairs whose tail names this subcategory
  std::size_t measured = 0;  // of those, how many yielded a measurement
  double mean = 0.0;
  double stddev = 0.0;
};

struct EvalReport {
  /// descriptor -> prompted subcategory -> measured statistics. Loudness
  /// and fade are tallied but carry no means (no usable measurement on
  /// normalized model output / no fade metric).
  std::map<std::string, std::map<std::string, EvalCell>> table;
  std::size_t pairs_total = 0;
  std::size_t skipped_no_tail = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;
};

/// Parse each prompt's tail, measure the matching quantity on the audio
/// (RT60 for reverb, SNR for noise, mel centroid for brightness, octave
/// for pitch, seconds for duration), and aggregate per subcategory.
EvalReport evaluate_generated(const std::vector<EvalPair>& pairs,
                              const PipelineConfig& cfg,
                              const std::filesystem::path& base_dir);

std::string eval_report_to_json(const EvalReport& report);

// ---- Dataset statistics over an augmented output manifest ----

struct ValueStats {
  std::size_t count = 0;
  double min = 0.0;
  double median = 0.0;
  double max = 0.0;
};

struct StatsReport {
  std::size_t entries = 0;
  std::map<std::string, std::map<std::string, std::size_t>>
      category_histograms;
  std::map<std::string, ValueStats> value_stats;
  ValueStats caption_length;
};

StatsReport dataset_stats(const std::vector<AugmentedEntry>& entries);
std::string stats_report_to_json(const StatsReport& report);

}  // namespace descant
