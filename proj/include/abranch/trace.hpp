#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <vector>

namespace abranch {

struct TraceEntry {
  std::filesystem::path frame_path;      // resolved against the manifest directory
  std::set<std::string> ground_truth;    // empty when the frame is unlabeled
};

struct TraceManifest {
  std::vector<TraceEntry> entries;
  double fps = 30.0;
};

// Manifest format: one `<relative-path>[<TAB><label>{|<label>}*]` entry per
// line; optional `#fps=<float>` first line; blank and '#' lines ignored.
// Every referenced frame file must exist.
TraceManifest load_trace(const std::filesystem::path& manifest_path);

void store_trace(const TraceManifest& manifest, const std::filesystem::path& manifest_path);

}  // namespace abranch
