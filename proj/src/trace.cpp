#include "abranch/trace.hpp"

#include <fstream>
#include <sstream>

#include "abranch/csvutil.hpp"
#include "abranch/error.hpp"

namespace abranch {

TraceManifest load_trace(const std::filesystem::path& manifest_path) {
  std::ifstream in(manifest_path);
  if (!in) fail(Errc::file_not_found, "no such manifest: " + manifest_path.string());
  const std::filesystem::path base = manifest_path.parent_path();

  TraceManifest manifest;
  std::string line;
  long line_no = 0;
  bool first_content_line = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (first_content_line && line.rfind("#fps=", 0) == 0) {
        manifest.fps = csv::parse_double(line.substr(5),
                                         manifest_path.string() + ":" + std::to_string(line_no));
        if (manifest.fps <= 0) {
          fail(Errc::manifest_bad_line,
               manifest_path.string() + ":" + std::to_string(line_no) + ": fps must be > 0");
        }
        first_content_line = false;
      }
      continue;
    }
    first_content_line = false;

    TraceEntry entry;
    std::string path_part = line;
    auto tab = line.find('\t');
    if (tab != std::string::npos) {
      path_part = line.substr(0, tab);
      for (const auto& label : csv::split(line.substr(tab + 1), '|')) {
        if (!label.empty()) entry.ground_truth.insert(label);
      }
    }
    if (path_part.empty()) {
      fail(Errc::manifest_bad_line,
           manifest_path.string() + ":" + std::to_string(line_no) + ": empty frame path");
    }
    entry.frame_path = base / path_part;
    if (!std::filesystem::exists(entry.frame_path)) {
      fail(Errc::manifest_missing_frame, manifest_path.string() + ":" + std::to_string(line_no) +
                                             ": frame file not found: " +
                                             entry.frame_path.string());
    }
    manifest.entries.push_back(std::move(entry));
  }
  if (manifest.entries.empty()) {
    fail(Errc::manifest_empty, manifest_path.string() + ": no trace entries");
  }
  return manifest;
}

void store_trace(const TraceManifest& manifest, const std::filesystem::path& manifest_path) {
  const std::filesystem::path base = manifest_path.parent_path();
  std::ostringstream out;
  out << "#fps=" << csv::fmt_sig(manifest.fps, 9) << "\n";
  for (const auto& entry : manifest.entries) {
    out << entry.frame_path.lexically_relative(base).generic_string();
    bool first = true;
    for (const auto& label : entry.ground_truth) {
      out << (first ? "\t" : "|") << label;
      first = false;
    }
    out << "\n";
  }
  csv::write_text_file(manifest_path, out.str());
}

}  // namespace abranch
