#include "abranch/executor.hpp"

#include <algorithm>
#include <sstream>

#include "abranch/csvutil.hpp"
#include "abranch/error.hpp"

namespace abranch {

SimExecutor::SimExecutor(ProfileSet truth, SimExecutorConfig cfg)
    : truth_(std::move(truth)), cfg_(std::move(cfg)), rng_(cfg_.seed) {
  if (cfg_.latency_jitter < 0.0) fail(Errc::bad_argument, "sim executor: negative jitter");
  if (cfg_.label_universe.size() < 2) {
    fail(Errc::bad_argument, "sim executor: label universe needs at least 2 labels");
  }
}

InferenceResult SimExecutor::infer(const InferRequest& req) {
  double base = truth_.latency().at(req.branch, req.level);
  double accuracy = truth_.accuracy().at(req.branch, req.category);

  double latency = base;
  if (cfg_.latency_jitter > 0.0) {
    latency = base * (1.0 + cfg_.latency_jitter * rng_.truncated_gaussian(3.0));
  }
  double switch_cost = 0.0;
  if (req.prev_branch && !(*req.prev_branch == req.branch)) {
    switch_cost = truth_.switch_cost().at(*req.prev_branch, req.branch);
  }

  bool correct = !req.true_labels.empty() && rng_.uniform() < accuracy;

  // Distractors are drawn from the universe minus the truth set, so a failed
  // inference can never match by accident.
  std::vector<std::string> pool;
  pool.reserve(cfg_.label_universe.size());
  for (const auto& label : cfg_.label_universe) {
    if (!req.true_labels.count(label)) pool.push_back(label);
  }

  InferenceResult result;
  result.branch_used = req.branch;
  const int want = correct ? 4 : 5;
  for (int i = 0; i < want && !pool.empty(); ++i) {
    int idx = rng_.uniform_int(static_cast<int>(pool.size()));
    result.top5.push_back(pool[idx]);
    pool.erase(pool.begin() + idx);
  }
  if (correct) {
    int pos = rng_.uniform_int(static_cast<int>(result.top5.size()) + 1);
    result.top5.insert(result.top5.begin() + pos, *req.true_labels.begin());
  }
  if (result.top5.empty()) {
    fail(Errc::bad_argument, "sim executor: label universe too small for a prediction");
  }
  result.measured_ms = latency + switch_cost;
  result.switch_ms = switch_cost;
  return result;
}

void validate_contention(const ContentionTrace& trace, int levels) {
  if (trace.segments.empty()) fail(Errc::bad_argument, "contention trace: no segments");
  if (trace.segments.front().first != 0) {
    fail(Errc::bad_argument, "contention trace: first segment must start at frame 0");
  }
  long prev = -1;
  for (const auto& [start, level] : trace.segments) {
    if (start <= prev) {
      fail(Errc::bad_argument, "contention trace: start frames must be strictly increasing");
    }
    if (level < 0 || level >= levels) {
      fail(Errc::level_out_of_range,
           "contention trace: level " + std::to_string(level) + " outside profile");
    }
    prev = start;
  }
}

int contention_at(const ContentionTrace& trace, long frame_index) {
  int level = 0;
  for (const auto& [start, seg_level] : trace.segments) {
    if (start > frame_index) break;
    level = seg_level;
  }
  return level;
}

ContentionTrace load_contention(const std::filesystem::path& file) {
  ContentionTrace trace;
  for (const auto& row : csv::read_csv(file, "start_frame,level")) {
    if (row.size() != 2) fail(Errc::csv_schema, file.string() + ": expected 2 columns");
    trace.segments.emplace_back(csv::parse_long(row[0], file.string()),
                                static_cast<int>(csv::parse_long(row[1], file.string())));
  }
  return trace;
}

void store_contention(const ContentionTrace& trace, const std::filesystem::path& file) {
  std::ostringstream out;
  out << "start_frame,level\n";
  for (const auto& [start, level] : trace.segments) out << start << "," << level << "\n";
  csv::write_text_file(file, out.str());
}

}  // namespace abranch
