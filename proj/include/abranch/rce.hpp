#pragma once

#include <deque>
#include <optional>

#include "abranch/profiles.hpp"

namespace abranch {

// Sliding window of observed pure inference latencies, newest first. Samples
// carry the branch they were measured on; the estimator only averages samples
// of the branch it is asked about.
class LatencyWindow {
 public:
  explicit LatencyWindow(int capacity = 30);

  void observe(const ApproxBranch& branch, double latency_ms);

  int size() const { return static_cast<int>(samples_.size()); }
  int capacity() const { return capacity_; }

  struct Sample {
    ApproxBranch branch;
    double latency_ms;
  };
  const std::deque<Sample>& samples() const { return samples_; }

 private:
  int capacity_;
  std::deque<Sample> samples_;  // front = most recent
};

struct ContentionEstimate {
  int level = 0;
  int confidence_samples = 0;
};

// Nearest-neighbor lookup of the windowed mean latency against the branch's
// latency column; ties break toward the lower level. Empty when the window
// holds no sample for the branch (callers keep their last estimate).
std::optional<ContentionEstimate> estimate_contention(const LatencyWindow& window,
                                                      const ApproxBranch& current_branch,
                                                      const LatencyProfile& profile);

}  // namespace abranch
