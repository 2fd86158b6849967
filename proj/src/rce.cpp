#include "abranch/rce.hpp"

#include <cmath>

#include "abranch/error.hpp"

namespace abranch {

LatencyWindow::LatencyWindow(int capacity) : capacity_(capacity) {
  if (capacity < 1) fail(Errc::bad_argument, "latency window: capacity must be >= 1");
}

void LatencyWindow::observe(const ApproxBranch& branch, double latency_ms) {
  if (!(latency_ms > 0.0)) {
    fail(Errc::bad_argument, "latency window: observed latency must be > 0");
  }
  samples_.push_front({branch, latency_ms});
  if (static_cast<int>(samples_.size()) > capacity_) samples_.pop_back();
}

std::optional<ContentionEstimate> estimate_contention(const LatencyWindow& window,
                                                      const ApproxBranch& current_branch,
                                                      const LatencyProfile& profile) {
  double sum = 0.0;
  int count = 0;
  for (const auto& s : window.samples()) {
    if (s.branch == current_branch) {
      sum += s.latency_ms;
      ++count;
    }
  }
  if (count == 0) return std::nullopt;
  const double mean = sum / count;

  const auto row = static_cast<Eigen::Index>(profile.branches.require(current_branch));
  int best_level = 0;
  double best_dist = std::abs(profile.table(row, 0) - mean);
  for (int level = 1; level < profile.levels(); ++level) {
    double dist = std::abs(profile.table(row, level) - mean);
    if (dist < best_dist) {  // strict: ties stay on the lower level
      best_dist = dist;
      best_level = level;
    }
  }
  return ContentionEstimate{best_level, count};
}

}  // namespace abranch
