#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "abranch/branch.hpp"
#include "abranch/profiles.hpp"
#include "abranch/rng.hpp"

namespace abranch {

struct InferRequest {
  ApproxBranch branch;
  std::optional<ApproxBranch> prev_branch;  // drives switching overhead
  int category = 1;                         // content complexity seen by the simulator
  int level = 0;                            // true contention level
  std::set<std::string> true_labels;
  std::filesystem::path frame_path;  // consumed by the external executor only
};

struct InferenceResult {
  std::vector<std::string> top5;
  double measured_ms = 0.0;  // end-to-end, including realized switch overhead
  double switch_ms = 0.0;    // realized switch portion of measured_ms
  double reported_ms = 0.0;  // responder-reported inference time (external only)
  ApproxBranch branch_used;
};

class Executor {
 public:
  virtual ~Executor() = default;
  virtual InferenceResult infer(const InferRequest& req) = 0;
};

struct SimExecutorConfig {
  std::uint64_t seed = 0;
  double latency_jitter = 0.02;  // fractional stddev, multiplicative, cut at 3 sigma
  std::vector<std::string> label_universe;
};

// Profile-driven stand-in for the real model: latency comes from the
// ground-truth latency table plus jitter, correctness is Bernoulli in the
// ground-truth accuracy table. Single owner; calls draw from one RNG stream.
class SimExecutor : public Executor {
 public:
  SimExecutor(ProfileSet truth, SimExecutorConfig cfg);

  InferenceResult infer(const InferRequest& req) override;

  const ProfileSet& truth() const { return truth_; }

 private:
  ProfileSet truth_;
  SimExecutorConfig cfg_;
  Rng rng_;
};

// Piecewise-constant contention schedule over frame indices.
struct ContentionTrace {
  std::vector<std::pair<long, int>> segments;  // (start frame, level)

  static ContentionTrace constant(int level) { return ContentionTrace{{{0, level}}}; }
};

void validate_contention(const ContentionTrace& trace, int levels);
int contention_at(const ContentionTrace& trace, long frame_index);

// CSV with header `start_frame,level`.
ContentionTrace load_contention(const std::filesystem::path& file);
void store_contention(const ContentionTrace& trace, const std::filesystem::path& file);

}  // namespace abranch
