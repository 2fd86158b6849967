#pragma once

#include <Eigen/Core>
#include <filesystem>
#include <map>
#include <vector>

#include "abranch/branch.hpp"

namespace abranch {

// Ordered branch key set shared by the profile tables. Rows of every table
// follow this order (canonical: descending side, ascending outport).
class BranchIndex {
 public:
  BranchIndex() = default;
  explicit BranchIndex(std::vector<ApproxBranch> branches);

  const std::vector<ApproxBranch>& branches() const { return branches_; }
  std::size_t size() const { return branches_.size(); }
  std::optional<std::size_t> index_of(const ApproxBranch& b) const;
  std::size_t require(const ApproxBranch& b) const;  // throws unknown_branch

  friend bool operator==(const BranchIndex&, const BranchIndex&) = default;

 private:
  std::vector<ApproxBranch> branches_;
};

// Content-aware accuracy A[branch, category]; columns are categories 1..F.
struct AccuracyProfile {
  BranchIndex branches;
  Eigen::MatrixXd table;

  int categories() const { return static_cast<int>(table.cols()); }
  double at(const ApproxBranch& b, int category) const;
};

// Contention-aware latency L[branch, level]; columns are levels 0..C-1 and
// must be non-decreasing along each row.
struct LatencyProfile {
  BranchIndex branches;
  Eigen::MatrixXd table;

  int levels() const { return static_cast<int>(table.cols()); }
  double at(const ApproxBranch& b, int level) const;
};

// One-time switching overhead S[from, to]; zero diagonal.
struct SwitchCostMatrix {
  BranchIndex branches;
  Eigen::MatrixXd table;

  double at(const ApproxBranch& from, const ApproxBranch& to) const;
};

// The scheduler's world model. All three tables are keyed by the same branch
// set; construction validates shapes, ranges and latency monotonicity.
class ProfileSet {
 public:
  ProfileSet(AccuracyProfile accuracy, LatencyProfile latency, SwitchCostMatrix switch_cost);

  const AccuracyProfile& accuracy() const { return accuracy_; }
  const LatencyProfile& latency() const { return latency_; }
  const SwitchCostMatrix& switch_cost() const { return switch_cost_; }

  const std::vector<ApproxBranch>& branches() const { return accuracy_.branches.branches(); }
  int categories() const { return accuracy_.categories(); }
  int levels() const { return latency_.levels(); }

  // True when every catalog branch has profile rows.
  bool covers(const BranchCatalog& catalog) const;

 private:
  AccuracyProfile accuracy_;
  LatencyProfile latency_;
  SwitchCostMatrix switch_cost_;
};

// Directory layout: accuracy.csv, latency.csv, switch.csv (schemas in the
// loaders). Floats are written with 6 decimal places, rows sorted by key.
ProfileSet load_profiles(const std::filesystem::path& dir);
void store_profiles(const ProfileSet& profiles, const std::filesystem::path& dir);

}  // namespace abranch
