#pragma once

#include <optional>
#include <string>
#include <vector>

namespace abranch {

// One approximation branch: input shape side length plus early-exit outport.
struct ApproxBranch {
  int side = 0;
  int outport = 0;

  friend bool operator==(const ApproxBranch&, const ApproxBranch&) = default;
};

// Canonical ordering: descending side, then ascending outport.
bool canonical_less(const ApproxBranch& a, const ApproxBranch& b);

std::string to_string(const ApproxBranch& b);

// Feature-map side at an outport: floor(side / factor[outport-1]).
int outport_feature_side(int side, int outport, const std::vector<int>& factors);

inline const std::vector<int> kReferenceShapes{224, 192, 160, 128, 112, 96, 80};
inline const std::vector<int> kReferenceFactors{8, 8, 16, 16, 16, 32};
inline constexpr int kMinFeatureSide = 7;

// The validity lattice: every (shape, outport) pair whose outport feature side
// stays at or above the floor, in canonical order.
class BranchCatalog {
 public:
  static BranchCatalog enumerate(const std::vector<int>& shapes, int outport_count,
                                 const std::vector<int>& factors,
                                 int min_feature_side = kMinFeatureSide);

  // Catalog over an explicit branch list (e.g. a profile fixture subset);
  // every branch is validated against the same rule.
  static BranchCatalog from_branches(std::vector<ApproxBranch> branches,
                                     const std::vector<int>& factors,
                                     int min_feature_side = kMinFeatureSide);

  static BranchCatalog reference();

  const std::vector<ApproxBranch>& branches() const { return branches_; }
  std::size_t size() const { return branches_.size(); }
  const std::vector<int>& factors() const { return factors_; }
  std::optional<std::size_t> index_of(const ApproxBranch& b) const;
  bool contains(const ApproxBranch& b) const { return index_of(b).has_value(); }

 private:
  BranchCatalog() = default;
  std::vector<ApproxBranch> branches_;
  std::vector<int> factors_;
};

}  // namespace abranch
