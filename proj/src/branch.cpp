#include "abranch/branch.hpp"

#include <algorithm>

#include "abranch/error.hpp"

namespace abranch {

bool canonical_less(const ApproxBranch& a, const ApproxBranch& b) {
  if (a.side != b.side) return a.side > b.side;
  return a.outport < b.outport;
}

std::string to_string(const ApproxBranch& b) {
  return std::to_string(b.side) + "x" + std::to_string(b.side) + "/o" + std::to_string(b.outport);
}

int outport_feature_side(int side, int outport, const std::vector<int>& factors) {
  if (outport < 1 || outport > static_cast<int>(factors.size())) {
    fail(Errc::bad_argument, "outport_feature_side: unknown outport " + std::to_string(outport));
  }
  return side / factors[outport - 1];
}

BranchCatalog BranchCatalog::enumerate(const std::vector<int>& shapes, int outport_count,
                                       const std::vector<int>& factors, int min_feature_side) {
  if (shapes.empty()) fail(Errc::empty_input, "enumerate_branches: empty shape list");
  if (outport_count < 1 || outport_count > static_cast<int>(factors.size())) {
    fail(Errc::bad_argument, "enumerate_branches: factors do not cover all outports");
  }
  std::vector<int> sorted = shapes;
  std::sort(sorted.begin(), sorted.end(), std::greater<int>());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  BranchCatalog cat;
  cat.factors_ = factors;
  for (int side : sorted) {
    for (int outport = 1; outport <= outport_count; ++outport) {
      if (outport_feature_side(side, outport, factors) >= min_feature_side) {
        cat.branches_.push_back({side, outport});
      }
    }
  }
  return cat;
}

BranchCatalog BranchCatalog::from_branches(std::vector<ApproxBranch> branches,
                                           const std::vector<int>& factors, int min_feature_side) {
  if (branches.empty()) fail(Errc::empty_input, "catalog: empty branch list");
  std::sort(branches.begin(), branches.end(), canonical_less);
  branches.erase(std::unique(branches.begin(), branches.end()), branches.end());
  for (const auto& b : branches) {
    if (outport_feature_side(b.side, b.outport, factors) < min_feature_side) {
      fail(Errc::bad_argument, "catalog: invalid branch " + to_string(b) +
                                   " (feature side below " + std::to_string(min_feature_side) +
                                   ")");
    }
  }
  BranchCatalog cat;
  cat.factors_ = factors;
  cat.branches_ = std::move(branches);
  return cat;
}

BranchCatalog BranchCatalog::reference() {
  return enumerate(kReferenceShapes, 6, kReferenceFactors, kMinFeatureSide);
}

std::optional<std::size_t> BranchCatalog::index_of(const ApproxBranch& b) const {
  auto it = std::lower_bound(branches_.begin(), branches_.end(), b, canonical_less);
  if (it != branches_.end() && *it == b) {
    return static_cast<std::size_t>(it - branches_.begin());
  }
  return std::nullopt;
}

}  // namespace abranch
