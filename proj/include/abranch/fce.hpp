#pragma once

#include <Eigen/Core>
#include <filesystem>
#include <numbers>
#include <vector>

#include "abranch/error.hpp"
#include "abranch/frame.hpp"

namespace abranch {

// Largest joint Scharr response on 8-bit input: |Gx| = |Gy| = 255 * 16.
inline constexpr double kMaxScharrMagnitude = 4080.0 * std::numbers::sqrt2;

using EdgeMap = Image<double>;

// 3x3 Scharr gradient magnitude sqrt(Gx^2 + Gy^2) with edge-replication
// padding; output has the input's dimensions. Accepts any integer- or
// real-valued Eigen array expression of at least 3x3.
template <class Derived>
EdgeMap scharr_edge_map(const Eigen::ArrayBase<Derived>& img) {
  const Eigen::Index h = img.rows();
  const Eigen::Index w = img.cols();
  if (h < 3 || w < 3) {
    fail(Errc::frame_too_small, "scharr_edge_map: frame must be at least 3x3");
  }

  Image<double> pad(h + 2, w + 2);
  pad.block(1, 1, h, w) = img.template cast<double>();
  pad.row(0) = pad.row(1);
  pad.row(h + 1) = pad.row(h);
  pad.col(0) = pad.col(1);
  pad.col(w + 1) = pad.col(w);

  auto tl = pad.block(0, 0, h, w);
  auto tc = pad.block(0, 1, h, w);
  auto tr = pad.block(0, 2, h, w);
  auto ml = pad.block(1, 0, h, w);
  auto mr = pad.block(1, 2, h, w);
  auto bl = pad.block(2, 0, h, w);
  auto bc = pad.block(2, 1, h, w);
  auto br = pad.block(2, 2, h, w);

  EdgeMap gx = 3.0 * (tl - tr) + 10.0 * (ml - mr) + 3.0 * (bl - br);
  EdgeMap gy = 3.0 * (tl - bl) + 10.0 * (tc - bc) + 3.0 * (tr - br);
  return (gx.square() + gy.square()).sqrt();
}

// Mean magnitude normalized by the maximum Scharr response, clamped to [0,1].
template <class Derived>
double mean_edge_value(const Eigen::ArrayBase<Derived>& magnitudes) {
  if (magnitudes.size() == 0) {
    fail(Errc::empty_input, "mean_edge_value: empty edge map");
  }
  double mev = magnitudes.template cast<double>().mean() / kMaxScharrMagnitude;
  if (mev < 0.0) return 0.0;
  if (mev > 1.0) return 1.0;
  return mev;
}

// Strictly increasing normalized mean-edge thresholds in (0,1); k cuts define
// k+1 complexity categories.
struct CategoryBoundaries {
  std::vector<double> cuts;

  int categories() const { return static_cast<int>(cuts.size()) + 1; }
};

// Category index in [1, cuts+1]. A mev equal to a cut lands in the higher
// category (half-open intervals [cut, next-cut)).
int categorize(double mev, const CategoryBoundaries& bounds);

struct ScdConfig {
  int histogram_bins = 256;
  int downsample_side = 112;
  double threshold_fraction = 0.45;  // of total (downsampled) pixels
  int channel_index = 0;             // R
};

// Per-pixel value histogram over equal-width bins spanning [0,255].
Eigen::VectorXi pixel_histogram(const GrayFrame& img, int bins);

// Declares a scene change when the summed absolute histogram difference of the
// two downsampled single-channel frames exceeds threshold_fraction * pixels.
bool detect_scene_change(const Frame& prev, const Frame& cur, const ScdConfig& cfg = {});

struct BoundarySample {
  double mev = 0.0;
  Eigen::VectorXd accuracy;  // per-branch accuracy, same ordering across samples
};

struct BoundaryLearnConfig {
  double epsilon = 0.05;    // max-norm distinctness threshold between halves
  int min_samples = 20;     // per accepted half
  int max_categories = 16;
};

// Recursive binary splitting of the mev range at segment medians; a split is
// kept only when the halves' mean accuracy vectors are distinct in max-norm.
CategoryBoundaries learn_boundaries(std::vector<BoundarySample> samples,
                                    const BoundaryLearnConfig& cfg = {});

// CSV with header `cut`, one threshold per line, 9 significant digits.
CategoryBoundaries load_boundaries(const std::filesystem::path& file);
void store_boundaries(const CategoryBoundaries& bounds, const std::filesystem::path& file);

}  // namespace abranch
