#include "abranch/fce.hpp"

#include <algorithm>
#include <sstream>

#include "abranch/csvutil.hpp"

namespace abranch {

int categorize(double mev, const CategoryBoundaries& bounds) {
  auto it = std::upper_bound(bounds.cuts.begin(), bounds.cuts.end(), mev);
  return 1 + static_cast<int>(it - bounds.cuts.begin());
}

Eigen::VectorXi pixel_histogram(const GrayFrame& img, int bins) {
  if (bins < 2) fail(Errc::bad_argument, "pixel_histogram: need at least 2 bins");
  Eigen::VectorXi hist = Eigen::VectorXi::Zero(bins);
  const std::uint8_t* p = img.data();
  const std::uint8_t* end = p + img.size();
  for (; p != end; ++p) {
    hist[static_cast<int>(*p) * bins / 256] += 1;
  }
  return hist;
}

bool detect_scene_change(const Frame& prev, const Frame& cur, const ScdConfig& cfg) {
  const int side = cfg.downsample_side;
  if (side < 1) fail(Errc::bad_argument, "detect_scene_change: downsample side must be >= 1");
  GrayFrame a = resize_nearest(extract_channel(prev, cfg.channel_index), side, side);
  GrayFrame b = resize_nearest(extract_channel(cur, cfg.channel_index), side, side);
  Eigen::VectorXi ha = pixel_histogram(a, cfg.histogram_bins);
  Eigen::VectorXi hb = pixel_histogram(b, cfg.histogram_bins);
  long diff = (ha - hb).cwiseAbs().cast<long>().sum();
  return static_cast<double>(diff) >
         cfg.threshold_fraction * static_cast<double>(side) * static_cast<double>(side);
}

namespace {

Eigen::VectorXd mean_accuracy(const std::vector<BoundarySample>& samples, std::size_t lo,
                              std::size_t hi) {
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(samples[lo].accuracy.size());
  for (std::size_t i = lo; i < hi; ++i) sum += samples[i].accuracy;
  return sum / static_cast<double>(hi - lo);
}

void split_segment(const std::vector<BoundarySample>& samples, std::size_t lo, std::size_t hi,
                   const BoundaryLearnConfig& cfg, int& categories, std::vector<double>& cuts) {
  const std::size_t n = hi - lo;
  if (n < 2 * static_cast<std::size_t>(cfg.min_samples)) return;
  if (categories >= cfg.max_categories) return;

  // Median mev of the segment; samples equal to the cut go to the right half,
  // mirroring categorize()'s half-open intervals.
  const double cut = samples[lo + n / 2].mev;
  if (cut <= 0.0 || cut >= 1.0) return;
  std::size_t mid = lo;
  while (mid < hi && samples[mid].mev < cut) ++mid;
  if (mid - lo < static_cast<std::size_t>(cfg.min_samples) ||
      hi - mid < static_cast<std::size_t>(cfg.min_samples)) {
    return;
  }

  Eigen::VectorXd left = mean_accuracy(samples, lo, mid);
  Eigen::VectorXd right = mean_accuracy(samples, mid, hi);
  if ((left - right).cwiseAbs().maxCoeff() <= cfg.epsilon) return;

  cuts.push_back(cut);
  ++categories;
  split_segment(samples, lo, mid, cfg, categories, cuts);
  split_segment(samples, mid, hi, cfg, categories, cuts);
}

}  // namespace

CategoryBoundaries learn_boundaries(std::vector<BoundarySample> samples,
                                    const BoundaryLearnConfig& cfg) {
  if (samples.size() < 2) fail(Errc::empty_input, "learn_boundaries: need at least 2 samples");
  const Eigen::Index branches = samples.front().accuracy.size();
  if (branches == 0) fail(Errc::empty_input, "learn_boundaries: empty accuracy vectors");
  for (const auto& s : samples) {
    if (s.accuracy.size() != branches) {
      fail(Errc::bad_argument, "learn_boundaries: mismatched branch sets across samples");
    }
  }
  std::stable_sort(samples.begin(), samples.end(),
                   [](const BoundarySample& a, const BoundarySample& b) { return a.mev < b.mev; });

  std::vector<double> cuts;
  int categories = 1;
  split_segment(samples, 0, samples.size(), cfg, categories, cuts);
  std::sort(cuts.begin(), cuts.end());
  return CategoryBoundaries{std::move(cuts)};
}

CategoryBoundaries load_boundaries(const std::filesystem::path& file) {
  CategoryBoundaries bounds;
  for (const auto& row : csv::read_csv(file, "cut")) {
    if (row.size() != 1) fail(Errc::csv_schema, file.string() + ": expected one column");
    bounds.cuts.push_back(csv::parse_double(row[0], file.string()));
  }
  for (std::size_t i = 0; i < bounds.cuts.size(); ++i) {
    double c = bounds.cuts[i];
    if (c <= 0.0 || c >= 1.0 || (i > 0 && c <= bounds.cuts[i - 1])) {
      fail(Errc::csv_schema, file.string() + ": cuts must be strictly increasing within (0,1)");
    }
  }
  return bounds;
}

void store_boundaries(const CategoryBoundaries& bounds, const std::filesystem::path& file) {
  std::ostringstream out;
  out << "cut\n";
  for (double c : bounds.cuts) out << csv::fmt_sig(c, 9) << "\n";
  csv::write_text_file(file, out.str());
}

}  // namespace abranch
