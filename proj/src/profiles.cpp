#include "abranch/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "abranch/csvutil.hpp"
#include "abranch/error.hpp"

namespace abranch {

BranchIndex::BranchIndex(std::vector<ApproxBranch> branches) : branches_(std::move(branches)) {
  std::sort(branches_.begin(), branches_.end(), canonical_less);
  branches_.erase(std::unique(branches_.begin(), branches_.end()), branches_.end());
}

std::optional<std::size_t> BranchIndex::index_of(const ApproxBranch& b) const {
  auto it = std::lower_bound(branches_.begin(), branches_.end(), b, canonical_less);
  if (it != branches_.end() && *it == b) return static_cast<std::size_t>(it - branches_.begin());
  return std::nullopt;
}

std::size_t BranchIndex::require(const ApproxBranch& b) const {
  auto idx = index_of(b);
  if (!idx) fail(Errc::unknown_branch, "branch " + to_string(b) + " not in profile");
  return *idx;
}

double AccuracyProfile::at(const ApproxBranch& b, int category) const {
  if (category < 1 || category > categories()) {
    fail(Errc::category_out_of_range, "accuracy profile: category " + std::to_string(category));
  }
  return table(static_cast<Eigen::Index>(branches.require(b)), category - 1);
}

double LatencyProfile::at(const ApproxBranch& b, int level) const {
  if (level < 0 || level >= levels()) {
    fail(Errc::level_out_of_range, "latency profile: level " + std::to_string(level));
  }
  return table(static_cast<Eigen::Index>(branches.require(b)), level);
}

double SwitchCostMatrix::at(const ApproxBranch& from, const ApproxBranch& to) const {
  return table(static_cast<Eigen::Index>(branches.require(from)),
               static_cast<Eigen::Index>(branches.require(to)));
}

namespace {

void check_latency_monotone(const LatencyProfile& lat) {
  for (Eigen::Index r = 0; r < lat.table.rows(); ++r) {
    for (Eigen::Index c = 1; c < lat.table.cols(); ++c) {
      if (lat.table(r, c) < lat.table(r, c - 1)) {
        fail(Errc::csv_non_monotone,
             "latency profile: branch " + to_string(lat.branches.branches()[r]) +
                 " decreases from level " + std::to_string(c - 1) + " to " + std::to_string(c));
      }
    }
  }
}

}  // namespace

ProfileSet::ProfileSet(AccuracyProfile accuracy, LatencyProfile latency,
                       SwitchCostMatrix switch_cost)
    : accuracy_(std::move(accuracy)),
      latency_(std::move(latency)),
      switch_cost_(std::move(switch_cost)) {
  if (!(accuracy_.branches == latency_.branches) ||
      !(accuracy_.branches == switch_cost_.branches)) {
    fail(Errc::csv_schema, "profile tables disagree on the branch set");
  }
  const auto n = static_cast<Eigen::Index>(accuracy_.branches.size());
  if (n == 0) fail(Errc::empty_input, "profile set has no branches");
  if (accuracy_.table.rows() != n || latency_.table.rows() != n ||
      switch_cost_.table.rows() != n || switch_cost_.table.cols() != n) {
    fail(Errc::csv_schema, "profile table shapes do not match the branch set");
  }
  if (accuracy_.table.cols() < 1 || latency_.table.cols() < 1) {
    fail(Errc::csv_schema, "profiles need at least one category and one level");
  }
  if ((accuracy_.table.array() < 0.0).any() || (accuracy_.table.array() > 1.0).any()) {
    fail(Errc::csv_schema, "accuracy values must lie in [0,1]");
  }
  if ((latency_.table.array() <= 0.0).any()) {
    fail(Errc::csv_schema, "latencies must be positive");
  }
  if ((switch_cost_.table.array() < 0.0).any() ||
      switch_cost_.table.diagonal().array().any()) {
    fail(Errc::csv_schema, "switch costs must be >= 0 with a zero diagonal");
  }
  check_latency_monotone(latency_);
}

bool ProfileSet::covers(const BranchCatalog& catalog) const {
  for (const auto& b : catalog.branches()) {
    if (!accuracy_.branches.index_of(b)) return false;
  }
  return true;
}

namespace {

constexpr const char* kAccuracyHeader = "side,outport,category,accuracy";
constexpr const char* kLatencyHeader = "side,outport,level,latency_ms";
constexpr const char* kSwitchHeader = "from_side,from_outport,to_side,to_outport,cost_ms";

struct KeyedValues {
  BranchIndex branches;
  // (branch row, column) -> value; column count inferred from the file.
  Eigen::MatrixXd table;
};

// Shared loader for the accuracy/latency schemas: key columns
// (side, outport, col) and one value column.
KeyedValues load_keyed(const std::filesystem::path& file, const std::string& header,
                       int col_base) {
  auto rows = csv::read_csv(file, header);
  std::set<std::pair<int, int>> branch_keys;
  int max_col = -1;
  for (const auto& row : rows) {
    if (row.size() != 4) fail(Errc::csv_schema, file.string() + ": expected 4 columns");
    int side = static_cast<int>(csv::parse_long(row[0], file.string()));
    int outport = static_cast<int>(csv::parse_long(row[1], file.string()));
    int col = static_cast<int>(csv::parse_long(row[2], file.string())) - col_base;
    if (col < 0) fail(Errc::csv_schema, file.string() + ": bad index column");
    branch_keys.insert({side, outport});
    max_col = std::max(max_col, col);
  }
  if (branch_keys.empty()) fail(Errc::csv_schema, file.string() + ": no data rows");

  std::vector<ApproxBranch> branches;
  for (auto [side, outport] : branch_keys) branches.push_back({side, outport});
  KeyedValues out;
  out.branches = BranchIndex(std::move(branches));
  out.table.setConstant(static_cast<Eigen::Index>(out.branches.size()), max_col + 1,
                        std::numeric_limits<double>::quiet_NaN());
  for (const auto& row : rows) {
    ApproxBranch b{static_cast<int>(csv::parse_long(row[0], file.string())),
                   static_cast<int>(csv::parse_long(row[1], file.string()))};
    int col = static_cast<int>(csv::parse_long(row[2], file.string())) - col_base;
    auto r = static_cast<Eigen::Index>(out.branches.require(b));
    if (!std::isnan(out.table(r, col))) {
      fail(Errc::csv_schema, file.string() + ": duplicate row for " + to_string(b));
    }
    out.table(r, col) = csv::parse_double(row[3], file.string());
  }
  for (Eigen::Index r = 0; r < out.table.rows(); ++r) {
    for (Eigen::Index c = 0; c < out.table.cols(); ++c) {
      if (std::isnan(out.table(r, c))) {
        fail(Errc::csv_incomplete, file.string() + ": missing entry for " +
                                       to_string(out.branches.branches()[r]) + " at index " +
                                       std::to_string(c + col_base));
      }
    }
  }
  return out;
}

}  // namespace

ProfileSet load_profiles(const std::filesystem::path& dir) {
  KeyedValues acc = load_keyed(dir / "accuracy.csv", kAccuracyHeader, 1);
  KeyedValues lat = load_keyed(dir / "latency.csv", kLatencyHeader, 0);

  auto file = dir / "switch.csv";
  auto rows = csv::read_csv(file, kSwitchHeader);
  Eigen::MatrixXd sw;
  const auto n = static_cast<Eigen::Index>(acc.branches.size());
  sw.setConstant(n, n, std::numeric_limits<double>::quiet_NaN());
  for (const auto& row : rows) {
    if (row.size() != 5) fail(Errc::csv_schema, file.string() + ": expected 5 columns");
    ApproxBranch from{static_cast<int>(csv::parse_long(row[0], file.string())),
                      static_cast<int>(csv::parse_long(row[1], file.string()))};
    ApproxBranch to{static_cast<int>(csv::parse_long(row[2], file.string())),
                    static_cast<int>(csv::parse_long(row[3], file.string()))};
    sw(static_cast<Eigen::Index>(acc.branches.require(from)),
       static_cast<Eigen::Index>(acc.branches.require(to))) =
        csv::parse_double(row[4], file.string());
  }
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      if (std::isnan(sw(r, c))) {
        fail(Errc::csv_incomplete, file.string() + ": missing pair " +
                                       to_string(acc.branches.branches()[r]) + " -> " +
                                       to_string(acc.branches.branches()[c]));
      }
    }
  }

  return ProfileSet(AccuracyProfile{acc.branches, std::move(acc.table)},
                    LatencyProfile{lat.branches, std::move(lat.table)},
                    SwitchCostMatrix{acc.branches, std::move(sw)});
}

void store_profiles(const ProfileSet& profiles, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const auto& branches = profiles.branches();

  // Rows ascend by (side, outport, index) so files diff cleanly.
  std::vector<std::size_t> order(branches.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (branches[a].side != branches[b].side) return branches[a].side < branches[b].side;
    return branches[a].outport < branches[b].outport;
  });

  std::ostringstream acc;
  acc << kAccuracyHeader << "\n";
  for (std::size_t i : order) {
    for (int f = 1; f <= profiles.categories(); ++f) {
      acc << branches[i].side << "," << branches[i].outport << "," << f << ","
          << csv::fmt_fixed(profiles.accuracy().table(static_cast<Eigen::Index>(i), f - 1), 6)
          << "\n";
    }
  }
  csv::write_text_file(dir / "accuracy.csv", acc.str());

  std::ostringstream lat;
  lat << kLatencyHeader << "\n";
  for (std::size_t i : order) {
    for (int c = 0; c < profiles.levels(); ++c) {
      lat << branches[i].side << "," << branches[i].outport << "," << c << ","
          << csv::fmt_fixed(profiles.latency().table(static_cast<Eigen::Index>(i), c), 6) << "\n";
    }
  }
  csv::write_text_file(dir / "latency.csv", lat.str());

  std::ostringstream sw;
  sw << kSwitchHeader << "\n";
  for (std::size_t i : order) {
    for (std::size_t j : order) {
      sw << branches[i].side << "," << branches[i].outport << "," << branches[j].side << ","
         << branches[j].outport << ","
         << csv::fmt_fixed(profiles.switch_cost().table(static_cast<Eigen::Index>(i),
                                                        static_cast<Eigen::Index>(j)),
                           6)
         << "\n";
    }
  }
  csv::write_text_file(dir / "switch.csv", sw.str());
}

}  // namespace abranch
