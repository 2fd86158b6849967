#pragma once

#include <vector>

#include "abranch/branch.hpp"

namespace abranch {

struct TradeoffPoint {
  ApproxBranch branch;
  double latency_ms = 0.0;
  double accuracy = 0.0;
};

// Non-dominated subset of the (latency, accuracy) plane. p dominates q when
// p.latency <= q.latency and p.accuracy >= q.accuracy with at least one
// strict. Exact duplicates collapse to the branch earliest in canonical
// order; the result is sorted by ascending latency.
std::vector<TradeoffPoint> pareto_frontier(std::vector<TradeoffPoint> points);

}  // namespace abranch
