#include "abranch/pareto.hpp"

#include <algorithm>

namespace abranch {

std::vector<TradeoffPoint> pareto_frontier(std::vector<TradeoffPoint> points) {
  if (points.empty()) return points;

  // Sort by latency ascending; among equal latencies keep the best accuracy in
  // front, and among exact duplicates the canonically-first branch.
  std::sort(points.begin(), points.end(), [](const TradeoffPoint& a, const TradeoffPoint& b) {
    if (a.latency_ms != b.latency_ms) return a.latency_ms < b.latency_ms;
    if (a.accuracy != b.accuracy) return a.accuracy > b.accuracy;
    return canonical_less(a.branch, b.branch);
  });

  std::vector<TradeoffPoint> frontier;
  double best_accuracy = -1.0;
  for (const auto& p : points) {
    if (!frontier.empty() && p.latency_ms == frontier.back().latency_ms &&
        p.accuracy == frontier.back().accuracy) {
      continue;  // exact duplicate, keep the first representative
    }
    if (p.accuracy > best_accuracy) {
      frontier.push_back(p);
      best_accuracy = p.accuracy;
    }
  }
  return frontier;
}

}  // namespace abranch
