#pragma once

#include <utility>
#include <vector>

namespace packcover {

struct SetSystem {
  int universe = 0;                      // elements 1..universe
  std::vector<std::vector<int>> family;  // 1-based element ids
};

/// Chosen set indices (0-based into the family), in pick order.
using Cover = std::vector<int>;

/// One record per greedy iteration: r uncovered elements before the step,
/// d = the largest count of still-uncovered elements in any single set.
/// Assigning each uncovered element a weight 1/d is a feasible fractional
/// dual of value v = r/d.
struct DualRecord {
  long long uncovered;  // r
  long long best_gain;  // d
  double value() const { return double(uncovered) / double(best_gain); }
};

using DualCertificate = std::vector<DualRecord>;

/// Greedy cover: each step picks the set covering the most still-uncovered
/// elements (lowest index on ties). The cover has size at most
/// ceil(|C*| ln n). Throws if some element belongs to no set.
std::pair<Cover, DualCertificate> greedy_set_cover(const SetSystem& system);

/// Harmonic mean of the dual values over the first k-1 iterations; exceeds
/// (k-1)/ln n for a completed run of k iterations. Returns +infinity for
/// k = 1 (the empty mean).
double setcover_dual_bound(const DualCertificate& cert, int cover_size,
                           int universe);

}  // namespace packcover
