#include "packcover/setcover.hpp"

#include "packcover/types.hpp"

#include <limits>

namespace packcover {

std::pair<Cover, DualCertificate> greedy_set_cover(const SetSystem& system) {
  if (system.family.empty()) throw DomainError("set family is empty");
  std::vector<bool> covered(system.universe + 1, false);
  for (const auto& set : system.family)
    for (int j : set) {
      if (j < 1 || j > system.universe)
        throw DomainError("element id out of range: " + std::to_string(j));
    }
  // Reject uncoverable elements up front, naming the first one.
  {
    std::vector<bool> reachable(system.universe + 1, false);
    for (const auto& set : system.family)
      for (int j : set) reachable[j] = true;
    for (int j = 1; j <= system.universe; ++j)
      if (!reachable[j])
        throw InfeasibleError("element " + std::to_string(j) +
                              " belongs to no set; no cover exists");
  }

  Cover cover;
  DualCertificate cert;
  long long uncovered = system.universe;
  while (uncovered > 0) {
    int best = -1;
    long long best_gain = 0;
    for (int i = 0; i < int(system.family.size()); ++i) {
      long long gain = 0;
      for (int j : system.family[i])
        if (!covered[j]) ++gain;
      if (gain > best_gain) {  // lowest index wins ties
        best_gain = gain;
        best = i;
      }
    }
    // Union covers the universe, so some set always gains while elements remain.
    cert.push_back(DualRecord{uncovered, best_gain});
    cover.push_back(best);
    for (int j : system.family[best])
      if (!covered[j]) {
        covered[j] = true;
        --uncovered;
      }
  }
  return {cover, cert};
}

double setcover_dual_bound(const DualCertificate& cert, int cover_size,
                           int universe) {
  if (cert.empty()) throw DomainError("empty dual certificate");
  if (cover_size < 1 || cover_size > int(cert.size()))
    throw DomainError("cover size inconsistent with certificate length");
  if (cover_size == 1) return std::numeric_limits<double>::infinity();
  double recip_sum = 0.0;
  for (int l = 0; l < cover_size - 1; ++l)
    recip_sum += double(cert[l].best_gain) / double(cert[l].uncovered);
  return double(cover_size - 1) / recip_sum;
}

}  // namespace packcover
