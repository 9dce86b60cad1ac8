#pragma once

// Test-only utilities: seeded instance generators and an independent
// minimax evaluator used to cross-check the support-enumeration reference.

#include "packcover/oracles.hpp"
#include "packcover/setcover.hpp"
#include "packcover/types.hpp"

#include <random>

namespace packcover::testing {

inline Matrix random_matrix(std::mt19937_64& rng, int m, int n, double lo = 0.0,
                            double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  Matrix a(m, n);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < n; ++c) a(r, c) = dist(rng);
  return a;
}

inline SetSystem random_set_system(std::mt19937_64& rng, int universe,
                                   int sets) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  SetSystem sys;
  sys.universe = universe;
  sys.family.resize(sets);
  for (auto& set : sys.family)
    for (int j = 1; j <= universe; ++j)
      if (coin(rng) < 0.35) set.push_back(j);
  // Guarantee coverage: toss each uncovered element into a random set.
  std::vector<bool> covered(universe + 1, false);
  for (auto& set : sys.family)
    for (int j : set) covered[j] = true;
  std::uniform_int_distribution<int> pick(0, sets - 1);
  for (int j = 1; j <= universe; ++j)
    if (!covered[j]) sys.family[pick(rng)].push_back(j);
  return sys;
}

/// max_j (A x)_j.
inline double max_payoff(const Matrix& a, const Vector& x) {
  return (a * x).maxCoeff();
}

/// Numerically stable tau * log(sum_j exp((A x)_j / tau)); an upper bound on
/// max_j (A x)_j that overshoots by at most tau * log(rows).
inline double softmax_payoff(const Matrix& a, const Vector& x, double tau) {
  Vector p = a * x;
  double top = p.maxCoeff();
  double acc = 0.0;
  for (int j = 0; j < p.size(); ++j) acc += std::exp((p[j] - top) / tau);
  return top + tau * std::log(acc);
}

/// Independent evaluation of min_{x in simplex} max_j (A x)_j. The maximum is
/// smoothed into a softmax, pairwise mass-transfer descent with a halving step
/// minimizes the smooth surrogate (for smooth convex objectives on the
/// simplex, no improving pairwise transfer means global optimality), and the
/// smoothing temperature is annealed until its bias is negligible.
inline double minimax_by_grid_refinement(const Matrix& a,
                                         double final_step = 1e-9) {
  int n = int(a.cols());
  Vector x = Vector::Constant(n, 1.0 / n);
  for (double tau = 0.25; tau >= 1e-8; tau /= 4.0) {
    double val = softmax_payoff(a, x, tau);
    for (double h = 0.5; h >= final_step; h /= 2.0) {
      bool improved = true;
      while (improved) {
        improved = false;
        for (int from = 0; from < n; ++from) {
          for (int to = 0; to < n; ++to) {
            if (to == from || x[from] <= 0.0) continue;
            double step = std::min(h, x[from]);
            Vector cand = x;
            cand[from] -= step;
            cand[to] += step;
            double cand_val = softmax_payoff(a, cand, tau);
            if (cand_val < val - 1e-15) {
              x = cand;
              val = cand_val;
              improved = true;
            }
          }
        }
      }
    }
  }
  return max_payoff(a, x);
}

}  // namespace packcover::testing
