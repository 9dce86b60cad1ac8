#pragma once

#include "packcover/types.hpp"

#include <cstdint>
#include <memory>

namespace packcover {

/// Multiply each weight by 1 +/- factor_eps * (fx_j - L)/omega (sign from the
/// sense: minus for covering), then renormalize so max = 1 with the scale
/// absorbed into log_scale. Rejects image coordinates outside [L, L+omega]
/// beyond 1e-12 slack.
DualWeights update_weights(const DualWeights& y, const Vector& fx,
                           double factor_eps, double lower, double omega,
                           Sense sense);

/// v(x,y) = sum_j y_j fx_j / sum_j y_j; invariant under positive rescaling.
double dual_value(const DualWeights& y, const Vector& fx);

SolveResult solve_generalized_packing(const ProblemInstance& inst,
                                      const Oracle& oracle, double eps,
                                      const SolveOptions& opts = {});

SolveResult solve_packing_given_s(const ProblemInstance& inst,
                                  const Oracle& oracle, double eps,
                                  std::uint64_t s,
                                  const SolveOptions& opts = {});

SolveResult solve_covering_given_s(const ProblemInstance& inst,
                                   const Oracle& oracle, double eps,
                                   std::uint64_t s,
                                   const SolveOptions& opts = {});

/// Packing with convergence detection: run until lambda_bar <= (1+eps) V,
/// where V is the best dual value seen so far.
SolveResult solve_packing(const ProblemInstance& inst, const Oracle& oracle,
                          double eps, const SolveOptions& opts = {});

/// Covering mirror: run until lambda_bar >= (1-eps) V.
SolveResult solve_covering(const ProblemInstance& inst, const Oracle& oracle,
                           double eps, const SolveOptions& opts = {});

/// Integer packing: grow a multiset of extreme points, stopping just before
/// some constraint sum would exceed 1+eps. Requires
/// integer_packing_feasible(m, omega, eps).
IntegerSolveResult solve_integer_packing(const ProblemInstance& inst,
                                         const Oracle& oracle, double eps,
                                         const SolveOptions& opts = {});

/// Integer covering: grow until every constraint sum reaches 1-eps. Requires
/// integer_covering_feasible(m, omega, eps).
IntegerSolveResult solve_integer_covering(const ProblemInstance& inst,
                                          const Oracle& oracle, double eps,
                                          const SolveOptions& opts = {});

/// Wrap an exact oracle into a (delta1, delta2)-approximate one: answers
/// deviate deterministically (seeded) from the exact optimum while keeping
/// v(x,y) within relative delta1 and absolute delta2 of it.
std::unique_ptr<Oracle> wrap_approximate_oracle(const Oracle& exact,
                                                Sense sense,
                                                const ApproxParams& params,
                                                std::uint64_t seed);

}  // namespace packcover
