#pragma once

#include "packcover/types.hpp"

#include <cstdint>

namespace packcover {

/// b(eps) = (1+eps)ln(1+eps) - eps, the exponent in the Chernoff-type
/// deviation bounds. Defined for eps > -1; nonnegative, convex, b(0) = 0.
double deviation_bound(double eps);

/// Iteration schedule ceil(omega^2 ln(m) / (2 eps^2)), lifted to >= 1.
std::uint64_t iterations_generalized_packing(double omega, int m, double eps);

/// ceil((1+eps) omega ln(m) / (lambda_star b(eps))), lifted to >= 1.
std::uint64_t iterations_packing(double omega, int m, double eps,
                                 double lambda_star);

/// ceil(omega ln(m) / (lambda_star b(-eps))), lifted to >= 1.
std::uint64_t iterations_covering(double omega, int m, double eps,
                                  double lambda_star);

/// Exact feasibility predicate for integer packing: m <= exp(b(eps)/omega).
bool integer_packing_feasible(int m, double omega, double eps);

/// Exact feasibility predicate for integer covering: m <= exp(b(-eps)/omega).
bool integer_covering_feasible(int m, double omega, double eps);

/// Simpler sufficient (not necessary) test for integer covering feasibility:
/// eps >= sqrt(2 omega ln m).
bool integer_covering_sufficient(int m, double omega, double eps);

}  // namespace packcover
