#include "packcover/bounds.hpp"

#include <cmath>

namespace packcover {

namespace {

// Ceiling with a relative guard so values analytically equal to an integer
// do not jump up from floating-point noise.
std::uint64_t guarded_ceil(double x) {
  double guarded = x - 1e-9 * std::max(1.0, std::abs(x));
  double up = std::ceil(guarded);
  if (up < 1.0) return 1;
  return static_cast<std::uint64_t>(up);
}

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

double deviation_bound(double eps) {
  require(eps > -1.0, "deviation_bound requires eps > -1");
  if (eps == 0.0) return 0.0;
  return (1.0 + eps) * std::log1p(eps) - eps;
}

std::uint64_t iterations_generalized_packing(double omega, int m, double eps) {
  require(omega > 0.0, "omega must be positive");
  require(m >= 1, "m must be >= 1");
  require(eps > 0.0, "eps must be positive");
  return guarded_ceil(omega * omega * std::log(double(m)) / (2.0 * eps * eps));
}

std::uint64_t iterations_packing(double omega, int m, double eps,
                                 double lambda_star) {
  require(omega > 0.0, "omega must be positive");
  require(m >= 1, "m must be >= 1");
  require(eps > 0.0, "eps must be positive");
  require(lambda_star > 0.0, "lambda_star must be positive");
  return guarded_ceil((1.0 + eps) * omega * std::log(double(m)) /
                      (lambda_star * deviation_bound(eps)));
}

std::uint64_t iterations_covering(double omega, int m, double eps,
                                  double lambda_star) {
  require(omega > 0.0, "omega must be positive");
  require(m >= 1, "m must be >= 1");
  require(eps > 0.0 && eps < 1.0, "eps must lie in (0,1) for covering");
  require(lambda_star > 0.0, "lambda_star must be positive");
  return guarded_ceil(omega * std::log(double(m)) /
                      (lambda_star * deviation_bound(-eps)));
}

bool integer_packing_feasible(int m, double omega, double eps) {
  require(omega > 0.0, "omega must be positive");
  require(m >= 1, "m must be >= 1");
  require(eps > 0.0, "eps must be positive");
  return std::log(double(m)) <= deviation_bound(eps) / omega;
}

bool integer_covering_feasible(int m, double omega, double eps) {
  require(omega > 0.0, "omega must be positive");
  require(m >= 1, "m must be >= 1");
  require(eps > 0.0 && eps < 1.0, "eps must lie in (0,1) for covering");
  return std::log(double(m)) <= deviation_bound(-eps) / omega;
}

bool integer_covering_sufficient(int m, double omega, double eps) {
  require(omega > 0.0, "omega must be positive");
  require(m >= 1, "m must be >= 1");
  require(eps > 0.0, "eps must be positive");
  return eps >= std::sqrt(2.0 * omega * std::log(double(m)));
}

}  // namespace packcover
