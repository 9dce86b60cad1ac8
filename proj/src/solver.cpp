#include "packcover/solver.hpp"

#include "packcover/bounds.hpp"

#include <cmath>
#include <limits>
#include <random>

namespace packcover {

namespace {

constexpr double kWidthSlack = 1e-12;

// The packing/covering updates assume the normalization f in [0, omega];
// only generalized packing shifts by L.
double update_lower(const ProblemInstance& inst) {
  return inst.sense == Sense::GeneralizedPacking ? inst.lower : 0.0;
}

void validate_image(const Vector& fx, double lower, double omega) {
  for (int j = 0; j < fx.size(); ++j) {
    if (!(fx[j] >= lower - kWidthSlack && fx[j] <= lower + omega + kWidthSlack))
      throw WidthViolationError(j, fx[j], lower, lower + omega);
  }
}

struct Accumulator {
  Vector point_sum;
  Vector image_sum;
  double dual_sum = 0.0;
  std::vector<OracleAnswer> support;
  std::vector<IterationRecord> log;

  Accumulator(int n, int m) : point_sum(Vector::Zero(n)), image_sum(Vector::Zero(m)) {}

  void add(const OracleAnswer& ans, const DualWeights& y, double v, double obj,
           bool record_weights) {
    point_sum += ans.point;
    image_sum += ans.image;
    dual_sum += v;
    support.push_back(ans);
    IterationRecord rec;
    rec.chosen = ans.index;
    rec.dual_value = v;
    rec.oracle_objective = obj;
    rec.cumulative_image = image_sum / double(support.size());
    if (record_weights) rec.weights_at_query = y.weights;
    log.push_back(std::move(rec));
  }

  SolveResult finish(Sense sense, double best_dual) {
    SolveResult res;
    double s = double(support.size());
    res.x_bar = point_sum / s;
    res.image = image_sum / s;
    res.lambda_bar = sense == Sense::Covering ? res.image.minCoeff()
                                              : res.image.maxCoeff();
    res.best_dual = best_dual;
    res.average_dual = dual_sum / s;
    res.iterations = support.size();
    res.support = std::move(support);
    res.log = std::move(log);
    return res;
  }
};

SolveResult run_fixed_length(const ProblemInstance& inst, const Oracle& oracle,
                             double factor_eps, std::uint64_t s,
                             const SolveOptions& opts) {
  double lo = update_lower(inst);
  DualWeights y = DualWeights::uniform(inst.m);
  Accumulator acc(inst.n, inst.m);
  bool covering = inst.sense == Sense::Covering;
  double best = covering ? std::numeric_limits<double>::infinity() : 0.0;
  for (std::uint64_t l = 0; l < s; ++l) {
    OracleAnswer ans = oracle.query(y.weights);
    validate_image(ans.image, lo, inst.width);
    double obj = y.weights.dot(ans.image);
    double v = obj / y.weights.sum();
    best = covering ? std::min(best, v) : std::max(best, v);
    acc.add(ans, y, v, obj, opts.record_weights);
    y = update_weights(y, ans.image, factor_eps, lo, inst.width, inst.sense);
  }
  return acc.finish(inst.sense, best);
}

SolveResult run_until_converged(const ProblemInstance& inst,
                                const Oracle& oracle, double eps,
                                const SolveOptions& opts) {
  double lo = update_lower(inst);
  bool covering = inst.sense == Sense::Covering;
  DualWeights y = DualWeights::uniform(inst.m);
  Accumulator acc(inst.n, inst.m);
  double V = covering ? std::numeric_limits<double>::infinity() : 0.0;
  std::uint64_t iter = 0;
  while (true) {
    ++iter;
    OracleAnswer ans = oracle.query(y.weights);
    validate_image(ans.image, lo, inst.width);
    double obj = y.weights.dot(ans.image);
    double v = obj / y.weights.sum();
    V = covering ? std::min(V, v) : std::max(V, v);
    acc.add(ans, y, v, obj, opts.record_weights);
    y = update_weights(y, ans.image, eps, lo, inst.width, inst.sense);

    const Vector& F = acc.log.back().cumulative_image;
    double lambda_bar = covering ? F.minCoeff() : F.maxCoeff();
    if (covering ? lambda_bar >= (1.0 - eps) * V
                 : lambda_bar <= (1.0 + eps) * V)
      break;

    // Cap at cap_multiplier times the iteration bound with the best dual so
    // far substituted for lambda_star; refreshed as V improves.
    bool over_cap = iter >= opts.absolute_cap;
    if (!over_cap && covering && std::isfinite(V) && V > 0.0)
      over_cap = iter > opts.cap_multiplier *
                            double(iterations_covering(inst.width, inst.m, eps, V));
    if (!over_cap && !covering && V > 0.0)
      over_cap = iter > opts.cap_multiplier *
                            double(iterations_packing(inst.width, inst.m, eps, V));
    if (over_cap) {
      SolveResult partial = acc.finish(inst.sense, V);
      throw NoConvergenceError(
          "no convergence after " + std::to_string(iter) +
              " iterations (lambda_star may be zero); best dual " +
              std::to_string(V),
          std::move(partial));
    }
  }
  return acc.finish(inst.sense, V);
}

void check_fractional_eps(double eps, Sense sense) {
  if (!(eps > 0.0)) throw DomainError("eps must be positive");
  if (sense != Sense::GeneralizedPacking && !(eps < 1.0))
    throw DomainError("eps must lie in (0,1) for packing/covering");
}

}  // namespace

DualWeights update_weights(const DualWeights& y, const Vector& fx,
                           double factor_eps, double lower, double omega,
                           Sense sense) {
  if (!(factor_eps > 0.0)) throw DomainError("update factor must be positive");
  if (sense == Sense::Covering && !(factor_eps < 1.0))
    throw DomainError("covering update factor must be < 1");
  validate_image(fx, lower, omega);
  double sign = sense == Sense::Covering ? -1.0 : 1.0;
  DualWeights out = y;
  for (int j = 0; j < fx.size(); ++j) {
    double g = (fx[j] - lower) / omega;  // in [0,1] after validation
    out.weights[j] *= 1.0 + sign * factor_eps * g;
  }
  out.renormalize();
  return out;
}

double dual_value(const DualWeights& y, const Vector& fx) {
  return y.weights.dot(fx) / y.weights.sum();
}

SolveResult solve_generalized_packing(const ProblemInstance& inst,
                                      const Oracle& oracle, double eps,
                                      const SolveOptions& opts) {
  if (!(eps > 0.0)) throw DomainError("eps must be positive");
  std::uint64_t s = iterations_generalized_packing(inst.width, inst.m, eps);
  double alpha = std::exp(4.0 * eps / inst.width) - 1.0;
  ProblemInstance gi = inst;
  gi.sense = Sense::GeneralizedPacking;
  return run_fixed_length(gi, oracle, alpha, s, opts);
}

SolveResult solve_packing_given_s(const ProblemInstance& inst,
                                  const Oracle& oracle, double eps,
                                  std::uint64_t s, const SolveOptions& opts) {
  check_fractional_eps(eps, Sense::Packing);
  if (s < 1) throw DomainError("s must be >= 1");
  ProblemInstance pi = inst;
  pi.sense = Sense::Packing;
  return run_fixed_length(pi, oracle, eps, s, opts);
}

SolveResult solve_covering_given_s(const ProblemInstance& inst,
                                   const Oracle& oracle, double eps,
                                   std::uint64_t s, const SolveOptions& opts) {
  check_fractional_eps(eps, Sense::Covering);
  if (s < 1) throw DomainError("s must be >= 1");
  ProblemInstance ci = inst;
  ci.sense = Sense::Covering;
  return run_fixed_length(ci, oracle, eps, s, opts);
}

SolveResult solve_packing(const ProblemInstance& inst, const Oracle& oracle,
                          double eps, const SolveOptions& opts) {
  check_fractional_eps(eps, Sense::Packing);
  ProblemInstance pi = inst;
  pi.sense = Sense::Packing;
  return run_until_converged(pi, oracle, eps, opts);
}

SolveResult solve_covering(const ProblemInstance& inst, const Oracle& oracle,
                           double eps, const SolveOptions& opts) {
  check_fractional_eps(eps, Sense::Covering);
  ProblemInstance ci = inst;
  ci.sense = Sense::Covering;
  return run_until_converged(ci, oracle, eps, opts);
}

IntegerSolveResult solve_integer_packing(const ProblemInstance& inst,
                                         const Oracle& oracle, double eps,
                                         const SolveOptions& opts) {
  if (!(eps > 0.0)) throw DomainError("eps must be positive");
  if (!integer_packing_feasible(inst.m, inst.width, eps))
    throw InfeasibleError(
        "integer packing infeasible: m > exp(b(eps)/omega) for m = " +
        std::to_string(inst.m));
  DualWeights y = DualWeights::uniform(inst.m);
  IntegerSolveResult res;
  res.constraint_sums = Vector::Zero(inst.m);
  for (std::uint64_t iter = 0; iter < opts.absolute_cap; ++iter) {
    ++res.iterations;
    OracleAnswer ans = oracle.query(y.weights);
    validate_image(ans.image, 0.0, inst.width);
    Vector next = res.constraint_sums + ans.image;
    if (next.maxCoeff() > 1.0 + eps) return res;  // stop just before overflow
    res.constraint_sums = next;
    res.support.push_back(ans);
    y = update_weights(y, ans.image, eps, 0.0, inst.width, Sense::Packing);
  }
  throw Error(ErrorCode::NoConvergence,
              "integer packing did not terminate within the iteration cap");
}

IntegerSolveResult solve_integer_covering(const ProblemInstance& inst,
                                          const Oracle& oracle, double eps,
                                          const SolveOptions& opts) {
  check_fractional_eps(eps, Sense::Covering);
  if (!integer_covering_feasible(inst.m, inst.width, eps))
    throw InfeasibleError(
        "integer covering infeasible: m > exp(b(-eps)/omega) for m = " +
        std::to_string(inst.m));
  DualWeights y = DualWeights::uniform(inst.m);
  IntegerSolveResult res;
  res.constraint_sums = Vector::Zero(inst.m);
  for (std::uint64_t iter = 0; iter < opts.absolute_cap; ++iter) {
    ++res.iterations;
    OracleAnswer ans = oracle.query(y.weights);
    validate_image(ans.image, 0.0, inst.width);
    res.constraint_sums += ans.image;
    res.support.push_back(ans);
    y = update_weights(y, ans.image, eps, 0.0, inst.width, Sense::Covering);
    if (res.constraint_sums.minCoeff() >= 1.0 - eps) return res;
  }
  throw Error(ErrorCode::NoConvergence,
              "integer covering did not terminate within the iteration cap "
              "(some constraint may be uncoverable)");
}

namespace {

class ApproximateOracle : public Oracle {
 public:
  ApproximateOracle(const Oracle& exact, Sense sense, ApproxParams params,
                    std::uint64_t seed)
      : exact_(exact), sense_(sense), params_(params), rng_(seed) {}

  OracleAnswer query(const Vector& weights) const override {
    OracleAnswer best = exact_.query(weights);
    if (params_.delta1 == 0.0 && params_.delta2 == 0.0) return best;

    double total = weights.sum();
    double v_best = weights.dot(best.image) / total;

    // Query again under multiplicatively jittered weights; blend toward that
    // answer as far as the (delta1, delta2) budget allows. The blend stays in P
    // and f is linear, so the blended image is the image of the blended point.
    Vector jittered = weights;
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int j = 0; j < jittered.size(); ++j)
      jittered[j] *= std::exp(0.5 * unit(rng_));
    OracleAnswer alt = exact_.query(jittered);
    double v_alt = weights.dot(alt.image) / total;

    bool minimize = is_minimizing(sense_);
    double allowed = minimize
                         ? (1.0 + params_.delta1) * v_best + params_.delta2
                         : (1.0 - params_.delta1) * v_best - params_.delta2;
    double t = 1.0;
    if (minimize ? v_alt > allowed : v_alt < allowed) {
      // v((1-t)x* + t x_alt, y) is linear in t; solve for the budget edge and
      // back off slightly to stay strictly inside.
      t = 0.999 * (allowed - v_best) / (v_alt - v_best);
      t = std::clamp(t, 0.0, 1.0);
    }
    if (t <= 0.0) return best;
    OracleAnswer blended;
    blended.point = (1.0 - t) * best.point + t * alt.point;
    blended.image = (1.0 - t) * best.image + t * alt.image;
    blended.index = t >= 1.0 ? alt.index : -1;
    return blended;
  }

 private:
  const Oracle& exact_;
  Sense sense_;
  ApproxParams params_;
  mutable std::mt19937_64 rng_;
};

}  // namespace

std::unique_ptr<Oracle> wrap_approximate_oracle(const Oracle& exact,
                                                Sense sense,
                                                const ApproxParams& params,
                                                std::uint64_t seed) {
  if (params.delta1 < 0.0 || params.delta2 < 0.0)
    throw DomainError("approximation parameters must be nonnegative");
  return std::make_unique<ApproximateOracle>(exact, sense, params, seed);
}

}  // namespace packcover
