#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace packcover {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

enum class Sense { GeneralizedPacking, Packing, Covering };

inline bool is_minimizing(Sense s) { return s != Sense::Covering; }

// ---- errors, with stable codes for the CLI ----

enum class ErrorCode : int {
  Generic = 1,
  Parse = 2,
  Domain = 3,
  WidthViolation = 4,
  NoConvergence = 5,
  Infeasible = 6,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorCode::Domain, what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error(ErrorCode::Parse, what + " (line " + std::to_string(line) + ")"),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class WidthViolationError : public Error {
 public:
  WidthViolationError(int coordinate, double value, double lo, double hi)
      : Error(ErrorCode::WidthViolation,
              "oracle image coordinate " + std::to_string(coordinate) +
                  " = " + std::to_string(value) + " outside [" +
                  std::to_string(lo) + ", " + std::to_string(hi) + "]"),
        coordinate_(coordinate) {}
  int coordinate() const { return coordinate_; }

 private:
  int coordinate_;
};

class InfeasibleError : public Error {
 public:
  explicit InfeasibleError(const std::string& what)
      : Error(ErrorCode::Infeasible, what) {}
};

// ---- core data model ----

/// One oracle answer: a point of P and its image under f.
/// `index` identifies the vertex when the oracle picks from a finite set
/// (simplex vertex, set id, ...); -1 when not meaningful.
struct OracleAnswer {
  Vector point;
  Vector image;
  int index = -1;
};

/// Optimization oracle over P: given nonnegative constraint weights y,
/// return the point of P optimizing sum_j y_j f_j(x) in the declared sense.
class Oracle {
 public:
  virtual ~Oracle() = default;
  virtual OracleAnswer query(const Vector& weights) const = 0;
};

struct ProblemInstance {
  int n = 0;  // ambient dimension of P
  int m = 0;  // number of constraints / payoffs
  double lower = 0.0;  // L, lower bound on f over P
  double width = 1.0;  // omega > 0
  Sense sense = Sense::GeneralizedPacking;
};

/// Dual weight vector kept renormalized (max = 1); the absorbed scale is
/// tracked additively in log space. Only ratios ever matter.
struct DualWeights {
  Vector weights;
  double log_scale = 0.0;

  static DualWeights uniform(int m) {
    DualWeights y;
    y.weights = Vector::Ones(m);
    return y;
  }

  void renormalize() {
    double peak = weights.maxCoeff();
    weights /= peak;
    log_scale += std::log(peak);
  }
};

struct IterationRecord {
  int chosen = -1;             // oracle answer's vertex index
  double dual_value = 0.0;     // v(x,y) with the pre-update weights
  double oracle_objective = 0.0;  // raw sum_j y_j f_j(x)
  Vector cumulative_image;     // running average of images after this step
  Vector weights_at_query;     // normalized weights the oracle saw
};

struct SolveResult {
  Vector x_bar;          // uniform average of chosen points
  Vector image;          // F = f(x_bar), average of support images
  double lambda_bar = 0.0;   // max_j F_j (packing senses), min_j (covering)
  double best_dual = 0.0;    // V
  double average_dual = 0.0; // v_bar
  std::size_t iterations = 0;
  std::vector<OracleAnswer> support;   // one entry per iteration, uniform weights
  std::vector<IterationRecord> log;
};

/// Result of the integer packing/covering variants: a multiset of extreme
/// points and the per-constraint sums over it.
struct IntegerSolveResult {
  std::vector<OracleAnswer> support;
  Vector constraint_sums;
  std::size_t iterations = 0;
};

class NoConvergenceError : public Error {
 public:
  NoConvergenceError(const std::string& what, SolveResult partial)
      : Error(ErrorCode::NoConvergence, what), partial_(std::move(partial)) {}
  const SolveResult& partial() const { return partial_; }

 private:
  SolveResult partial_;
};

struct ApproxParams {
  double delta1 = 0.0;  // relative error
  double delta2 = 0.0;  // absolute error
};

struct SolveOptions {
  double cap_multiplier = 10.0;       // times the iteration bound at current V
  std::uint64_t absolute_cap = 2'000'000;
  bool record_weights = true;
};

}  // namespace packcover
