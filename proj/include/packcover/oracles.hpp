#pragma once

#include "packcover/types.hpp"

#include <vector>

namespace packcover {

/// Explicit instance over the probability simplex: f(x) = A x + b, so the
/// vertex images are the columns of A shifted by b.
struct ExplicitInstance {
  Matrix payoff;   // m x n
  Vector offset;   // m, may be empty (treated as zero)

  int rows() const { return int(payoff.rows()); }
  int cols() const { return int(payoff.cols()); }

  /// m x n matrix whose column i is f(e_i).
  Matrix vertex_images() const;

  /// Derive L and omega from the vertex images. Packing/covering use the
  /// nonnegative normalization (values in [0, omega], L = 0); generalized packing
  /// uses L = min entry, omega = max - min. Callers may override afterwards.
  ProblemInstance problem(Sense sense) const;
};

class SimplexOracle : public Oracle {
 public:
  SimplexOracle(ExplicitInstance inst, Sense sense);
  OracleAnswer query(const Vector& weights) const override;
  const ExplicitInstance& instance() const { return inst_; }

 private:
  ExplicitInstance inst_;
  Matrix images_;  // cached vertex images
  bool minimize_;
};

/// Directed graph with positive arc capacities and a source-sink pair.
struct FlowInstance {
  struct Arc {
    int from;
    int to;
    double capacity;
  };
  int nodes = 0;
  std::vector<Arc> arcs;
  int source = 0;
  int sink = 0;

  int arc_count() const { return int(arcs.size()); }
  double min_capacity() const;

  /// Packing instance over paths: m = n = number of arcs, f in [0,1], omega=1.
  ProblemInstance problem() const;
};

/// Shortest source-sink path under arc lengths y_e / c(e). The point is the
/// arc-indicator of the path; image coordinate of arc e is
/// [e in path] * c_min / c(e), so f lies in [0,1]^m. Path ties are broken by
/// lexicographic comparison of arc index sequences.
class ShortestPathOracle : public Oracle {
 public:
  explicit ShortestPathOracle(FlowInstance inst);
  OracleAnswer query(const Vector& weights) const override;
  const FlowInstance& instance() const { return inst_; }

  /// Arc index sequence of the chosen path for the given weights.
  std::vector<int> shortest_path(const Vector& weights) const;

 private:
  FlowInstance inst_;
  double min_capacity_;
};

/// Fractional set cover as a covering problem: P is the simplex over sets,
/// constraint j is element j, f_j(x) = sum of x_i over sets containing j.
struct SetSystemOracleView {
  int universe = 0;                          // elements 1..universe
  std::vector<std::vector<int>> family;      // 1-based element ids

  ProblemInstance problem() const;  // covering, L=0, omega=1
};

class FractionalSetCoverOracle : public Oracle {
 public:
  explicit FractionalSetCoverOracle(SetSystemOracleView view);
  OracleAnswer query(const Vector& weights) const override;
  const SetSystemOracleView& view() const { return view_; }

 private:
  SetSystemOracleView view_;
};

}  // namespace packcover
