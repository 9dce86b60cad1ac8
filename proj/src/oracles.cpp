#include "packcover/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace packcover {

namespace {

void check_weights(const Vector& w, int m, bool reject_all_zero) {
  if (int(w.size()) != m)
    throw DomainError("weight vector has length " + std::to_string(w.size()) +
                      ", expected " + std::to_string(m));
  if (w.minCoeff() < 0.0) throw DomainError("weights must be nonnegative");
  if (reject_all_zero && w.maxCoeff() <= 0.0)
    throw DomainError("weights must not be all zero");
}

}  // namespace

Matrix ExplicitInstance::vertex_images() const {
  if (offset.size() == 0) return payoff;
  return payoff.colwise() + offset;
}

ProblemInstance ExplicitInstance::problem(Sense sense) const {
  Matrix images = vertex_images();
  if (!images.allFinite()) throw DomainError("instance entries must be finite");
  double lo = images.minCoeff();
  double hi = images.maxCoeff();
  ProblemInstance inst;
  inst.n = cols();
  inst.m = rows();
  inst.sense = sense;
  if (sense == Sense::GeneralizedPacking) {
    inst.lower = lo;
    inst.width = hi > lo ? hi - lo : 1.0;
  } else {
    if (lo < -1e-12)
      throw DomainError("packing/covering require f nonnegative on P");
    inst.lower = 0.0;
    inst.width = hi > 0.0 ? hi : 1.0;
  }
  return inst;
}

SimplexOracle::SimplexOracle(ExplicitInstance inst, Sense sense)
    : inst_(std::move(inst)),
      images_(inst_.vertex_images()),
      minimize_(is_minimizing(sense)) {
  if (inst_.rows() < 1 || inst_.cols() < 1)
    throw DomainError("explicit instance must be nonempty");
}

OracleAnswer SimplexOracle::query(const Vector& weights) const {
  check_weights(weights, inst_.rows(), /*reject_all_zero=*/true);
  Vector objective = images_.transpose() * weights;
  int best = 0;
  for (int i = 1; i < objective.size(); ++i) {
    if (minimize_ ? objective[i] < objective[best]
                  : objective[i] > objective[best])
      best = i;  // lowest index wins ties
  }
  OracleAnswer ans;
  ans.point = Vector::Zero(inst_.cols());
  ans.point[best] = 1.0;
  ans.image = images_.col(best);
  ans.index = best;
  return ans;
}

double FlowInstance::min_capacity() const {
  double c = std::numeric_limits<double>::infinity();
  for (const Arc& a : arcs) c = std::min(c, a.capacity);
  return c;
}

ProblemInstance FlowInstance::problem() const {
  ProblemInstance inst;
  inst.n = arc_count();
  inst.m = arc_count();
  inst.lower = 0.0;
  inst.width = 1.0;
  inst.sense = Sense::Packing;
  return inst;
}

ShortestPathOracle::ShortestPathOracle(FlowInstance inst)
    : inst_(std::move(inst)), min_capacity_(inst_.min_capacity()) {
  if (inst_.arcs.empty()) throw DomainError("flow instance has no arcs");
  for (const auto& a : inst_.arcs) {
    if (!(a.capacity > 0.0))
      throw DomainError("arc capacities must be strictly positive");
    if (a.from < 0 || a.from >= inst_.nodes || a.to < 0 || a.to >= inst_.nodes)
      throw DomainError("arc endpoint out of range");
  }
  // Existence of at least one source-sink path, checked with unit lengths.
  shortest_path(Vector::Zero(inst_.arc_count()));
}

std::vector<int> ShortestPathOracle::shortest_path(const Vector& weights) const {
  check_weights(weights, inst_.arc_count(), /*reject_all_zero=*/false);
  const double tie = 1e-15;
  int n = inst_.nodes;
  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  std::vector<std::vector<int>> path(n);
  dist[inst_.source] = 0.0;
  // Label correction with lexicographic tie-break on arc index sequences.
  for (int pass = 0; pass < 2 * n + 2; ++pass) {
    bool changed = false;
    for (int e = 0; e < inst_.arc_count(); ++e) {
      const auto& a = inst_.arcs[e];
      if (!std::isfinite(dist[a.from])) continue;
      double cand = dist[a.from] + weights[e] / a.capacity;
      std::vector<int> cand_path = path[a.from];
      cand_path.push_back(e);
      bool better = cand < dist[a.to] - tie;
      if (!better && cand <= dist[a.to] + tie)
        better = std::lexicographical_compare(cand_path.begin(), cand_path.end(),
                                              path[a.to].begin(), path[a.to].end());
      if (better) {
        dist[a.to] = cand;
        path[a.to] = std::move(cand_path);
        changed = true;
      }
    }
    if (!changed) break;
  }
  if (!std::isfinite(dist[inst_.sink]))
    throw DomainError("no path from source to sink");
  return path[inst_.sink];
}

OracleAnswer ShortestPathOracle::query(const Vector& weights) const {
  std::vector<int> arcs = shortest_path(weights);
  OracleAnswer ans;
  ans.point = Vector::Zero(inst_.arc_count());
  ans.image = Vector::Zero(inst_.arc_count());
  for (int e : arcs) {
    ans.point[e] = 1.0;
    ans.image[e] = min_capacity_ / inst_.arcs[e].capacity;
  }
  return ans;
}

ProblemInstance SetSystemOracleView::problem() const {
  ProblemInstance inst;
  inst.n = int(family.size());
  inst.m = universe;
  inst.lower = 0.0;
  inst.width = 1.0;
  inst.sense = Sense::Covering;
  return inst;
}

FractionalSetCoverOracle::FractionalSetCoverOracle(SetSystemOracleView view)
    : view_(std::move(view)) {
  if (view_.family.empty()) throw DomainError("set family is empty");
  std::vector<bool> covered(view_.universe + 1, false);
  for (const auto& set : view_.family)
    for (int j : set) {
      if (j < 1 || j > view_.universe)
        throw DomainError("element id out of range: " + std::to_string(j));
      covered[j] = true;
    }
  for (int j = 1; j <= view_.universe; ++j)
    if (!covered[j])
      throw InfeasibleError("element " + std::to_string(j) +
                            " belongs to no set (lambda_star = 0)");
}

OracleAnswer FractionalSetCoverOracle::query(const Vector& weights) const {
  check_weights(weights, view_.universe, /*reject_all_zero=*/false);
  int best = 0;
  double best_weight = -1.0;
  for (int i = 0; i < int(view_.family.size()); ++i) {
    double w = 0.0;
    for (int j : view_.family[i]) w += weights[j - 1];
    if (w > best_weight) {  // lowest index wins ties
      best_weight = w;
      best = i;
    }
  }
  OracleAnswer ans;
  ans.point = Vector::Zero(int(view_.family.size()));
  ans.point[best] = 1.0;
  ans.image = Vector::Zero(view_.universe);
  for (int j : view_.family[best]) ans.image[j - 1] = 1.0;
  ans.index = best;
  return ans;
}

}  // namespace packcover
