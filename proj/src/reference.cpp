#include "packcover/reference.hpp"

#include <bit>
#include <cstdint>
#include <numeric>

namespace packcover {

namespace {

constexpr double kTol = 1e-9;

bool next_combination(std::vector<int>& comb, int limit) {
  int k = int(comb.size());
  for (int i = k - 1; i >= 0; --i) {
    if (comb[i] < limit - (k - i)) {
      ++comb[i];
      for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<int> first_combination(int k) {
  std::vector<int> comb(k);
  std::iota(comb.begin(), comb.end(), 0);
  return comb;
}

// Solve the equalizing system for one side of the game on the given supports.
// Returns false when the system is numerically singular.
bool solve_equalizing(const Matrix& block, Vector& probs, double& value) {
  int k = int(block.rows());
  Matrix system = Matrix::Zero(k + 1, k + 1);
  system.topLeftCorner(k, k) = block;
  system.topRightCorner(k, 1).setConstant(-1.0);
  system.bottomLeftCorner(1, k).setConstant(1.0);
  Vector rhs = Vector::Zero(k + 1);
  rhs[k] = 1.0;
  Eigen::FullPivLU<Matrix> lu(system);
  if (!lu.isInvertible()) return false;
  Vector sol = lu.solve(rhs);
  if ((system * sol - rhs).norm() > 1e-8) return false;
  probs = sol.head(k);
  value = sol[k];
  return true;
}

}  // namespace

GameSolution exact_game_value(const Matrix& payoff) {
  int m = int(payoff.rows());
  int n = int(payoff.cols());
  if (m < 1 || n < 1) throw DomainError("empty game matrix");
  if (m > 10 || n > 10)
    throw DomainError("exact_game_value is limited to 10x10 games");

  for (int k = 1; k <= std::min(m, n); ++k) {
    std::vector<int> rows = first_combination(k);
    do {
      std::vector<int> cols = first_combination(k);
      do {
        Matrix block(k, k);
        for (int a = 0; a < k; ++a)
          for (int b = 0; b < k; ++b) block(a, b) = payoff(rows[a], cols[b]);

        Vector x_support, y_support;
        double vx = 0.0, vy = 0.0;
        if (!solve_equalizing(block, x_support, vx)) continue;
        if (!solve_equalizing(Matrix(block.transpose()), y_support, vy))
          continue;
        if (std::abs(vx - vy) > kTol) continue;
        if (x_support.minCoeff() < -kTol || y_support.minCoeff() < -kTol)
          continue;

        Vector x = Vector::Zero(n);
        for (int b = 0; b < k; ++b) x[cols[b]] = std::max(0.0, x_support[b]);
        x /= x.sum();
        Vector y = Vector::Zero(m);
        for (int a = 0; a < k; ++a) y[rows[a]] = std::max(0.0, y_support[a]);
        y /= y.sum();

        // Certify: maximizer cannot gain against x, minimizer cannot gain
        // against y.
        Vector row_payoffs = payoff * x;
        Vector col_payoffs = payoff.transpose() * y;
        if (row_payoffs.maxCoeff() > vx + kTol) continue;
        if (col_payoffs.minCoeff() < vx - kTol) continue;

        GameSolution sol;
        sol.value = vx;
        sol.strategy = x;
        return sol;
      } while (next_combination(cols, n));
    } while (next_combination(rows, m));
  }
  throw Error(ErrorCode::Generic,
              "no support pair certified; finite games always have one");
}

int brute_force_min_cover(const SetSystem& system) {
  int m = int(system.family.size());
  if (m < 1) throw DomainError("set family is empty");
  if (m > 20) throw DomainError("brute_force_min_cover is limited to 20 sets");
  if (system.universe > 63) throw DomainError("universe too large");

  std::uint64_t full = system.universe == 0
                           ? 0
                           : (std::uint64_t(1) << system.universe) - 1;
  std::vector<std::uint64_t> masks(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j : system.family[i]) {
      if (j < 1 || j > system.universe)
        throw DomainError("element id out of range: " + std::to_string(j));
      masks[i] |= std::uint64_t(1) << (j - 1);
    }

  int best = m + 1;
  for (std::uint64_t pick = 0; pick < (std::uint64_t(1) << m); ++pick) {
    int size = std::popcount(pick);
    if (size >= best) continue;
    std::uint64_t covered = 0;
    for (int i = 0; i < m; ++i)
      if (pick & (std::uint64_t(1) << i)) covered |= masks[i];
    if (covered == full) best = size;
  }
  if (best > m)
    throw InfeasibleError("no cover exists: some element belongs to no set");
  return best;
}

double exact_packing_value(const ExplicitInstance& inst, Sense sense) {
  Matrix images = inst.vertex_images();
  if (sense == Sense::Covering)
    return -exact_game_value(-images).value;
  return exact_game_value(images).value;
}

}  // namespace packcover
