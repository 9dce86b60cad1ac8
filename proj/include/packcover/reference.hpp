#pragma once

#include "packcover/oracles.hpp"
#include "packcover/setcover.hpp"
#include "packcover/types.hpp"

namespace packcover {

struct GameSolution {
  double value = 0.0;
  Vector strategy;  // minimizing player's mixed strategy over columns
};

/// Exact minimax value of min_{x in simplex_n} max_j (A x)_j by support
/// enumeration: for every equal-size support pair, solve the square
/// equalizing systems exactly and certify both players' incentive
/// constraints within 1e-9. Intended for m, n <= 10.
GameSolution exact_game_value(const Matrix& payoff);

/// Exact minimum cover cardinality by subset enumeration in increasing size.
/// Intended for families of at most ~20 sets.
int brute_force_min_cover(const SetSystem& system);

/// Exact lambda_star for an explicit instance over the simplex:
/// min max (generalized packing / packing) or max min (covering).
double exact_packing_value(const ExplicitInstance& inst, Sense sense);

}  // namespace packcover
