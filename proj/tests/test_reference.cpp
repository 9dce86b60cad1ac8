#include "packcover/reference.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace packcover;
using packcover::testing::minimax_by_grid_refinement;
using packcover::testing::random_matrix;

TEST_CASE("trivial 1x1 game") {
  Matrix a(1, 1);
  a << 0.7;
  auto sol = exact_game_value(a);
  CHECK(sol.value == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(sol.strategy[0] == doctest::Approx(1.0));
}

TEST_CASE("matching pennies") {
  Matrix a(2, 2);
  a << 1, 0, 0, 1;
  auto sol = exact_game_value(a);
  CHECK(sol.value == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(sol.strategy[0] == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(sol.strategy[1] == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("symmetric win/tie/loss game has the tie value") {
  Matrix a(3, 3);
  a << 0.5, 1.0, 0.0,
       0.0, 0.5, 1.0,
       1.0, 0.0, 0.5;
  CHECK(exact_game_value(a).value == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("value is invariant under appending a dominated column") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix a = random_matrix(rng, 4, 3);
    double base = exact_game_value(a).value;
    Matrix wider(4, 4);
    wider.leftCols(3) = a;
    wider.col(3) = a.col(1).array() + 0.25;  // dominated: never helps the minimizer
    CHECK(exact_game_value(wider).value == doctest::Approx(base).epsilon(1e-9));
  }
}

TEST_CASE("minimax duality on random small matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    Matrix a = random_matrix(rng, 3, 4, -1.0, 1.0);
    double primal = exact_game_value(a).value;
    // The transposed game with flipped sign swaps the players' roles.
    double dual = exact_game_value(Matrix(-a.transpose())).value;
    CHECK(primal == doctest::Approx(-dual).epsilon(1e-9));
  }
}

TEST_CASE("agrees with grid refinement on random 4x4 instances") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix a = random_matrix(rng, 4, 4);
    double enumerated = exact_game_value(a).value;
    double refined = minimax_by_grid_refinement(a);
    CHECK(enumerated == doctest::Approx(refined).epsilon(1e-6));
  }
}

TEST_CASE("strategy certifies the value") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix a = random_matrix(rng, 5, 5);
    auto sol = exact_game_value(a);
    CHECK(sol.strategy.minCoeff() >= -1e-12);
    CHECK(sol.strategy.sum() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK((a * sol.strategy).maxCoeff() <= sol.value + 1e-9);
  }
}

TEST_CASE("exact packing value on explicit instances") {
  ExplicitInstance ident;
  ident.payoff = Matrix::Identity(3, 3);
  CHECK(exact_packing_value(ident, Sense::Packing) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-9));
  CHECK(exact_packing_value(ident, Sense::Covering) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-9));

  ExplicitInstance column;
  column.payoff = Matrix(2, 1);
  column.payoff << 0.3, 0.8;
  CHECK(exact_packing_value(column, Sense::Packing) ==
        doctest::Approx(0.8).epsilon(1e-12));
  CHECK(exact_packing_value(column, Sense::Covering) ==
        doctest::Approx(0.3).epsilon(1e-12));

  ExplicitInstance shifted;
  shifted.payoff = Matrix::Identity(2, 2);
  shifted.offset = Vector::Constant(2, 0.25);
  CHECK(exact_packing_value(shifted, Sense::Packing) ==
        doctest::Approx(0.75).epsilon(1e-9));
}

TEST_CASE("brute force min cover") {
  SetSystem single{4, {{1, 2, 3, 4}}};
  CHECK(brute_force_min_cover(single) == 1);

  SetSystem triangle{3, {{1, 2}, {2, 3}, {1, 3}}};
  CHECK(brute_force_min_cover(triangle) == 2);

  SetSystem uncoverable{3, {{1, 2}}};
  CHECK_THROWS_AS(brute_force_min_cover(uncoverable), InfeasibleError);
}
