#include "doctest.h"
#include "oracles.hpp"

#include "qwalk/evolve.hpp"

#include <cmath>

using namespace qwalk;

namespace {

Eigen::VectorXcd flatten(const WalkState& s) {
  // Column-major 4 x N^2 field: index 4 * site + c, same as the oracle.
  return Eigen::Map<const Eigen::VectorXcd>(s.amplitudes().data(), s.amplitudes().size());
}

}  // namespace

TEST_CASE("grover single step by hand") {
  const WalkState s = step(pure_state(5, Chirality::R), grover_coin());
  CHECK(s.time() == 1);
  CHECK(s.amplitude(1, 0, Chirality::R) == Complex(-0.5));
  CHECK(s.amplitude(-1, 0, Chirality::L) == Complex(0.5));
  CHECK(s.amplitude(0, 1, Chirality::U) == Complex(0.5));
  CHECK(s.amplitude(0, -1, Chirality::D) == Complex(0.5));
  CHECK(probability_at(s, 0, 0) == 0.0);
  CHECK(std::abs(s.norm_squared() - 1.0) < 1e-15);
}

TEST_CASE("identity coin shifts R around the torus") {
  const int n = 5;
  WalkState s = pure_state(n, Chirality::R);
  for (int t = 1; t <= 12; ++t) {
    s = step(s, identity_coin());
    int x = t % n;
    if (x > 2) x -= n;
    CHECK(s.amplitude(x, 0, Chirality::R) == Complex(1));
  }
}

TEST_CASE("zero steps returns input") {
  const WalkState s = pure_state(7, Chirality::D, 1, 1);
  const WalkState r = evolve(s, grover_coin(), 0);
  CHECK(r.amplitudes() == s.amplitudes());
  CHECK(r.time() == 0);
}

TEST_CASE("direct evolution matches dense operator oracle") {
  std::mt19937_64 rng(3);
  for (int n : {3, 5}) {
    for (const Coin& coin : {grover_coin(), a1_coin(), a2_coin(), symmetric_family(0.3),
                             custom_coin(oracle::random_unitary(rng))}) {
      const Eigen::MatrixXcd w = oracle::dense_walk_matrix(coin.matrix(), n);
      WalkState::Field f(4, n * n);
      for (Eigen::Index j = 0; j < f.cols(); ++j) f.col(j) = oracle::random_spinor(rng);
      f /= f.norm();
      const WalkState s0(n, f);
      Eigen::VectorXcd v = flatten(s0);
      Evolver ev(coin, s0);
      for (int t = 0; t < 15; ++t) {
        v = w * v;
        ev.step();
      }
      CHECK((flatten(ev.state()) - v).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("evolver observer sees every time") {
  Evolver ev(grover_coin(), pure_state(5, Chirality::R));
  std::vector<long long> seen;
  ev.run(4, [&](const Evolver& e) { seen.push_back(e.time()); });
  CHECK(seen == std::vector<long long>{0, 1, 2, 3, 4});
}

TEST_CASE("thread split gives identical results") {
  const WalkState s = pure_state(21, Chirality::R);
  const WalkState one = evolve(s, a2_coin(), 40, 1);
  const WalkState four = evolve(s, a2_coin(), 40, 4);
  CHECK(one.amplitudes() == four.amplitudes());
}

TEST_CASE("grover N=51 t=30 central peak") {
  const WalkState s = evolve(pure_state(51, Chirality::R), grover_coin(), 30);
  const Eigen::MatrixXd g = probability_grid(s);
  const double origin = g(25, 25);
  for (int x = -25; x <= 25; ++x)
    for (int y = -25; y <= 25; ++y)
      if (std::abs(x) + std::abs(y) > 2) CHECK(g(x + 25, y + 25) < origin);
  Eigen::Index r, c;
  g.maxCoeff(&r, &c);
  CHECK(r == 25);
  CHECK(c == 25);
}

TEST_CASE("a1 walk leaves the origin") {
  const WalkState s = evolve(pure_state(51, Chirality::R), a1_coin(), 30);
  CHECK(probability_at(s, 0, 0) < 0.01);
}
