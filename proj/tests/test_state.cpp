#include "doctest.h"

#include "qwalk/state.hpp"

#include <cmath>

using namespace qwalk;

TEST_CASE("pure state") {
  const WalkState s = pure_state(5, Chirality::R);
  CHECK(s.norm_squared() == 1.0);
  int nonzero = 0;
  for (Eigen::Index j = 0; j < s.amplitudes().cols(); ++j)
    for (int c = 0; c < 4; ++c) nonzero += s.amplitudes()(c, j) != Complex(0);
  CHECK(nonzero == 1);
  CHECK(s.amplitude(0, 0, Chirality::R) == Complex(1));
  CHECK(s.amplitudes().cols() == 25);
  CHECK_THROWS_AS(pure_state(4, Chirality::R), DomainError);
  CHECK_THROWS_AS(pure_state(1, Chirality::R), DomainError);
  CHECK_THROWS_AS(pure_state(5, Chirality::R, 3, 0), DomainError);
  CHECK_NOTHROW(pure_state(51, Chirality::R));
}

TEST_CASE("site indexing") {
  const WalkState s = pure_state(7, Chirality::U, -2, 3);
  CHECK(s.half() == 3);
  CHECK(s.site_index(-3, -3) == 0);
  CHECK(s.site_index(3, 3) == 48);
  CHECK(s.site_index(0, 0) == 24);
  for (int j = 0; j < 49; ++j) CHECK(s.site_index(s.x_of(j), s.y_of(j)) == j);
  CHECK(s.amplitude(-2, 3, Chirality::U) == Complex(1));
  CHECK_FALSE(s.contains(4, 0));
  CHECK_THROWS_AS(s.site_index(0, -4), DomainError);
}

TEST_CASE("initial spec") {
  CHECK_THROWS_AS(InitialSpec(Vector4c(1, 1, 0, 0)), DomainError);
  CHECK_THROWS_AS(InitialSpec::normalized(Vector4c::Zero()), DomainError);
  const InitialSpec n = InitialSpec::normalized(Vector4c(3, 4, 0, 0));
  CHECK(std::abs(n[Chirality::L] - 0.8) < 1e-15);
  CHECK(InitialSpec::pure(Chirality::D).describe() == "D");

  const Complex e = std::polar(0.5, 1.0 / 3.0);
  const InitialSpec fig(e, e, -e, -e);
  const WalkState s = origin_superposition(51, fig);
  CHECK(std::abs(s.norm_squared() - 1.0) < 1e-15);
  CHECK(s.amplitude(0, 0, Chirality::U) == -e);
  CHECK(fig.describe().rfind("custom:", 0) == 0);

  const InitialSpec uniform(0.5, 0.5, 0.5, 0.5);
  CHECK(std::abs(origin_superposition(9, uniform).norm_squared() - 1.0) < 1e-15);
}

TEST_CASE("origin superposition of a pure spec equals pure_state") {
  const WalkState a = origin_superposition(7, InitialSpec::pure(Chirality::R));
  const WalkState b = pure_state(7, Chirality::R);
  CHECK(a.amplitudes() == b.amplitudes());
}

TEST_CASE("probabilities") {
  const WalkState s = pure_state(5, Chirality::L);
  CHECK(probability_at(s, 0, 0) == 1.0);
  CHECK(probability_at(s, 1, -2) == 0.0);
  CHECK_THROWS_AS(probability_at(s, 3, 0), DomainError);
  const Eigen::MatrixXd g = probability_grid(s);
  CHECK(g.rows() == 5);
  CHECK(g(2, 2) == 1.0);
  CHECK(g.sum() == 1.0);
}

TEST_CASE("state validation") {
  WalkState::Field f = WalkState::Field::Zero(4, 9);
  CHECK_THROWS_AS(WalkState(3, f), DomainError);
  f(0, 0) = 1.0;
  CHECK_NOTHROW(WalkState(3, f));
  CHECK_THROWS_AS(WalkState(5, f), DomainError);
}

TEST_CASE("translation and origin weights") {
  const WalkState s = pure_state(5, Chirality::R);
  const WalkState t = s.translated(2, -1);
  CHECK(t.amplitude(2, -1, Chirality::R) == Complex(1));
  CHECK(s.translated(3, 0).amplitude(-2, 0, Chirality::R) == Complex(1));
  CHECK(origin_weights(s).has_value());
  CHECK_FALSE(origin_weights(t).has_value());
}
