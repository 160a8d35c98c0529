#pragma once

#include "qwalk/coin.hpp"
#include "qwalk/state.hpp"

#include <functional>
#include <vector>

namespace qwalk {

/// Direct evolution on the torus. Owns the double buffer and the periodic
/// neighbour tables for one lattice size, so repeated stepping allocates
/// nothing.
///
/// Each output site reads only its four neighbours' previous values, so the
/// site loop can be split over `threads` workers with one barrier per step.
/// Results do not depend on the split.
class Evolver {
 public:
  Evolver(const Coin& coin, const WalkState& initial, unsigned threads = 1);

  void step();
  void run(long long steps);
  /// Calls observe(*this) before every step and once after the last one.
  void run(long long steps, const std::function<void(const Evolver&)>& observe);

  long long time() const { return time_; }
  int size() const { return size_; }
  const WalkState::Field& field() const { return current_; }
  Complex amplitude(int site, Chirality c) const { return current_(index_of(c), site); }
  double site_probability(int site) const { return current_.col(site).squaredNorm(); }

  WalkState state() const;

 private:
  void step_range(int begin, int end);

  Matrix4c coin_;
  int size_;
  long long time_;
  unsigned threads_;
  WalkState::Field current_;
  WalkState::Field next_;
  // source_[c][j]: site whose old amplitudes feed chirality c at site j.
  std::array<std::vector<int>, 4> source_;
};

WalkState step(const WalkState& state, const Coin& coin);
WalkState evolve(const WalkState& state, const Coin& coin, long long steps, unsigned threads = 1);

}  // namespace qwalk
