#include "qwalk/evolve.hpp"

#include <algorithm>
#include <thread>

namespace qwalk {

Evolver::Evolver(const Coin& coin, const WalkState& initial, unsigned threads)
    : coin_(coin.matrix()),
      size_(initial.size()),
      time_(initial.time()),
      threads_(std::max(1u, threads)),
      current_(initial.amplitudes()),
      next_(4, initial.amplitudes().cols()) {
  const int n = size_;
  const auto wrap = [n](int v) { return (v + n) % n; };
  for (auto& table : source_) table.resize(static_cast<std::size_t>(n) * n);
  for (int yi = 0; yi < n; ++yi) {
    for (int xi = 0; xi < n; ++xi) {
      const auto j = static_cast<std::size_t>(yi * n + xi);
      source_[index_of(Chirality::R)][j] = yi * n + wrap(xi - 1);
      source_[index_of(Chirality::L)][j] = yi * n + wrap(xi + 1);
      source_[index_of(Chirality::U)][j] = wrap(yi - 1) * n + xi;
      source_[index_of(Chirality::D)][j] = wrap(yi + 1) * n + xi;
    }
  }
}

void Evolver::step_range(int begin, int end) {
  for (int j = begin; j < end; ++j) {
    for (int c = 0; c < 4; ++c) {
      const auto src = current_.col(source_[c][j]);
      next_(c, j) = coin_(c, 0) * src(0) + coin_(c, 1) * src(1) + coin_(c, 2) * src(2) +
                    coin_(c, 3) * src(3);
    }
  }
}

void Evolver::step() {
  const int sites = size_ * size_;
  const int workers = static_cast<int>(std::min<unsigned>(threads_, static_cast<unsigned>(sites)));
  if (workers <= 1) {
    step_range(0, sites);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    const int chunk = (sites + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const int begin = w * chunk;
      const int end = std::min(sites, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back([this, begin, end] { step_range(begin, end); });
    }
  }  // jthreads join here
  current_.swap(next_);
  ++time_;
}

void Evolver::run(long long steps) {
  for (long long s = 0; s < steps; ++s) step();
}

void Evolver::run(long long steps, const std::function<void(const Evolver&)>& observe) {
  for (long long s = 0; s < steps; ++s) {
    observe(*this);
    step();
  }
  observe(*this);
}

WalkState Evolver::state() const { return WalkState(size_, current_, time_); }

WalkState step(const WalkState& state, const Coin& coin) {
  Evolver e(coin, state);
  e.step();
  return e.state();
}

WalkState evolve(const WalkState& state, const Coin& coin, long long steps, unsigned threads) {
  if (steps == 0) return state;
  Evolver e(coin, state, threads);
  e.run(steps);
  return e.state();
}

}  // namespace qwalk
