#include "qwalk/state.hpp"

#include <cmath>
#include <sstream>

namespace qwalk {

void require_odd_size(int size) {
  if (size < 3 || size % 2 == 0) {
    throw DomainError("lattice size must be odd and >= 3, got " + std::to_string(size));
  }
}

InitialSpec::InitialSpec(const Vector4c& weights) : weights_(weights) {
  const double n2 = weights_.squaredNorm();
  if (!(std::abs(n2 - 1.0) <= 1e-12)) {
    std::ostringstream msg;
    msg << "initial weights must have unit norm, got |w|^2 = " << n2;
    throw DomainError(msg.str());
  }
}

InitialSpec::InitialSpec(Complex alpha, Complex beta, Complex gamma, Complex zeta)
    : InitialSpec(Vector4c(alpha, beta, gamma, zeta)) {}

InitialSpec InitialSpec::pure(Chirality c) {
  Vector4c w = Vector4c::Zero();
  w(index_of(c)) = 1.0;
  return InitialSpec(w);
}

InitialSpec InitialSpec::normalized(const Vector4c& weights) {
  const double n = weights.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw DomainError("initial weights are all zero");
  return InitialSpec(Vector4c(weights / n));
}

std::string InitialSpec::describe() const {
  for (Chirality c : kChiralities) {
    if (weights_ == InitialSpec::pure(c).weights_) return std::string(name_of(c));
  }
  std::ostringstream out;
  out.precision(17);
  out << "custom:";
  for (int i = 0; i < 4; ++i) {
    if (i) out << ',';
    const Complex w = weights_(i);
    out << w.real() << (std::signbit(w.imag()) ? "" : "+") << w.imag() << 'i';
  }
  return out.str();
}

WalkState::WalkState(int size, Field amplitudes, long long time)
    : size_(size), time_(time), amps_(std::move(amplitudes)) {
  require_odd_size(size);
  if (amps_.cols() != static_cast<Eigen::Index>(size) * size) {
    throw DomainError("amplitude field has " + std::to_string(amps_.cols()) +
                      " sites, expected " + std::to_string(size * size));
  }
  if (time < 0) throw DomainError("time must be nonnegative");
  const double n2 = amps_.squaredNorm();
  if (!(std::abs(n2 - 1.0) <= kNormTol)) {
    std::ostringstream msg;
    msg << "walk state is not normalized: |psi|^2 = " << n2;
    throw DomainError(msg.str());
  }
}

bool WalkState::contains(int x, int y) const {
  const int h = half();
  return x >= -h && x <= h && y >= -h && y <= h;
}

int WalkState::site_index(int x, int y) const {
  if (!contains(x, y)) {
    throw DomainError("site (" + std::to_string(x) + ", " + std::to_string(y) +
                      ") outside lattice of size " + std::to_string(size_));
  }
  return (y + half()) * size_ + (x + half());
}

Complex WalkState::amplitude(int x, int y, Chirality c) const {
  return amps_(index_of(c), site_index(x, y));
}

WalkState WalkState::translated(int dx, int dy) const {
  Field out(4, amps_.cols());
  const int n = size_;
  const auto wrap = [n](int v) { return ((v % n) + n) % n; };
  for (int yi = 0; yi < n; ++yi) {
    for (int xi = 0; xi < n; ++xi) {
      out.col(wrap(yi + dy) * n + wrap(xi + dx)) = amps_.col(yi * n + xi);
    }
  }
  return WalkState(n, std::move(out), time_);
}

WalkState pure_state(int size, Chirality c, int x, int y) {
  require_odd_size(size);
  WalkState::Field f = WalkState::Field::Zero(4, static_cast<Eigen::Index>(size) * size);
  const int h = (size - 1) / 2;
  if (x < -h || x > h || y < -h || y > h) {
    throw DomainError("site (" + std::to_string(x) + ", " + std::to_string(y) +
                      ") outside lattice of size " + std::to_string(size));
  }
  f(index_of(c), (y + h) * size + (x + h)) = 1.0;
  return WalkState(size, std::move(f));
}

WalkState origin_superposition(int size, const InitialSpec& spec) {
  require_odd_size(size);
  WalkState::Field f = WalkState::Field::Zero(4, static_cast<Eigen::Index>(size) * size);
  const int h = (size - 1) / 2;
  f.col(h * size + h) = spec.weights();
  return WalkState(size, std::move(f));
}

double probability_at(const WalkState& state, int x, int y) {
  return state.amplitudes().col(state.site_index(x, y)).squaredNorm();
}

Eigen::MatrixXd probability_grid(const WalkState& state) {
  const int n = state.size();
  Eigen::MatrixXd grid(n, n);
  const auto& a = state.amplitudes();
  for (int yi = 0; yi < n; ++yi)
    for (int xi = 0; xi < n; ++xi) grid(xi, yi) = a.col(yi * n + xi).squaredNorm();
  return grid;
}

std::optional<Vector4c> origin_weights(const WalkState& state, double tol) {
  const int origin = state.site_index(0, 0);
  const auto& a = state.amplitudes();
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    if (j != origin && a.col(j).cwiseAbs().maxCoeff() > tol) return std::nullopt;
  }
  return Vector4c(a.col(origin));
}

}  // namespace qwalk
