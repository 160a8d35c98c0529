#pragma once

#include "qwalk/types.hpp"

#include <optional>
#include <string>

namespace qwalk {

/// Weights (alpha, beta, gamma, zeta) on (R, L, U, D) at the origin.
class InitialSpec {
 public:
  /// Throws DomainError unless the squared norm is 1 within 1e-12.
  explicit InitialSpec(const Vector4c& weights);
  InitialSpec(Complex alpha, Complex beta, Complex gamma, Complex zeta);

  static InitialSpec pure(Chirality c);
  /// Rescales to unit norm; throws DomainError for a zero vector.
  static InitialSpec normalized(const Vector4c& weights);

  const Vector4c& weights() const { return weights_; }
  Complex operator[](Chirality c) const { return weights_(index_of(c)); }

  /// Compact text form used in exported metadata.
  std::string describe() const;

 private:
  Vector4c weights_;
};

/// Total wavefunction on the periodic N x N lattice. Sites use centered
/// coordinates x, y in [-(N-1)/2, (N-1)/2]. Column j of amplitudes() holds the
/// chirality 4-vector of site j = (y + h) * N + (x + h), h = (N-1)/2.
class WalkState {
 public:
  using Field = Eigen::Matrix<Complex, 4, Eigen::Dynamic>;

  /// Validates N (odd, >= 3) and unit norm within 1e-10.
  WalkState(int size, Field amplitudes, long long time = 0);

  int size() const { return size_; }
  int half() const { return (size_ - 1) / 2; }
  long long time() const { return time_; }
  const Field& amplitudes() const { return amps_; }

  bool contains(int x, int y) const;
  /// Column index of (x, y); throws DomainError when out of range.
  int site_index(int x, int y) const;
  int x_of(int site) const { return site % size_ - half(); }
  int y_of(int site) const { return site / size_ - half(); }

  Complex amplitude(int x, int y, Chirality c) const;
  double norm_squared() const { return amps_.squaredNorm(); }

  /// Shifted copy: amplitude at (x, y) moves to (x + dx, y + dy) mod N.
  WalkState translated(int dx, int dy) const;

 private:
  int size_;
  long long time_;
  Field amps_;
};

inline constexpr double kNormTol = 1e-10;

void require_odd_size(int size);

WalkState pure_state(int size, Chirality c, int x = 0, int y = 0);
WalkState origin_superposition(int size, const InitialSpec& spec);

/// Sum over chiralities of |amplitude|^2 at (x, y).
double probability_at(const WalkState& state, int x, int y);

/// Entry (x + h, y + h) is probability_at(state, x, y).
Eigen::MatrixXd probability_grid(const WalkState& state);

/// If every nonzero amplitude sits at the origin, returns those weights.
std::optional<Vector4c> origin_weights(const WalkState& state, double tol = 1e-14);

}  // namespace qwalk
