#pragma once

#include "qwalk/clustering.hpp"
#include "qwalk/coin.hpp"
#include "qwalk/state.hpp"

#include <compare>
#include <vector>

namespace qwalk {

/// Momentum quantum numbers, each in 0..N-1.
struct Momentum {
  int n = 0;
  int m = 0;
  friend auto operator<=>(const Momentum&, const Momentum&) = default;
};

/// H(n, m) = diag(w^-n, w^n, w^-m, w^m) * A with w = e^{2 pi i / N}.
Matrix4c momentum_matrix(const Matrix4c& coin, Momentum k, int size);

/// One Fourier block of the walk operator together with an orthonormal
/// eigenbasis (column j of eigenvectors pairs with eigenvalues(j)).
struct MomentumBlock {
  Momentum momentum;
  Matrix4c h;
  Vector4c eigenvalues;
  Matrix4c eigenvectors;

  /// max_j |H v_j - lambda_j v_j|.
  double residual() const;
  /// Orthogonal projector onto the span of eigenvectors whose eigenvalue is
  /// within tol of lambda (zero matrix when there is none).
  Matrix4c projector(Complex lambda, double tol = kClusterTol) const;
};

/// Numeric eigenpairs from a complex Schur factorization; since H is unitary,
/// hence normal, the Schur vectors are orthonormal eigenvectors. Throws
/// NumericError if the factorization fails or the residual exceeds 1e-10.
MomentumBlock build_block(const Coin& coin, Momentum k, int size);

/// Closed-form Grover spectrum. For n != m: {-1, 1, (-c - i r)/2, (-c + i r)/2}
/// with c = cos xi_m + cos xi_n, r = sqrt(4 - c^2) >= 0. For n == m:
/// {-1, 1, -w^n, -w^-n}.
Vector4c grover_eigenvalues(Momentum k, int size);

/// Unit-norm closed-form eigenvectors, column j paired with
/// grover_eigenvalues(k, size)(j).
Matrix4c grover_eigenvectors(Momentum k, int size);

/// Block assembled entirely from the closed forms above.
MomentumBlock grover_block(Momentum k, int size);

/// Closed-form spectrum of the a1 coin block: the four square roots
/// +-sqrt(mu_+-) with mu_+- = i sin xi_m cos xi_n +- sqrt(1 - sin^2 xi_m cos^2 xi_n).
std::array<Complex, 4> a1_eigenvalues(Momentum k, int size);

/// Orbit of momentum pairs sharing the non-trivial Grover eigenvalues.
struct DegeneracyClass {
  Momentum representative;
  std::vector<Momentum> members;
  double cos_sum = 0.0;  // cos xi_n + cos xi_m, equal across members
  /// The representative's two non-trivial eigenvalues (k = 3, 4).
  std::array<Complex, 2> shared;
};

/// Three shapes: axis {(n,0),(0,n),(N-n,0),(0,N-n)}, diagonal
/// {(n,n),(n,N-n)}, generic 8-element orbit. A pair (0, m) is treated as
/// (m, 0) and (n, N-n) as (n, n). Throws DomainError for (0, 0) or
/// out-of-range momenta.
DegeneracyClass degeneracy_class(Momentum k, int size);

/// All N^2 blocks of one walk plus the global eigenvalue clustering.
class SpectralDecomposition {
 public:
  /// Numeric eigenpairs for every block.
  SpectralDecomposition(const Coin& coin, int size, unsigned threads = 1);
  /// Adopts precomputed blocks ordered by n * N + m.
  SpectralDecomposition(std::string label, int size, std::vector<MomentumBlock> blocks);

  static SpectralDecomposition grover_closed_form(int size);

  const std::string& coin_label() const { return label_; }
  int size() const { return size_; }
  const std::vector<MomentumBlock>& blocks() const { return blocks_; }
  const MomentumBlock& block(Momentum k) const { return blocks_[k.n * size_ + k.m]; }

  /// Every eigenvalue in block order, 4 per block.
  const std::vector<Complex>& eigenvalues() const { return values_; }
  /// Cluster label of eigenvalue k of block b, index 4 * b + k.
  const std::vector<int>& labels() const { return labels_; }
  /// Clusters indexed by label.
  const std::vector<EigenCluster>& clusters() const { return clusters_; }
  /// Copy sorted by multiplicity descending.
  std::vector<EigenCluster> clusters_by_multiplicity() const;

  int multiplicity_near(Complex value, double tol = kClusterTol) const;

 private:
  void cluster();

  std::string label_;
  int size_;
  std::vector<MomentumBlock> blocks_;
  std::vector<Complex> values_;
  std::vector<int> labels_;
  std::vector<EigenCluster> clusters_;
};

/// psi(t) from the eigen-expansion: Fourier transform, scale each block
/// component by lambda^t, transform back.
WalkState evolve_spectral(const WalkState& initial, const SpectralDecomposition& spectrum,
                          long long t);
WalkState evolve_spectral(const WalkState& initial, const Coin& coin, long long t);

/// Chirality 4-vector at (x, y) and time t for a walk started from an origin
/// superposition. Costs O(N^2) per call.
Vector4c spectral_amplitude(const SpectralDecomposition& spectrum, const InitialSpec& initial,
                            int x, int y, long long t);

/// Class-aggregated coefficients of the origin amplitude for one measured
/// chirality. With them
///   amp(t) = (1/N^2) [plus_one + minus_one (-1)^t + sum_classes sum_{k=3,4} c_k lambda_k^t].
struct ChiralityCoefficients {
  Complex plus_one;
  Complex minus_one;
  /// (0, 0) block contributions per eigen-index k = 1..4.
  std::array<Complex, 4> origin_block;

  struct ClassTerm {
    DegeneracyClass cls;
    /// Per eigen-index k = 1..4, summed over class members.
    std::array<Complex, 4> c;
  };
  std::vector<ClassTerm> classes;
};

struct OriginCoefficients {
  int size = 0;
  InitialSpec initial{Vector4c(1, 0, 0, 0)};
  std::array<ChiralityCoefficients, 4> per_chirality;

  const ChiralityCoefficients& operator[](Chirality c) const {
    return per_chirality[index_of(c)];
  }
  /// Origin amplitude of chirality c at time t.
  Complex amplitude(Chirality c, long long t) const;
};

/// Eigenvalue-grouped expansion of the origin amplitude. Classes are the
/// axis orbits n = 1..(N-1)/2, the diagonal orbits n = 1..N-1 and the
/// generic orbits 1 <= n < m <= (N-1)/2. Only the Grover coin has this
/// structure: other coins raise UnsupportedError.
OriginCoefficients origin_coefficients(const Coin& coin, const InitialSpec& initial, int size);

}  // namespace qwalk
