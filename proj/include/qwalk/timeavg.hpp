#pragma once

#include "qwalk/coin.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/state.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qwalk {

enum class Parity { All, Even, Odd };
enum class AverageMethod { Empirical, ExactSpectral, ClosedForm, LimitInfiniteN };

std::string_view name_of(Parity p);
std::string_view name_of(AverageMethod m);

using ChiralityValues = std::array<double, 4>;

inline double total(const ChiralityValues& v) { return v[0] + v[1] + v[2] + v[3]; }

/// Per-chirality time-averaged probabilities at one site. A parity class
/// that has no samples (odd times with T = 1) or was not computed is empty.
struct TimeAverageReport {
  AverageMethod method = AverageMethod::ExactSpectral;
  std::string coin;
  std::optional<int> size;  // empty for the infinite lattice
  std::string initial;
  int x = 0;
  int y = 0;
  ChiralityValues all{};
  std::optional<ChiralityValues> even;
  std::optional<ChiralityValues> odd;

  const ChiralityValues* values(Parity p) const;
  double value(Chirality c, Parity p = Parity::All) const;
  double total(Parity p = Parity::All) const;
};

/// Cesaro average of |amplitude|^2 over t = 0..T-1 at (x, y). Parity
/// averages divide by the number of times in their class.
TimeAverageReport empirical_time_average(const WalkState& initial, const Coin& coin,
                                         long long steps, int x = 0, int y = 0,
                                         unsigned threads = 1);

/// Long-time average at the origin from the spectral expansion: cross terms
/// between different eigenvalues average out, so each eigenvalue cluster
/// contributes |sum of its coefficients|^2 / N^4. Over even (odd) times the
/// clusters at lambda and -lambda interfere and are merged first.
TimeAverageReport exact_time_average(const SpectralDecomposition& spectrum,
                                     const InitialSpec& initial);
TimeAverageReport exact_time_average(const Coin& coin, const InitialSpec& initial, int size);
/// Throws UnsupportedError unless the state is localized at the origin.
TimeAverageReport exact_time_average(const Coin& coin, const WalkState& initial);

/// Polynomial in 1/N for the R component of the Grover walk started in pure R.
double grover_closed_form(int size, Parity parity = Parity::All);

/// N -> infinity origin average for the Grover walk from an origin
/// superposition (alpha, beta, gamma, zeta).
double limit_time_average(const InitialSpec& initial, Chirality c);
/// Same formula without the normalization requirement.
double limit_time_average(const Vector4c& weights, Chirality c);
ChiralityValues limit_time_average(const InitialSpec& initial);

struct AlphaExtrema {
  double alpha_min;  // root of P_R on [-1, 1]
  double alpha_max;  // |alpha| of the interior maximum of P_R
};
AlphaExtrema alpha_extrema();

struct AlphaSample {
  double alpha;
  double p_r;
  double p_l;
};
/// Limit R and L averages for (alpha, sqrt(1 - alpha^2), 0, 0) on a uniform
/// grid over [-1, 1]. Throws DomainError for samples < 2.
std::vector<AlphaSample> scan_alpha(int samples);

struct LocalizationVerdict {
  bool localizing = false;
  std::vector<Complex> common_eigenvalues;
  int max_multiplicity = 0;
};
/// Eigenvalues present (within 1e-9) in every momentum block. A common
/// eigenvalue has multiplicity at least N^2, which keeps the origin average
/// bounded away from zero as N grows.
LocalizationVerdict localization_predictor(const SpectralDecomposition& spectrum);
LocalizationVerdict localization_predictor(const Coin& coin, int size);

struct IntegralConstants {
  double i1;  // 1/4 - 1/pi
  double i2;  // 1/4 - 1/(2 pi)
  double i1_quadrature;
  double i2_quadrature;
};
/// Closed forms plus tensor Gauss-Legendre checks of the defining integrals.
/// Throws NumericError if they disagree by more than 1e-6.
IntegralConstants integral_constants(int nodes = 200);

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendre gauss_legendre(int n);

/// (1/N^2) sum_{1 <= n < m <= (N-1)/2} of the L-from-R weight of the +1/-1
/// eigenvalue pair; tends to 1/4 - 1/pi.
double lattice_sum_i1(int size);

}  // namespace qwalk
