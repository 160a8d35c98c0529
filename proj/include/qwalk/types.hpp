#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qwalk {

using Complex = std::complex<double>;
using Matrix4c = Eigen::Matrix4cd;
using Vector4c = Eigen::Vector4cd;

inline constexpr double kPi = std::numbers::pi;

/// Internal coin state. The integer value is the row/column index in every
/// 4x4 coin matrix and momentum block.
enum class Chirality : int { R = 0, L = 1, U = 2, D = 3 };

inline constexpr std::array<Chirality, 4> kChiralities = {Chirality::R, Chirality::L,
                                                           Chirality::U, Chirality::D};

constexpr int index_of(Chirality c) { return static_cast<int>(c); }

constexpr std::string_view name_of(Chirality c) {
  switch (c) {
    case Chirality::R: return "R";
    case Chirality::L: return "L";
    case Chirality::U: return "U";
    case Chirality::D: return "D";
  }
  return "?";
}

Chirality parse_chirality(std::string_view s);

// Error hierarchy. Everything derives from std::exception types so callers
// that do not care about the distinction can catch the standard bases.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct ValidationError : std::invalid_argument {
  ValidationError(const std::string& what, double residual)
      : std::invalid_argument(what), residual(residual) {}
  double residual;
};

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedError : std::logic_error {
  using std::logic_error::logic_error;
};

/// e^{2 pi i k / N}, reduced mod N first so large or negative k stay exact
/// on the unit circle.
inline Complex root_of_unity(long long k, int size) {
  long long r = k % size;
  if (r < 0) r += size;
  return std::polar(1.0, 2.0 * kPi * static_cast<double>(r) / static_cast<double>(size));
}

}  // namespace qwalk
