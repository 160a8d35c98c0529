#pragma once

#include "qwalk/types.hpp"

#include "json.hpp"

#include <filesystem>
#include <string>

namespace qwalk {

inline constexpr double kBuiltinUnitarityTol = 1e-12;
inline constexpr double kUserUnitarityTol = 1e-9;

/// max |(U^H U - I)_{ij}|. Accepts any square Eigen expression.
template <typename Derived>
double unitarity_residual(const Eigen::MatrixBase<Derived>& u) {
  using Plain = typename Derived::PlainObject;
  const Plain m = u;
  return (m.adjoint() * m - Plain::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}

/// A 4x4 unitary acting on the chirality space (R, L, U, D). Immutable.
class Coin {
 public:
  /// Throws ValidationError when the residual is >= tol.
  Coin(const Matrix4c& entries, std::string label, double tol = kUserUnitarityTol);

  const Matrix4c& matrix() const { return entries_; }
  Complex operator()(int row, int col) const { return entries_(row, col); }
  const std::string& label() const { return label_; }
  double residual() const { return unitarity_residual(entries_); }

  bool approx_equal(const Coin& other, double tol = kBuiltinUnitarityTol) const {
    return (entries_ - other.entries_).cwiseAbs().maxCoeff() < tol;
  }

 private:
  Matrix4c entries_;
  std::string label_;
};

/// Grover diffusion coin: -1/2 on the diagonal, +1/2 elsewhere.
Coin grover_coin();
Coin a1_coin();
Coin a2_coin();
/// Real symmetric family with q = 1 - p; p = 1/2 reproduces grover_coin().
/// Throws DomainError unless 0 < p < 1.
Coin symmetric_family(double p);
Coin identity_coin();
Coin custom_coin(const Matrix4c& entries, std::string label = "custom");

// JSON form: 4x4 array of [re, im] pairs, row-major.
Coin coin_from_json(const nlohmann::json& j, std::string label = "custom");
Coin load_coin_file(const std::filesystem::path& path);
nlohmann::json coin_to_json(const Coin& coin);

}  // namespace qwalk
