#include "qwalk/coin.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace qwalk {

Chirality parse_chirality(std::string_view s) {
  if (s == "R") return Chirality::R;
  if (s == "L") return Chirality::L;
  if (s == "U") return Chirality::U;
  if (s == "D") return Chirality::D;
  throw DomainError("unknown chirality '" + std::string(s) + "'");
}

Coin::Coin(const Matrix4c& entries, std::string label, double tol)
    : entries_(entries), label_(std::move(label)) {
  const double r = unitarity_residual(entries_);
  if (!(r < tol)) {
    std::ostringstream msg;
    msg << "coin '" << label_ << "' is not unitary: residual " << r << " (tolerance " << tol
        << ")";
    throw ValidationError(msg.str(), r);
  }
}

namespace {

Matrix4c real_matrix(const Eigen::Matrix4d& m) { return m.cast<Complex>(); }

}  // namespace

Coin grover_coin() {
  Eigen::Matrix4d a = Eigen::Matrix4d::Constant(0.5);
  a.diagonal().setConstant(-0.5);
  return Coin(real_matrix(a), "grover", kBuiltinUnitarityTol);
}

Coin a1_coin() {
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::Matrix4d a;
  a << 0, 0, -s, s,
       0, 0, s, s,
       s, -s, 0, 0,
       s, s, 0, 0;
  return Coin(real_matrix(a), "a1", kBuiltinUnitarityTol);
}

Coin a2_coin() {
  const double s = 1.0 / std::sqrt(3.0);
  Eigen::Matrix4d a;
  a << -s, 0, s, s,
       0, -s, -s, s,
       s, -s, s, 0,
       s, s, 0, s;
  return Coin(real_matrix(a), "a2", kBuiltinUnitarityTol);
}

Coin symmetric_family(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("symmetric_family: p must lie in (0, 1), got " + std::to_string(p));
  }
  const double q = 1.0 - p;
  const double r = std::sqrt(p * q);
  Eigen::Matrix4d a;
  a << -p, q, r, r,
       q, -p, r, r,
       r, r, -q, p,
       r, r, p, -q;
  std::ostringstream label;
  label.precision(17);
  label << "a4:" << p;
  return Coin(real_matrix(a), label.str(), kBuiltinUnitarityTol);
}

Coin identity_coin() { return Coin(Matrix4c::Identity(), "identity", kBuiltinUnitarityTol); }

Coin custom_coin(const Matrix4c& entries, std::string label) {
  return Coin(entries, std::move(label), kUserUnitarityTol);
}

Coin coin_from_json(const nlohmann::json& j, std::string label) {
  auto bad = [](const std::string& why) {
    return ValidationError("coin JSON: " + why, std::numeric_limits<double>::quiet_NaN());
  };
  if (!j.is_array() || j.size() != 4) throw bad("expected 4 rows");
  Matrix4c m;
  for (int r = 0; r < 4; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || row.size() != 4) throw bad("row " + std::to_string(r) + " needs 4 entries");
    for (int c = 0; c < 4; ++c) {
      const auto& e = row[c];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        throw bad("entry (" + std::to_string(r) + "," + std::to_string(c) + ") must be [re, im]");
      }
      m(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  return custom_coin(m, std::move(label));
}

Coin load_coin_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open coin file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("coin file " + path.string() + ": " + e.what(),
                          std::numeric_limits<double>::quiet_NaN());
  }
  return coin_from_json(j, "file:" + path.string());
}

nlohmann::json coin_to_json(const Coin& coin) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < 4; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < 4; ++c) row.push_back({coin(r, c).real(), coin(r, c).imag()});
    rows.push_back(row);
  }
  return rows;
}

}  // namespace qwalk
