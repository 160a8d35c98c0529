#include "qwalk/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

namespace qwalk {

namespace {

double xi(int j, int size) { return 2.0 * kPi * j / size; }

std::string where(Momentum k, int size) {
  std::ostringstream out;
  out << "block (n=" << k.n << ", m=" << k.m << ", N=" << size << ")";
  return out.str();
}

void require_momentum(Momentum k, int size) {
  require_odd_size(size);
  if (k.n < 0 || k.n >= size || k.m < 0 || k.m >= size) {
    throw DomainError("momentum out of range: " + where(k, size));
  }
}

Complex power(Complex lambda, long long t) {
  return std::polar(std::pow(std::abs(lambda), static_cast<double>(t)),
                    static_cast<double>(t) * std::arg(lambda));
}

// Reorders candidate eigenvectors so column j pairs with lambdas(j), using
// the Rayleigh quotient of each candidate.
Matrix4c match_to_eigenvalues(const Matrix4c& h, const Matrix4c& candidates, const Vector4c& lambdas) {
  Matrix4c out = Matrix4c::Zero();
  std::array<bool, 4> used{};
  for (int c = 0; c < 4; ++c) {
    const Vector4c v = candidates.col(c);
    const Complex rq = v.dot(h * v) / v.squaredNorm();
    int best = -1;
    double best_d = 0.0;
    for (int j = 0; j < 4; ++j) {
      if (used[j]) continue;
      const double d = std::abs(rq - lambdas(j));
      if (best < 0 || d < best_d) {
        best = j;
        best_d = d;
      }
    }
    used[best] = true;
    out.col(best) = v;
  }
  return out;
}

}  // namespace

Matrix4c momentum_matrix(const Matrix4c& coin, Momentum k, int size) {
  Vector4c phases(root_of_unity(-k.n, size), root_of_unity(k.n, size),
                  root_of_unity(-k.m, size), root_of_unity(k.m, size));
  return phases.asDiagonal() * coin;
}

double MomentumBlock::residual() const {
  double r = 0.0;
  for (int j = 0; j < 4; ++j) {
    r = std::max(r, (h * eigenvectors.col(j) - eigenvalues(j) * eigenvectors.col(j)).norm());
  }
  return r;
}

Matrix4c MomentumBlock::projector(Complex lambda, double tol) const {
  Matrix4c p = Matrix4c::Zero();
  for (int j = 0; j < 4; ++j) {
    if (std::abs(eigenvalues(j) - lambda) < tol) {
      p += eigenvectors.col(j) * eigenvectors.col(j).adjoint();
    }
  }
  return p;
}

MomentumBlock build_block(const Coin& coin, Momentum k, int size) {
  require_momentum(k, size);
  MomentumBlock b;
  b.momentum = k;
  b.h = momentum_matrix(coin.matrix(), k, size);
  Eigen::ComplexSchur<Matrix4c> schur(b.h);
  if (schur.info() != Eigen::Success) {
    throw NumericError("Schur factorization failed for " + where(k, size));
  }
  b.eigenvalues = schur.matrixT().diagonal();
  b.eigenvectors = schur.matrixU();
  const double r = b.residual();
  if (!(r < 1e-10)) {
    std::ostringstream msg;
    msg << "eigen residual " << r << " too large for " << where(k, size);
    throw NumericError(msg.str());
  }
  return b;
}

Vector4c grover_eigenvalues(Momentum k, int size) {
  require_momentum(k, size);
  if (k.n == k.m) {
    return Vector4c(-1.0, 1.0, -root_of_unity(k.n, size), -root_of_unity(-k.n, size));
  }
  const double c = std::cos(xi(k.m, size)) + std::cos(xi(k.n, size));
  const double r = std::sqrt(std::max(0.0, 4.0 - c * c));
  return Vector4c(-1.0, 1.0, Complex(-c, -r) / 2.0, Complex(-c, r) / 2.0);
}

Matrix4c grover_eigenvectors(Momentum k, int size) {
  const Vector4c lambda = grover_eigenvalues(k, size);
  const Complex a = root_of_unity(-k.n, size);
  const Complex b = root_of_unity(-k.m, size);
  Matrix4c v;

  if (k.n == k.m) {
    v << -a, a, 0, -1,
         1, 1, -1, 0,
         -a, a, 0, 1,
         1, 1, 1, 0;
  } else if (k.n == 0) {
    // Axis blocks (0, m): the first eigenvector is fixed, the rest follow
    // from the eigenvalue.
    v.col(0) << 1, -1, 0, 0;
    for (int j = 1; j < 4; ++j) {
      const Complex l = lambda(j);
      v.col(j) << l + b, l + b, b * l + b, 2.0 * l * l + b * l - b;
    }
  } else if (k.n + k.m == size) {
    const Complex ia = 1.0 / a;
    Matrix4c cand;
    cand << 1, 1, 0, -1,
            -ia, ia, -1, 0,
            -ia, ia, 1, 0,
            1, 1, 0, 1;
    v = match_to_eigenvalues(momentum_matrix(grover_coin().matrix(), k, size), cand, lambda);
  } else {
    for (int j = 0; j < 4; ++j) {
      const Complex l = lambda(j);
      const Complex l2 = l * l;
      v.col(j) << a * a * l2 + (a + a * a * b) * l + a * b,
                  l2 + (a + b) * l + a * b,
                  a * b * l2 + (b + a * a * b) * l + a * b,
                  2.0 * a * l2 * l + (1.0 + a * a + a * b) * l2 - a * b;
    }
  }
  v.colwise().normalize();
  return v;
}

MomentumBlock grover_block(Momentum k, int size) {
  MomentumBlock b;
  b.momentum = k;
  b.h = momentum_matrix(grover_coin().matrix(), k, size);
  b.eigenvalues = grover_eigenvalues(k, size);
  b.eigenvectors = grover_eigenvectors(k, size);
  return b;
}

std::array<Complex, 4> a1_eigenvalues(Momentum k, int size) {
  require_momentum(k, size);
  const double s = std::sin(xi(k.m, size)) * std::cos(xi(k.n, size));
  const double r = std::sqrt(std::max(0.0, 1.0 - s * s));
  const Complex mu_plus(r, s);
  const Complex mu_minus(-r, s);
  const Complex a = std::sqrt(mu_plus);
  const Complex b = std::sqrt(mu_minus);
  return {a, -a, b, -b};
}

DegeneracyClass degeneracy_class(Momentum k, int size) {
  require_momentum(k, size);
  if (k.n == 0 && k.m == 0) {
    throw DomainError("the (0, 0) block forms its own class");
  }
  const int N = size;
  Momentum rep = k;
  if (rep.n == 0) rep = {rep.m, 0};
  if (rep.m != 0 && rep.n + rep.m == N) rep = {rep.n, rep.n};

  std::vector<Momentum> raw;
  const int n = rep.n;
  const int m = rep.m;
  if (m == 0) {
    raw = {{n, 0}, {0, n}, {N - n, 0}, {0, N - n}};
  } else if (n == m) {
    raw = {{n, n}, {n, N - n}};
  } else {
    raw = {{n, m}, {n, N - m}, {N - n, m}, {N - n, N - m},
           {m, n}, {m, N - n}, {N - m, n}, {N - m, N - n}};
  }

  DegeneracyClass cls;
  cls.representative = rep;
  for (const Momentum& p : raw) {
    if (std::find(cls.members.begin(), cls.members.end(), p) == cls.members.end()) {
      cls.members.push_back(p);
    }
  }
  cls.cos_sum = std::cos(xi(n, N)) + std::cos(xi(m, N));
  const Vector4c l = grover_eigenvalues(rep, N);
  cls.shared = {l(2), l(3)};
  return cls;
}

SpectralDecomposition::SpectralDecomposition(const Coin& coin, int size, unsigned threads)
    : label_(coin.label()), size_(size) {
  require_odd_size(size);
  const int total = size * size;
  blocks_.resize(static_cast<std::size_t>(total));
  auto fill = [&](int begin, int end) {
    for (int b = begin; b < end; ++b) blocks_[b] = build_block(coin, {b / size, b % size}, size);
  };
  const int workers = static_cast<int>(std::clamp<unsigned>(threads, 1u, static_cast<unsigned>(total)));
  if (workers == 1) {
    fill(0, total);
  } else {
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    {
      std::vector<std::jthread> pool;
      const int chunk = (total + workers - 1) / workers;
      for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            fill(w * chunk, std::min(total, (w + 1) * chunk));
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  cluster();
}

SpectralDecomposition::SpectralDecomposition(std::string label, int size,
                                             std::vector<MomentumBlock> blocks)
    : label_(std::move(label)), size_(size), blocks_(std::move(blocks)) {
  require_odd_size(size);
  if (blocks_.size() != static_cast<std::size_t>(size) * size) {
    throw DomainError("expected N^2 momentum blocks");
  }
  cluster();
}

SpectralDecomposition SpectralDecomposition::grover_closed_form(int size) {
  require_odd_size(size);
  std::vector<MomentumBlock> blocks;
  blocks.reserve(static_cast<std::size_t>(size) * size);
  for (int n = 0; n < size; ++n)
    for (int m = 0; m < size; ++m) blocks.push_back(grover_block({n, m}, size));
  return SpectralDecomposition("grover", size, std::move(blocks));
}

void SpectralDecomposition::cluster() {
  values_.clear();
  values_.reserve(blocks_.size() * 4);
  for (const auto& b : blocks_)
    for (int j = 0; j < 4; ++j) values_.push_back(b.eigenvalues(j));
  labels_ = cluster_labels(values_);
  clusters_ = summarize_clusters(values_, labels_);
}

std::vector<EigenCluster> SpectralDecomposition::clusters_by_multiplicity() const {
  auto out = clusters_;
  sort_by_multiplicity(out);
  return out;
}

int SpectralDecomposition::multiplicity_near(Complex value, double tol) const {
  int total = 0;
  for (const auto& c : clusters_)
    if (std::abs(c.value - value) < tol) total += c.multiplicity;
  return total;
}

namespace {

// F(n, xi) = w^{-n x}, x = xi - h.
Eigen::MatrixXcd fourier_matrix(int size) {
  const int h = (size - 1) / 2;
  Eigen::MatrixXcd f(size, size);
  for (int n = 0; n < size; ++n)
    for (int xi = 0; xi < size; ++xi) f(n, xi) = root_of_unity(-static_cast<long long>(n) * (xi - h), size);
  return f;
}

}  // namespace

WalkState evolve_spectral(const WalkState& initial, const SpectralDecomposition& spectrum,
                          long long t) {
  const int N = initial.size();
  if (spectrum.size() != N) {
    throw DomainError("spectrum size " + std::to_string(spectrum.size()) +
                      " does not match state size " + std::to_string(N));
  }
  if (t < 0) throw DomainError("time must be nonnegative");
  const Eigen::MatrixXcd f = fourier_matrix(N);
  const Eigen::MatrixXcd g = f.adjoint();
  const auto& a = initial.amplitudes();

  // Momentum-space components, one N x N matrix per chirality.
  std::array<Eigen::MatrixXcd, 4> hat;
  for (int c = 0; c < 4; ++c) {
    const Eigen::MatrixXcd psi = a.row(c).reshaped(N, N);  // (xi, yi)
    hat[c] = f * psi * f.transpose();
  }
  for (int n = 0; n < N; ++n) {
    for (int m = 0; m < N; ++m) {
      const MomentumBlock& b = spectrum.block({n, m});
      Vector4c v(hat[0](n, m), hat[1](n, m), hat[2](n, m), hat[3](n, m));
      Vector4c coeff = b.eigenvectors.adjoint() * v;
      for (int j = 0; j < 4; ++j) coeff(j) *= power(b.eigenvalues(j), t);
      v = b.eigenvectors * coeff;
      for (int c = 0; c < 4; ++c) hat[c](n, m) = v(c);
    }
  }
  WalkState::Field out(4, static_cast<Eigen::Index>(N) * N);
  const double scale = 1.0 / (static_cast<double>(N) * N);
  for (int c = 0; c < 4; ++c) {
    const Eigen::MatrixXcd psi = scale * (g * hat[c] * g.transpose());
    out.row(c) = psi.reshaped().transpose();
  }
  return WalkState(N, std::move(out), initial.time() + t);
}

WalkState evolve_spectral(const WalkState& initial, const Coin& coin, long long t) {
  return evolve_spectral(initial, SpectralDecomposition(coin, initial.size()), t);
}

Vector4c spectral_amplitude(const SpectralDecomposition& spectrum, const InitialSpec& initial,
                            int x, int y, long long t) {
  const int N = spectrum.size();
  const int h = (N - 1) / 2;
  if (x < -h || x > h || y < -h || y > h) throw DomainError("site outside lattice");
  Vector4c sum = Vector4c::Zero();
  for (const auto& b : spectrum.blocks()) {
    Vector4c coeff = b.eigenvectors.adjoint() * initial.weights();
    for (int j = 0; j < 4; ++j) coeff(j) *= power(b.eigenvalues(j), t);
    const long long phase = static_cast<long long>(b.momentum.n) * x + static_cast<long long>(b.momentum.m) * y;
    sum += root_of_unity(phase, N) * (b.eigenvectors * coeff);
  }
  return sum / (static_cast<double>(N) * N);
}

Complex OriginCoefficients::amplitude(Chirality c, long long t) const {
  const ChiralityCoefficients& cc = per_chirality[index_of(c)];
  Complex sum = cc.plus_one + cc.minus_one * (t % 2 == 0 ? 1.0 : -1.0);
  for (const auto& term : cc.classes) {
    sum += term.c[2] * power(term.cls.shared[0], t) + term.c[3] * power(term.cls.shared[1], t);
  }
  return sum / (static_cast<double>(size) * size);
}

OriginCoefficients origin_coefficients(const Coin& coin, const InitialSpec& initial, int size) {
  require_odd_size(size);
  if (!coin.approx_equal(grover_coin())) {
    throw UnsupportedError("origin coefficient tables exist only for the Grover coin, got '" +
                           coin.label() + "'");
  }
  const int N = size;
  const Vector4c& s = initial.weights();

  std::vector<MomentumBlock> blocks;
  blocks.reserve(static_cast<std::size_t>(N) * N);
  for (int n = 0; n < N; ++n)
    for (int m = 0; m < N; ++m) blocks.push_back(grover_block({n, m}, N));
  const auto block = [&](Momentum k) -> const MomentumBlock& { return blocks[k.n * N + k.m]; };
  // Weight of eigenpair j of block b in the amplitude of chirality row.
  const auto weight = [&](const MomentumBlock& b, int j, int row) {
    const Vector4c v = b.eigenvectors.col(j);
    return v(row) * v.dot(s);
  };

  std::vector<DegeneracyClass> classes;
  for (int n = 1; n <= (N - 1) / 2; ++n) classes.push_back(degeneracy_class({n, 0}, N));
  for (int n = 1; n <= N - 1; ++n) classes.push_back(degeneracy_class({n, n}, N));
  for (int n = 1; n <= (N - 3) / 2; ++n)
    for (int m = n + 1; m <= (N - 1) / 2; ++m) classes.push_back(degeneracy_class({n, m}, N));

  OriginCoefficients out;
  out.size = N;
  out.initial = initial;
  for (int row = 0; row < 4; ++row) {
    ChiralityCoefficients& cc = out.per_chirality[row];
    const MomentumBlock& zero = block({0, 0});
    for (int j = 0; j < 4; ++j) cc.origin_block[j] = weight(zero, j, row);
    cc.plus_one = 0.0;
    cc.minus_one = 0.0;
    for (const auto& b : blocks) {
      for (int j = 0; j < 4; ++j) {
        if (std::abs(b.eigenvalues(j) - 1.0) < kClusterTol) cc.plus_one += weight(b, j, row);
        if (std::abs(b.eigenvalues(j) + 1.0) < kClusterTol) cc.minus_one += weight(b, j, row);
      }
    }
    for (const DegeneracyClass& cls : classes) {
      ChiralityCoefficients::ClassTerm term{cls, {}};
      const Vector4c rep = block(cls.representative).eigenvalues;
      for (const Momentum& k : cls.members) {
        const MomentumBlock& b = block(k);
        for (int j = 0; j < 4; ++j) {
          int match = -1;
          for (int i = 0; i < 4; ++i)
            if (std::abs(b.eigenvalues(i) - rep(j)) < kClusterTol) match = i;
          if (match < 0) {
            throw NumericError("class member " + where(k, N) + " lacks a shared eigenvalue");
          }
          term.c[j] += weight(b, match, row);
        }
      }
      cc.classes.push_back(std::move(term));
    }
  }
  return out;
}

}  // namespace qwalk
