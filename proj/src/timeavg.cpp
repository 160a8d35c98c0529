#include "qwalk/timeavg.hpp"

#include "qwalk/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qwalk {

std::string_view name_of(Parity p) {
  switch (p) {
    case Parity::All: return "all";
    case Parity::Even: return "even";
    case Parity::Odd: return "odd";
  }
  return "?";
}

std::string_view name_of(AverageMethod m) {
  switch (m) {
    case AverageMethod::Empirical: return "empirical";
    case AverageMethod::ExactSpectral: return "exact";
    case AverageMethod::ClosedForm: return "closed-form";
    case AverageMethod::LimitInfiniteN: return "limit";
  }
  return "?";
}

const ChiralityValues* TimeAverageReport::values(Parity p) const {
  switch (p) {
    case Parity::All: return &all;
    case Parity::Even: return even ? &*even : nullptr;
    case Parity::Odd: return odd ? &*odd : nullptr;
  }
  return nullptr;
}

double TimeAverageReport::value(Chirality c, Parity p) const {
  const ChiralityValues* v = values(p);
  if (!v) throw DomainError("report has no " + std::string(name_of(p)) + "-time values");
  return (*v)[index_of(c)];
}

double TimeAverageReport::total(Parity p) const {
  const ChiralityValues* v = values(p);
  if (!v) throw DomainError("report has no " + std::string(name_of(p)) + "-time values");
  return qwalk::total(*v);
}

TimeAverageReport empirical_time_average(const WalkState& initial, const Coin& coin,
                                         long long steps, int x, int y, unsigned threads) {
  if (steps < 1) throw DomainError("empirical average needs T >= 1");
  const int site = initial.site_index(x, y);
  ChiralityValues sum_even{}, sum_odd{};
  long long n_even = 0, n_odd = 0;

  Evolver evolver(coin, initial, threads);
  evolver.run(steps - 1, [&](const Evolver& e) {
    const bool is_even = (e.time() - initial.time()) % 2 == 0;
    auto& acc = is_even ? sum_even : sum_odd;
    for (int c = 0; c < 4; ++c) acc[c] += std::norm(e.field()(c, site));
    (is_even ? n_even : n_odd) += 1;
  });

  TimeAverageReport r;
  r.method = AverageMethod::Empirical;
  r.coin = coin.label();
  r.size = initial.size();
  if (auto w = origin_weights(initial)) {
    r.initial = InitialSpec::normalized(*w).describe();
  } else {
    r.initial = "state";
  }
  r.x = x;
  r.y = y;
  ChiralityValues even{}, odd{};
  for (int c = 0; c < 4; ++c) {
    r.all[c] = (sum_even[c] + sum_odd[c]) / static_cast<double>(steps);
    if (n_even) even[c] = sum_even[c] / static_cast<double>(n_even);
    if (n_odd) odd[c] = sum_odd[c] / static_cast<double>(n_odd);
  }
  if (n_even) r.even = even;
  if (n_odd) r.odd = odd;
  return r;
}

TimeAverageReport exact_time_average(const SpectralDecomposition& spectrum,
                                     const InitialSpec& initial) {
  const int N = spectrum.size();
  const auto& clusters = spectrum.clusters();
  const auto& labels = spectrum.labels();
  const Vector4c& s = initial.weights();

  // Origin amplitude = (1/N^2) sum_clusters coeff[L] * lambda_L^t.
  std::vector<Vector4c> coeff(clusters.size(), Vector4c::Zero());
  const auto& blocks = spectrum.blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int j = 0; j < 4; ++j) {
      const Vector4c v = blocks[b].eigenvectors.col(j);
      coeff[static_cast<std::size_t>(labels[4 * b + j])] += v * v.dot(s);
    }
  }

  // lambda and -lambda share lambda^2; over a fixed parity they interfere.
  std::vector<Complex> squares;
  squares.reserve(clusters.size());
  for (const auto& c : clusters) squares.push_back(c.value * c.value);
  const std::vector<int> groups = cluster_labels(squares);
  const int n_groups = groups.empty() ? 0 : *std::max_element(groups.begin(), groups.end()) + 1;
  std::vector<Vector4c> even(static_cast<std::size_t>(n_groups), Vector4c::Zero());
  std::vector<Vector4c> odd(static_cast<std::size_t>(n_groups), Vector4c::Zero());
  for (std::size_t l = 0; l < clusters.size(); ++l) {
    even[static_cast<std::size_t>(groups[l])] += coeff[l];
    odd[static_cast<std::size_t>(groups[l])] += clusters[l].value * coeff[l];
  }

  const double n4 = std::pow(static_cast<double>(N), 4);
  ChiralityValues all{}, ev{}, od{};
  for (const auto& c : coeff)
    for (int i = 0; i < 4; ++i) all[i] += std::norm(c(i)) / n4;
  for (int g = 0; g < n_groups; ++g) {
    for (int i = 0; i < 4; ++i) {
      ev[i] += std::norm(even[g](i)) / n4;
      od[i] += std::norm(odd[g](i)) / n4;
    }
  }

  TimeAverageReport r;
  r.method = AverageMethod::ExactSpectral;
  r.coin = spectrum.coin_label();
  r.size = N;
  r.initial = initial.describe();
  r.all = all;
  r.even = ev;
  r.odd = od;
  return r;
}

TimeAverageReport exact_time_average(const Coin& coin, const InitialSpec& initial, int size) {
  return exact_time_average(SpectralDecomposition(coin, size), initial);
}

TimeAverageReport exact_time_average(const Coin& coin, const WalkState& initial) {
  const auto w = origin_weights(initial);
  if (!w) {
    throw UnsupportedError("exact time averages need an initial state localized at the origin");
  }
  return exact_time_average(coin, InitialSpec(*w), initial.size());
}

double grover_closed_form(int size, Parity parity) {
  require_odd_size(size);
  const double n = size;
  const double tail = -2.0 / (n * n * n) + 5.0 / (4.0 * n * n * n * n);
  switch (parity) {
    case Parity::All: return 1.0 / 8.0 + 5.0 / (4.0 * n * n) + tail;
    case Parity::Even: return 1.0 / 4.0 + 3.0 / (2.0 * n * n) + tail;
    case Parity::Odd: return 1.0 / (n * n) + tail;
  }
  return 0.0;
}

double limit_time_average(const Vector4c& w, Chirality c) {
  // |sum_i a_i p_i|^2 expanded as a quadratic form whose diagonal holds the
  // squared weights in closed form, so pure states give the exact constants.
  static const std::array<double, 4> sq = {
      1.0 / 8.0, 1.0 / 8.0 + 2.0 / (kPi * kPi) - 1.0 / kPi,
      1.0 / 8.0 + 1.0 / (2.0 * kPi * kPi) - 1.0 / (2.0 * kPi),
      1.0 / 8.0 + 1.0 / (2.0 * kPi * kPi) - 1.0 / (2.0 * kPi)};
  static const std::array<double, 4> a = {std::sqrt(sq[0]), -std::sqrt(sq[1]), std::sqrt(sq[2]),
                                          std::sqrt(sq[3])};
  // Reorder so that the measured chirality plays the role of R.
  Vector4c p;
  switch (c) {
    case Chirality::R: p = w; break;
    case Chirality::L: p << w(1), w(0), w(2), w(3); break;
    case Chirality::U: p << w(2), w(3), w(0), w(1); break;
    case Chirality::D: p << w(3), w(2), w(0), w(1); break;
  }
  double v = 0.0;
  for (int i = 0; i < 4; ++i) {
    v += sq[i] * std::norm(p(i));
    for (int j = i + 1; j < 4; ++j) v += 2.0 * a[i] * a[j] * (p(i) * std::conj(p(j))).real();
  }
  return std::max(v, 0.0);
}

double limit_time_average(const InitialSpec& initial, Chirality c) {
  return limit_time_average(initial.weights(), c);
}

ChiralityValues limit_time_average(const InitialSpec& initial) {
  ChiralityValues v{};
  for (Chirality c : kChiralities) v[index_of(c)] = limit_time_average(initial, c);
  return v;
}

AlphaExtrema alpha_extrema() {
  const double d = 16.0 - 8.0 * kPi + 2.0 * kPi * kPi;
  return {std::sqrt(1.0 - kPi * kPi / d), kPi / std::sqrt(d)};
}

std::vector<AlphaSample> scan_alpha(int samples) {
  if (samples < 2) throw DomainError("scan_alpha needs at least 2 samples");
  std::vector<AlphaSample> rows;
  rows.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const double alpha = -1.0 + 2.0 * i / (samples - 1);
    const double beta = std::sqrt(std::max(0.0, 1.0 - alpha * alpha));
    const Vector4c w(alpha, beta, 0.0, 0.0);
    rows.push_back({alpha, limit_time_average(w, Chirality::R), limit_time_average(w, Chirality::L)});
  }
  return rows;
}

LocalizationVerdict localization_predictor(const SpectralDecomposition& spectrum) {
  LocalizationVerdict v;
  for (const auto& c : spectrum.clusters()) v.max_multiplicity = std::max(v.max_multiplicity, c.multiplicity);

  const MomentumBlock& first = spectrum.blocks().front();
  std::vector<Complex> candidates;
  for (int j = 0; j < 4; ++j) {
    const Complex l = first.eigenvalues(j);
    const bool seen = std::any_of(candidates.begin(), candidates.end(),
                                  [&](Complex c) { return std::abs(c - l) < kClusterTol; });
    if (!seen) candidates.push_back(l);
  }
  for (Complex cand : candidates) {
    const bool everywhere = std::all_of(spectrum.blocks().begin(), spectrum.blocks().end(), [&](const MomentumBlock& b) {
      for (int j = 0; j < 4; ++j)
        if (std::abs(b.eigenvalues(j) - cand) < kClusterTol) return true;
      return false;
    });
    if (everywhere) v.common_eigenvalues.push_back(cand);
  }
  std::sort(v.common_eigenvalues.begin(), v.common_eigenvalues.end(),
            [](Complex a, Complex b) { return std::arg(a) < std::arg(b); });
  v.localizing = !v.common_eigenvalues.empty();
  return v;
}

LocalizationVerdict localization_predictor(const Coin& coin, int size) {
  return localization_predictor(SpectralDecomposition(coin, size));
}

GaussLegendre gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre needs n >= 1");
  GaussLegendre g;
  g.nodes.resize(static_cast<std::size_t>(n));
  g.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    g.nodes[i] = -x;
    g.nodes[n - 1 - i] = x;
    g.weights[i] = w;
    g.weights[n - 1 - i] = w;
  }
  return g;
}

namespace {

template <typename F>
double integrate_square(const GaussLegendre& g, double lo, double hi, F&& f) {
  const double half = (hi - lo) / 2.0;
  const double mid = (hi + lo) / 2.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const double x = mid + half * g.nodes[i];
    for (std::size_t j = 0; j < g.nodes.size(); ++j) {
      const double y = mid + half * g.nodes[j];
      sum += g.weights[i] * g.weights[j] * f(x, y);
    }
  }
  return sum * half * half;
}

double minus_one_weight(double cx, double cy) {
  return 2.0 * (cx + cy - 2.0 * cx * cy) / (-2.0 + cx + cy);
}

}  // namespace

IntegralConstants integral_constants(int nodes) {
  IntegralConstants k;
  k.i1 = 0.25 - 1.0 / kPi;
  k.i2 = 0.25 - 1.0 / (2.0 * kPi);
  const GaussLegendre g = gauss_legendre(nodes);
  k.i1_quadrature = integrate_square(g, 0.0, kPi, [](double x, double y) {
                      return minus_one_weight(std::cos(x), std::cos(y));
                    }) / (8.0 * kPi * kPi);
  k.i2_quadrature = integrate_square(g, 0.0, kPi / 2.0, [](double x, double y) {
                      const double sx = std::sin(x), sy = std::sin(y);
                      return 8.0 * sx * sx * sy * sy / (2.0 - std::cos(2.0 * x) - std::cos(2.0 * y));
                    }) / (2.0 * kPi * kPi);
  const double err = std::max(std::abs(k.i1 - k.i1_quadrature), std::abs(k.i2 - k.i2_quadrature));
  if (!(err <= 1e-6)) {
    std::ostringstream msg;
    msg << "integral constants disagree with quadrature by " << err;
    throw NumericError(msg.str());
  }
  return k;
}

double lattice_sum_i1(int size) {
  require_odd_size(size);
  const int N = size;
  double sum = 0.0;
  for (int n = 1; n <= (N - 3) / 2; ++n) {
    for (int m = n + 1; m <= (N - 1) / 2; ++m) {
      sum += minus_one_weight(std::cos(2.0 * kPi * m / N), std::cos(2.0 * kPi * n / N));
    }
  }
  return sum / (static_cast<double>(N) * N);
}

}  // namespace qwalk
