// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include "qwalk/evolve.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/timeavg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace qwalk;

namespace {

int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
  std::printf("%s %2d %s: %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double max_multiset_gap(std::vector<Complex> a, std::vector<Complex> b) {
  double worst = 0;
  for (Complex x : a) {
    auto it = std::min_element(b.begin(), b.end(), [x](Complex p, Complex q) {
      return std::abs(p - x) < std::abs(q - x);
    });
    worst = std::max(worst, std::abs(*it - x));
    b.erase(it);
  }
  return worst;
}

std::vector<Complex> values(const Vector4c& v) { return {v.data(), v.data() + 4}; }

const InitialSpec kR = InitialSpec::pure(Chirality::R);

double poly_all(int n) {
  const double x = 1.0 / n;
  return 0.125 + 1.25 * x * x - 2 * x * x * x + 1.25 * std::pow(x, 4);
}
double poly_even(int n) {
  const double x = 1.0 / n;
  return 0.25 + 1.5 * x * x - 2 * x * x * x + 1.25 * std::pow(x, 4);
}
double poly_odd(int n) {
  const double x = 1.0 / n;
  return x * x - 2 * x * x * x + 1.25 * std::pow(x, 4);
}

void closed_form_match() {
  double worst = 0;
  for (int n : {3, 5, 7, 9, 11})
    worst = std::max(worst, std::abs(exact_time_average(grover_coin(), kR, n).value(Chirality::R) -
                                     poly_all(n)));
  report(1, "closed-form finite-N match", worst < 1e-10,
         fmt("max |exact - polynomial| = %.3g over N = 3..11", worst));
}

void parity_split() {
  double worst = 0, split = 0;
  for (int n : {3, 5, 7, 9, 11}) {
    const TimeAverageReport r = exact_time_average(grover_coin(), kR, n);
    const double e = r.value(Chirality::R, Parity::Even), o = r.value(Chirality::R, Parity::Odd);
    worst = std::max({worst, std::abs(e - poly_even(n)), std::abs(o - poly_odd(n))});
    split = std::max(split, std::abs(r.value(Chirality::R) - 0.5 * (e + o)));
  }
  report(2, "even/odd split", worst < 1e-10 && split < 1e-10,
         fmt("max formula gap %.3g, max |all - (even+odd)/2| %.3g", worst, split));
}

void limit_values() {
  const double pi = kPi;
  const ChiralityValues v = limit_time_average(kR);
  const double want[4] = {0.125, 0.125 + 2 / (pi * pi) - 1 / pi, 0.125 + 1 / (2 * pi * pi) - 1 / (2 * pi),
                          0.125 + 1 / (2 * pi * pi) - 1 / (2 * pi)};
  double gap = 0;
  for (int i = 0; i < 4; ++i) gap = std::max(gap, std::abs(v[i] - want[i]));
  const double lim = 0.5 + 3 / (pi * pi) - 2 / pi;
  gap = std::max(gap, std::abs(total(v) - lim));

  std::vector<double> totals;
  for (int n : {5, 9, 15, 21}) totals.push_back(exact_time_average(grover_coin(), kR, n).total());
  const bool monotone = std::is_sorted(totals.rbegin(), totals.rend()) && totals.back() > lim;
  const double d21 = totals.back() - lim;
  report(3, "limit values", gap < 1e-15 && monotone && std::abs(d21) < 0.01,
         fmt("limit gap %.3g, total limit %.5f; N=5,9,15,21 totals %.5f %.5f %.5f %.5f", gap, lim,
             totals[0], totals[1], totals[2], totals[3]));
}

void alpha_scan() {
  auto pr = [](double a) {
    return limit_time_average(Vector4c(a, std::sqrt(std::max(0.0, 1 - a * a)), 0, 0), Chirality::R);
  };
  // Locate the root and the maximum of P_R on [-1, 1] by a fine scan refined
  // with golden-section search.
  auto refine = [&](double lo, double hi, const std::function<double(double)>& f) {
    const double g = (std::sqrt(5.0) - 1) / 2;
    for (int it = 0; it < 200; ++it) {
      const double a = hi - g * (hi - lo), b = lo + g * (hi - lo);
      (f(a) < f(b) ? hi : lo) = (f(a) < f(b) ? b : a);
    }
    return 0.5 * (lo + hi);
  };
  const int samples = 200001;
  double amin = -1, amax = -1, pmin = 1e9, pmax = -1;
  for (int i = 0; i < samples; ++i) {
    const double a = -1 + 2.0 * i / (samples - 1);
    const double p = pr(a);
    if (p < pmin) pmin = p, amin = a;
    if (a > -1 && a < 1 && p > pmax) pmax = p, amax = a;
  }
  const double h = 2.0 / (samples - 1);
  const double root = refine(amin - h, amin + h, pr);
  const double peak = refine(amax - h, amax + h, [&](double a) { return -pr(a); });

  const double expect_max = kPi / std::sqrt(16 - 8 * kPi + 2 * kPi * kPi);
  const bool root_ok = std::abs(root - 0.26357) < 1e-4;
  const bool max_ok = std::abs(peak - expect_max) < 1e-4;
  report(4, "alpha scan", root_ok && max_ok,
         fmt("root at %.6f (%s); maximum of P_R at %.6f, expected %.6f (%s)", root,
             root_ok ? "ok" : "off", peak, expect_max, max_ok ? "ok" : "off"));
}

void delocalizing_family() {
  double worst = 0;
  for (double theta : {0.0, 1.0 / 3.0, 1.0}) {
    const Complex e = std::polar(0.5, theta);
    for (double v : limit_time_average(InitialSpec(e, e, -e, -e))) worst = std::max(worst, std::abs(v));
  }
  const Complex e = std::polar(0.5, 1.0 / 3.0);
  const InitialSpec s(e, e, -e, -e);
  const double t9 = exact_time_average(grover_coin(), s, 9).total();
  const double t19 = exact_time_average(grover_coin(), s, 19).total();
  report(5, "delocalizing family", worst < 1e-12 && t9 >= 2 * t19,
         fmt("max |limit| %.3g; origin total N=9 %.5g, N=19 %.5g (ratio %.2f)", worst, t9, t19, t9 / t19));
}

void degeneracy_census() {
  bool ok = true;
  std::string detail;
  for (int n : {5, 7, 9}) {
    const SpectralDecomposition s(grover_coin(), n);
    const int lo = s.multiplicity_near(-1), hi = s.multiplicity_near(1);
    ok = ok && lo == n * n + 2 && hi == n * n;
    detail += fmt("N=%d: -1 x%d, +1 x%d; ", n, lo, hi);
  }
  report(6, "degeneracy census", ok, detail);
}

void backend_equivalence() {
  const std::vector<Coin> coins = {grover_coin(), a1_coin(), a2_coin(), symmetric_family(1.0 / 3.0)};
  const std::vector<InitialSpec> inits = {kR, InitialSpec(Vector4c(Complex(0.5, 0), Complex(0, 0.5),
                                                                   Complex(-0.5, 0), std::polar(0.5, 0.7)))};
  double amp = 0, norm = 0;
  for (const Coin& coin : coins) {
    for (int n : {3, 5, 7}) {
      const SpectralDecomposition sp(coin, n);
      for (const InitialSpec& init : inits) {
        const WalkState start = origin_superposition(n, init);
        Evolver ev(coin, start);
        for (int t = 0; t <= 50; ++t) {
          const WalkState spec = evolve_spectral(start, sp, t);
          amp = std::max(amp, (spec.amplitudes() - ev.field()).cwiseAbs().maxCoeff());
          norm = std::max({norm, std::abs(ev.field().squaredNorm() - 1), std::abs(spec.norm_squared() - 1)});
          ev.step();
        }
      }
    }
  }
  report(7, "backend equivalence", amp < 1e-10 && norm < 1e-10,
         fmt("max amplitude gap %.3g, max norm drift %.3g", amp, norm));
}

void empirical_convergence() {
  const double ref = poly_all(5);
  const WalkState start = pure_state(5, Chirality::R);
  const double e20 = std::abs(empirical_time_average(start, grover_coin(), 20000).value(Chirality::R) - ref);
  const double e10 = std::abs(empirical_time_average(start, grover_coin(), 10000).value(Chirality::R) - ref);
  const double ratio = e10 / e20;
  report(8, "empirical convergence", e20 < 2e-3 && ratio >= 1.3 && ratio <= 3,
         fmt("error T=20000 %.4g, T=10000 %.4g, ratio %.2f", e20, e10, ratio));
}

void predictor() {
  struct Case {
    const char* name;
    Coin coin;
    bool expect;
  };
  const std::vector<Case> cases = {{"A0", grover_coin(), true},
                                   {"A1", a1_coin(), false},
                                   {"A2", a2_coin(), false},
                                   {"A4(1/3)", symmetric_family(1.0 / 3.0), true}};
  bool ok = true;
  std::string detail;
  for (const Case& c : cases) {
    bool verdict = true, above = true;
    std::string totals;
    for (int n : {5, 9, 15}) {
      const SpectralDecomposition sp(c.coin, n);
      verdict = verdict && localization_predictor(sp).localizing;
      const double t = exact_time_average(sp, kR).total();
      above = above && t > 0.05;
      totals += fmt(" %.4f", t);
    }
    ok = ok && verdict == c.expect && above == verdict;
    detail += fmt("%s %s [%s ]; ", c.name, verdict ? "yes" : "no", totals.c_str() + 0);
  }
  report(9, "localization predictor", ok, detail);
}

void eigenvalue_closed_forms() {
  double grover = 0;
  for (int n : {5, 7, 9})
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        grover = std::max(grover, max_multiset_gap(values(build_block(grover_coin(), {a, b}, n).eigenvalues),
                                                   values(grover_eigenvalues({a, b}, n))));
  // A1 reference closed form: +-sqrt(i cos xi_n cos xi_m +- f) with
  // f = sqrt(sin^2 xi_m + cos^2 xi_n cos^2 xi_m).
  double a1 = 0;
  for (int n : {5, 7, 9})
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const double xn = 2 * kPi * a / n, xm = 2 * kPi * b / n;
        const double cn = std::cos(xn), cm = std::cos(xm), sm = std::sin(xm);
        const double f = std::sqrt(sm * sm + cn * cn * cm * cm);
        std::vector<Complex> closed;
        for (double sign : {1.0, -1.0}) {
          const Complex r = std::sqrt(Complex(sign * f, cn * cm));
          closed.push_back(r);
          closed.push_back(-r);
        }
        a1 = std::max(a1, max_multiset_gap(values(build_block(a1_coin(), {a, b}, n).eigenvalues), closed));
      }
  report(10, "eigenvalue closed forms", grover < 1e-10 && a1 < 1e-10,
         fmt("Grover max gap %.3g; A1 reference form max gap %.3g", grover, a1));
}

}  // namespace

int main() {
  closed_form_match();
  parity_split();
  limit_values();
  alpha_scan();
  delocalizing_family();
  degeneracy_census();
  backend_equivalence();
  empirical_convergence();
  predictor();
  eigenvalue_closed_forms();
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
