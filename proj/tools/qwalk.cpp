// Command-line front end: grid snapshots, block spectra, time averages,
// the alpha scan and the localization verdict.

#include "qwalk/evolve.hpp"
#include "qwalk/io.hpp"
#include "qwalk/run_config.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/timeavg.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using namespace qwalk;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Writes via `emit` to the output path, or stdout for "-".
template <typename Emit>
void write_output(const std::string& path, Emit&& emit) {
  if (path == "-") {
    emit(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  emit(out);
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

// Summary lines go to stdout unless stdout carries the data itself.
std::ostream& summary(const RunConfig& cfg) { return cfg.output == "-" ? std::cerr : std::cout; }

std::string num(double v) {
  std::ostringstream s;
  s << std::setprecision(12) << v;
  return s.str();
}

std::string num(Complex v) {
  std::ostringstream s;
  s << std::setprecision(12) << v.real() << (std::signbit(v.imag()) ? "" : "+") << v.imag() << "i";
  return s.str();
}

ParsedInitial initial_of(const RunConfig& cfg) {
  ParsedInitial p = parse_initial(cfg.initial);
  if (p.rescaled) {
    std::cerr << "warning: initial weights rescaled to unit norm (|norm - 1| = " << p.norm_deviation << ")\n";
  }
  return p;
}

int cmd_simulate(const RunConfig& cfg) {
  const Coin coin = parse_coin(cfg.coin_selector);
  const ParsedInitial init = initial_of(cfg);
  const WalkState start = origin_superposition(cfg.size, init.spec);
  const WalkState end = cfg.backend == Backend::Direct ? evolve(start, coin, cfg.steps, cfg.threads)
                                                       : evolve_spectral(start, SpectralDecomposition(coin, cfg.size, cfg.threads), cfg.steps);
  write_output(cfg.output, [&](std::ostream& out) {
    if (cfg.format == OutputFormat::Csv) {
      write_grid_csv(out, end);
    } else {
      out << grid_json(end, coin.label(), init.spec.describe()).dump(2) << '\n';
    }
  });
  const Eigen::MatrixXd grid = probability_grid(end);
  Eigen::Index xi = 0, yi = 0;
  const double peak = grid.maxCoeff(&xi, &yi);
  auto& s = summary(cfg);
  s << "origin probability: " << num(probability_at(end, 0, 0)) << '\n';
  s << "grid max: " << num(peak) << " at (" << xi - end.half() << ", " << yi - end.half() << ")\n";
  return kExitOk;
}

int cmd_spectrum(const RunConfig& cfg) {
  const Coin coin = parse_coin(cfg.coin_selector);
  const SpectralDecomposition spectrum(coin, cfg.size, cfg.threads);
  write_output(cfg.output, [&](std::ostream& out) { out << spectrum_json(spectrum).dump(2) << '\n'; });
  return kExitOk;
}

int cmd_timeavg(const RunConfig& cfg) {
  const Coin coin = parse_coin(cfg.coin_selector);
  const ParsedInitial init = initial_of(cfg);
  // The values are the primary result; JSON goes only to an explicit path.
  auto& s = std::cout;

  if (cfg.method == "closed-form") {
    if (!coin.approx_equal(grover_coin()) || init.spec.describe() != "R") {
      throw UsageError("closed-form averages exist only for --coin grover --initial R");
    }
    const double v = grover_closed_form(cfg.size, cfg.parity);
    s << num(v) << '\n';
    if (cfg.output != "-") {
      const nlohmann::json j = {{"coin", coin.label()}, {"N", cfg.size}, {"initial", "R"},
                                {"parity", std::string(name_of(cfg.parity))},
                                {"per_chirality", {{"R", v}}}, {"method", "closed-form"}};
      write_output(cfg.output, [&](std::ostream& out) { out << j.dump(2) << '\n'; });
    }
    return kExitOk;
  }

  TimeAverageReport report;
  if (cfg.method == "exact") {
    report = exact_time_average(SpectralDecomposition(coin, cfg.size, cfg.threads), init.spec);
  } else if (cfg.method == "empirical") {
    if (cfg.steps < 1) throw UsageError("--method empirical needs --steps T >= 1");
    report = empirical_time_average(origin_superposition(cfg.size, init.spec), coin, cfg.steps, 0, 0, cfg.threads);
  } else if (cfg.method == "limit") {
    if (!coin.approx_equal(grover_coin())) throw UsageError("--method limit applies to the Grover coin only");
    if (cfg.parity != Parity::All) throw UsageError("--method limit supports --parity all only");
    report.method = AverageMethod::LimitInfiniteN;
    report.coin = coin.label();
    report.initial = init.spec.describe();
    report.all = limit_time_average(init.spec);
  } else {
    throw UsageError("unknown method '" + cfg.method + "' (empirical, exact, closed-form, limit)");
  }

  const ChiralityValues* v = report.values(cfg.parity);
  if (!v) throw UsageError("no samples for parity " + std::string(name_of(cfg.parity)));
  for (Chirality c : kChiralities) s << name_of(c) << ' ' << num((*v)[index_of(c)]) << '\n';
  s << "total " << num(total(*v)) << '\n';
  if (cfg.output != "-") {
    write_output(cfg.output, [&](std::ostream& out) { out << report_json(report, cfg.parity).dump(2) << '\n'; });
  }
  return kExitOk;
}

int cmd_scan_alpha(const RunConfig& cfg) {
  const auto rows = scan_alpha(cfg.samples);
  write_output(cfg.output, [&](std::ostream& out) { write_alpha_csv(out, rows); });
  return kExitOk;
}

int cmd_predict(const RunConfig& cfg) {
  const Coin coin = parse_coin(cfg.coin_selector);
  const LocalizationVerdict v = localization_predictor(SpectralDecomposition(coin, cfg.size, cfg.threads));
  std::cout << "localizing: " << (v.localizing ? "yes" : "no") << '\n';
  std::cout << "common eigenvalues:";
  for (Complex l : v.common_eigenvalues) std::cout << ' ' << num(l);
  std::cout << '\n' << "max multiplicity: " << v.max_multiplicity << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-dimensional coined quantum walks on the periodic N x N lattice"};
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.threads = threads_from_env(1);
  std::string format = "csv", backend = "direct", parity = "all";

  auto add_coin = [&](CLI::App* c) {
    c->add_option("--coin", cfg.coin_selector, "grover | a1 | a2 | identity | a4:<p> | file:<path>");
  };
  auto add_size = [&](CLI::App* c) { c->add_option("--n", cfg.size, "odd lattice size N >= 3"); };
  auto add_output = [&](CLI::App* c) { c->add_option("-o,--output", cfg.output, "output path, '-' for stdout"); };
  auto add_threads = [&](CLI::App* c) {
    c->add_option("--threads", cfg.threads, "worker threads (default: QWALK_THREADS or 1)")->check(CLI::PositiveNumber);
  };
  auto add_initial = [&](CLI::App* c) {
    c->add_option("--initial", cfg.initial, "R | L | U | D | custom:a,b,c,d");
  };

  auto* sim = app.add_subcommand("simulate", "probability grid after --steps steps");
  add_coin(sim);
  add_size(sim);
  sim->add_option("--steps", cfg.steps, "number of steps")->check(CLI::NonNegativeNumber);
  add_initial(sim);
  add_output(sim);
  sim->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  sim->add_option("--backend", backend, "direct | spectral")->check(CLI::IsMember({"direct", "spectral"}));
  add_threads(sim);

  auto* spec = app.add_subcommand("spectrum", "eigenvalue clusters over all momentum blocks (JSON)");
  add_coin(spec);
  add_size(spec);
  add_output(spec);
  add_threads(spec);

  auto* avg = app.add_subcommand("timeavg", "time-averaged origin probabilities");
  add_coin(avg);
  add_size(avg);
  add_initial(avg);
  avg->add_option("--method", cfg.method, "empirical | exact | closed-form | limit");
  avg->add_option("--steps", cfg.steps, "T for --method empirical");
  avg->add_option("--parity", parity, "all | even | odd")->check(CLI::IsMember({"all", "even", "odd"}));
  add_output(avg);
  add_threads(avg);

  auto* scan = app.add_subcommand("scan-alpha", "limit averages for (alpha, sqrt(1-alpha^2), 0, 0) as CSV");
  scan->add_option("--samples", cfg.samples, "grid points on [-1, 1]")->check(CLI::Range(2, 100000000));
  add_output(scan);

  auto* pred = app.add_subcommand("predict", "eigenvalues common to every momentum block");
  add_coin(pred);
  add_size(pred);
  add_threads(pred);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  cfg.format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
  cfg.backend = backend == "spectral" ? Backend::Spectral : Backend::Direct;

  try {
    cfg.parity = parse_parity(parity);
    if (sim->parsed()) return cmd_simulate(cfg);
    if (spec->parsed()) return cmd_spectrum(cfg);
    if (avg->parsed()) return cmd_timeavg(cfg);
    if (scan->parsed()) return cmd_scan_alpha(cfg);
    if (pred->parsed()) return cmd_predict(cfg);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::invalid_argument& e) {  // UsageError, ValidationError
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnsupportedError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitUsage;
}
