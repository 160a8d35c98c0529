#include "qwalk/io.hpp"

#include <charconv>
#include <cmath>

namespace qwalk {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_grid_csv(std::ostream& out, const WalkState& state) {
  const Eigen::MatrixXd grid = probability_grid(state);
  const int h = state.half();
  out << "x,y,p\n";
  for (int x = -h; x <= h; ++x) {
    for (int y = -h; y <= h; ++y) {
      out << x << ',' << y << ',' << format_double(grid(x + h, y + h)) << '\n';
    }
  }
}

nlohmann::json grid_json(const WalkState& state, const std::string& coin, const std::string& initial) {
  const Eigen::MatrixXd grid = probability_grid(state);
  const int h = state.half();
  nlohmann::json cells = nlohmann::json::array();
  for (int x = -h; x <= h; ++x)
    for (int y = -h; y <= h; ++y) cells.push_back({{"x", x}, {"y", y}, {"p", grid(x + h, y + h)}});
  return {{"coin", coin}, {"N", state.size()}, {"t", state.time()}, {"initial", initial}, {"grid", cells}};
}

nlohmann::json spectrum_json(const SpectralDecomposition& spectrum) {
  nlohmann::json clusters = nlohmann::json::array();
  for (const auto& c : spectrum.clusters_by_multiplicity()) {
    clusters.push_back({{"value", {c.value.real(), c.value.imag()}}, {"multiplicity", c.multiplicity}});
  }
  return {{"coin", spectrum.coin_label()},
          {"N", spectrum.size()},
          {"eigenvalue_count", spectrum.eigenvalues().size()},
          {"clusters", clusters}};
}

nlohmann::json report_json(const TimeAverageReport& report, Parity parity) {
  const ChiralityValues* v = report.values(parity);
  if (!v) throw DomainError("report has no " + std::string(name_of(parity)) + "-time values");
  nlohmann::json per;
  for (Chirality c : kChiralities) per[std::string(name_of(c))] = (*v)[index_of(c)];
  nlohmann::json j = {{"coin", report.coin},
                      {"initial", report.initial},
                      {"parity", std::string(name_of(parity))},
                      {"per_chirality", per},
                      {"total", total(*v)},
                      {"method", std::string(name_of(report.method))}};
  j["N"] = report.size ? nlohmann::json(*report.size) : nlohmann::json("infinity");
  if (report.x != 0 || report.y != 0) j["site"] = {report.x, report.y};
  return j;
}

void write_alpha_csv(std::ostream& out, const std::vector<AlphaSample>& rows) {
  out << "alpha,p_R,p_L\n";
  for (const auto& r : rows) {
    out << format_double(r.alpha) << ',' << format_double(r.p_r) << ',' << format_double(r.p_l) << '\n';
  }
}

}  // namespace qwalk
