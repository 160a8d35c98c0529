#pragma once

#include "qwalk/spectral.hpp"
#include "qwalk/state.hpp"
#include "qwalk/timeavg.hpp"

#include "json.hpp"

#include <ostream>
#include <string>

namespace qwalk {

/// Shortest decimal text that round-trips to the same double.
std::string format_double(double v);

/// Header `x,y,p`; rows ordered by x then y, centered coordinates.
void write_grid_csv(std::ostream& out, const WalkState& state);
nlohmann::json grid_json(const WalkState& state, const std::string& coin,
                         const std::string& initial);

nlohmann::json spectrum_json(const SpectralDecomposition& spectrum);

nlohmann::json report_json(const TimeAverageReport& report, Parity parity);

/// Header `alpha,p_R,p_L`.
void write_alpha_csv(std::ostream& out, const std::vector<AlphaSample>& rows);

}  // namespace qwalk
