#pragma once

#include <complex>
#include <string>
#include <vector>

namespace tpz {

struct ZeroPlot {
    std::string title;
    std::vector<std::complex<double>> zeros;
    double circle_radius = 1.0;
    std::string circle_label;
};

/// SVG 1.1 scatter of zeros in the complex plane with a reference circle
/// centred at the origin. Equal axis scaling. Output is a pure function of
/// the input (fixed precision, no ids or timestamps).
std::string render_zero_plot(const ZeroPlot& plot);

} // namespace tpz
