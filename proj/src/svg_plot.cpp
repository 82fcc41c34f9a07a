#include "tpzeros/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace tpz {

namespace {

constexpr double kCanvas = 600.0;
constexpr double kMargin = 50.0;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s(buf);
    if (s == "-0.000")
        s = "0.000";
    return s;
}

std::string escape(const std::string& text) {
    std::string out;
    for (char ch : text) {
        switch (ch) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += ch;
        }
    }
    return out;
}

// "Nice" tick step for a half-extent.
double tick_step(double extent) {
    const double raw = extent / 2.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double f : {1.0, 2.0, 5.0}) {
        if (f * mag >= raw)
            return f * mag;
    }
    return 10.0 * mag;
}

} // namespace

std::string render_zero_plot(const ZeroPlot& plot) {
    double extent = plot.circle_radius;
    for (auto z : plot.zeros)
        extent = std::max({extent, std::abs(z.real()), std::abs(z.imag())});
    extent *= 1.15;
    if (!(extent > 0.0) || !std::isfinite(extent))
        extent = 1.0;

    const double plot_size = kCanvas - 2.0 * kMargin;
    const double scale = plot_size / (2.0 * extent);
    const double cx = kMargin + plot_size / 2.0;
    const double cy = kMargin + plot_size / 2.0;
    const auto px = [&](double x) { return cx + x * scale; };
    const auto py = [&](double y) { return cy - y * scale; };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(kCanvas)
        << "\" height=\"" << fmt(kCanvas) << "\" viewBox=\"0 0 " << fmt(kCanvas) << ' ' << fmt(kCanvas) << "\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"" << fmt(kCanvas) << "\" height=\"" << fmt(kCanvas)
        << "\" fill=\"white\"/>\n";

    svg << "<text x=\"" << fmt(kCanvas / 2.0) << "\" y=\"" << fmt(kMargin / 2.0)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" << escape(plot.title)
        << "</text>\n";

    // Frame, axes and ticks.
    svg << "<rect x=\"" << fmt(kMargin) << "\" y=\"" << fmt(kMargin) << "\" width=\"" << fmt(plot_size)
        << "\" height=\"" << fmt(plot_size) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg << "<line x1=\"" << fmt(kMargin) << "\" y1=\"" << fmt(cy) << "\" x2=\"" << fmt(kMargin + plot_size)
        << "\" y2=\"" << fmt(cy) << "\" stroke=\"gray\" stroke-width=\"0.5\"/>\n";
    svg << "<line x1=\"" << fmt(cx) << "\" y1=\"" << fmt(kMargin) << "\" x2=\"" << fmt(cx) << "\" y2=\""
        << fmt(kMargin + plot_size) << "\" stroke=\"gray\" stroke-width=\"0.5\"/>\n";
    const double step = tick_step(extent);
    const int n_ticks = static_cast<int>(std::floor(extent / step));
    for (int k = -n_ticks; k <= n_ticks; ++k) {
        const double v = k * step;
        svg << "<text x=\"" << fmt(px(v)) << "\" y=\"" << fmt(kMargin + plot_size + 16.0)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">" << fmt(v) << "</text>\n";
        svg << "<text x=\"" << fmt(kMargin - 6.0) << "\" y=\"" << fmt(py(v) + 3.0)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">" << fmt(v) << "</text>\n";
    }

    svg << "<circle cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy) << "\" r=\"" << fmt(plot.circle_radius * scale)
        << "\" fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\"/>\n";
    if (!plot.circle_label.empty()) {
        svg << "<text x=\"" << fmt(kCanvas - kMargin) << "\" y=\"" << fmt(kCanvas - 8.0)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\" fill=\"steelblue\">"
            << escape(plot.circle_label) << "</text>\n";
    }

    for (auto z : plot.zeros) {
        svg << "<circle cx=\"" << fmt(px(z.real())) << "\" cy=\"" << fmt(py(z.imag()))
            << "\" r=\"3.000\" fill=\"crimson\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace tpz
