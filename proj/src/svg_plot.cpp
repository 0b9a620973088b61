#include "morphsim/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace morphsim {

namespace {

constexpr double kWidth = 800, kHeight = 500;
constexpr double kLeft = 70, kRight = 30, kTop = 40, kBottom = 50;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

SvgPlot::SvgPlot(std::string title, std::string xlabel, std::string ylabel)
    : title_(std::move(title)), xlabel_(std::move(xlabel)), ylabel_(std::move(ylabel)) {}

void SvgPlot::add_series(std::string label, std::vector<double> xs, std::vector<double> ys) {
    if (xs.size() != ys.size())
        throw std::invalid_argument("SvgPlot: series x/y size mismatch");
    series_.push_back({std::move(label), std::move(xs), std::move(ys)});
}

std::string SvgPlot::render() const {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& s : series_) {
        for (double x : s.xs) { xmin = std::min(xmin, x); xmax = std::max(xmax, x); }
        for (double y : s.ys) { ymin = std::min(ymin, y); ymax = std::max(ymax, y); }
    }
    if (!(xmin < xmax)) { xmin -= 1.0; xmax += 1.0; }
    if (!(ymin < ymax)) { ymin -= 1.0; ymax += 1.0; }
    const double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad; ymax += ypad;

    const double pw = kWidth - kLeft - kRight;
    const double ph = kHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * pw; };
    auto py = [&](double y) { return kTop + (ymax - y) / (ymax - ymin) * ph; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">"
        << title_ << "</text>\n";

    // axes box and ticks
    out << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\""
        << ph << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 5; ++i) {
        const double xv = xmin + i * (xmax - xmin) / 5.0;
        const double yv = ymin + i * (ymax - ymin) / 5.0;
        out << "<line x1=\"" << px(xv) << "\" y1=\"" << kTop + ph << "\" x2=\"" << px(xv)
            << "\" y2=\"" << kTop + ph + 5 << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << px(xv) << "\" y=\"" << kTop + ph + 18
            << "\" text-anchor=\"middle\">" << fmt(xv) << "</text>\n";
        out << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << py(yv) << "\" x2=\"" << kLeft
            << "\" y2=\"" << py(yv) << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << kLeft - 8 << "\" y=\"" << py(yv) + 4
            << "\" text-anchor=\"end\">" << fmt(yv) << "</text>\n";
    }
    out << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 10
        << "\" text-anchor=\"middle\">" << xlabel_ << "</text>\n";
    out << "<text x=\"16\" y=\"" << kTop + ph / 2
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " << kTop + ph / 2 << ")\">"
        << ylabel_ << "</text>\n";

    // series
    for (std::size_t i = 0; i < series_.size(); ++i) {
        const auto& s = series_[i];
        const char* color = kPalette[i % 6];
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.2\" points=\"";
        for (std::size_t k = 0; k < s.xs.size(); ++k) {
            if (k) out << ' ';
            out << fmt(px(s.xs[k])) << ',' << fmt(py(s.ys[k]));
        }
        out << "\"/>\n";
        const double ly = kTop + 16 + 16.0 * static_cast<double>(i);
        out << "<line x1=\"" << kLeft + pw - 150 << "\" y1=\"" << ly << "\" x2=\""
            << kLeft + pw - 125 << "\" y2=\"" << ly << "\" stroke=\"" << color
            << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << kLeft + pw - 120 << "\" y=\"" << ly + 4 << "\">" << s.label
            << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

void SvgPlot::write(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << render();
}

}  // namespace morphsim
