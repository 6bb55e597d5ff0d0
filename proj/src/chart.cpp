#include "nk/chart.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace nk {

namespace {

constexpr double kWidth = 960.0;
constexpr double kHeight = 600.0;
constexpr double kMarginLeft = 80.0;
constexpr double kMarginRight = 180.0; // room for the legend
constexpr double kMarginTop = 50.0;
constexpr double kMarginBottom = 60.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                          "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

} // namespace

std::string render_line_chart(const std::vector<ChartSeries>& series,
                              const std::string& title, const std::string& x_label,
                              const std::string& y_label) {
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    bool any = false;
    for (const auto& s : series)
        for (const auto& [x, y] : s.points) {
            if (!any) {
                xmin = xmax = x;
                ymin = ymax = y;
                any = true;
            }
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    if (!any) throw std::invalid_argument("render_line_chart: no data points");
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;

    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;
    auto sx = [&](double x) { return kMarginLeft + (x - xmin) / (xmax - xmin) * plot_w; };
    auto sy = [&](double y) { return kMarginTop + plot_h - (y - ymin) / (ymax - ymin) * plot_h; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 960 600\" "
           "font-family=\"sans-serif\">\n";
    svg << "<rect width=\"960\" height=\"600\" fill=\"white\"/>\n";
    svg << "<text x=\"" << num(kWidth / 2) << "\" y=\"28\" text-anchor=\"middle\" "
           "font-size=\"18\">" << title << "</text>\n";

    // axes
    svg << "<line x1=\"" << num(kMarginLeft) << "\" y1=\"" << num(kMarginTop + plot_h)
        << "\" x2=\"" << num(kMarginLeft + plot_w) << "\" y2=\"" << num(kMarginTop + plot_h)
        << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << num(kMarginLeft) << "\" y1=\"" << num(kMarginTop) << "\" x2=\""
        << num(kMarginLeft) << "\" y2=\"" << num(kMarginTop + plot_h) << "\" stroke=\"black\"/>\n";

    const int ticks = 5;
    for (int i = 0; i <= ticks; ++i) {
        const double fx = xmin + (xmax - xmin) * i / ticks;
        const double fy = ymin + (ymax - ymin) * i / ticks;
        svg << "<line x1=\"" << num(sx(fx)) << "\" y1=\"" << num(kMarginTop + plot_h)
            << "\" x2=\"" << num(sx(fx)) << "\" y2=\"" << num(kMarginTop + plot_h + 6)
            << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << num(sx(fx)) << "\" y=\"" << num(kMarginTop + plot_h + 22)
            << "\" text-anchor=\"middle\" font-size=\"12\">" << tick_label(fx) << "</text>\n";
        svg << "<line x1=\"" << num(kMarginLeft - 6) << "\" y1=\"" << num(sy(fy)) << "\" x2=\""
            << num(kMarginLeft) << "\" y2=\"" << num(sy(fy)) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << num(kMarginLeft - 10) << "\" y=\"" << num(sy(fy) + 4)
            << "\" text-anchor=\"end\" font-size=\"12\">" << tick_label(fy) << "</text>\n";
    }
    svg << "<text x=\"" << num(kMarginLeft + plot_w / 2) << "\" y=\"" << num(kHeight - 14)
        << "\" text-anchor=\"middle\" font-size=\"14\">" << x_label << "</text>\n";
    svg << "<text x=\"22\" y=\"" << num(kMarginTop + plot_h / 2)
        << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 22 "
        << num(kMarginTop + plot_h / 2) << ")\">" << y_label << "</text>\n";

    const std::size_t ncolors = sizeof kPalette / sizeof kPalette[0];
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (series[i].points.empty()) continue;
        svg << "<polyline fill=\"none\" stroke=\"" << kPalette[i % ncolors]
            << "\" stroke-width=\"2\" points=\"";
        for (const auto& [x, y] : series[i].points)
            svg << num(sx(x)) << ',' << num(sy(y)) << ' ';
        svg << "\"/>\n";
    }

    // legend
    for (std::size_t i = 0; i < series.size(); ++i) {
        const double ly = kMarginTop + 10 + 22.0 * static_cast<double>(i);
        svg << "<line x1=\"" << num(kMarginLeft + plot_w + 16) << "\" y1=\"" << num(ly)
            << "\" x2=\"" << num(kMarginLeft + plot_w + 44) << "\" y2=\"" << num(ly)
            << "\" stroke=\"" << kPalette[i % ncolors] << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << num(kMarginLeft + plot_w + 50) << "\" y=\"" << num(ly + 4)
            << "\" font-size=\"13\">" << series[i].label << "</text>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

} // namespace nk
