#ifndef NK_CHART_HPP
#define NK_CHART_HPP

#include <string>
#include <utility>
#include <vector>

namespace nk {

struct ChartSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;
};

// Hand-emitted SVG line chart, 960x600 viewBox, one polyline per series.
// Deterministic: identical input yields identical bytes. Throws
// std::invalid_argument when no series has a point.
std::string render_line_chart(const std::vector<ChartSeries>& series,
                              const std::string& title, const std::string& x_label,
                              const std::string& y_label);

} // namespace nk

#endif
