#include "nk/oracle.hpp"

#include <string>

namespace nk {

double oracle_node_contribution(const Landscape& land, const Configuration& config, int p) {
    std::string bits;
    for (int d : land.deps[p]) bits += config[d] ? '1' : '0';
    int row = bits.empty() ? 0 : std::stoi(bits, nullptr, 2);
    if (config[p]) row += 1 << land.k; // lower half of the table
    return land.fitness_matrix[static_cast<std::size_t>(row) * land.n + p];
}

double oracle_configuration_fitness(const Landscape& land, const Configuration& config) {
    double sum = 0.0;
    for (int p = 0; p < land.n; ++p) sum += oracle_node_contribution(land, config, p);
    return sum / land.n;
}

namespace {

Configuration config_from_value(int n, std::uint64_t v) {
    Configuration c(n);
    for (int i = 0; i < n; ++i)
        c[i] = static_cast<std::uint8_t>((v >> (n - 1 - i)) & 1u);
    return c;
}

} // namespace

std::pair<Configuration, double> enumerate_global_optimum(const Landscape& land) {
    if (land.n > 24) throw capacity_error("enumerate_global_optimum: n > 24");

    const std::uint64_t total = std::uint64_t{1} << land.n;
    std::uint64_t best_v = 0;
    double best_fit = oracle_configuration_fitness(land, config_from_value(land.n, 0));
    for (std::uint64_t v = 1; v < total; ++v) {
        const double fit = oracle_configuration_fitness(land, config_from_value(land.n, v));
        if (fit > best_fit) { // strict: ascending scan keeps the lowest value on ties
            best_fit = fit;
            best_v = v;
        }
    }
    return {config_from_value(land.n, best_v), best_fit};
}

bool is_local_optimum(const Landscape& land, const Configuration& config) {
    const Evaluator ev(land, config);
    for (int p = 0; p < land.n; ++p)
        if (ev.delta_for_flip(p) > 0.0) return false;
    return true;
}

long long count_local_optima(const Landscape& land) {
    if (land.n > 20) throw capacity_error("count_local_optima: n > 20");

    const std::uint64_t total = std::uint64_t{1} << land.n;
    long long cnt = 0;
    for (std::uint64_t v = 0; v < total; ++v)
        if (is_local_optimum(land, config_from_value(land.n, v))) ++cnt;
    return cnt;
}

OracleReport oracle_report(const Landscape& land) {
    OracleReport report;
    auto [best, fit] = enumerate_global_optimum(land);
    report.global_best = std::move(best);
    report.global_best_fitness = fit;
    report.num_local_optima = count_local_optima(land);
    return report;
}

} // namespace nk
