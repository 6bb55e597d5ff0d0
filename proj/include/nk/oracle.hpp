#ifndef NK_ORACLE_HPP
#define NK_ORACLE_HPP

#include <utility>

#include "nk/landscape.hpp"

namespace nk {

struct OracleReport {
    Configuration global_best;
    double global_best_fitness = 0.0;
    long long num_local_optima = 0;
};

// Independent recomputation of a node's contribution: the row address is
// re-derived by concatenating the dependent-node state characters into a
// binary string and parsing it, with no code shared with the fast path.
double oracle_node_contribution(const Landscape& land, const Configuration& config, int p);
double oracle_configuration_fitness(const Landscape& land, const Configuration& config);

// Exhaustive scan of all 2^n configurations (n <= 24). Ties broken by the
// lowest binary value of the bit string read msb-first.
std::pair<Configuration, double> enumerate_global_optimum(const Landscape& land);

// True iff no single-bit flip strictly increases fitness.
bool is_local_optimum(const Landscape& land, const Configuration& config);

// Number of configurations that are local optima (n <= 20).
long long count_local_optima(const Landscape& land);

OracleReport oracle_report(const Landscape& land);

} // namespace nk

#endif
