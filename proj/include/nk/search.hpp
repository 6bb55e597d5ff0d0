#ifndef NK_SEARCH_HPP
#define NK_SEARCH_HPP

#include <vector>

#include "nk/landscape.hpp"
#include "nk/rng.hpp"

namespace nk {

// Which contributions count when a sub-unit judges a flip: the whole sub-unit
// including the focal node, or the co-members only.
enum class SubunitEvalMode { Inclusive, Exclusive };

// Assignment of the n nodes to m sub-units.
struct Partition {
    std::vector<int> assignment; // node -> sub-unit id in [0, m)
    int m = 0;

    std::vector<std::vector<int>> members() const;
};

// Randomly deal floor(n/m) nodes to each sub-unit; the n mod m leftovers all
// go to one uniformly chosen sub-unit.
Partition make_partition(int n, int m, SplitMix64& rng);

// Each bit independently 0 or 1 with probability 0.5.
Configuration random_configuration(int n, SplitMix64& rng);

int hamming_distance(const Configuration& a, const Configuration& b);

// Number of nodes whose solo flip strictly raises overall fitness.
int count_improving_moves_global(const Landscape& land, const Configuration& config);

// Number of nodes whose flip strictly raises the evaluation sum of their own
// sub-unit.
int count_improving_moves_subunit(const Landscape& land, const Partition& part,
                                  const Configuration& config,
                                  SubunitEvalMode mode = SubunitEvalMode::Inclusive);

struct PuParams {
    double tau = 0.33;
    int max_generations = 500;
};

struct SearchOutcome {
    Configuration initial;
    Configuration best;      // designated outcome of the search
    Configuration terminal;  // where the walk actually stopped
    double best_fitness = 0.0;
    int steps_executed = 0;
    bool terminated_early = false;
    std::vector<double> fitness_trace;      // [0] = initial, then one per step
    std::vector<int> moves_available_trace; // one per step, counted after the step
    int hamming = 0;                        // hamming_distance(initial, best)
};

// Centralized search: flip one random node per step, keep the flip only if
// overall fitness strictly increases. Stops at a local optimum or max_steps.
SearchOutcome run_cs(const Landscape& land, const Configuration& init, int max_steps,
                     SplitMix64& rng);

// Parallel updating: each generation every node volunteers with probability
// tau; volunteers whose solo flip (judged at the generation start) strictly
// improves fitness all flip at once. Best-encountered configuration across
// generation boundaries is the outcome.
SearchOutcome run_pu(const Landscape& land, const Configuration& init, const PuParams& params,
                     SplitMix64& rng);

// Incremental changes, taking turns: flips are kept when the focal node's
// sub-unit evaluation sum strictly increases, even if overall fitness drops.
// A committed configuration is advanced whenever overall fitness strictly
// exceeds the committed value; the final committed configuration is the
// outcome.
SearchOutcome run_ictt(const Landscape& land, const Partition& part, const Configuration& init,
                       int max_steps, SplitMix64& rng,
                       SubunitEvalMode mode = SubunitEvalMode::Inclusive);

} // namespace nk

#endif
