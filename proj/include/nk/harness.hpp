#ifndef NK_HARNESS_HPP
#define NK_HARNESS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nk/search.hpp"

namespace nk {

enum class Algorithm { CS, PU, ICTT1, ICTT1_ALT };

std::string_view algorithm_name(Algorithm a);
std::optional<Algorithm> algorithm_from_name(std::string_view name);

// One experiment protocol: which walkers, which k values, how many seeded
// replicates. Defaults mirror the headline runs (N=20, T=1000, tau=0.33,
// 500 generations, 4 / 6 sub-units).
struct ExperimentSpec {
    int n = 20;
    std::vector<int> k_values;
    std::vector<Algorithm> algorithms;
    int iterations = 10000;
    int max_steps = 1000;
    PuParams pu{0.33, 500};
    int subunits_ictt1 = 4;
    int subunits_ictt1_alt = 6;
    std::uint64_t master_seed = 0;
    SubunitEvalMode subunit_eval = SubunitEvalMode::Inclusive;
    int workers = 1;

    void validate() const; // throws std::invalid_argument
};

struct ReplicateRecord {
    Algorithm algorithm;
    int k = 0;
    int replicate_index = 0;
    double best_fitness = 0.0;
    int hamming = 0;
    int steps_executed = 0;
    bool terminated_early = false;
    std::uint64_t seed_used = 0; // walk-rng seed
};

struct SummaryRow {
    Algorithm algorithm;
    int k = 0;
    double mean_fitness = 0.0;
    double se_fitness = 0.0;
    double mean_hamming = 0.0;
    double se_hamming = 0.0;
    double mean_steps = 0.0;
    double early_term_rate = 0.0;
    int count = 0;
};

struct SweepResult {
    std::vector<ReplicateRecord> records; // sorted by (algorithm name, k, replicate)
    std::vector<SummaryRow> summary;      // sorted by (algorithm name, k)
};

// Substream seeds. The landscape and initial-configuration streams are keyed
// by fixed tags so every algorithm sees the same instance and starting point
// at a given (k, replicate); walk streams are keyed by the algorithm name.
std::uint64_t landscape_seed(const ExperimentSpec& spec, int k, int replicate);
std::uint64_t init_seed(const ExperimentSpec& spec, int k, int replicate);
std::uint64_t walk_seed(const ExperimentSpec& spec, Algorithm a, int k, int replicate);

// Run one walker on its seeded replicate. `scratch` optionally reuses
// landscape buffers across calls.
ReplicateRecord run_replicate(const ExperimentSpec& spec, Algorithm a, int k, int replicate,
                              Landscape* scratch = nullptr);

// algorithms x k_values x iterations replicates, distributed over
// spec.workers threads. Output is identical for any worker count.
SweepResult run_sweep(const ExperimentSpec& spec);

struct MovesTrace {
    std::vector<double> mean_moves;    // [t-1] = mean moves available after step t
    std::vector<double> zero_fraction; // [t-1] = fraction of replicates with 0 moves
};

// Per-step mean of the ICTT1 moves-available trace across replicates.
// Early-terminated replicates contribute 0 for their remaining steps.
MovesTrace run_moves_trace(const ExperimentSpec& spec, int k, int steps);

} // namespace nk

#endif
