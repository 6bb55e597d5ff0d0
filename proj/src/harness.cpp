#include "nk/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace nk {

std::string_view algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::CS: return "cs";
        case Algorithm::PU: return "pu";
        case Algorithm::ICTT1: return "ictt1";
        case Algorithm::ICTT1_ALT: return "ictt1_alt";
    }
    return "?";
}

std::optional<Algorithm> algorithm_from_name(std::string_view name) {
    if (name == "cs") return Algorithm::CS;
    if (name == "pu") return Algorithm::PU;
    if (name == "ictt1") return Algorithm::ICTT1;
    if (name == "ictt1_alt") return Algorithm::ICTT1_ALT;
    return std::nullopt;
}

void ExperimentSpec::validate() const {
    if (n < 1) throw std::invalid_argument("spec: n must be positive");
    if (k_values.empty()) throw std::invalid_argument("spec: no k values");
    for (int k : k_values)
        if (k < 0 || k > n - 1) throw std::invalid_argument("spec: k must be in [0, n-1]");
    if (algorithms.empty()) throw std::invalid_argument("spec: no algorithms");
    if (iterations < 1) throw std::invalid_argument("spec: iterations must be positive");
    if (max_steps < 1) throw std::invalid_argument("spec: max_steps must be positive");
    if (!(pu.tau > 0.0 && pu.tau < 1.0)) throw std::invalid_argument("spec: tau must be in (0,1)");
    if (pu.max_generations < 1) throw std::invalid_argument("spec: generations must be positive");
    if (subunits_ictt1 < 1 || subunits_ictt1 > n)
        throw std::invalid_argument("spec: subunits for ictt1 out of range");
    if (subunits_ictt1_alt < 1 || subunits_ictt1_alt > n)
        throw std::invalid_argument("spec: subunits for ictt1_alt out of range");
    if (workers < 1) throw std::invalid_argument("spec: workers must be positive");
}

std::uint64_t landscape_seed(const ExperimentSpec& spec, int k, int replicate) {
    return derive_seed(spec.master_seed, "landscape", k, replicate);
}

std::uint64_t init_seed(const ExperimentSpec& spec, int k, int replicate) {
    return derive_seed(spec.master_seed, "init", k, replicate);
}

std::uint64_t walk_seed(const ExperimentSpec& spec, Algorithm a, int k, int replicate) {
    return derive_seed(spec.master_seed, algorithm_name(a), k, replicate);
}

namespace {

SearchOutcome run_walker(const ExperimentSpec& spec, Algorithm a, const Landscape& land,
                         const Configuration& init, SplitMix64& rng) {
    switch (a) {
        case Algorithm::CS:
            return run_cs(land, init, spec.max_steps, rng);
        case Algorithm::PU:
            return run_pu(land, init, spec.pu, rng);
        case Algorithm::ICTT1: {
            Partition part = make_partition(spec.n, spec.subunits_ictt1, rng);
            return run_ictt(land, part, init, spec.max_steps, rng, spec.subunit_eval);
        }
        case Algorithm::ICTT1_ALT: {
            Partition part = make_partition(spec.n, spec.subunits_ictt1_alt, rng);
            return run_ictt(land, part, init, spec.max_steps, rng, spec.subunit_eval);
        }
    }
    throw std::invalid_argument("unknown algorithm");
}

ReplicateRecord to_record(Algorithm a, int k, int replicate, std::uint64_t wseed,
                          const SearchOutcome& out) {
    ReplicateRecord rec;
    rec.algorithm = a;
    rec.k = k;
    rec.replicate_index = replicate;
    rec.best_fitness = out.best_fitness;
    rec.hamming = out.hamming;
    rec.steps_executed = out.steps_executed;
    rec.terminated_early = out.terminated_early;
    rec.seed_used = wseed;
    return rec;
}

// Algorithms in ascending name order, matching the record sort.
std::vector<Algorithm> sorted_algorithms(const ExperimentSpec& spec) {
    std::vector<Algorithm> algos = spec.algorithms;
    std::sort(algos.begin(), algos.end(), [](Algorithm a, Algorithm b) {
        return algorithm_name(a) < algorithm_name(b);
    });
    algos.erase(std::unique(algos.begin(), algos.end()), algos.end());
    return algos;
}

// Run work items 0..count-1 over `workers` threads. Each item is fully
// determined by its index, so scheduling cannot change the result.
template <class Fn>
void parallel_for(int count, int workers, Fn&& fn) {
    workers = std::min(workers, count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> cursor{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                const int i = cursor.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    for (auto& t : pool) t.join();
}

} // namespace

ReplicateRecord run_replicate(const ExperimentSpec& spec, Algorithm a, int k, int replicate,
                              Landscape* scratch) {
    Landscape local;
    Landscape& land = scratch ? *scratch : local;
    generate_landscape_into(land, spec.n, k, landscape_seed(spec, k, replicate));

    SplitMix64 irng(init_seed(spec, k, replicate));
    const Configuration init = random_configuration(spec.n, irng);

    const std::uint64_t wseed = walk_seed(spec, a, k, replicate);
    SplitMix64 wrng(wseed);
    return to_record(a, k, replicate, wseed, run_walker(spec, a, land, init, wrng));
}

SweepResult run_sweep(const ExperimentSpec& spec) {
    spec.validate();

    const std::vector<Algorithm> algos = sorted_algorithms(spec);
    const int nk = static_cast<int>(spec.k_values.size());
    const int na = static_cast<int>(algos.size());
    const int reps = spec.iterations;

    SweepResult result;
    result.records.resize(static_cast<std::size_t>(na) * nk * reps);

    // One work item per (k, replicate): the landscape and starting point are
    // generated once and every algorithm runs on them.
    parallel_for(nk * reps, spec.workers, [&](int item) {
        thread_local Landscape land;
        const int ki = item / reps;
        const int r = item % reps;
        const int k = spec.k_values[ki];

        generate_landscape_into(land, spec.n, k, landscape_seed(spec, k, r));
        SplitMix64 irng(init_seed(spec, k, r));
        const Configuration init = random_configuration(spec.n, irng);

        for (int ai = 0; ai < na; ++ai) {
            const std::uint64_t wseed = walk_seed(spec, algos[ai], k, r);
            SplitMix64 wrng(wseed);
            const SearchOutcome out = run_walker(spec, algos[ai], land, init, wrng);
            result.records[(static_cast<std::size_t>(ai) * nk + ki) * reps + r] =
                to_record(algos[ai], k, r, wseed, out);
        }
    });

    for (int ai = 0; ai < na; ++ai)
        for (int ki = 0; ki < nk; ++ki) {
            const auto* recs = &result.records[(static_cast<std::size_t>(ai) * nk + ki) * reps];
            SummaryRow row;
            row.algorithm = algos[ai];
            row.k = spec.k_values[ki];
            row.count = reps;
            double sf = 0, sh = 0, ss = 0, early = 0;
            for (int r = 0; r < reps; ++r) {
                sf += recs[r].best_fitness;
                sh += recs[r].hamming;
                ss += recs[r].steps_executed;
                early += recs[r].terminated_early ? 1.0 : 0.0;
            }
            row.mean_fitness = sf / reps;
            row.mean_hamming = sh / reps;
            row.mean_steps = ss / reps;
            row.early_term_rate = early / reps;
            if (reps > 1) {
                double vf = 0, vh = 0;
                for (int r = 0; r < reps; ++r) {
                    vf += (recs[r].best_fitness - row.mean_fitness) *
                          (recs[r].best_fitness - row.mean_fitness);
                    vh += (recs[r].hamming - row.mean_hamming) *
                          (recs[r].hamming - row.mean_hamming);
                }
                row.se_fitness = std::sqrt(vf / (reps - 1)) / std::sqrt(double(reps));
                row.se_hamming = std::sqrt(vh / (reps - 1)) / std::sqrt(double(reps));
            }
            result.summary.push_back(row);
        }
    return result;
}

MovesTrace run_moves_trace(const ExperimentSpec& spec, int k, int steps) {
    spec.validate();
    if (steps < 1) throw std::invalid_argument("run_moves_trace: steps must be positive");
    if (k < 0 || k > spec.n - 1) throw std::invalid_argument("run_moves_trace: k out of range");

    const int reps = spec.iterations;
    std::vector<int> per_rep(static_cast<std::size_t>(reps) * steps, 0);

    parallel_for(reps, spec.workers, [&](int r) {
        thread_local Landscape land;
        generate_landscape_into(land, spec.n, k, landscape_seed(spec, k, r));
        SplitMix64 irng(init_seed(spec, k, r));
        const Configuration init = random_configuration(spec.n, irng);
        SplitMix64 wrng(walk_seed(spec, Algorithm::ICTT1, k, r));
        Partition part = make_partition(spec.n, spec.subunits_ictt1, wrng);
        const SearchOutcome out = run_ictt(land, part, init, steps, wrng, spec.subunit_eval);
        for (std::size_t t = 0; t < out.moves_available_trace.size(); ++t)
            per_rep[static_cast<std::size_t>(r) * steps + t] = out.moves_available_trace[t];
        // remaining steps after early termination stay 0
    });

    MovesTrace trace;
    trace.mean_moves.assign(steps, 0.0);
    trace.zero_fraction.assign(steps, 0.0);
    for (int t = 0; t < steps; ++t) {
        double sum = 0, zeros = 0;
        for (int r = 0; r < reps; ++r) {
            const int v = per_rep[static_cast<std::size_t>(r) * steps + t];
            sum += v;
            if (v == 0) zeros += 1.0;
        }
        trace.mean_moves[t] = sum / reps;
        trace.zero_fraction[t] = zeros / reps;
    }
    return trace;
}

} // namespace nk
