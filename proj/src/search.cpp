#include "nk/search.hpp"

#include <algorithm>
#include <numeric>

namespace nk {

std::vector<std::vector<int>> Partition::members() const {
    std::vector<std::vector<int>> out(m);
    for (int p = 0; p < static_cast<int>(assignment.size()); ++p)
        out[assignment[p]].push_back(p);
    return out;
}

Partition make_partition(int n, int m, SplitMix64& rng) {
    if (n < 1 || m < 1) throw std::invalid_argument("make_partition: n and m must be positive");
    if (m > n) throw std::invalid_argument("make_partition: m > n");

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = 0; i < n - 1; ++i) {
        const int j = i + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n - i)));
        std::swap(perm[i], perm[j]);
    }

    Partition part;
    part.m = m;
    part.assignment.assign(n, 0);
    const int base = n / m;
    int idx = 0;
    for (int u = 0; u < m; ++u)
        for (int c = 0; c < base; ++c)
            part.assignment[perm[idx++]] = u;
    if (idx < n) {
        const int u = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(m)));
        while (idx < n) part.assignment[perm[idx++]] = u;
    }
    return part;
}

Configuration random_configuration(int n, SplitMix64& rng) {
    if (n < 1) throw std::invalid_argument("random_configuration: n must be positive");
    Configuration c(n);
    for (auto& bit : c) bit = static_cast<std::uint8_t>(rng.next() >> 63);
    return c;
}

int hamming_distance(const Configuration& a, const Configuration& b) {
    if (a.size() != b.size()) throw std::invalid_argument("hamming_distance: length mismatch");
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

namespace {

int count_global(const Evaluator& ev, const Landscape& land) {
    int cnt = 0;
    for (int p = 0; p < land.n; ++p)
        if (ev.delta_for_flip(p) > 0.0) ++cnt;
    return cnt;
}

double subunit_delta(const Evaluator& ev, const Partition& part, int p, SubunitEvalMode mode) {
    const int unit = part.assignment[p];
    if (mode == SubunitEvalMode::Inclusive)
        return ev.delta_for_flip_if(p, [&](int q) { return part.assignment[q] == unit; });
    return ev.delta_for_flip_if(p, [&](int q) { return q != p && part.assignment[q] == unit; });
}

int count_subunit(const Evaluator& ev, const Landscape& land, const Partition& part,
                  SubunitEvalMode mode) {
    int cnt = 0;
    for (int p = 0; p < land.n; ++p)
        if (subunit_delta(ev, part, p, mode) > 0.0) ++cnt;
    return cnt;
}

// Draws nodes without repetition: a rejected node is not retried until some
// move is accepted (reset). Rejections leave the configuration unchanged, so
// within a round a retried node could only be rejected again.
class NodeSampler {
public:
    explicit NodeSampler(int n) : pool_(n), remaining_(n) {
        std::iota(pool_.begin(), pool_.end(), 0);
    }

    int draw(SplitMix64& rng) {
        if (remaining_ == 0) reset();
        const int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(remaining_)));
        std::swap(pool_[j], pool_[remaining_ - 1]);
        return pool_[--remaining_];
    }

    void reset() { remaining_ = static_cast<int>(pool_.size()); }

private:
    std::vector<int> pool_;
    int remaining_;
};

} // namespace

int count_improving_moves_global(const Landscape& land, const Configuration& config) {
    return count_global(Evaluator(land, config), land);
}

int count_improving_moves_subunit(const Landscape& land, const Partition& part,
                                  const Configuration& config, SubunitEvalMode mode) {
    if (static_cast<int>(part.assignment.size()) != land.n)
        throw std::invalid_argument("partition does not cover the landscape nodes");
    return count_subunit(Evaluator(land, config), land, part, mode);
}

SearchOutcome run_cs(const Landscape& land, const Configuration& init, int max_steps,
                     SplitMix64& rng) {
    if (max_steps < 1) throw std::invalid_argument("run_cs: max_steps must be positive");
    Evaluator ev(land, init);

    SearchOutcome out;
    out.initial = init;
    out.fitness_trace.reserve(max_steps + 1);
    out.fitness_trace.push_back(ev.fitness());

    NodeSampler sampler(land.n);
    int cnt = count_global(ev, land);
    while (out.steps_executed < max_steps && cnt > 0) {
        const int p = sampler.draw(rng);
        if (ev.delta_for_flip(p) > 0.0) {
            ev.flip(p);
            sampler.reset();
        }
        ++out.steps_executed;
        out.fitness_trace.push_back(ev.fitness());
        cnt = count_global(ev, land);
        out.moves_available_trace.push_back(cnt);
    }
    out.terminated_early = cnt == 0;

    out.terminal = ev.config();
    out.best = ev.config(); // walk is monotone
    out.best_fitness = configuration_fitness(land, out.best);
    out.hamming = hamming_distance(out.initial, out.best);
    return out;
}

SearchOutcome run_pu(const Landscape& land, const Configuration& init, const PuParams& params,
                     SplitMix64& rng) {
    if (!(params.tau > 0.0 && params.tau < 1.0))
        throw std::invalid_argument("run_pu: tau must be in (0,1)");
    if (params.max_generations < 1)
        throw std::invalid_argument("run_pu: max_generations must be positive");
    Evaluator ev(land, init);

    SearchOutcome out;
    out.initial = init;
    out.best = init;
    double best_fit = ev.fitness();
    out.fitness_trace.push_back(best_fit);

    std::vector<int> allowed;
    allowed.reserve(land.n);

    int cnt = count_global(ev, land);
    while (out.steps_executed < params.max_generations && cnt > 0) {
        // Candidate draws and improvement tests both refer to the
        // generation's starting configuration.
        allowed.clear();
        for (int p = 0; p < land.n; ++p)
            if (rng.next_bernoulli(params.tau) && ev.delta_for_flip(p) > 0.0)
                allowed.push_back(p);
        for (int p : allowed) ev.flip(p);

        ++out.steps_executed;
        const double fit = ev.fitness();
        out.fitness_trace.push_back(fit);
        if (fit > best_fit) {
            best_fit = fit;
            out.best = ev.config();
        }
        cnt = count_global(ev, land);
        out.moves_available_trace.push_back(cnt);
    }
    out.terminated_early = cnt == 0;

    out.terminal = ev.config();
    out.best_fitness = configuration_fitness(land, out.best);
    out.hamming = hamming_distance(out.initial, out.best);
    return out;
}

SearchOutcome run_ictt(const Landscape& land, const Partition& part, const Configuration& init,
                       int max_steps, SplitMix64& rng, SubunitEvalMode mode) {
    if (max_steps < 1) throw std::invalid_argument("run_ictt: max_steps must be positive");
    if (static_cast<int>(part.assignment.size()) != land.n)
        throw std::invalid_argument("partition does not cover the landscape nodes");
    Evaluator ev(land, init);

    SearchOutcome out;
    out.initial = init;
    out.best = init;
    double committed_fit = ev.fitness();
    out.fitness_trace.reserve(max_steps + 1);
    out.fitness_trace.push_back(committed_fit);

    NodeSampler sampler(land.n);
    int cnt = count_subunit(ev, land, part, mode);
    while (out.steps_executed < max_steps && cnt > 0) {
        const int p = sampler.draw(rng);
        if (subunit_delta(ev, part, p, mode) > 0.0) {
            ev.flip(p);
            sampler.reset();
            const double fit = ev.fitness();
            if (fit > committed_fit) {
                committed_fit = fit;
                out.best = ev.config();
            }
        }
        ++out.steps_executed;
        out.fitness_trace.push_back(ev.fitness());
        cnt = count_subunit(ev, land, part, mode);
        out.moves_available_trace.push_back(cnt);
    }
    out.terminated_early = cnt == 0;

    out.terminal = ev.config();
    out.best_fitness = configuration_fitness(land, out.best);
    out.hamming = hamming_distance(out.initial, out.best);
    return out;
}

} // namespace nk
