#include "nk/landscape.hpp"

#include <algorithm>
#include <numeric>

namespace nk {

void generate_landscape_into(Landscape& out, int n, int k, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("landscape: n must be positive");
    if (k < 0 || k > n - 1) throw std::invalid_argument("landscape: k must be in [0, n-1]");
    if (k + 1 > 30) throw capacity_error("landscape: 2^(k+1) rows do not fit (k+1 > 30)");

    out.n = n;
    out.k = k;
    out.seed = seed;

    SplitMix64 rng(seed);

    const std::size_t rows = std::size_t{1} << (k + 1);
    out.fitness_matrix.resize(rows * n);
    for (double& v : out.fitness_matrix) v = rng.next_double();

    // k distinct partners per node, drawn without replacement, sorted.
    out.deps.assign(n, {});
    std::vector<int> pool(n - 1);
    for (int p = 0; p < n; ++p) {
        auto& d = out.deps[p];
        d.reserve(k);
        int w = 0;
        for (int q = 0; q < n; ++q)
            if (q != p) pool[w++] = q;
        for (int i = 0; i < k; ++i) {
            const int j = i + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n - 1 - i)));
            std::swap(pool[i], pool[j]);
            d.push_back(pool[i]);
        }
        std::sort(d.begin(), d.end());
    }

    // Flip footprints. Bit weights follow the row addressing: dependent bits
    // msb-first in ascending node order, own bit selects the matrix half.
    out.affected.assign(n, {});
    for (int p = 0; p < n; ++p)
        out.affected[p].push_back({p, 1 << k});
    for (int q = 0; q < n; ++q)
        for (int j = 0; j < k; ++j)
            out.affected[out.deps[q][j]].push_back({q, 1 << (k - 1 - j)});
}

Landscape generate_landscape(int n, int k, std::uint64_t seed) {
    Landscape land;
    generate_landscape_into(land, n, k, seed);
    return land;
}

namespace {

int row0(const Landscape& land, const Configuration& config, int p) {
    int r = config[p] ? (1 << land.k) : 0;
    const auto& d = land.deps[p];
    for (int j = 0; j < land.k; ++j)
        if (config[d[j]]) r |= 1 << (land.k - 1 - j);
    return r;
}

} // namespace

int contribution_row_index(const Landscape& land, const Configuration& config, int p) {
    return row0(land, config, p) + 1;
}

double node_contribution(const Landscape& land, const Configuration& config, int p) {
    return land.entry(row0(land, config, p), p);
}

double configuration_fitness(const Landscape& land, const Configuration& config) {
    if (static_cast<int>(config.size()) != land.n)
        throw std::invalid_argument("configuration length does not match landscape");
    double sum = 0.0;
    for (int p = 0; p < land.n; ++p) sum += node_contribution(land, config, p);
    return sum / land.n;
}

double subunit_contribution_sum(const Landscape& land, const Configuration& config,
                                std::span<const int> members) {
    if (members.empty()) throw std::invalid_argument("subunit_contribution_sum: empty member set");
    double sum = 0.0;
    for (int p : members) sum += node_contribution(land, config, p);
    return sum;
}

double fitness_after_flip(const Landscape& land, const Configuration& config, int p) {
    Evaluator ev(land, config);
    ev.flip(p);
    return ev.fitness();
}

Evaluator::Evaluator(const Landscape& land, Configuration config)
    : land_(&land), config_(std::move(config)) {
    if (static_cast<int>(config_.size()) != land.n)
        throw std::invalid_argument("configuration length does not match landscape");
    row_.resize(land.n);
    contrib_.resize(land.n);
    for (int p = 0; p < land.n; ++p) {
        row_[p] = row0(land, config_, p);
        contrib_[p] = land.entry(row_[p], p);
    }
    sum_ = std::accumulate(contrib_.begin(), contrib_.end(), 0.0);
}

void Evaluator::flip(int p) {
    config_[p] ^= 1;
    for (const FlipEffect& e : land_->affected[p]) {
        row_[e.node] ^= e.row_xor;
        contrib_[e.node] = land_->entry(row_[e.node], e.node);
    }
    // Re-sum so fitness() matches configuration_fitness bit for bit.
    sum_ = std::accumulate(contrib_.begin(), contrib_.end(), 0.0);
}

} // namespace nk
