#ifndef NK_LANDSCAPE_HPP
#define NK_LANDSCAPE_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "nk/rng.hpp"

namespace nk {

// Thrown when a requested instance would not fit in memory (k+1 > 30 or an
// enumeration over more than 2^24 configurations).
class capacity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Full assignment of 0/1 states to the n decision nodes.
using Configuration = std::vector<std::uint8_t>;

// One entry of a node's flip footprint: flipping the owner node toggles
// `row_xor` in `node`'s fitness-matrix row index.
struct FlipEffect {
    int node;    // node whose contribution changes
    int row_xor; // xor mask applied to that node's current row index
};

// An NK problem instance: dependency map plus the 2^(k+1) x n table of
// uniform [0,1) contribution values. Immutable once generated; safe to share
// across threads.
struct Landscape {
    int n = 0;
    int k = 0;
    std::uint64_t seed = 0;
    std::vector<std::vector<int>> deps;       // per node: k distinct partners, ascending
    std::vector<double> fitness_matrix;       // row-major, rows() x n
    std::vector<std::vector<FlipEffect>> affected; // per node: itself + reverse dependents

    int rows() const { return 1 << (k + 1); }
    double entry(int row, int col) const { return fitness_matrix[static_cast<std::size_t>(row) * n + col]; }
};

// Deterministic in (n, k, seed). Matrix is filled row-major first, then the
// dependency partners are drawn per node in index order, so the seed pins the
// whole instance. Throws std::invalid_argument / capacity_error.
Landscape generate_landscape(int n, int k, std::uint64_t seed);

// Same, reusing the buffers of an existing instance across replicates.
void generate_landscape_into(Landscape& out, int n, int k, std::uint64_t seed);

// 1-based row of the fitness matrix holding node p's contribution: 1 + the
// decimal value of the dependent-node bits (ascending node index, msb first),
// offset into the lower half when bit(p) = 1.
int contribution_row_index(const Landscape& land, const Configuration& config, int p);

double node_contribution(const Landscape& land, const Configuration& config, int p);

// Mean of the n node contributions.
double configuration_fitness(const Landscape& land, const Configuration& config);

// Sum of contributions over a nonempty member set.
double subunit_contribution_sum(const Landscape& land, const Configuration& config,
                                std::span<const int> members);

// Fitness of config with bit p flipped; touches only p and its reverse
// dependents.
double fitness_after_flip(const Landscape& land, const Configuration& config, int p);

// Incremental fitness state for a walker: caches per-node row indices and
// contributions so a flip costs O(#affected) instead of O(n*k).
class Evaluator {
public:
    Evaluator(const Landscape& land, Configuration config);

    const Configuration& config() const { return config_; }
    double fitness() const { return sum_ / land_->n; }
    double node_contribution(int p) const { return contrib_[p]; }

    // Change in the total contribution sum if node p were flipped.
    double delta_for_flip(int p) const {
        double d = 0.0;
        for (const FlipEffect& e : land_->affected[p])
            d += land_->entry(row_[e.node] ^ e.row_xor, e.node) - contrib_[e.node];
        return d;
    }

    // Same, restricted to affected nodes satisfying the predicate.
    template <class Pred>
    double delta_for_flip_if(int p, Pred&& in_set) const {
        double d = 0.0;
        for (const FlipEffect& e : land_->affected[p])
            if (in_set(e.node))
                d += land_->entry(row_[e.node] ^ e.row_xor, e.node) - contrib_[e.node];
        return d;
    }

    void flip(int p);

private:
    const Landscape* land_;
    Configuration config_;
    std::vector<int> row_;      // current 0-based row per node
    std::vector<double> contrib_;
    double sum_;
};

} // namespace nk

#endif
