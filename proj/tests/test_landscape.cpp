#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "nk/landscape.hpp"
#include "nk/oracle.hpp"
#include "nk/search.hpp"

using namespace nk;

namespace {

// A hand-built landscape whose matrix is one constant everywhere.
Landscape constant_landscape(int n, int k, double value) {
    Landscape land = generate_landscape(n, k, 0);
    std::fill(land.fitness_matrix.begin(), land.fitness_matrix.end(), value);
    return land;
}

} // namespace

TEST_CASE("generate_landscape shapes and invariants") {
    const Landscape a = generate_landscape(5, 3, 42);
    CHECK(a.rows() == 16);
    CHECK(a.fitness_matrix.size() == 16 * 5);

    const Landscape b = generate_landscape(20, 0, 7);
    CHECK(b.rows() == 2);
    CHECK(b.fitness_matrix.size() == 2 * 20);
    for (const auto& d : b.deps) CHECK(d.empty());

    const Landscape c = generate_landscape(20, 19, 99);
    for (int p = 0; p < 20; ++p) {
        REQUIRE(c.deps[p].size() == 19);
        CHECK(std::is_sorted(c.deps[p].begin(), c.deps[p].end()));
        for (int q : c.deps[p]) CHECK(q != p);
        CHECK(std::set<int>(c.deps[p].begin(), c.deps[p].end()).size() == 19);
    }

    for (double v : a.fitness_matrix) {
        CHECK(v >= 0.0);
        CHECK(v < 1.0);
    }
}

TEST_CASE("generate_landscape deps are distinct, sorted, not self") {
    const Landscape land = generate_landscape(12, 5, 314);
    for (int p = 0; p < 12; ++p) {
        REQUIRE(land.deps[p].size() == 5);
        CHECK(std::is_sorted(land.deps[p].begin(), land.deps[p].end()));
        std::set<int> s(land.deps[p].begin(), land.deps[p].end());
        CHECK(s.size() == 5);
        CHECK(s.count(p) == 0);
    }
}

TEST_CASE("generate_landscape rejects bad parameters") {
    CHECK_THROWS_AS(generate_landscape(5, -1, 0), std::invalid_argument);
    CHECK_THROWS_AS(generate_landscape(5, 5, 0), std::invalid_argument);
    CHECK_THROWS_AS(generate_landscape(0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(generate_landscape(40, 30, 0), capacity_error);
}

TEST_CASE("generate_landscape is deterministic in (n,k,seed)") {
    const Landscape a = generate_landscape(10, 4, 123456);
    const Landscape b = generate_landscape(10, 4, 123456);
    CHECK(a.fitness_matrix == b.fitness_matrix);
    CHECK(a.deps == b.deps);

    const Landscape c = generate_landscape(10, 4, 123457);
    CHECK(a.fitness_matrix != c.fitness_matrix);
}

TEST_CASE("generate_landscape_into reuses buffers") {
    Landscape land;
    generate_landscape_into(land, 10, 4, 1);
    const Landscape fresh = generate_landscape(10, 4, 2);
    generate_landscape_into(land, 10, 4, 2);
    CHECK(land.fitness_matrix == fresh.fitness_matrix);
    CHECK(land.deps == fresh.deps);
}

TEST_CASE("contribution_row_index matches the n=5 k=3 worked example") {
    // Node index 3 (4th node) depends on nodes 0, 2 and 4 (1st, 3rd, 5th).
    Landscape land = generate_landscape(5, 3, 1);
    land.deps[3] = {0, 2, 4};

    Configuration c(5, 0);
    c[4] = 1; // dependent bits (0,0,1)
    CHECK(contribution_row_index(land, c, 3) == 2);

    c[2] = 1; // dependent bits (0,1,1)
    CHECK(contribution_row_index(land, c, 3) == 4);

    c = Configuration(5, 0);
    c[3] = 1; // own bit 1, dependents all 0: lower half
    CHECK(contribution_row_index(land, c, 3) == 9);
}

TEST_CASE("contribution_row_index is a bijection over local states") {
    const Landscape land = generate_landscape(6, 3, 77);
    for (int p = 0; p < 6; ++p) {
        std::set<int> seen;
        Configuration c(6, 0);
        for (int own = 0; own < 2; ++own)
            for (int depbits = 0; depbits < (1 << land.k); ++depbits) {
                c.assign(6, 0);
                c[p] = static_cast<std::uint8_t>(own);
                for (int j = 0; j < land.k; ++j)
                    c[land.deps[p][j]] =
                        static_cast<std::uint8_t>((depbits >> (land.k - 1 - j)) & 1);
                seen.insert(contribution_row_index(land, c, p));
            }
        CHECK(seen.size() == 16);
        CHECK(*seen.begin() == 1);
        CHECK(*seen.rbegin() == 16);
    }
}

TEST_CASE("node_contribution on a constant table") {
    const Landscape land = constant_landscape(6, 2, 0.5);
    SplitMix64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        const Configuration c = random_configuration(6, rng);
        for (int p = 0; p < 6; ++p) CHECK(node_contribution(land, c, p) == 0.5);
    }
}

TEST_CASE("node_contribution with k=0 ignores all other nodes") {
    const Landscape land = generate_landscape(8, 0, 5);
    Configuration c(8, 0);
    const double before = node_contribution(land, c, 3);
    for (int q = 0; q < 8; ++q) {
        if (q == 3) continue;
        c[q] ^= 1;
        CHECK(node_contribution(land, c, 3) == before);
    }
}

TEST_CASE("node_contribution agrees with independent addressing on a seeded instance") {
    const Landscape land = generate_landscape(5, 3, 1);
    SplitMix64 rng(2);
    for (int trial = 0; trial < 50; ++trial) {
        const Configuration c = random_configuration(5, rng);
        for (int p = 0; p < 5; ++p)
            CHECK(node_contribution(land, c, p) == oracle_node_contribution(land, c, p));
    }
}

TEST_CASE("configuration_fitness basics") {
    const Landscape land = constant_landscape(7, 2, 0.5);
    CHECK(configuration_fitness(land, Configuration(7, 0)) == doctest::Approx(0.5).epsilon(1e-15));

    // n=2, k=0, contributions pinned to 0.2 and 0.6 for the all-zero config.
    Landscape two = generate_landscape(2, 0, 0);
    two.fitness_matrix = {0.2, 0.6, 0.9, 0.1}; // rows: own-bit 0, own-bit 1
    CHECK(configuration_fitness(two, {0, 0}) == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(configuration_fitness(two, {1, 1}) == doctest::Approx(0.5).epsilon(1e-15));

    CHECK_THROWS_AS(configuration_fitness(land, Configuration(6, 0)), std::invalid_argument);
}

TEST_CASE("configuration_fitness matches the oracle recomputation") {
    const Landscape land = generate_landscape(10, 2, 11);
    SplitMix64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const Configuration c = random_configuration(10, rng);
        CHECK(std::abs(configuration_fitness(land, c) - oracle_configuration_fitness(land, c)) <
              1e-12);
    }
}

TEST_CASE("configuration_fitness stays within the matrix entry range") {
    const Landscape land = generate_landscape(12, 4, 21);
    const double lo = *std::min_element(land.fitness_matrix.begin(), land.fitness_matrix.end());
    const double hi = *std::max_element(land.fitness_matrix.begin(), land.fitness_matrix.end());
    SplitMix64 rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        const double f = configuration_fitness(land, random_configuration(12, rng));
        CHECK(f >= lo);
        CHECK(f <= hi);
    }
}

TEST_CASE("subunit_contribution_sum") {
    const Landscape land = generate_landscape(9, 3, 8);
    SplitMix64 rng(5);
    const Configuration c = random_configuration(9, rng);

    std::vector<int> all(9);
    for (int i = 0; i < 9; ++i) all[i] = i;
    CHECK(subunit_contribution_sum(land, c, all) ==
          doctest::Approx(9 * configuration_fitness(land, c)).epsilon(1e-13));

    const std::vector<int> one{4};
    CHECK(subunit_contribution_sum(land, c, one) == node_contribution(land, c, 4));

    const std::vector<int> three{1, 2, 3};
    CHECK(subunit_contribution_sum(land, c, three) ==
          doctest::Approx(node_contribution(land, c, 1) + node_contribution(land, c, 2) +
                          node_contribution(land, c, 3))
              .epsilon(1e-15));

    CHECK_THROWS_AS(subunit_contribution_sum(land, c, {}), std::invalid_argument);
}

TEST_CASE("fitness_after_flip equals full recomputation") {
    SplitMix64 rng(6);
    for (int k : {0, 7, 19}) {
        const Landscape land = generate_landscape(20, k, 1000 + k);
        for (int trial = 0; trial < 1000; ++trial) {
            Configuration c = random_configuration(20, rng);
            const int p = static_cast<int>(rng.next_below(20));
            const double fast = fitness_after_flip(land, c, p);
            c[p] ^= 1;
            CHECK(std::abs(fast - configuration_fitness(land, c)) < 1e-12);
        }
    }
}

TEST_CASE("fitness_after_flip with k=0 changes only the flipped term") {
    const Landscape land = generate_landscape(10, 0, 17);
    const Configuration c(10, 0);
    const double f = configuration_fitness(land, c);
    for (int p = 0; p < 10; ++p) {
        Configuration flipped = c;
        flipped[p] ^= 1;
        const double expected = f + (node_contribution(land, flipped, p) -
                                     node_contribution(land, c, p)) / 10.0;
        CHECK(fitness_after_flip(land, c, p) == doctest::Approx(expected).epsilon(1e-14));
    }
}

TEST_CASE("Evaluator tracks flips exactly") {
    const Landscape land = generate_landscape(15, 6, 33);
    SplitMix64 rng(7);
    Evaluator ev(land, random_configuration(15, rng));
    for (int step = 0; step < 500; ++step) {
        const int p = static_cast<int>(rng.next_below(15));
        const double predicted = ev.fitness() + ev.delta_for_flip(p) / 15.0;
        ev.flip(p);
        CHECK(ev.fitness() == doctest::Approx(predicted).epsilon(1e-12));
        CHECK(ev.fitness() == configuration_fitness(land, ev.config()));
    }
}

TEST_CASE("k=0 landscape is separable: per-node best bits are globally optimal") {
    const Landscape land = generate_landscape(8, 0, 91);
    Configuration best(8, 0);
    for (int p = 0; p < 8; ++p) {
        Configuration zero(8, 0), one(8, 0);
        one[p] = 1;
        best[p] = node_contribution(land, one, p) > node_contribution(land, zero, p) ? 1 : 0;
    }
    const auto [opt, fit] = enumerate_global_optimum(land);
    CHECK(opt == best);
    CHECK(configuration_fitness(land, best) == doctest::Approx(fit).epsilon(1e-14));
}
