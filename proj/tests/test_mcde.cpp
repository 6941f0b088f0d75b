/*
 * Copyright (c) 2026 nbrecon authors.
 *
 * This file is part of nbrecon.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "nbrecon/ensembles.hpp"
#include "nbrecon/mcde.hpp"

using namespace nbrecon;

namespace {

DegreeDistribution regular_36() {
    DegreeDistribution dist;
    dist.lambda = validate_lambda({{3, 1.0}});
    dist.rho = concentrated_rho(dist.lambda, 0.5);
    return dist;
}

McdeConfig small_cfg(size_t nodes = 2000) {
    McdeConfig cfg;
    cfg.node_count = nodes;
    cfg.max_iterations = 150;
    return cfg;
}

} // namespace

TEST_CASE("noiseless channel collapses the pool in one iteration") {
    const GaloisField gf(8);
    const auto dist = to_distribution(find_ensemble("0.50"));
    const auto run = mcde_evolve(gf, dist, make_channel(8, 0.0), small_cfg(), 1);
    CHECK(run.success);
    CHECK(run.iterations == 1);
    CHECK(run.final_entropy < 1e-8);
}

TEST_CASE("far above threshold the entropy never collapses") {
    const GaloisField gf(8);
    const auto dist = to_distribution(find_ensemble("0.50"));
    const auto run = mcde_evolve(gf, dist, make_channel(8, 0.30), small_cfg(), 2);
    CHECK_FALSE(run.success);
    CHECK(run.iterations == 150);
    CHECK(run.final_entropy > 0.3);
}

TEST_CASE("binary (3,6) ensemble brackets its known threshold") {
    // The classic regular ensemble on the binary symmetric channel has its
    // belief-propagation threshold near 8.4% crossover.
    const GaloisField gf(2);
    const auto dist = regular_36();
    CHECK(mcde_evolve(gf, dist, make_channel(2, 0.07), small_cfg(4000), 3).success);
    CHECK_FALSE(mcde_evolve(gf, dist, make_channel(2, 0.12), small_cfg(4000), 4).success);
}

TEST_CASE("mcde_step is reproducible and decreases entropy below threshold") {
    const GaloisField gf(8);
    const auto dist = to_distribution(find_ensemble("0.50"));
    const ChannelModel ch = make_channel(8, 0.18);
    const McdeConfig cfg = small_cfg();

    std::vector<double> pool1, pool2, scratch;
    mcde_init_pool(gf, ch, cfg, 42, pool1);
    mcde_init_pool(gf, ch, cfg, 42, pool2);
    CHECK(pool1 == pool2);

    const double e1 = mcde_step(gf, dist, ch, cfg, 42, 1, pool1, scratch);
    std::vector<double> scratch2;
    const double e2 = mcde_step(gf, dist, ch, cfg, 42, 1, pool2, scratch2);
    CHECK(e1 == e2);
    CHECK(pool1 == pool2);
    CHECK(e1 > 0.0);
    CHECK(e1 < 1.0);

    // Threaded execution is bit-identical to serial.
    McdeConfig threaded = cfg;
    threaded.threads = 4;
    std::vector<double> pool3, scratch3;
    mcde_init_pool(gf, ch, threaded, 42, pool3);
    const double e3 = mcde_step(gf, dist, ch, threaded, 42, 1, pool3, scratch3);
    CHECK(e3 == e1);
    CHECK(pool3 == pool1);
}

TEST_CASE("threshold sweep verdicts are monotone and reproducible") {
    const GaloisField gf(8);
    const auto dist = to_distribution(find_ensemble("0.50"));
    McdeConfig cfg = small_cfg();
    cfg.max_iterations = 120;
    const std::vector<double> grid = {0.10, 0.14, 0.18, 0.21, 0.30, 0.35};

    const auto r1 = mcde_threshold(gf, dist, grid, cfg, 7);
    const auto r2 = mcde_threshold(gf, dist, grid, cfg, 7);
    CHECK(r1.success == r2.success);
    CHECK(r1.threshold == r2.threshold);

    REQUIRE(r1.threshold.has_value());
    // Comfortably inside (0.18 collapses, 0.30 does not at this pool size).
    CHECK(*r1.threshold >= 0.18);
    CHECK(*r1.threshold < 0.30);
    CHECK_FALSE(r1.at_lower_boundary);
    CHECK_FALSE(r1.at_upper_boundary);
    // Verdicts below the threshold are all green.
    for (size_t i = 0; i < r1.grid.size(); ++i)
        if (r1.grid[i] <= *r1.threshold)
            CHECK(r1.success[i]);
}

TEST_CASE("degenerate grids are flagged") {
    const GaloisField gf(8);
    const auto dist = to_distribution(find_ensemble("0.50"));
    McdeConfig cfg = small_cfg();
    cfg.max_iterations = 60;

    const auto low = mcde_threshold(gf, dist, {0.0}, cfg, 5);
    CHECK(low.at_upper_boundary);
    CHECK(low.threshold == 0.0);

    const auto high = mcde_threshold(gf, dist, {0.4, 0.5}, cfg, 6);
    CHECK(high.at_lower_boundary);
    CHECK_FALSE(high.threshold.has_value());

    CHECK_THROWS_AS(mcde_threshold(gf, dist, {}, cfg, 7), std::invalid_argument);
}

TEST_CASE("pool size and epsilon are validated") {
    const GaloisField gf(8);
    const auto dist = to_distribution(find_ensemble("0.50"));
    McdeConfig cfg;
    cfg.node_count = 10;
    CHECK_THROWS_AS(mcde_evolve(gf, dist, make_channel(8, 0.1), cfg, 1), std::invalid_argument);
    cfg = small_cfg();
    cfg.entropy_epsilon = 0.0;
    CHECK_THROWS_AS(mcde_evolve(gf, dist, make_channel(8, 0.1), cfg, 1), std::invalid_argument);
}

TEST_CASE("default grid spans up to the entropy-matched limit") {
    const auto grid = default_qber_grid(8, 0.5);
    CHECK(grid.size() == 20);
    const double p_max = qber_for_entropy(8, 0.5);
    CHECK(std::abs(p_max - 0.247) < 0.001);
    CHECK(grid.front() == doctest::Approx(0.8 * p_max));
    CHECK(grid.back() == doctest::Approx(p_max));
    CHECK(conditional_entropy(make_channel(8, p_max)) == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("rate 0.70 ensemble threshold lands on its published value") {
    const GaloisField gf(8);
    const auto dist = to_distribution(find_ensemble("0.70"));
    McdeConfig cfg;
    cfg.node_count = 5000;
    cfg.max_iterations = 150;
    const auto res = mcde_threshold(gf, dist, default_qber_grid(8, 0.70), cfg, 70);
    REQUIRE(res.threshold.has_value());
    CHECK(std::abs(*res.threshold - 0.121) <= 0.012);
}
