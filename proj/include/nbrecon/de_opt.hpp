/*
 * Copyright (c) 2026 nbrecon authors.
 *
 * This file is part of nbrecon.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef NBRECON_DE_OPT_HPP
#define NBRECON_DE_OPT_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "nbrecon/degree_dist.hpp"
#include "nbrecon/mcde.hpp"

namespace nbrecon {

// Differential evolution (rand/1/bin) over variable-node distributions at a
// fixed rate, scored by the Monte-Carlo density-evolution threshold. A
// candidate genome holds max_distinct_degrees (degree, coefficient) gene
// pairs; repair rounds degrees into [2, d_v_max], merges duplicates, clips
// negative coefficients and renormalizes, so every evaluated candidate is a
// valid sparse distribution. The check side is always re-derived as the
// concentrated distribution for the target rate.
struct DeConfig {
    unsigned population = 20; // >= 4
    double weight = 0.85;     // differential weight F
    double crossover = 0.7;   // crossover probability CR
    unsigned max_distinct_degrees = 10;
    unsigned d_v_max = 40;
    unsigned generations = 30;
    // Optional starting points copied over the random initial population.
    std::vector<std::map<unsigned, double>> seed_candidates;
};

struct DeEvaluation {
    std::map<unsigned, double> lambda;
    double threshold; // NaN when the candidate was infeasible
};

struct DeResult {
    std::map<unsigned, double> lambda; // best candidate found
    double threshold = 0.0;            // its estimated threshold
    DegreeDistribution dist;           // best lambda with concentrated rho
    std::vector<DeEvaluation> evaluations;   // every threshold estimate made
    std::vector<double> best_by_generation;  // index 0 = initial population
    bool budget_warning = false;             // too few generations to evolve
    uint64_t seed = 0;
};

// Throws std::invalid_argument for an infeasible configuration (population
// < 4, CR outside (0,1], F <= 0, rate outside (0,1)). qber_grid may be empty,
// in which case the default grid for (q, rate) is used.
DeResult de_optimize(unsigned q, double rate, const DeConfig& de_cfg,
                     const McdeConfig& mcde_cfg, const std::vector<double>& qber_grid,
                     uint64_t seed);

} // namespace nbrecon

#endif
