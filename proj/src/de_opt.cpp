/*
 * Copyright (c) 2026 nbrecon authors.
 *
 * This file is part of nbrecon.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "nbrecon/de_opt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "nbrecon/gf.hpp"

namespace nbrecon {

namespace {

// Genome layout: genes [0, K) are degrees, genes [K, 2K) coefficients.
std::map<unsigned, double> repair(const std::vector<double>& genome, unsigned max_distinct,
                                  unsigned d_v_max) {
    const size_t K = genome.size() / 2;
    std::map<unsigned, double> lambda;
    for (size_t g = 0; g < K; ++g) {
        const double raw_deg = std::round(genome[g]);
        const unsigned deg =
            static_cast<unsigned>(std::clamp(raw_deg, 2.0, double(d_v_max)));
        const double coeff = std::max(genome[K + g], 0.0);
        if (coeff > 0.0)
            lambda[deg] += coeff;
    }
    double sum = 0.0;
    for (const auto& [deg, coeff] : lambda)
        sum += coeff;
    if (!(sum > 0.0))
        return {};
    // Sparsity: keep the heaviest max_distinct degrees (merging can only
    // shrink the support, so this triggers rarely).
    while (lambda.size() > max_distinct) {
        auto smallest = lambda.begin();
        for (auto it = lambda.begin(); it != lambda.end(); ++it)
            if (it->second < smallest->second)
                smallest = it;
        sum -= smallest->second;
        lambda.erase(smallest);
    }
    for (auto& [deg, coeff] : lambda)
        coeff /= sum;
    return lambda;
}

std::vector<double> encode(const std::map<unsigned, double>& lambda, unsigned K,
                           unsigned d_v_max, SplitMix64& rng) {
    std::vector<double> genome(2 * K);
    size_t g = 0;
    for (const auto& [deg, coeff] : lambda) {
        if (g == K)
            break;
        genome[g] = double(deg);
        genome[K + g] = coeff;
        ++g;
    }
    for (; g < K; ++g) {
        genome[g] = 2.0 + double(rng.below(d_v_max - 1));
        genome[K + g] = 0.0;
    }
    return genome;
}

} // namespace

DeResult de_optimize(unsigned q, double rate, const DeConfig& de_cfg,
                     const McdeConfig& mcde_cfg, const std::vector<double>& qber_grid,
                     uint64_t seed) {
    if (de_cfg.population < 4)
        throw std::invalid_argument("de_optimize: population must be at least 4");
    if (!(de_cfg.crossover > 0.0) || de_cfg.crossover > 1.0)
        throw std::invalid_argument("de_optimize: crossover probability outside (0, 1]");
    if (!(de_cfg.weight > 0.0))
        throw std::invalid_argument("de_optimize: differential weight must be positive");
    if (!(rate > 0.0) || !(rate < 1.0))
        throw std::invalid_argument("de_optimize: rate must lie in (0, 1)");
    if (de_cfg.max_distinct_degrees < 1 || de_cfg.d_v_max < 2)
        throw std::invalid_argument("de_optimize: degenerate degree constraints");

    const GaloisField gf(q);
    const std::vector<double> grid =
        qber_grid.empty() ? default_qber_grid(q, rate) : qber_grid;

    DeResult result;
    result.seed = seed;
    result.budget_warning = de_cfg.generations < 2;

    size_t eval_counter = 0;
    auto evaluate = [&](const std::map<unsigned, double>& lambda) -> double {
        if (lambda.empty())
            return -1.0;
        DegreeDistribution dist;
        dist.lambda = lambda;
        double fitness = -1.0;
        double recorded = std::numeric_limits<double>::quiet_NaN();
        try {
            dist.rho = concentrated_rho(lambda, rate);
            const ThresholdResult tr = mcde_threshold(
                gf, dist, grid, mcde_cfg, SplitMix64::derive(seed, 0xde11, eval_counter));
            if (tr.threshold) {
                fitness = *tr.threshold;
                recorded = *tr.threshold;
            } else {
                fitness = 0.0; // evolved but never collapsed: worst real score
                recorded = 0.0;
            }
        } catch (const std::domain_error&) {
            // degenerate check-node side; leave the candidate unscored
        }
        result.evaluations.push_back({lambda, recorded});
        ++eval_counter;
        return fitness;
    };

    const unsigned K = de_cfg.max_distinct_degrees;
    const unsigned P = de_cfg.population;
    SplitMix64 rng(SplitMix64::derive(seed, 0xde01));

    std::vector<std::vector<double>> genomes(P);
    std::vector<std::map<unsigned, double>> lambdas(P);
    std::vector<double> fitness(P);
    for (unsigned i = 0; i < P; ++i) {
        if (i < de_cfg.seed_candidates.size()) {
            genomes[i] = encode(de_cfg.seed_candidates[i], K, de_cfg.d_v_max, rng);
        } else {
            genomes[i].resize(2 * K);
            for (unsigned g = 0; g < K; ++g) {
                genomes[i][g] = 2.0 + double(rng.below(de_cfg.d_v_max - 1));
                genomes[i][K + g] = rng.uniform01();
            }
        }
        lambdas[i] = repair(genomes[i], K, de_cfg.d_v_max);
        fitness[i] = evaluate(lambdas[i]);
    }

    auto best_index = [&] {
        unsigned b = 0;
        for (unsigned i = 1; i < P; ++i)
            if (fitness[i] > fitness[b])
                b = i;
        return b;
    };
    result.best_by_generation.push_back(fitness[best_index()]);

    std::vector<double> donor(2 * K), trial(2 * K);
    for (unsigned gen = 0; gen < de_cfg.generations; ++gen) {
        for (unsigned i = 0; i < P; ++i) {
            unsigned a, b, c;
            do
                a = unsigned(rng.below(P));
            while (a == i);
            do
                b = unsigned(rng.below(P));
            while (b == i || b == a);
            do
                c = unsigned(rng.below(P));
            while (c == i || c == a || c == b);

            for (unsigned g = 0; g < 2 * K; ++g)
                donor[g] = genomes[a][g] + de_cfg.weight * (genomes[b][g] - genomes[c][g]);
            const unsigned forced = unsigned(rng.below(2 * K));
            for (unsigned g = 0; g < 2 * K; ++g)
                trial[g] = (g == forced || rng.uniform01() < de_cfg.crossover) ? donor[g]
                                                                              : genomes[i][g];

            const auto trial_lambda = repair(trial, K, de_cfg.d_v_max);
            const double trial_fit = evaluate(trial_lambda);
            if (trial_fit >= fitness[i]) {
                genomes[i] = trial;
                lambdas[i] = trial_lambda;
                fitness[i] = trial_fit;
            }
        }
        result.best_by_generation.push_back(fitness[best_index()]);
    }

    const unsigned b = best_index();
    if (fitness[b] < 0.0)
        throw std::runtime_error("de_optimize: no feasible candidate was found");
    result.lambda = lambdas[b];
    result.threshold = fitness[b];
    result.dist.lambda = lambdas[b];
    result.dist.rho = concentrated_rho(lambdas[b], rate);
    return result;
}

} // namespace nbrecon
