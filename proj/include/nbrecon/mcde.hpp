/*
 * Copyright (c) 2026 nbrecon authors.
 *
 * This file is part of nbrecon.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef NBRECON_MCDE_HPP
#define NBRECON_MCDE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "nbrecon/channel.hpp"
#include "nbrecon/degree_dist.hpp"
#include "nbrecon/gf.hpp"

namespace nbrecon {

// Monte-Carlo density evolution: a pool of messages stands in for the edge
// message density of an infinite cycle-free code. Each iteration re-samples
// node degrees and connections, so decoding success is read off the mean
// message entropy of the pool.
struct McdeConfig {
    size_t node_count = 100000;   // messages in the pool
    unsigned max_iterations = 150;
    double entropy_epsilon = 1e-4; // success when mean entropy drops below
    double llr_max = kDefaultLlrMax;
    unsigned threads = 1;
};

// One evolution iteration on a pool of node_count length-q messages (stored
// row-major in `pool`): a check phase that samples check degrees from rho and
// combines messages drawn from the pool under fresh uniform edge weights,
// then a variable phase that samples degrees from lambda and adds fresh
// channel priors (all-zero codeword assumption). Returns the mean entropy of
// the updated pool. Fully determined by (seed, iter); `scratch` must match
// `pool` in size.
double mcde_step(const GaloisField& gf, const DegreeDistribution& dist, const ChannelModel& ch,
                 const McdeConfig& cfg, uint64_t seed, unsigned iter, std::vector<double>& pool,
                 std::vector<double>& scratch);

// Fill a pool with priors of fresh channel observations of the zero word.
void mcde_init_pool(const GaloisField& gf, const ChannelModel& ch, const McdeConfig& cfg,
                    uint64_t seed, std::vector<double>& pool);

struct McdeRun {
    bool success = false;     // entropy fell below epsilon
    unsigned iterations = 0;  // iterations executed
    double final_entropy = 0.0;
};

// Evolve the ensemble at one channel parameter until collapse or the
// iteration budget runs out.
McdeRun mcde_evolve(const GaloisField& gf, const DegreeDistribution& dist,
                    const ChannelModel& ch, const McdeConfig& cfg, uint64_t seed);

struct ThresholdResult {
    std::vector<double> grid;       // evaluated channel parameters, ascending
    std::vector<bool> success;      // final verdict per grid point
    std::vector<size_t> reruns;     // grid indices re-run with a doubled pool
    std::optional<double> threshold; // largest p with all points below it green
    bool at_lower_boundary = false; // no grid point succeeded
    bool at_upper_boundary = false; // every grid point succeeded
};

// Sweep cfg.qber_grid (it is sorted internally). Non-monotone verdicts --
// a failure below the topmost success -- are re-run once with double the
// pool before being accepted; the reported threshold is the largest grid
// value below which everything succeeded.
ThresholdResult mcde_threshold(const GaloisField& gf, const DegreeDistribution& dist,
                               const std::vector<double>& qber_grid, const McdeConfig& cfg,
                               uint64_t seed);

// 20 evenly spaced points over [0.8 * p_max, p_max], where p_max solves
// H(X|Y) = 1 - rate: the tightest channel any rate-R code could survive.
std::vector<double> default_qber_grid(unsigned q, double rate, unsigned steps = 20);

// Channel parameter with conditional entropy exactly `target` (bisection).
double qber_for_entropy(unsigned q, double target);

} // namespace nbrecon

#endif
