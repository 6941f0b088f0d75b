/*
 * Copyright (c) 2026 nbrecon authors.
 *
 * This file is part of nbrecon.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef NBRECON_DEGREE_DIST_HPP
#define NBRECON_DEGREE_DIST_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nbrecon/rng.hpp"

namespace nbrecon {

// Edge-perspective degree distributions of an irregular code ensemble:
// lambda[i] (rho[i]) is the fraction of edges attached to variable (check)
// nodes of degree i.
struct DegreeDistribution {
    std::map<unsigned, double> lambda;
    std::map<unsigned, double> rho;

    unsigned d_v_max() const { return lambda.empty() ? 0 : lambda.rbegin()->first; }
    unsigned d_c_max() const { return rho.empty() ? 0 : rho.rbegin()->first; }
};

struct LambdaOptions {
    unsigned max_distinct_degrees = 10;
    unsigned d_v_max = 40;
    // Coefficients are rescaled when |sum - 1| <= sum_tolerance and rejected
    // beyond it. The strict default treats the input as exact; published
    // tables rounded to three digits are admitted with a wider tolerance.
    double sum_tolerance = 1e-6;
};

// Checks and normalizes a variable-node distribution: degrees in
// [2, d_v_max], at most max_distinct_degrees entries, nonnegative
// coefficients summing to 1 within tolerance (then rescaled exactly).
// Throws std::invalid_argument on violations. If rescaled_by is given, it
// receives the applied scale factor (1.0 when none was needed).
std::map<unsigned, double> validate_lambda(const std::map<unsigned, double>& raw,
                                           const LambdaOptions& opts = {},
                                           double* rescaled_by = nullptr);

// Average inverse degrees sum_i lambda_i / i (and the rho analogue); their
// ratio fixes the design rate R = 1 - (sum rho_i/i) / (sum lambda_i/i).
double inv_degree_sum(const std::map<unsigned, double>& dist);
double design_rate(const DegreeDistribution& dist);

// The check-node distribution concentrated on at most two consecutive
// degrees {d, d+1} that satisfies the rate equation exactly for the given
// lambda and design rate. Throws std::domain_error when the implied average
// check degree is below 2 or absurdly large (degenerate rate).
std::map<unsigned, double> concentrated_rho(const std::map<unsigned, double>& lambda,
                                            double rate);

// Finite-length realization of an ensemble: per-node degrees for n variable
// and m check nodes with equal edge counts on both sides.
struct DegreeSequences {
    std::vector<unsigned> var_degrees; // length n, ascending
    std::vector<unsigned> chk_degrees; // length m, ascending
    size_t edge_count = 0;
};

// Quantizes the node-perspective distributions by largest-remainder
// apportionment; the check side is fitted exactly to the variable-side edge
// count (concentrated distributions stay within two consecutive degrees,
// otherwise leftover edges land on the largest-degree check nodes). Throws
// std::invalid_argument when infeasible, e.g. a realized variable degree
// exceeding m.
DegreeSequences realize_degree_sequences(const DegreeDistribution& dist, size_t n, size_t m);

// Parse/format the "degree:coefficient,degree:coefficient,..." syntax used by
// the CLI and audit logs.
std::map<unsigned, double> parse_degree_poly(const std::string& text);
std::string format_degree_poly(const std::map<unsigned, double>& poly);

} // namespace nbrecon

#endif
