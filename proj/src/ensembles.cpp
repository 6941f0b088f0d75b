/*
 * Copyright (c) 2026 nbrecon authors.
 *
 * This file is part of nbrecon.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "nbrecon/ensembles.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace nbrecon {

const std::vector<BuiltinEnsemble>& builtin_ensembles() {
    // Edge-perspective lambda coefficients by node degree. A term c*x^(i-1)
    // of the usual polynomial notation appears here as {i, c}.
    static const std::vector<BuiltinEnsemble> table = {
        {"0.50",
         0.50,
         {{2, 0.215}, {3, 0.256}, {5, 0.030}, {8, 0.154}, {12, 0.065}, {14, 0.050},
          {22, 0.072}, {28, 0.128}}},
        {"0.55",
         0.55,
         {{2, 0.183}, {3, 0.269}, {7, 0.124}, {9, 0.036}, {11, 0.097}, {22, 0.004},
          {26, 0.116}, {27, 0.171}}},
        {"0.60",
         0.60,
         {{2, 0.192}, {3, 0.196}, {6, 0.222}, {14, 0.104}, {24, 0.114}, {26, 0.055},
          {28, 0.117}}},
        {"0.65",
         0.65,
         {{2, 0.173}, {3, 0.228}, {5, 0.092}, {9, 0.169}, {15, 0.112}, {24, 0.019},
          {25, 0.012}, {29, 0.195}}},
        {"0.70",
         0.70,
         {{2, 0.160}, {3, 0.208}, {6, 0.140}, {9, 0.096}, {11, 0.028}, {12, 0.013},
          {19, 0.113}, {22, 0.032}, {28, 0.211}}},
        {"0.75",
         0.75,
         {{2, 0.165}, {3, 0.192}, {6, 0.092}, {8, 0.176}, {11, 0.019}, {18, 0.086},
          {20, 0.129}, {31, 0.103}, {32, 0.038}}},
        {"0.80",
         0.80,
         {{2, 0.146}, {3, 0.177}, {5, 0.130}, {8, 0.084}, {11, 0.149}, {20, 0.035},
          {23, 0.029}, {26, 0.087}, {27, 0.163}}},
        {"0.85",
         0.85,
         {{2, 0.125}, {3, 0.165}, {6, 0.163}, {8, 0.110}, {13, 0.073}, {19, 0.089},
          {28, 0.122}, {33, 0.154}}},
        {"0.90",
         0.90,
         {{2, 0.112}, {3, 0.103}, {4, 0.194}, {10, 0.146}, {11, 0.163}, {18, 0.003},
          {20, 0.173}, {27, 0.049}, {29, 0.006}, {30, 0.052}}},
    };
    return table;
}

const BuiltinEnsemble& find_ensemble(const std::string& label) {
    std::string known;
    for (const auto& e : builtin_ensembles()) {
        if (e.label == label)
            return e;
        known += (known.empty() ? "" : ", ") + e.label;
    }
    throw std::invalid_argument("unknown ensemble rate '" + label + "', available: " + known);
}

const BuiltinEnsemble& find_ensemble(double rate) {
    for (const auto& e : builtin_ensembles())
        if (std::abs(e.rate - rate) < 1e-9)
            return e;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", rate);
    return find_ensemble(std::string(buf));
}

DegreeDistribution to_distribution(const BuiltinEnsemble& e, double* rescaled_by) {
    std::map<unsigned, double> raw(e.lambda.begin(), e.lambda.end());
    LambdaOptions opts;
    opts.sum_tolerance = 0.05; // published tables are rounded to 3 digits
    DegreeDistribution dist;
    dist.lambda = validate_lambda(raw, opts, rescaled_by);
    dist.rho = concentrated_rho(dist.lambda, e.rate);
    return dist;
}

} // namespace nbrecon
