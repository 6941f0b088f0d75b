/*
 * Copyright (c) 2026 nbrecon authors.
 *
 * This file is part of nbrecon.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef NBRECON_ENSEMBLES_HPP
#define NBRECON_ENSEMBLES_HPP

#include <map>
#include <string>
#include <vector>

#include "nbrecon/degree_dist.hpp"

namespace nbrecon {

// Optimized variable-node degree distributions for the 8-ary symmetric
// channel, one per design rate in {0.50, 0.55, ..., 0.90}. The coefficients
// are stored as published (rounded to three digits, not summing exactly to
// one); to_distribution() rescales them and derives the matching
// concentrated check-node distribution.
struct BuiltinEnsemble {
    std::string label;                               // e.g. "0.50"
    double rate;                                     // design rate
    std::vector<std::pair<unsigned, double>> lambda; // degree, raw coefficient
};

const std::vector<BuiltinEnsemble>& builtin_ensembles();

// Lookup by label or numeric rate (within 1e-9). Throws std::invalid_argument
// for unknown rates, listing the available ones.
const BuiltinEnsemble& find_ensemble(const std::string& label);
const BuiltinEnsemble& find_ensemble(double rate);

// Normalized lambda plus the concentrated rho for the ensemble's rate.
// rescaled_by, if given, receives the normalization factor applied to the
// published coefficients.
DegreeDistribution to_distribution(const BuiltinEnsemble& e, double* rescaled_by = nullptr);

} // namespace nbrecon

#endif
