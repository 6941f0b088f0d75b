/*
 * Copyright (c) 2026 nbrecon authors.
 *
 * This file is part of nbrecon.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef NBRECON_PEG_HPP
#define NBRECON_PEG_HPP

#include <cstdint>
#include <vector>

#include "nbrecon/degree_dist.hpp"
#include "nbrecon/parity_check.hpp"
#include "nbrecon/rng.hpp"

namespace nbrecon {

// Progressive edge growth. Places the edges of one variable node at a time
// (nodes in ascending target degree); every edge attaches to a check node at
// maximum BFS distance from the variable in the graph built so far, among
// the checks that still have capacity under chk_degrees. Ties are broken by
// lowest current check degree, then by a seeded draw. The result has no
// parallel edges, and the check degrees match chk_degrees exactly.
//
// var_degrees/chk_degrees must have equal sums; entries of the returned
// matrix all carry weight 1. Throws std::invalid_argument on inconsistent
// inputs and std::runtime_error when a placement is impossible.
SparseParityCheck peg_construct(const std::vector<unsigned>& var_degrees,
                                const std::vector<unsigned>& chk_degrees, unsigned q,
                                SplitMix64& rng);

// Replace every edge weight by an independent uniform draw from [1, q-1].
void assign_edge_weights(SparseParityCheck& H, SplitMix64& rng);

// Realize + construct + weight in one step: the usual way to make a code
// from an ensemble. m is derived from the design rate when not given.
SparseParityCheck construct_code(const DegreeDistribution& dist, unsigned q, size_t n,
                                 size_t m, uint64_t seed);

} // namespace nbrecon

#endif
