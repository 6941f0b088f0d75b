/*
 * Copyright (c) 2026 nbrecon authors.
 *
 * This file is part of nbrecon.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "nbrecon/peg.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace nbrecon {

namespace {

// BFS state reused across edge placements; generation stamps avoid clearing.
struct PegBfs {
    std::vector<uint32_t> chk_stamp, var_stamp;
    std::vector<int> chk_depth;
    std::vector<uint32_t> frontier_vars, next_vars, seen_checks;
    uint32_t generation = 0;
};

} // namespace

SparseParityCheck peg_construct(const std::vector<unsigned>& var_degrees,
                                const std::vector<unsigned>& chk_degrees, unsigned q,
                                SplitMix64& rng) {
    const size_t n = var_degrees.size();
    const size_t m = chk_degrees.size();
    if (n == 0 || m == 0)
        throw std::invalid_argument("peg: empty degree sequence");
    const size_t var_edges = std::accumulate(var_degrees.begin(), var_degrees.end(), size_t(0));
    const size_t chk_edges = std::accumulate(chk_degrees.begin(), chk_degrees.end(), size_t(0));
    if (var_edges != chk_edges)
        throw std::invalid_argument("peg: edge counts differ between sides");

    // Process variable nodes in ascending degree; keep the original column
    // order within equal degrees.
    std::vector<uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](uint32_t a, uint32_t b) { return var_degrees[a] < var_degrees[b]; });

    std::vector<std::vector<uint32_t>> var_adj(n), chk_adj(m);
    std::vector<unsigned> chk_cur(m, 0);

    // Capacity rule. For a concentrated multiset {d x (m-r), (d+1) x r} any
    // check may grow to degree d, and r of them -- whichever fill up first --
    // may take one extra edge. That keeps every not-yet-full check eligible
    // for as long as possible (better girth) while the final row degrees
    // still match chk_degrees exactly. Other multisets pin a target per node.
    std::vector<unsigned> sorted_chk = chk_degrees;
    std::sort(sorted_chk.begin(), sorted_chk.end());
    const bool concentrated = sorted_chk.back() - sorted_chk.front() <= 1;
    const unsigned base_degree = sorted_chk.front();
    size_t promotions_left = 0;
    if (concentrated)
        promotions_left =
            size_t(std::count(sorted_chk.begin(), sorted_chk.end(), base_degree + 1));

    auto eligible = [&](uint32_t c) {
        if (concentrated)
            return chk_cur[c] < base_degree ||
                   (chk_cur[c] == base_degree && promotions_left > 0);
        return chk_cur[c] < sorted_chk[c];
    };
    auto commit = [&](uint32_t c) {
        if (concentrated && chk_cur[c] == base_degree)
            --promotions_left;
        ++chk_cur[c];
    };

    PegBfs bfs;
    bfs.chk_stamp.assign(m, 0);
    bfs.var_stamp.assign(n, 0);
    bfs.chk_depth.assign(m, 0);

    std::vector<uint32_t> candidates;
    candidates.reserve(m);

    auto pick_min_degree = [&](const std::vector<uint32_t>& pool) -> uint32_t {
        unsigned best = std::numeric_limits<unsigned>::max();
        for (uint32_t c : pool)
            best = std::min(best, chk_cur[c]);
        uint32_t ties = 0;
        for (uint32_t c : pool)
            if (chk_cur[c] == best)
                ++ties;
        uint64_t pick = rng.below(ties);
        for (uint32_t c : pool)
            if (chk_cur[c] == best && pick-- == 0)
                return c;
        return pool.front(); // unreachable
    };

    for (uint32_t v : order) {
        for (unsigned t = 0; t < var_degrees[v]; ++t) {
            candidates.clear();

            if (var_adj[v].empty()) {
                // No edges yet: everything is unreached, pick by capacity.
                for (uint32_t c = 0; c < m; ++c)
                    if (eligible(c))
                        candidates.push_back(c);
            } else {
                // Expand the BFS tree rooted at v until it stops growing.
                const uint32_t gen = ++bfs.generation;
                bfs.frontier_vars.clear();
                bfs.next_vars.clear();
                bfs.seen_checks.clear();
                bfs.var_stamp[v] = gen;
                bfs.frontier_vars.push_back(v);
                size_t checks_seen = 0;
                int depth = 0;
                while (!bfs.frontier_vars.empty() && checks_seen < m) {
                    ++depth; // check level 1, 3, 5, ...
                    bool grew = false;
                    bfs.next_vars.clear();
                    for (uint32_t u : bfs.frontier_vars) {
                        for (uint32_t c : var_adj[u]) {
                            if (bfs.chk_stamp[c] == gen)
                                continue;
                            bfs.chk_stamp[c] = gen;
                            bfs.chk_depth[c] = depth;
                            bfs.seen_checks.push_back(c);
                            ++checks_seen;
                            grew = true;
                            for (uint32_t u2 : chk_adj[c]) {
                                if (bfs.var_stamp[u2] != gen) {
                                    bfs.var_stamp[u2] = gen;
                                    bfs.next_vars.push_back(u2);
                                }
                            }
                        }
                    }
                    if (!grew)
                        break;
                    ++depth;
                    std::swap(bfs.frontier_vars, bfs.next_vars);
                }

                if (checks_seen < m) {
                    // Unreached checks sit at infinite distance.
                    for (uint32_t c = 0; c < m; ++c)
                        if (bfs.chk_stamp[c] != gen && eligible(c))
                            candidates.push_back(c);
                }
                if (candidates.empty()) {
                    // Fall back to the deepest reached level with spare
                    // capacity; level 1 is the direct neighborhood and would
                    // duplicate an edge.
                    int max_depth = 0;
                    for (uint32_t c : bfs.seen_checks)
                        if (eligible(c))
                            max_depth = std::max(max_depth, bfs.chk_depth[c]);
                    for (int level = max_depth; level >= 3 && candidates.empty(); level -= 2)
                        for (uint32_t c : bfs.seen_checks)
                            if (bfs.chk_depth[c] == level && eligible(c))
                                candidates.push_back(c);
                }
            }

            if (candidates.empty())
                throw std::runtime_error("peg: no admissible check node for variable " +
                                         std::to_string(v) +
                                         " (placement would force a parallel edge)");

            const uint32_t c = pick_min_degree(candidates);
            var_adj[v].push_back(c);
            chk_adj[c].push_back(v);
            commit(c);
        }
    }

    SparseParityCheck H;
    H.q = q;
    unsigned w = 0;
    for (unsigned x = q; x > 1; x >>= 1)
        ++w;
    H.poly = GaloisField::default_poly(w);
    H.n = n;
    H.m = m;
    H.rows.resize(m);
    for (uint32_t c = 0; c < m; ++c) {
        std::sort(chk_adj[c].begin(), chk_adj[c].end());
        H.rows[c].reserve(chk_adj[c].size());
        for (uint32_t col : chk_adj[c])
            H.rows[c].push_back({col, 1});
    }
    return H;
}

void assign_edge_weights(SparseParityCheck& H, SplitMix64& rng) {
    for (auto& row : H.rows)
        for (auto& e : row)
            e.weight = static_cast<uint8_t>(1 + rng.below(H.q - 1));
}

SparseParityCheck construct_code(const DegreeDistribution& dist, unsigned q, size_t n,
                                 size_t m, uint64_t seed) {
    const DegreeSequences seq = realize_degree_sequences(dist, n, m);
    SplitMix64 topo_rng(SplitMix64::derive(seed, 0x7065670)); // graph stream
    SparseParityCheck H = peg_construct(seq.var_degrees, seq.chk_degrees, q, topo_rng);
    SplitMix64 weight_rng(SplitMix64::derive(seed, 0x77656967)); // weight stream
    assign_edge_weights(H, weight_rng);
    return H;
}

} // namespace nbrecon
