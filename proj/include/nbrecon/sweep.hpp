/*
 * Copyright (c) 2026 nbrecon authors.
 *
 * This file is part of nbrecon.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef NBRECON_SWEEP_HPP
#define NBRECON_SWEEP_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "nbrecon/decoder.hpp"
#include "nbrecon/parity_check.hpp"
#include "nbrecon/protocol.hpp"

namespace nbrecon {

// Frame-error-rate sweep over a list of channel parameters. A point stops
// early once error_stop frame errors have been collected; the stopping rule
// is applied in frame-index order, so the counted (frames, errors) pair --
// and therefore the emitted file -- is identical for any thread count.
struct SweepConfig {
    std::vector<double> qbers;
    uint32_t frames_per_point = 5000;
    uint32_t error_stop = 100;
    DecoderConfig decoder;
    uint64_t master_seed = 1;
    unsigned threads = 1;
};

struct PointResult {
    double qber = 0.0;
    uint64_t frames = 0;       // frames counted toward the estimate
    uint64_t errors = 0;       // frames not converged+verified
    uint64_t undetected = 0;   // converged but hash mismatch
    double fer = 0.0;
    double mean_iterations = 0.0;
    double efficiency = 0.0;   // syndrome leak over the minimum at this qber
    uint64_t leak_symbols = 0; // m, per frame
    double wall_s = 0.0;       // not part of the result files
};

struct SweepResult {
    std::vector<PointResult> points;
    uint64_t total_frames = 0;
    uint64_t total_undetected = 0;
};

using PointCallback = std::function<void(const PointResult&)>;

SweepResult run_sweep(const GaloisField& gf, const SparseParityCheck& H,
                      const SweepConfig& cfg, const PointCallback& on_point = {});

// Deterministic CSV rendering: '#' config-echo lines, a fixed header row,
// one row per point. Identical configs yield identical bytes.
std::string sweep_csv(const SweepResult& result, const SparseParityCheck& H,
                      const SweepConfig& cfg);

// Bisection search for the channel parameter where the frame error rate
// crosses target_fer, probing with frames_per_probe frames per midpoint.
struct OperatingPoint {
    double qber = 0.0;
    double fer = 0.0;
    double efficiency = 0.0;
    uint64_t frames = 0;
    unsigned probes = 0;
    bool bracketed = false; // false when the target lies outside [lo, hi]
};

OperatingPoint find_fer_working_point(const GaloisField& gf, const SparseParityCheck& H,
                                      double target_fer, double qber_lo, double qber_hi,
                                      uint32_t frames_per_probe, unsigned probes,
                                      const DecoderConfig& dec_cfg, uint64_t seed,
                                      unsigned threads);

} // namespace nbrecon

#endif
