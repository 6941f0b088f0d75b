/*
 * Copyright (c) 2026 nbrecon authors.
 *
 * This file is part of nbrecon.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "nbrecon/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "nbrecon/parallel.hpp"

namespace nbrecon {

namespace {

struct FrameSlot {
    uint8_t error = 0;
    uint8_t undetected = 0;
    uint16_t iterations = 0;
};

// Evaluate one channel parameter. Frames carry index-derived seeds and the
// early-stop rule counts errors in index order, so the result is a pure
// function of (H, qber, point_tag, master_seed) whatever the thread count.
PointResult run_point(const GaloisField& gf, const SparseParityCheck& H, double qber,
                      uint64_t point_tag, uint32_t frames_budget, uint32_t error_stop,
                      const DecoderConfig& dec_cfg, uint64_t master_seed, unsigned threads) {
    const auto t0 = std::chrono::steady_clock::now();
    const ChannelModel ch = make_channel(H.q, qber);

    std::vector<FrameSlot> slots(frames_budget);
    const uint32_t batch = 128;
    uint32_t done = 0;
    uint32_t counted = frames_budget;
    bool stopped = false;

    while (done < frames_budget && !stopped) {
        const uint32_t hi = std::min(done + batch, frames_budget);
        parallel_for(done, hi, threads, [&](size_t i) {
            Decoder dec(gf, H);
            const uint64_t frame_seed = SplitMix64::derive(master_seed, point_tag, i);
            const FrameReport rep = reconcile_random_frame(dec, ch, dec_cfg, frame_seed);
            FrameSlot& slot = slots[i];
            slot.error = !(rep.converged && rep.verified);
            slot.undetected = rep.undetected_error();
            slot.iterations = static_cast<uint16_t>(rep.iterations);
        });
        done = hi;

        uint64_t errs = 0;
        for (uint32_t i = 0; i < done; ++i) {
            errs += slots[i].error;
            if (errs >= error_stop) {
                counted = i + 1;
                stopped = true;
                break;
            }
        }
    }

    PointResult pr;
    pr.qber = qber;
    pr.frames = counted;
    pr.leak_symbols = H.m;
    uint64_t iter_sum = 0;
    for (uint32_t i = 0; i < counted; ++i) {
        pr.errors += slots[i].error;
        pr.undetected += slots[i].undetected;
        iter_sum += slots[i].iterations;
    }
    pr.fer = double(pr.errors) / double(pr.frames);
    pr.mean_iterations = double(iter_sum) / double(pr.frames);
    try {
        pr.efficiency = efficiency(H.m, H.n, ch);
    } catch (const std::domain_error&) {
        pr.efficiency = std::numeric_limits<double>::infinity();
    }
    pr.wall_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return pr;
}

} // namespace

SweepResult run_sweep(const GaloisField& gf, const SparseParityCheck& H,
                      const SweepConfig& cfg, const PointCallback& on_point) {
    if (cfg.qbers.empty())
        throw std::invalid_argument("sweep: no channel parameters given");
    if (cfg.frames_per_point < 1)
        throw std::invalid_argument("sweep: need at least one frame per point");

    SweepResult result;
    for (size_t pi = 0; pi < cfg.qbers.size(); ++pi) {
        PointResult pr =
            run_point(gf, H, cfg.qbers[pi], 0x90107 + pi, cfg.frames_per_point,
                      std::max<uint32_t>(cfg.error_stop, 1), cfg.decoder, cfg.master_seed,
                      cfg.threads);
        result.total_frames += pr.frames;
        result.total_undetected += pr.undetected;
        if (on_point)
            on_point(pr);
        result.points.push_back(std::move(pr));
    }
    return result;
}

std::string sweep_csv(const SweepResult& result, const SparseParityCheck& H,
                      const SweepConfig& cfg) {
    std::string out;
    char buf[256];
    std::snprintf(buf, sizeof(buf), "# nbrecon simulate v1\n");
    out += buf;
    std::snprintf(buf, sizeof(buf), "# q=%u n=%zu m=%zu rate=%.10g poly=%u\n", H.q, H.n, H.m,
                  H.rate(), H.poly);
    out += buf;
    std::snprintf(buf, sizeof(buf), "# master_seed=%llu rng=splitmix64 hash=fnv1a-64\n",
                  static_cast<unsigned long long>(cfg.master_seed));
    out += buf;
    std::snprintf(buf, sizeof(buf),
                  "# frames_per_point=%u error_stop=%u max_iterations=%u llr_max=%.10g\n",
                  cfg.frames_per_point, cfg.error_stop, cfg.decoder.max_iterations,
                  cfg.decoder.llr_max);
    out += buf;
    out += "qber,frames,errors,fer,mean_iterations,efficiency,leak_symbols,undetected\n";
    for (const PointResult& p : result.points) {
        std::snprintf(buf, sizeof(buf), "%.10g,%llu,%llu,%.10g,%.10g,%.10g,%llu,%llu\n", p.qber,
                      static_cast<unsigned long long>(p.frames),
                      static_cast<unsigned long long>(p.errors), p.fer, p.mean_iterations,
                      p.efficiency, static_cast<unsigned long long>(p.leak_symbols),
                      static_cast<unsigned long long>(p.undetected));
        out += buf;
    }
    return out;
}

OperatingPoint find_fer_working_point(const GaloisField& gf, const SparseParityCheck& H,
                                      double target_fer, double qber_lo, double qber_hi,
                                      uint32_t frames_per_probe, unsigned probes,
                                      const DecoderConfig& dec_cfg, uint64_t seed,
                                      unsigned threads) {
    if (!(target_fer > 0.0) || !(target_fer < 1.0))
        throw std::invalid_argument("working point: target FER must lie in (0, 1)");
    if (!(qber_lo >= 0.0) || !(qber_hi > qber_lo))
        throw std::invalid_argument("working point: need 0 <= lo < hi");

    // Early-stop well past the target so "above target" verdicts stay cheap
    // and exact.
    const uint32_t stop =
        std::max<uint32_t>(10, uint32_t(std::ceil(2.0 * target_fer * frames_per_probe)));

    auto probe = [&](double qber, uint64_t tag) {
        return run_point(gf, H, qber, tag, frames_per_probe, stop, dec_cfg, seed, threads);
    };

    OperatingPoint op;
    PointResult at_lo = probe(qber_lo, 0xf30);
    const PointResult at_hi = probe(qber_hi, 0xf31);
    op.frames += at_lo.frames + at_hi.frames;
    op.probes = 2;
    op.bracketed = at_lo.fer <= target_fer && at_hi.fer >= target_fer;

    double lo = qber_lo, hi = qber_hi;
    if (op.bracketed) {
        for (unsigned k = 0; k < probes; ++k) {
            const double mid = 0.5 * (lo + hi);
            const PointResult at_mid = probe(mid, 0xf32 + k);
            op.frames += at_mid.frames;
            ++op.probes;
            if (at_mid.fer > target_fer) {
                hi = mid;
            } else {
                lo = mid;
                at_lo = at_mid;
            }
        }
    }
    op.qber = lo;
    op.fer = at_lo.fer;
    op.efficiency = at_lo.efficiency;
    return op;
}

} // namespace nbrecon
