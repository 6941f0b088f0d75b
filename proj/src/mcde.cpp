/*
 * Copyright (c) 2026 nbrecon authors.
 *
 * This file is part of nbrecon.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "nbrecon/mcde.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nbrecon/llr.hpp"
#include "nbrecon/parallel.hpp"

namespace nbrecon {

namespace {

struct DegreeCdf {
    std::vector<double> cum;
    std::vector<unsigned> deg;

    explicit DegreeCdf(const std::map<unsigned, double>& dist) {
        double acc = 0.0;
        for (const auto& [d, frac] : dist) {
            acc += frac;
            cum.push_back(acc);
            deg.push_back(d);
        }
        if (cum.empty() || std::abs(acc - 1.0) > 1e-6)
            throw std::invalid_argument("mcde: degree distribution does not sum to 1");
        cum.back() = 1.0;
    }

    unsigned sample(double u) const {
        for (size_t i = 0; i < cum.size(); ++i)
            if (u < cum[i])
                return deg[i];
        return deg.back();
    }
};

void fill_prior(double* out, unsigned q, double p, double llr_max, SplitMix64& rng) {
    // Observation of the zero symbol through the channel.
    uint8_t y = 0;
    if (p > 0.0 && rng.uniform01() < p)
        y = static_cast<uint8_t>(1 + rng.below(q - 1));
    double gap = llr_max;
    if (p > 0.0)
        gap = std::min(llr_max, std::log((1.0 - p) * double(q - 1) / p));
    std::fill(out, out + q, y == 0 ? gap : 0.0);
    out[y] = y == 0 ? 0.0 : -gap;
}

// Stream labels keep the phases of one run statistically independent.
enum : uint64_t { kInitStream = 1, kCheckStream = 2, kVarStream = 3 };

} // namespace

void mcde_init_pool(const GaloisField& gf, const ChannelModel& ch, const McdeConfig& cfg,
                    uint64_t seed, std::vector<double>& pool) {
    const unsigned q = gf.q();
    pool.assign(cfg.node_count * q, 0.0);
    parallel_for(0, cfg.node_count, cfg.threads, [&](size_t t) {
        SplitMix64 rng(SplitMix64::derive(seed, kInitStream, t));
        fill_prior(&pool[t * q], q, ch.p, cfg.llr_max, rng);
    });
}

double mcde_step(const GaloisField& gf, const DegreeDistribution& dist, const ChannelModel& ch,
                 const McdeConfig& cfg, uint64_t seed, unsigned iter, std::vector<double>& pool,
                 std::vector<double>& scratch) {
    const unsigned q = gf.q();
    const size_t count = cfg.node_count;
    if (pool.size() != count * q)
        throw std::invalid_argument("mcde_step: pool size mismatch");
    scratch.resize(pool.size());

    const DegreeCdf rho_cdf(dist.rho);
    const DegreeCdf lambda_cdf(dist.lambda);

    // Check phase: scratch[t] becomes a check-to-variable message on an edge
    // whose check degree is drawn from rho. All-zero codeword: the syndrome
    // coset is the identity.
    parallel_for(0, count, cfg.threads, [&](size_t t) {
        SplitMix64 rng(SplitMix64::derive(seed, kCheckStream + 4 * uint64_t(iter), t));
        const unsigned d = rho_cdf.sample(rng.uniform01());

        double prod[256], spec[256];
        std::fill(prod, prod + q, 1.0);
        for (unsigned k = 0; k + 1 < d; ++k) {
            const double* msg = &pool[rng.below(count) * q];
            const uint8_t h = static_cast<uint8_t>(1 + rng.below(q - 1));
            const uint8_t* div_h = gf.div_row(h);
            double lo = msg[0];
            for (unsigned a = 1; a < q; ++a)
                lo = std::min(lo, msg[a]);
            for (unsigned a = 0; a < q; ++a)
                spec[a] = std::exp(lo - msg[div_h[a]]);
            wht({spec, q});
            for (unsigned a = 0; a < q; ++a)
                prod[a] *= spec[a];
        }

        const uint8_t h_out = static_cast<uint8_t>(1 + rng.below(q - 1));
        wht({prod, q});
        double sum = 0.0;
        for (unsigned a = 0; a < q; ++a)
            sum += prod[a];
        double* out = &scratch[t * q];
        if (!(sum > 0.0) || !std::isfinite(sum)) {
            std::fill(out, out + q, 0.0);
            return;
        }
        const uint8_t* mul_h = gf.mul_row(h_out);
        double staged[256];
        for (unsigned a = 0; a < q; ++a)
            staged[a] = std::log(std::max(prod[mul_h[a]] / sum, kProbFloor));
        for (unsigned a = 0; a < q; ++a)
            out[a] = staged[0] - staged[a];
        saturate_llr({out, q}, cfg.llr_max);
    });

    // Variable phase: pool[t] becomes a variable-to-check message, the sum of
    // a fresh prior and deg-1 check messages.
    std::vector<double> entropies(count);
    parallel_for(0, count, cfg.threads, [&](size_t t) {
        SplitMix64 rng(SplitMix64::derive(seed, kVarStream + 4 * uint64_t(iter), t));
        const unsigned d = lambda_cdf.sample(rng.uniform01());

        double acc[256];
        fill_prior(acc, q, ch.p, cfg.llr_max, rng);
        for (unsigned k = 0; k + 1 < d; ++k) {
            const double* msg = &scratch[rng.below(count) * q];
            for (unsigned a = 0; a < q; ++a)
                acc[a] += msg[a];
        }
        double* out = &pool[t * q];
        for (unsigned a = 0; a < q; ++a)
            out[a] = acc[a];
        saturate_llr({out, q}, cfg.llr_max);
        entropies[t] = message_entropy(std::span<const double>(out, q));
    });

    double mean = 0.0;
    for (double e : entropies)
        mean += e;
    return mean / double(count);
}

McdeRun mcde_evolve(const GaloisField& gf, const DegreeDistribution& dist,
                    const ChannelModel& ch, const McdeConfig& cfg, uint64_t seed) {
    if (cfg.node_count < 1000)
        throw std::invalid_argument("mcde: pool must hold at least 1000 messages");
    if (!(cfg.entropy_epsilon > 0.0))
        throw std::invalid_argument("mcde: entropy epsilon must be positive");
    std::vector<double> pool, scratch;
    mcde_init_pool(gf, ch, cfg, seed, pool);

    McdeRun run;
    for (unsigned iter = 1; iter <= cfg.max_iterations; ++iter) {
        run.final_entropy = mcde_step(gf, dist, ch, cfg, seed, iter, pool, scratch);
        run.iterations = iter;
        if (run.final_entropy < cfg.entropy_epsilon) {
            run.success = true;
            break;
        }
    }
    return run;
}

ThresholdResult mcde_threshold(const GaloisField& gf, const DegreeDistribution& dist,
                               const std::vector<double>& qber_grid, const McdeConfig& cfg,
                               uint64_t seed) {
    if (qber_grid.empty())
        throw std::invalid_argument("mcde_threshold: empty grid");

    ThresholdResult res;
    res.grid = qber_grid;
    std::sort(res.grid.begin(), res.grid.end());
    res.success.resize(res.grid.size());

    for (size_t i = 0; i < res.grid.size(); ++i) {
        const ChannelModel ch = make_channel(gf.q(), res.grid[i]);
        res.success[i] = mcde_evolve(gf, dist, ch, cfg, SplitMix64::derive(seed, 17, i)).success;
    }

    // Monte-Carlo noise near the threshold can produce failures below a
    // success; give those points one more chance with a doubled pool.
    size_t top = res.grid.size();
    for (size_t i = res.grid.size(); i-- > 0;)
        if (res.success[i]) {
            top = i;
            break;
        }
    if (top != res.grid.size()) {
        McdeConfig big = cfg;
        big.node_count *= 2;
        for (size_t i = 0; i < top; ++i) {
            if (res.success[i])
                continue;
            res.reruns.push_back(i);
            const ChannelModel ch = make_channel(gf.q(), res.grid[i]);
            res.success[i] =
                mcde_evolve(gf, dist, ch, big, SplitMix64::derive(seed, 19, i)).success;
        }
    }

    size_t monotone = 0;
    while (monotone < res.grid.size() && res.success[monotone])
        ++monotone;
    if (monotone == 0) {
        res.at_lower_boundary = true;
    } else {
        res.threshold = res.grid[monotone - 1];
        if (monotone == res.grid.size())
            res.at_upper_boundary = true;
    }
    return res;
}

double qber_for_entropy(unsigned q, double target) {
    if (!(target >= 0.0) || target > 1.0)
        throw std::invalid_argument("qber_for_entropy: target outside [0, 1]");
    double lo = 0.0, hi = double(q - 1) / double(q);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (conditional_entropy({q, mid}) < target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<double> default_qber_grid(unsigned q, double rate, unsigned steps) {
    if (steps < 2)
        throw std::invalid_argument("default_qber_grid: need at least 2 steps");
    const double p_max = qber_for_entropy(q, 1.0 - rate);
    std::vector<double> grid(steps);
    for (unsigned i = 0; i < steps; ++i)
        grid[i] = p_max * (0.8 + 0.2 * double(i) / double(steps - 1));
    return grid;
}

} // namespace nbrecon
