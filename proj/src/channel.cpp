/*
 * Copyright (c) 2026 nbrecon authors.
 *
 * This file is part of nbrecon.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "nbrecon/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace nbrecon {

ChannelModel make_channel(unsigned q, double p) {
    if (q < 2 || q > 256 || (q & (q - 1)) != 0)
        throw std::invalid_argument("channel: q must be a power of two in [2, 256]");
    const double pmax = double(q - 1) / double(q);
    if (!(p >= 0.0) || p > pmax)
        throw std::invalid_argument("channel: p must lie in [0, " + std::to_string(pmax) + "]");
    return ChannelModel{q, p};
}

std::vector<uint8_t> qsc_sample(std::span<const uint8_t> x, const ChannelModel& ch,
                                SplitMix64& rng) {
    std::vector<uint8_t> y(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] >= ch.q)
            throw std::invalid_argument("qsc_sample: symbol out of alphabet");
        y[i] = x[i];
        if (ch.p > 0.0 && rng.uniform01() < ch.p) {
            // XOR with a uniform nonzero delta hits the other q-1 symbols
            // uniformly.
            y[i] = x[i] ^ static_cast<uint8_t>(1 + rng.below(ch.q - 1));
        }
    }
    return y;
}

LlrVector channel_priors(uint8_t y, const ChannelModel& ch, double llr_max) {
    if (y >= ch.q)
        throw std::invalid_argument("channel_priors: symbol out of alphabet");
    // log((1-p) / (p/(q-1))), the gap between the observed symbol and any
    // other one; p == 0 clamps to the saturation bound.
    double gap = llr_max;
    if (ch.p > 0.0) {
        const double others = ch.p / double(ch.q - 1);
        gap = std::log((1.0 - ch.p) / others);
    }
    LlrVector m(ch.q);
    if (y == 0) {
        for (unsigned j = 1; j < ch.q; ++j)
            m.v[j] = gap;
    } else {
        m.v[y] = -gap;
    }
    normalize_llr(m.v, llr_max);
    return m;
}

namespace {

double xlogq(double x, double lnq) {
    return x > 0.0 ? x * std::log(x) / lnq : 0.0;
}

} // namespace

double conditional_entropy(const ChannelModel& ch) {
    const double lnq = std::log(double(ch.q));
    const double p = ch.p;
    return -(xlogq(1.0 - p, lnq) + xlogq(p, lnq) - p * std::log(double(ch.q - 1)) / lnq);
}

double conditional_entropy_bits(const ChannelModel& ch) {
    return conditional_entropy(ch) * std::log2(double(ch.q));
}

double slepian_wolf_min(size_t n, const ChannelModel& ch) {
    return double(n) * conditional_entropy(ch);
}

double efficiency(size_t m, size_t n, const ChannelModel& ch) {
    const double h = conditional_entropy(ch);
    if (h <= 0.0)
        throw std::domain_error("efficiency: H(X|Y) == 0, efficiency undefined");
    return double(m) / (double(n) * h);
}

double beta_from_f(double f, const ChannelModel& ch) {
    const double h = conditional_entropy(ch);
    if (h >= 1.0)
        throw std::domain_error("beta_from_f: conversion singular at H(X|Y) == 1");
    return (1.0 - f * h) / (1.0 - h);
}

double f_from_beta(double beta, const ChannelModel& ch) {
    const double h = conditional_entropy(ch);
    if (h <= 0.0)
        throw std::domain_error("f_from_beta: conversion singular at H(X|Y) == 0");
    return (1.0 - beta * (1.0 - h)) / h;
}

} // namespace nbrecon
