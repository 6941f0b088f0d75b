/*
 * Copyright (c) 2026 nbrecon authors.
 *
 * This file is part of nbrecon.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef NBRECON_CHANNEL_HPP
#define NBRECON_CHANNEL_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "nbrecon/llr.hpp"
#include "nbrecon/rng.hpp"

namespace nbrecon {

// q-ary symmetric channel: a symbol survives with probability 1-p and is
// otherwise replaced by one of the q-1 other symbols uniformly at random.
struct ChannelModel {
    unsigned q = 0;
    double p = 0.0; // symbol error probability in [0, (q-1)/q]
};

// Validates q (power of two in [2,256]) and p. Throws std::invalid_argument.
ChannelModel make_channel(unsigned q, double p);

// Pass x through the channel, one independent draw per symbol.
std::vector<uint8_t> qsc_sample(std::span<const uint8_t> x, const ChannelModel& ch,
                                SplitMix64& rng);

// Initial log-domain message for one observed symbol: probability 1-p at y,
// p/(q-1) elsewhere. At p == 0 the entries saturate at the llr bound instead
// of diverging.
LlrVector channel_priors(uint8_t y, const ChannelModel& ch, double llr_max = kDefaultLlrMax);

// H(X|Y) of the channel in base-q units: 0 at p = 0, 1 at p = (q-1)/q.
double conditional_entropy(const ChannelModel& ch);

// Same quantity in bits, for reporting.
double conditional_entropy_bits(const ChannelModel& ch);

// Minimum number of syndrome symbols needed for reliable reconciliation of an
// n-symbol frame: n * H(X|Y).
double slepian_wolf_min(size_t n, const ChannelModel& ch);

// Reconciliation efficiency f = m / (n * H(X|Y)); 1 means the minimum leak.
// Throws std::domain_error when H(X|Y) == 0.
double efficiency(size_t m, size_t n, const ChannelModel& ch);

// Conversion between the f and beta efficiency notations for uniform input,
// beta * (1 - H(X|Y)) = 1 - f * H(X|Y). Singular at H(X|Y) == 1 (and the
// inverse at H(X|Y) == 0); both throw std::domain_error there.
double beta_from_f(double f, const ChannelModel& ch);
double f_from_beta(double beta, const ChannelModel& ch);

} // namespace nbrecon

#endif
