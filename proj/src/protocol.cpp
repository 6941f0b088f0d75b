/*
 * Copyright (c) 2026 nbrecon authors.
 *
 * This file is part of nbrecon.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "nbrecon/protocol.hpp"

#include "nbrecon/parity_check.hpp"

namespace nbrecon {

std::vector<uint8_t> random_frame(unsigned q, size_t n, SplitMix64& rng) {
    std::vector<uint8_t> x(n);
    for (auto& s : x)
        s = static_cast<uint8_t>(rng.below(q));
    return x;
}

FrameReport reconcile_frame(Decoder& dec, const ChannelModel& ch, const DecoderConfig& cfg,
                            std::span<const uint8_t> x, uint64_t channel_seed) {
    const SparseParityCheck& H = dec.code();

    SplitMix64 channel_rng(channel_seed);
    const std::vector<uint8_t> y = qsc_sample(x, ch, channel_rng);
    const std::vector<uint8_t> s = syndrome(dec.field(), H, x);

    const DecodeOutcome out = dec.decode(s, y, ch, cfg);

    FrameReport rep;
    rep.converged = out.converged;
    rep.iterations = out.iterations;
    rep.posterior_entropy = out.posterior_entropy;
    rep.leak_symbols = H.m;
    for (size_t j = 0; j < x.size(); ++j) {
        rep.symbol_errors_in += (y[j] != x[j]);
        rep.symbol_errors_out += (out.word[j] != x[j]);
    }
    rep.hash_sent = fnv1a64(std::span<const uint8_t>(x.data(), x.size()));
    rep.hash_decoded = fnv1a64(std::span<const uint8_t>(out.word.data(), out.word.size()));
    rep.verified = rep.hash_sent == rep.hash_decoded;
    return rep;
}

FrameReport reconcile_random_frame(Decoder& dec, const ChannelModel& ch,
                                   const DecoderConfig& cfg, uint64_t frame_seed) {
    SplitMix64 frame_rng(SplitMix64::derive(frame_seed, 0xa11ce));
    const std::vector<uint8_t> x = random_frame(dec.code().q, dec.code().n, frame_rng);
    return reconcile_frame(dec, ch, cfg, x, SplitMix64::derive(frame_seed, 0xc4a7));
}

} // namespace nbrecon
