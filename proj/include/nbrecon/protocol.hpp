/*
 * Copyright (c) 2026 nbrecon authors.
 *
 * This file is part of nbrecon.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef NBRECON_PROTOCOL_HPP
#define NBRECON_PROTOCOL_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "nbrecon/channel.hpp"
#include "nbrecon/decoder.hpp"
#include "nbrecon/hash.hpp"

namespace nbrecon {

// One-way reconciliation of a single frame: Alice holds x and publishes the
// syndrome s = Hx (m symbols, the only intentional leakage); Bob observes the
// channel output y, decodes (s, y), and both sides compare short frame hashes
// to decide whether to keep the frame.
struct FrameReport {
    bool converged = false;  // decoder reached a word with matching syndrome
    bool verified = false;   // frame hashes agreed
    unsigned iterations = 0;
    size_t symbol_errors_in = 0;  // mismatches between y and x
    size_t symbol_errors_out = 0; // mismatches between the decoded word and x
    size_t leak_symbols = 0;      // syndrome length m
    uint64_t hash_sent = 0;
    uint64_t hash_decoded = 0;
    double posterior_entropy = 0.0;

    // converged but wrong word: the hash proto exists to catch exactly this
    bool undetected_error() const { return converged && !verified; }
};

// Run the protocol for a given Alice frame; channel noise is drawn from
// channel_seed.
FrameReport reconcile_frame(Decoder& dec, const ChannelModel& ch, const DecoderConfig& cfg,
                            std::span<const uint8_t> x, uint64_t channel_seed);

// Draw a uniform Alice frame from frame_seed, then run the protocol. The
// channel stream is derived from the same seed.
FrameReport reconcile_random_frame(Decoder& dec, const ChannelModel& ch,
                                   const DecoderConfig& cfg, uint64_t frame_seed);

// Uniform q-ary frame of length n.
std::vector<uint8_t> random_frame(unsigned q, size_t n, SplitMix64& rng);

} // namespace nbrecon

#endif
