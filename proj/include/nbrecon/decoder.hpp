/*
 * Copyright (c) 2026 nbrecon authors.
 *
 * This file is part of nbrecon.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef NBRECON_DECODER_HPP
#define NBRECON_DECODER_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "nbrecon/channel.hpp"
#include "nbrecon/gf.hpp"
#include "nbrecon/llr.hpp"
#include "nbrecon/parity_check.hpp"

namespace nbrecon {

struct DecoderConfig {
    unsigned max_iterations = 100;
    double llr_max = kDefaultLlrMax;
    unsigned check_interval = 1; // syndrome test every this many iterations
};

struct DecodeOutcome {
    std::vector<uint8_t> word;       // best guess for the sent frame
    unsigned iterations = 0;         // message-passing iterations executed
    bool converged = false;          // true iff syndrome(word) matched exactly
    double posterior_entropy = 0.0;  // mean residual entropy, diagnostic
};

// Spectral-domain sum-product syndrome decoder. One instance decodes one
// frame at a time; the referenced field and code must outlive it and may be
// shared read-only between any number of instances.
//
// Messages are length-q log vectors. A check-node update converts each
// incoming message to the probability domain of its weighted symbol, takes
// Walsh-Hadamard spectra, multiplies all spectra except the target edge's
// (prefix/suffix products), inverts, and reads the result through the
// syndrome coset shift; variable nodes add the channel prior and all
// incoming messages and pass extrinsic differences back. Decoding is
// deterministic given (H, s, y, cfg).
class Decoder {
public:
    Decoder(const GaloisField& gf, const SparseParityCheck& H);

    // y are the observed symbols, s the syndrome received for the sent frame.
    // The channel probability drives the priors; p == 0 saturates them.
    // Throws std::invalid_argument on dimension/alphabet mismatch and
    // std::runtime_error if the message state turns non-finite.
    DecodeOutcome decode(std::span<const uint8_t> s, std::span<const uint8_t> y,
                         const ChannelModel& ch, const DecoderConfig& cfg = {});

    const SparseParityCheck& code() const { return H_; }
    const GaloisField& field() const { return gf_; }

private:
    void check_sweep(std::span<const uint8_t> s, double llr_max);
    void var_sweep(double llr_max);
    bool syndrome_matches(std::span<const uint8_t> s) const;

    const GaloisField& gf_;
    const SparseParityCheck& H_;
    unsigned q_;
    size_t n_, m_, edges_;

    std::vector<uint32_t> edge_col_;  // edge -> column, row-major order
    std::vector<uint8_t> edge_weight_;
    std::vector<size_t> row_ptr_;     // m+1 offsets into the edge arrays
    std::vector<size_t> col_ptr_;     // n+1 offsets into col_edges_
    std::vector<uint32_t> col_edges_; // edge ids grouped by column

    std::vector<double> vc_;      // variable-to-check messages, edges*q
    std::vector<double> cv_;      // check-to-variable messages, edges*q
    std::vector<double> prior_;   // n*q channel priors
    std::vector<double> post_;    // n*q latest posteriors
    std::vector<double> spectra_; // per-row scratch, d_max*q
    std::vector<double> suffix_;  // per-row scratch, (d_max+1)*q
    std::vector<double> prefix_;  // q
    std::vector<uint8_t> xhat_;
    bool state_finite_ = true;
};

// Convenience wrapper constructing a throwaway Decoder.
DecodeOutcome decode(const GaloisField& gf, const SparseParityCheck& H,
                     std::span<const uint8_t> s, std::span<const uint8_t> y,
                     const ChannelModel& ch, const DecoderConfig& cfg = {});

} // namespace nbrecon

#endif
