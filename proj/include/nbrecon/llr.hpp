/*
 * Copyright (c) 2026 nbrecon authors.
 *
 * This file is part of nbrecon.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef NBRECON_LLR_HPP
#define NBRECON_LLR_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "nbrecon/gf.hpp"

namespace nbrecon {

// Default saturation bound for log-likelihood values (natural log units).
inline constexpr double kDefaultLlrMax = 30.0;

// Probabilities are floored at this value before taking logs.
inline constexpr double kProbFloor = 1e-12;

// Length-q log-likelihood message m with m[j] = log(p_0 / p_j). A normalized
// message has m[0] == 0; all entries are kept inside [-llr_max, +llr_max].
struct LlrVector {
    std::vector<double> v;

    LlrVector() = default;
    explicit LlrVector(unsigned q) : v(q, 0.0) {}

    unsigned q() const { return static_cast<unsigned>(v.size()); }
    double& operator[](size_t i) { return v[i]; }
    double operator[](size_t i) const { return v[i]; }
};

// Subtract m[0] from every entry and clamp to [-llr_max, +llr_max].
void normalize_llr(std::span<double> m, double llr_max = kDefaultLlrMax);

// Saturation for accumulated messages. A log-ratio message is only defined
// up to an additive constant, so the cap is applied to the spread (no entry
// may exceed the minimum by more than llr_max) before re-anchoring entry 0
// at zero; this keeps saturation independent of which symbol happens to be
// the reference, and the result respects the +/- llr_max bound.
void saturate_llr(std::span<double> m, double llr_max = kDefaultLlrMax);

// p_j = exp(-m_j) / sum_k exp(-m_k).
std::vector<double> probs_from_llr(const LlrVector& m);
void probs_from_llr(std::span<const double> m, std::span<double> p);

// m_j = log(p_0 / p_j), normalized and saturated. Zero probabilities map to
// saturated entries. Throws std::invalid_argument on negative input.
LlrVector llr_from_probs(std::span<const double> p, double llr_max = kDefaultLlrMax);

// Index permutations that reweight a message by a nonzero field element:
// permute_mul(a, m)[k] = m[k / a] describes a*X when m describes X, and
// permute_div(m, a)[k] = m[k * a] undoes it. Throws std::domain_error on a == 0.
LlrVector permute_mul(const GaloisField& gf, uint8_t a, const LlrVector& m);
LlrVector permute_div(const GaloisField& gf, const LlrVector& m, uint8_t a);

// In-place Walsh-Hadamard transform over the XOR group of size q = 2^w.
// Unnormalized butterflies; applying it twice multiplies by q.
void wht(std::span<double> data);

// Forward transform of a message for an edge of weight h: the Walsh-Hadamard
// spectrum of the probability-domain form of the h-weighted message.
std::vector<double> fwd_transform(const GaloisField& gf, const LlrVector& m, uint8_t h);

// Inverse of fwd_transform: spectrum -> probabilities -> log domain, then the
// /h permutation. inv_transform(fwd_transform(m, h), h) == m up to rounding.
LlrVector inv_transform(const GaloisField& gf, std::span<const double> spectrum, uint8_t h,
                        double llr_max = kDefaultLlrMax);

// Check-node update: the message sent to the edge with weight edge_weight by a
// check with syndrome symbol s, combining the messages of the *other*
// neighbors (others[k] arriving over weight other_weights[k]). Computed as a
// spectral product followed by the syndrome coset shift.
LlrVector check_to_var(const GaloisField& gf, std::span<const LlrVector> others,
                       std::span<const uint8_t> other_weights, uint8_t edge_weight,
                       uint8_t s, double llr_max = kDefaultLlrMax);

// A-posteriori combination: prior plus all incoming check messages, saturated.
LlrVector posterior(const LlrVector& prior, std::span<const LlrVector> incoming,
                    double llr_max = kDefaultLlrMax);

// Extrinsic variable-to-check message: posterior minus the incoming message of
// that edge, saturated.
LlrVector var_to_check(const LlrVector& post, const LlrVector& incoming_on_edge,
                       double llr_max = kDefaultLlrMax);

// Most likely symbol: index of the minimum entry, ties to the lowest symbol.
uint8_t hard_decision(const LlrVector& m);
uint8_t hard_decision(std::span<const double> m);

// Shannon entropy of the message's probability form, in base-q units
// (0 for a delta, 1 for the uniform message).
double message_entropy(const LlrVector& m);
double message_entropy(std::span<const double> m);

} // namespace nbrecon

#endif
