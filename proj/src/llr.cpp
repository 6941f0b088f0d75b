/*
 * Copyright (c) 2026 nbrecon authors.
 *
 * This file is part of nbrecon.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "nbrecon/llr.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nbrecon {

void normalize_llr(std::span<double> m, double llr_max) {
    const double base = m[0];
    for (double& x : m)
        x = std::clamp(x - base, -llr_max, llr_max);
}

void saturate_llr(std::span<double> m, double llr_max) {
    double lo = m[0];
    for (double x : m)
        lo = std::min(lo, x);
    const double cap = lo + llr_max;
    const double anchor = std::min(m[0], cap);
    for (double& x : m)
        x = std::min(x, cap) - anchor;
}

void probs_from_llr(std::span<const double> m, std::span<double> p) {
    // Softmax of -m; shift by the minimum entry so exp never overflows.
    double lo = m[0];
    for (double x : m)
        lo = std::min(lo, x);
    double sum = 0.0;
    for (size_t j = 0; j < m.size(); ++j) {
        p[j] = std::exp(lo - m[j]);
        sum += p[j];
    }
    for (double& x : p)
        x /= sum;
}

std::vector<double> probs_from_llr(const LlrVector& m) {
    std::vector<double> p(m.q());
    probs_from_llr(std::span<const double>(m.v), std::span<double>(p));
    return p;
}

LlrVector llr_from_probs(std::span<const double> p, double llr_max) {
    LlrVector m(static_cast<unsigned>(p.size()));
    for (double x : p)
        if (x < 0.0 || !std::isfinite(x))
            throw std::invalid_argument("llr_from_probs: probabilities must be finite and >= 0");
    const double l0 = std::log(std::max(p[0], 1e-300));
    for (size_t j = 0; j < p.size(); ++j)
        m.v[j] = l0 - std::log(std::max(p[j], 1e-300));
    normalize_llr(m.v, llr_max);
    return m;
}

LlrVector permute_mul(const GaloisField& gf, uint8_t a, const LlrVector& m) {
    if (a == 0)
        throw std::domain_error("permute_mul: weight must be nonzero");
    const uint8_t* div_a = gf.div_row(a);
    LlrVector out(m.q());
    for (unsigned k = 0; k < m.q(); ++k)
        out.v[k] = m.v[div_a[k]];
    return out;
}

LlrVector permute_div(const GaloisField& gf, const LlrVector& m, uint8_t a) {
    if (a == 0)
        throw std::domain_error("permute_div: weight must be nonzero");
    const uint8_t* mul_a = gf.mul_row(a);
    LlrVector out(m.q());
    for (unsigned k = 0; k < m.q(); ++k)
        out.v[k] = m.v[mul_a[k]];
    return out;
}

void wht(std::span<double> data) {
    const size_t n = data.size();
    for (size_t len = 1; len < n; len <<= 1) {
        for (size_t i = 0; i < n; i += len << 1) {
            for (size_t j = i; j < i + len; ++j) {
                const double a = data[j];
                const double b = data[j + len];
                data[j] = a + b;
                data[j + len] = a - b;
            }
        }
    }
}

std::vector<double> fwd_transform(const GaloisField& gf, const LlrVector& m, uint8_t h) {
    if (h == 0)
        throw std::domain_error("fwd_transform: weight must be nonzero");
    std::vector<double> p = probs_from_llr(m);
    std::vector<double> weighted(m.q());
    const uint8_t* div_h = gf.div_row(h);
    for (unsigned k = 0; k < m.q(); ++k)
        weighted[k] = p[div_h[k]]; // distribution of h*X
    wht(weighted);
    return weighted;
}

namespace {

// Shared tail of inv_transform/check_to_var: take the spectrum of the
// summed-neighbor distribution, invert it, and read out the message for an
// edge of weight h under syndrome coset s.
LlrVector spectrum_to_message(const GaloisField& gf, std::span<const double> spectrum,
                              uint8_t h, uint8_t s, double llr_max) {
    const unsigned q = gf.q();
    std::vector<double> t(spectrum.begin(), spectrum.end());
    wht(t); // q * probability of each symbol value

    double sum = 0.0;
    for (double x : t)
        sum += x;
    LlrVector out(q);
    if (!(sum > 0.0) || !std::isfinite(sum))
        return out; // fully degenerate product: no information

    const uint8_t* mul_h = gf.mul_row(h);
    const double p0 = std::max(t[s ^ mul_h[0]] / sum, kProbFloor);
    const double l0 = std::log(p0);
    for (unsigned k = 0; k < q; ++k) {
        const double pk = std::max(t[s ^ mul_h[k]] / sum, kProbFloor);
        out.v[k] = l0 - std::log(pk);
    }
    saturate_llr(out.v, llr_max);
    return out;
}

} // namespace

LlrVector inv_transform(const GaloisField& gf, std::span<const double> spectrum, uint8_t h,
                        double llr_max) {
    if (h == 0)
        throw std::domain_error("inv_transform: weight must be nonzero");
    return spectrum_to_message(gf, spectrum, h, 0, llr_max);
}

LlrVector check_to_var(const GaloisField& gf, std::span<const LlrVector> others,
                       std::span<const uint8_t> other_weights, uint8_t edge_weight,
                       uint8_t s, double llr_max) {
    if (edge_weight == 0)
        throw std::domain_error("check_to_var: edge weight must be nonzero");
    if (others.size() != other_weights.size())
        throw std::invalid_argument("check_to_var: message/weight count mismatch");

    const unsigned q = gf.q();
    std::vector<double> prod(q, 1.0);
    for (size_t k = 0; k < others.size(); ++k) {
        const std::vector<double> w = fwd_transform(gf, others[k], other_weights[k]);
        for (unsigned j = 0; j < q; ++j)
            prod[j] *= w[j];
    }
    return spectrum_to_message(gf, prod, edge_weight, s, llr_max);
}

LlrVector posterior(const LlrVector& prior, std::span<const LlrVector> incoming,
                    double llr_max) {
    LlrVector out = prior;
    for (const LlrVector& m : incoming)
        for (unsigned k = 0; k < out.q(); ++k)
            out.v[k] += m.v[k];
    saturate_llr(out.v, llr_max);
    return out;
}

LlrVector var_to_check(const LlrVector& post, const LlrVector& incoming_on_edge,
                       double llr_max) {
    LlrVector out = post;
    for (unsigned k = 0; k < out.q(); ++k)
        out.v[k] -= incoming_on_edge.v[k];
    saturate_llr(out.v, llr_max);
    return out;
}

uint8_t hard_decision(std::span<const double> m) {
    size_t best = 0;
    for (size_t k = 1; k < m.size(); ++k)
        if (m[k] < m[best])
            best = k;
    return static_cast<uint8_t>(best);
}

uint8_t hard_decision(const LlrVector& m) {
    return hard_decision(std::span<const double>(m.v));
}

double message_entropy(std::span<const double> m) {
    std::vector<double> p(m.size());
    probs_from_llr(m, std::span<double>(p));
    double h = 0.0;
    for (double x : p)
        if (x > 0.0)
            h -= x * std::log(x);
    return h / std::log(static_cast<double>(m.size()));
}

double message_entropy(const LlrVector& m) {
    return message_entropy(std::span<const double>(m.v));
}

} // namespace nbrecon
