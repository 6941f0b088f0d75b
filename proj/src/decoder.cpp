/*
 * Copyright (c) 2026 nbrecon authors.
 *
 * This file is part of nbrecon.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "nbrecon/decoder.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nbrecon {

Decoder::Decoder(const GaloisField& gf, const SparseParityCheck& H)
    : gf_(gf), H_(H), q_(H.q), n_(H.n), m_(H.m) {
    if (gf.q() != H.q)
        throw std::invalid_argument("decoder: field order does not match the code");

    edges_ = H.edge_count();
    edge_col_.reserve(edges_);
    edge_weight_.reserve(edges_);
    row_ptr_.assign(m_ + 1, 0);
    std::vector<unsigned> col_deg(n_, 0);
    size_t max_row_degree = 0;
    for (size_t i = 0; i < m_; ++i) {
        row_ptr_[i] = edge_col_.size();
        for (const auto& e : H.rows[i]) {
            if (e.weight == 0 || e.weight >= q_)
                throw std::invalid_argument("decoder: edge weight out of range");
            edge_col_.push_back(e.col);
            edge_weight_.push_back(e.weight);
            ++col_deg[e.col];
        }
        if (H.rows[i].empty())
            throw std::invalid_argument("decoder: zero-degree row");
        max_row_degree = std::max(max_row_degree, H.rows[i].size());
    }
    row_ptr_[m_] = edge_col_.size();

    col_ptr_.assign(n_ + 1, 0);
    for (size_t j = 0; j < n_; ++j) {
        if (col_deg[j] == 0)
            throw std::invalid_argument("decoder: zero-degree column");
        col_ptr_[j + 1] = col_ptr_[j] + col_deg[j];
    }
    col_edges_.assign(edges_, 0);
    std::vector<size_t> cursor(col_ptr_.begin(), col_ptr_.end() - 1);
    for (size_t e = 0; e < edges_; ++e)
        col_edges_[cursor[edge_col_[e]]++] = static_cast<uint32_t>(e);

    vc_.assign(edges_ * q_, 0.0);
    cv_.assign(edges_ * q_, 0.0);
    prior_.assign(n_ * q_, 0.0);
    post_.assign(n_ * q_, 0.0);
    spectra_.assign(max_row_degree * q_, 0.0);
    suffix_.assign((max_row_degree + 1) * q_, 0.0);
    prefix_.assign(q_, 0.0);
    xhat_.assign(n_, 0);
}

bool Decoder::syndrome_matches(std::span<const uint8_t> s) const {
    for (size_t i = 0; i < m_; ++i) {
        uint8_t acc = 0;
        for (size_t e = row_ptr_[i]; e < row_ptr_[i + 1]; ++e)
            acc ^= gf_.mul_row(edge_weight_[e])[xhat_[edge_col_[e]]];
        if (acc != s[i])
            return false;
    }
    return true;
}

void Decoder::check_sweep(std::span<const uint8_t> s, double llr_max) {
    const unsigned q = q_;
    for (size_t i = 0; i < m_; ++i) {
        const size_t first = row_ptr_[i];
        const size_t d = row_ptr_[i + 1] - first;

        // Spectrum of each incoming message, as the distribution of the
        // weighted symbol h*X. The exp shift keeps products in range; any
        // common scale cancels in the final log ratios.
        for (size_t k = 0; k < d; ++k) {
            const double* msg = &vc_[(first + k) * q];
            const uint8_t* div_h = gf_.div_row(edge_weight_[first + k]);
            double* spec = &spectra_[k * q];
            double lo = msg[0];
            for (unsigned a = 1; a < q; ++a)
                lo = std::min(lo, msg[a]);
            for (unsigned a = 0; a < q; ++a)
                spec[a] = std::exp(lo - msg[div_h[a]]);
            wht({spec, q});
        }

        // suffix_[k] = product of spectra k..d-1.
        double* suft = &suffix_[d * q];
        std::fill(suft, suft + q, 1.0);
        for (size_t k = d; k-- > 0;) {
            const double* nxt = &suffix_[(k + 1) * q];
            const double* spec = &spectra_[k * q];
            double* cur = &suffix_[k * q];
            for (unsigned a = 0; a < q; ++a)
                cur[a] = nxt[a] * spec[a];
        }

        std::fill(prefix_.begin(), prefix_.end(), 1.0);
        for (size_t k = 0; k < d; ++k) {
            const double* suf = &suffix_[(k + 1) * q];
            double* out = &cv_[(first + k) * q];
            for (unsigned a = 0; a < q; ++a)
                out[a] = prefix_[a] * suf[a];
            wht({out, q});

            double sum = 0.0;
            for (unsigned a = 0; a < q; ++a)
                sum += out[a];
            const uint8_t* mul_h = gf_.mul_row(edge_weight_[first + k]);
            const uint8_t coset = s[i];
            if (!(sum > 0.0) || !std::isfinite(sum)) {
                std::fill(out, out + q, 0.0); // degenerate: no information
            } else {
                // out[a] <- log ratio of P(X = a) read through the syndrome
                // coset; reuse the buffer via a small staging pass.
                double staged[256];
                for (unsigned a = 0; a < q; ++a)
                    staged[a] = std::log(std::max(out[coset ^ mul_h[a]] / sum, kProbFloor));
                const double l0 = staged[0];
                for (unsigned a = 0; a < q; ++a)
                    out[a] = l0 - staged[a];
                saturate_llr({out, q}, llr_max);
            }

            const double* spec = &spectra_[k * q];
            for (unsigned a = 0; a < q; ++a)
                prefix_[a] *= spec[a];
        }
    }
}

void Decoder::var_sweep(double llr_max) {
    const unsigned q = q_;
    double acc[256];
    for (size_t j = 0; j < n_; ++j) {
        const double* prior = &prior_[j * q];
        for (unsigned a = 0; a < q; ++a)
            acc[a] = prior[a];
        for (size_t t = col_ptr_[j]; t < col_ptr_[j + 1]; ++t) {
            const double* in = &cv_[col_edges_[t] * q];
            for (unsigned a = 0; a < q; ++a)
                acc[a] += in[a];
        }

        unsigned best = 0;
        double finite_probe = 0.0;
        double* post = &post_[j * q];
        for (unsigned a = 0; a < q; ++a) {
            post[a] = acc[a];
            finite_probe += acc[a];
            if (acc[a] < acc[best])
                best = a;
        }
        saturate_llr({post, q}, llr_max);
        if (!std::isfinite(finite_probe))
            state_finite_ = false;
        xhat_[j] = static_cast<uint8_t>(best);

        for (size_t t = col_ptr_[j]; t < col_ptr_[j + 1]; ++t) {
            const size_t e = col_edges_[t];
            const double* in = &cv_[e * q];
            double* out = &vc_[e * q];
            for (unsigned a = 0; a < q; ++a)
                out[a] = acc[a] - in[a];
            saturate_llr({out, q}, llr_max);
        }
    }
}

DecodeOutcome Decoder::decode(std::span<const uint8_t> s, std::span<const uint8_t> y,
                              const ChannelModel& ch, const DecoderConfig& cfg) {
    if (s.size() != m_)
        throw std::invalid_argument("decode: syndrome length does not match the code");
    if (y.size() != n_)
        throw std::invalid_argument("decode: observation length does not match the code");
    if (ch.q != q_)
        throw std::invalid_argument("decode: channel alphabet does not match the code");
    if (cfg.max_iterations < 1 || cfg.check_interval < 1)
        throw std::invalid_argument("decode: iteration configuration out of range");
    for (uint8_t v : s)
        if (v >= q_)
            throw std::invalid_argument("decode: syndrome symbol out of alphabet");

    // Channel priors, saturated when p == 0.
    double gap = cfg.llr_max;
    if (ch.p > 0.0)
        gap = std::min(cfg.llr_max, std::log((1.0 - ch.p) * double(q_ - 1) / ch.p));
    for (size_t j = 0; j < n_; ++j) {
        if (y[j] >= q_)
            throw std::invalid_argument("decode: observed symbol out of alphabet");
        double* prior = &prior_[j * q_];
        std::fill(prior, prior + q_, y[j] == 0 ? gap : 0.0);
        prior[y[j]] = y[j] == 0 ? 0.0 : -gap;
        std::copy(prior, prior + q_, &post_[j * q_]);
        xhat_[j] = gap > 0.0 ? y[j] : 0; // argmin of the prior, ties to 0
    }
    for (size_t e = 0; e < edges_; ++e)
        std::copy(&prior_[edge_col_[e] * q_], &prior_[edge_col_[e] * q_ + q_], &vc_[e * q_]);
    state_finite_ = true;

    DecodeOutcome out;
    out.converged = syndrome_matches(s);
    unsigned used = 0;
    while (!out.converged && used < cfg.max_iterations) {
        check_sweep(s, cfg.llr_max);
        var_sweep(cfg.llr_max);
        ++used;
        if (!state_finite_)
            throw std::runtime_error("decode: non-finite message state at iteration " +
                                     std::to_string(used));
        if (used % cfg.check_interval == 0)
            out.converged = syndrome_matches(s);
    }
    if (!out.converged)
        out.converged = syndrome_matches(s);

    out.iterations = used;
    out.word.assign(xhat_.begin(), xhat_.end());
    double entropy = 0.0;
    for (size_t j = 0; j < n_; ++j)
        entropy += message_entropy(std::span<const double>(&post_[j * q_], q_));
    out.posterior_entropy = entropy / double(n_);
    return out;
}

DecodeOutcome decode(const GaloisField& gf, const SparseParityCheck& H,
                     std::span<const uint8_t> s, std::span<const uint8_t> y,
                     const ChannelModel& ch, const DecoderConfig& cfg) {
    Decoder dec(gf, H);
    return dec.decode(s, y, ch, cfg);
}

} // namespace nbrecon
