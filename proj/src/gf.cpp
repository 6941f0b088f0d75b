/*
 * Copyright (c) 2026 nbrecon authors.
 *
 * This file is part of nbrecon.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "nbrecon/gf.hpp"

#include <stdexcept>
#include <string>

namespace nbrecon {

unsigned GaloisField::default_poly(unsigned w) {
    switch (w) {
    case 1: return 0x3;   // x+1
    case 2: return 0x7;   // x^2+x+1
    case 3: return 0xb;   // x^3+x+1
    case 4: return 0x13;  // x^4+x+1
    case 5: return 0x25;  // x^5+x^2+1
    case 6: return 0x43;  // x^6+x+1
    case 7: return 0x89;  // x^7+x^3+1
    case 8: return 0x11d; // x^8+x^4+x^3+x^2+1
    default: throw std::invalid_argument("GaloisField: unsupported extension degree");
    }
}

GaloisField::GaloisField(unsigned q) {
    if (q < 2 || q > 256 || (q & (q - 1)) != 0)
        throw std::invalid_argument("GaloisField: order " + std::to_string(q) +
                                    " is not a power of two in [2, 256]");
    q_ = q;
    w_ = 0;
    for (unsigned v = q; v > 1; v >>= 1)
        ++w_;
    poly_ = default_poly(w_);

    // Generate alpha^i by repeated multiplication with x, reducing by the
    // primitive polynomial whenever the degree reaches w.
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    unsigned v = 1;
    for (unsigned i = 0; i < q_ - 1; ++i) {
        if (i > 0 && v == 1)
            throw std::logic_error("GaloisField: reduction polynomial is not primitive");
        exp_[i] = static_cast<uint8_t>(v);
        log_[v] = i;
        v <<= 1;
        if (v & q_)
            v ^= poly_;
    }

    inv_.assign(q_, 0);
    for (unsigned a = 1; a < q_; ++a)
        inv_[a] = exp_[(q_ - 1 - log_[a]) % (q_ - 1)];

    mul_.assign(size_t(q_) * q_, 0);
    div_by_.assign(size_t(q_) * q_, 0);
    for (unsigned a = 1; a < q_; ++a)
        for (unsigned b = 1; b < q_; ++b)
            mul_[size_t(a) * q_ + b] = exp_[(log_[a] + log_[b]) % (q_ - 1)];
    for (unsigned a = 1; a < q_; ++a)
        for (unsigned k = 0; k < q_; ++k)
            div_by_[size_t(a) * q_ + k] = mul_[size_t(inv_[a]) * q_ + k];
}

uint8_t GaloisField::div(uint8_t a, uint8_t b) const {
    if (b == 0)
        throw std::domain_error("GaloisField: division by zero");
    return div_by_[size_t(b) * q_ + a];
}

uint8_t GaloisField::inv(uint8_t a) const {
    if (a == 0)
        throw std::domain_error("GaloisField: zero has no inverse");
    return inv_[a];
}

} // namespace nbrecon
