/*
 * Copyright (c) 2026 nbrecon authors.
 *
 * This file is part of nbrecon.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef NBRECON_GF_HPP
#define NBRECON_GF_HPP

#include <cstdint>
#include <vector>

namespace nbrecon {

// Arithmetic over GF(q), q = 2^w with 1 <= w <= 8.
//
// Elements are stored as their polynomial-basis bit patterns (0 .. q-1), so
// addition and subtraction are both XOR. Multiplication runs through log/exp
// tables built from one canonical primitive polynomial per extension degree:
//
//   w=1: x+1           (0x3)     w=5: x^5+x^2+1       (0x25)
//   w=2: x^2+x+1       (0x7)     w=6: x^6+x+1         (0x43)
//   w=3: x^3+x+1       (0xb)     w=7: x^7+x^3+1       (0x89)
//   w=4: x^4+x+1       (0x13)    w=8: x^8+x^4+x^3+x^2+1 (0x11d)
//
// These are pinned so that serialized codes decode identically everywhere;
// the code file format embeds the polynomial as well.
class GaloisField {
public:
    // Builds the tables for field order q. Throws std::invalid_argument if q
    // is not a power of two in [2, 256].
    explicit GaloisField(unsigned q);

    unsigned q() const { return q_; }
    unsigned w() const { return w_; }
    unsigned primitive_poly() const { return poly_; }

    static uint8_t add(uint8_t a, uint8_t b) { return a ^ b; }
    static uint8_t sub(uint8_t a, uint8_t b) { return a ^ b; }

    uint8_t mul(uint8_t a, uint8_t b) const { return mul_[size_t(a) * q_ + b]; }

    // Throws std::domain_error when dividing by zero.
    uint8_t div(uint8_t a, uint8_t b) const;
    uint8_t inv(uint8_t a) const;

    // Row pointers into the full q*q product/quotient tables; used by the
    // decoder's permutation gathers. mul_row(a)[k] == a*k, div_row(a)[k] == k/a.
    const uint8_t* mul_row(uint8_t a) const { return mul_.data() + size_t(a) * q_; }
    const uint8_t* div_row(uint8_t a) const { return div_by_.data() + size_t(a) * q_; }

    unsigned log(uint8_t a) const { return log_[a]; } // a != 0
    uint8_t exp(unsigned e) const { return exp_[e % (q_ - 1)]; }

    // Canonical primitive polynomial mask for extension degree w.
    static unsigned default_poly(unsigned w);

private:
    unsigned q_ = 0;
    unsigned w_ = 0;
    unsigned poly_ = 0;
    std::vector<uint8_t> exp_;    // exp_[i] = alpha^i, i in [0, q-2]
    std::vector<unsigned> log_;   // log_[a] with a != 0
    std::vector<uint8_t> inv_;    // inv_[a] with a != 0
    std::vector<uint8_t> mul_;    // q*q, mul_[a*q+b] = a*b
    std::vector<uint8_t> div_by_; // q*q, div_by_[a*q+k] = k/a (a != 0)
};

} // namespace nbrecon

#endif
