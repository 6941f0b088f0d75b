/*
 * Copyright (c) 2026 nbrecon authors.
 *
 * This file is part of nbrecon.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef NBRECON_PARITY_CHECK_HPP
#define NBRECON_PARITY_CHECK_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "nbrecon/gf.hpp"

namespace nbrecon {

// Sparse m x n parity-check matrix over GF(q) with nonzero entry weights.
// Rows keep their entries sorted by column; no duplicate columns per row.
struct SparseParityCheck {
    struct Entry {
        uint32_t col;
        uint8_t weight; // in [1, q-1]
    };

    unsigned q = 0;
    unsigned poly = 0; // primitive polynomial the weights are expressed in
    size_t n = 0;      // variable nodes (columns)
    size_t m = 0;      // check nodes (rows)
    std::vector<std::vector<Entry>> rows;

    size_t edge_count() const;
    double rate() const { return 1.0 - double(m) / double(n); }
};

// Syndrome s = H x over GF(q). Throws std::invalid_argument on length or
// alphabet mismatch.
std::vector<uint8_t> syndrome(const GaloisField& gf, const SparseParityCheck& H,
                              std::span<const uint8_t> x);

// Text code format, one code per file:
//
//   NBALIST v1
//   q w poly n m
//   <m row lines: "col:weight col:weight ...", columns strictly increasing>
//   checksum <16 hex digits>
//
// The checksum is the fnv1a-64 of everything before the checksum line, so a
// parse -> serialize round trip is byte-identical.
std::string serialize_code(const SparseParityCheck& H);
void write_code_file(const SparseParityCheck& H, const std::string& path);

// Throws std::runtime_error with a distinct message per failure class:
// magic/version, header shape, malformed entries, out-of-range values,
// duplicate or unsorted columns, empty rows/columns, checksum mismatch.
SparseParityCheck parse_code(std::istream& in);
SparseParityCheck parse_code_string(const std::string& text);
SparseParityCheck read_code_file(const std::string& path);

// Length of the shortest cycle in the Tanner graph (even, >= 4), or 0 when
// the graph is acyclic.
unsigned compute_girth(const SparseParityCheck& H);

// Column degrees (variable-node perspective).
std::vector<unsigned> column_degrees(const SparseParityCheck& H);

} // namespace nbrecon

#endif
