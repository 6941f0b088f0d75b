/*
 * Copyright (c) 2026 nbrecon authors.
 *
 * This file is part of nbrecon.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "nbrecon/parity_check.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <deque>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "nbrecon/hash.hpp"

namespace nbrecon {

size_t SparseParityCheck::edge_count() const {
    size_t e = 0;
    for (const auto& row : rows)
        e += row.size();
    return e;
}

std::vector<uint8_t> syndrome(const GaloisField& gf, const SparseParityCheck& H,
                              std::span<const uint8_t> x) {
    if (x.size() != H.n)
        throw std::invalid_argument("syndrome: word length does not match code length");
    for (uint8_t v : x)
        if (v >= H.q)
            throw std::invalid_argument("syndrome: symbol out of alphabet");

    std::vector<uint8_t> s(H.m, 0);
    for (size_t i = 0; i < H.m; ++i) {
        uint8_t acc = 0;
        for (const auto& e : H.rows[i])
            acc ^= gf.mul_row(e.weight)[x[e.col]];
        s[i] = acc;
    }
    return s;
}

std::string serialize_code(const SparseParityCheck& H) {
    std::string body = "NBALIST v1\n";
    char buf[96];
    unsigned w = 0;
    for (unsigned v = H.q; v > 1; v >>= 1)
        ++w;
    std::snprintf(buf, sizeof(buf), "%u %u %u %zu %zu\n", H.q, w, H.poly, H.n, H.m);
    body += buf;
    for (const auto& row : H.rows) {
        std::string line;
        for (const auto& e : row) {
            std::snprintf(buf, sizeof(buf), "%s%u:%u", line.empty() ? "" : " ", e.col,
                          unsigned(e.weight));
            line += buf;
        }
        body += line;
        body += '\n';
    }
    std::snprintf(buf, sizeof(buf), "checksum %016" PRIx64 "\n", fnv1a64(body));
    body += buf;
    return body;
}

void write_code_file(const SparseParityCheck& H, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    out << serialize_code(H);
    if (!out)
        throw std::runtime_error("failed writing code file '" + path + "'");
}

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
    throw std::runtime_error("code file: " + what);
}

} // namespace

SparseParityCheck parse_code(std::istream& in) {
    std::string line;
    std::string hashed_body;

    if (!std::getline(in, line))
        parse_fail("empty input");
    if (line != "NBALIST v1")
        parse_fail("bad magic, expected 'NBALIST v1'");
    hashed_body += line;
    hashed_body += '\n';

    if (!std::getline(in, line))
        parse_fail("truncated header");
    hashed_body += line;
    hashed_body += '\n';

    SparseParityCheck H;
    unsigned w = 0;
    {
        std::istringstream hs(line);
        if (!(hs >> H.q >> w >> H.poly >> H.n >> H.m))
            parse_fail("malformed header line");
        std::string rest;
        if (hs >> rest)
            parse_fail("trailing tokens in header");
    }
    if (H.q < 2 || H.q > 256 || (H.q & (H.q - 1)) != 0)
        parse_fail("field order must be a power of two in [2, 256]");
    if ((1u << w) != H.q)
        parse_fail("inconsistent field order and extension degree");
    if (H.poly != GaloisField::default_poly(w))
        parse_fail("unsupported reduction polynomial");
    if (H.n == 0 || H.m == 0 || H.m >= H.n)
        parse_fail("inconsistent dimensions, need 0 < m < n");

    H.rows.resize(H.m);
    std::vector<unsigned> col_deg(H.n, 0);
    for (size_t i = 0; i < H.m; ++i) {
        if (!std::getline(in, line))
            parse_fail("truncated, expected " + std::to_string(H.m) + " rows");
        hashed_body += line;
        hashed_body += '\n';

        std::istringstream rs(line);
        std::string tok;
        long last_col = -1;
        while (rs >> tok) {
            const auto colon = tok.find(':');
            if (colon == std::string::npos)
                parse_fail("malformed entry '" + tok + "' in row " + std::to_string(i));
            unsigned long col = 0, weight = 0;
            try {
                size_t p1 = 0, p2 = 0;
                col = std::stoul(tok.substr(0, colon), &p1);
                weight = std::stoul(tok.substr(colon + 1), &p2);
                if (p1 != colon || p2 != tok.size() - colon - 1)
                    parse_fail("malformed entry '" + tok + "' in row " + std::to_string(i));
            } catch (const std::logic_error&) {
                parse_fail("malformed entry '" + tok + "' in row " + std::to_string(i));
            }
            if (col >= H.n)
                parse_fail("column index out of range in row " + std::to_string(i));
            if (weight == 0 || weight >= H.q)
                parse_fail("weight out of range [1, q-1] in row " + std::to_string(i));
            if (long(col) <= last_col)
                parse_fail("columns not strictly increasing in row " + std::to_string(i));
            last_col = long(col);
            H.rows[i].push_back({uint32_t(col), uint8_t(weight)});
            ++col_deg[col];
        }
        if (H.rows[i].empty())
            parse_fail("zero-degree row " + std::to_string(i));
    }

    if (!std::getline(in, line))
        parse_fail("missing checksum line");
    {
        std::istringstream cs(line);
        std::string kw, hex;
        if (!(cs >> kw >> hex) || kw != "checksum" || hex.size() != 16)
            parse_fail("malformed checksum line");
        uint64_t stored = 0;
        if (std::sscanf(hex.c_str(), "%16" SCNx64, &stored) != 1)
            parse_fail("malformed checksum line");
        if (stored != fnv1a64(hashed_body))
            parse_fail("checksum mismatch");
    }
    for (size_t j = 0; j < H.n; ++j)
        if (col_deg[j] == 0)
            parse_fail("zero-degree column " + std::to_string(j));
    return H;
}

SparseParityCheck parse_code_string(const std::string& text) {
    std::istringstream in(text);
    return parse_code(in);
}

SparseParityCheck read_code_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open code file '" + path + "'");
    return parse_code(in);
}

std::vector<unsigned> column_degrees(const SparseParityCheck& H) {
    std::vector<unsigned> deg(H.n, 0);
    for (const auto& row : H.rows)
        for (const auto& e : row)
            ++deg[e.col];
    return deg;
}

unsigned compute_girth(const SparseParityCheck& H) {
    // Vertices: checks are [0, m), variables are [m, m+n). BFS from every
    // check node; the first non-tree edge closes a shortest closed walk
    // through the start, and the minimum over starts is the girth.
    const size_t V = H.m + H.n;
    std::vector<std::vector<uint32_t>> adj(V);
    for (size_t i = 0; i < H.m; ++i) {
        for (const auto& e : H.rows[i]) {
            adj[i].push_back(uint32_t(H.m + e.col));
            adj[H.m + e.col].push_back(uint32_t(i));
        }
    }

    unsigned best = 0; // 0 = no cycle found
    std::vector<int> dist(V);
    std::vector<uint32_t> parent(V);
    for (size_t s = 0; s < H.m; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<uint32_t> queue;
        dist[s] = 0;
        parent[s] = uint32_t(V);
        queue.push_back(uint32_t(s));
        const int depth_cap = best == 0 ? int(V) : int(best) / 2;
        while (!queue.empty()) {
            const uint32_t u = queue.front();
            queue.pop_front();
            if (dist[u] >= depth_cap)
                break;
            for (uint32_t v : adj[u]) {
                if (v == parent[u])
                    continue;
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else {
                    const unsigned cycle = unsigned(dist[u] + dist[v] + 1);
                    if (best == 0 || cycle < best)
                        best = cycle;
                }
            }
        }
        if (best == 4)
            break; // bipartite minimum, cannot improve
    }
    return best;
}

} // namespace nbrecon
