/*
 * Copyright (c) 2026 nbrecon authors.
 *
 * This file is part of nbrecon.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>
#include <stdexcept>

#include "nbrecon/ensembles.hpp"
#include "nbrecon/parity_check.hpp"
#include "nbrecon/peg.hpp"
#include "nbrecon/protocol.hpp"

using namespace nbrecon;

namespace {

SparseParityCheck toy_code() {
    // GF(8) matrix [[1,2,0,1],[0,1,3,2]].
    SparseParityCheck H;
    H.q = 8;
    H.poly = 0xb;
    H.n = 4;
    H.m = 2;
    H.rows = {{{0, 1}, {1, 2}, {3, 1}}, {{1, 1}, {2, 3}, {3, 2}}};
    return H;
}

bool no_four_cycles(const SparseParityCheck& H) {
    // Any two rows may share at most one column.
    for (size_t i = 0; i < H.m; ++i)
        for (size_t k = i + 1; k < H.m; ++k) {
            std::set<uint32_t> cols;
            for (const auto& e : H.rows[i])
                cols.insert(e.col);
            unsigned common = 0;
            for (const auto& e : H.rows[k])
                common += cols.count(e.col);
            if (common > 1)
                return false;
        }
    return true;
}

} // namespace

TEST_CASE("syndrome of hand-checked toy code") {
    const GaloisField gf(8);
    const auto H = toy_code();
    const std::vector<uint8_t> zeros(4, 0);
    CHECK(syndrome(gf, H, zeros) == std::vector<uint8_t>(2, 0));

    const std::vector<uint8_t> x = {1, 2, 3, 4};
    CHECK(syndrome(gf, H, x) == std::vector<uint8_t>{1, 4});

    CHECK_THROWS_AS(syndrome(gf, H, std::vector<uint8_t>{1, 2}), std::invalid_argument);
}

TEST_CASE("syndrome map is linear") {
    const GaloisField gf(8);
    const auto dist = to_distribution(find_ensemble("0.50"));
    const auto H = construct_code(dist, 8, 120, 60, 99);
    SplitMix64 rng(4);
    for (int i = 0; i < 50; ++i) {
        const auto a = random_frame(8, H.n, rng);
        const auto b = random_frame(8, H.n, rng);
        std::vector<uint8_t> ab(H.n);
        for (size_t j = 0; j < H.n; ++j)
            ab[j] = a[j] ^ b[j];
        const auto sa = syndrome(gf, H, a);
        const auto sb = syndrome(gf, H, b);
        const auto sab = syndrome(gf, H, ab);
        for (size_t j = 0; j < H.m; ++j)
            CHECK(sab[j] == (sa[j] ^ sb[j]));
    }
}

TEST_CASE("code file round trip of the toy code") {
    const auto H = toy_code();
    const std::string text = serialize_code(H);
    const auto back = parse_code_string(text);
    CHECK(back.q == H.q);
    CHECK(back.n == H.n);
    CHECK(back.m == H.m);
    CHECK(serialize_code(back) == text);
}

TEST_CASE("parse errors are distinct and informative") {
    const std::string good = serialize_code(toy_code());

    auto expect_failure = [](std::string text, const char* needle) {
        try {
            parse_code_string(text);
            FAIL_CHECK("expected a parse failure for: " << needle);
        } catch (const std::runtime_error& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };

    expect_failure("BADMAGIC v1\n", "magic");

    std::string wrong_weight = good;
    const auto pos = wrong_weight.find("1:2");
    wrong_weight.replace(pos, 3, "1:9"); // weight 9 >= q
    expect_failure(wrong_weight, "weight out of range");

    std::string short_n = good;
    short_n.replace(short_n.find("8 3 11 4 2"), 10, "8 3 11 3 2");
    expect_failure(short_n, "column index out of range");

    std::string square = good;
    square.replace(square.find("8 3 11 4 2"), 10, "8 3 11 4 4");
    expect_failure(square, "inconsistent dimensions");

    const std::string truncated = good.substr(0, good.find("\n1:1") + 1);
    expect_failure(truncated, "truncated");

    std::string bad_checksum = good;
    bad_checksum.replace(bad_checksum.find("checksum") + 9, 4, "dead");
    expect_failure(bad_checksum, "checksum mismatch");

    std::string bad_poly = good;
    bad_poly.replace(bad_poly.find("8 3 11"), 6, "8 3 13");
    expect_failure(bad_poly, "polynomial");
}

TEST_CASE("large code re-serialization is byte identical") {
    const auto dist = to_distribution(find_ensemble("0.50"));
    const auto H = construct_code(dist, 8, 2000, 1000, 5);
    const std::string text = serialize_code(H);
    CHECK(serialize_code(parse_code_string(text)) == text);
}

TEST_CASE("peg places degree-1 variables without cycles") {
    SplitMix64 rng(1);
    const auto H = peg_construct(std::vector<unsigned>(4, 1), std::vector<unsigned>(2, 2), 8, rng);
    CHECK(H.edge_count() == 4);
    for (const auto& row : H.rows)
        CHECK(row.size() == 2);
    CHECK(compute_girth(H) == 0); // forest
}

TEST_CASE("peg never duplicates an edge even when 4-cycles are forced") {
    SplitMix64 rng(2);
    // 6 variables of degree 2 onto 3 checks of degree 4: every check pairs 6
    // of the 15 variable pairs, so some pair repeats and a 4-cycle is
    // unavoidable -- but the graph must stay simple (girth >= 4).
    const auto H = peg_construct(std::vector<unsigned>(6, 2), std::vector<unsigned>(3, 4), 8, rng);
    CHECK(H.edge_count() == 12);
    for (const auto& row : H.rows) {
        CHECK(row.size() == 4);
        for (size_t k = 1; k < row.size(); ++k)
            CHECK(row[k].col > row[k - 1].col);
    }
    CHECK(compute_girth(H) >= 4);
}

TEST_CASE("peg avoids 4-cycles when degrees permit") {
    SplitMix64 rng(2);
    // 6 variables of degree 2 onto 4 checks of degree 3: a girth-6 layout
    // exists (the incidence graph of K4) and peg must find one.
    const auto H = peg_construct(std::vector<unsigned>(6, 2), std::vector<unsigned>(4, 3), 8, rng);
    CHECK(H.edge_count() == 12);
    CHECK(no_four_cycles(H));
    CHECK(compute_girth(H) >= 6);
}

TEST_CASE("constructed ensemble code hits its degree profile and girth") {
    const auto dist = to_distribution(find_ensemble("0.50"));
    const auto seq = realize_degree_sequences(dist, 1500, 750);
    SplitMix64 rng(7);
    auto H = peg_construct(seq.var_degrees, seq.chk_degrees, 8, rng);

    // Column degrees match the realized sequence exactly (both ascending).
    auto cols = column_degrees(H);
    std::vector<unsigned> sorted_cols = cols;
    std::sort(sorted_cols.begin(), sorted_cols.end());
    CHECK(sorted_cols == seq.var_degrees);
    // The realization orders columns by degree, and peg keeps that order.
    CHECK(cols == seq.var_degrees);

    // Row degrees match the concentrated pair exactly.
    std::vector<unsigned> rows;
    for (const auto& r : H.rows)
        rows.push_back(unsigned(r.size()));
    std::sort(rows.begin(), rows.end());
    CHECK(rows == seq.chk_degrees);

    CHECK(no_four_cycles(H));
    CHECK(compute_girth(H) >= 6);

    // Weight assignment: deterministic under a seed, uniform over [1, q-1].
    SplitMix64 w1(3), w2(3);
    auto Ha = H, Hb = H;
    assign_edge_weights(Ha, w1);
    assign_edge_weights(Hb, w2);
    CHECK(serialize_code(Ha) == serialize_code(Hb));

    std::map<unsigned, size_t> hist;
    for (const auto& row : Ha.rows)
        for (const auto& e : row)
            ++hist[e.weight];
    CHECK(hist.size() == 7);
    const double expect = double(Ha.edge_count()) / 7.0;
    for (const auto& [w, cnt] : hist)
        CHECK(std::abs(double(cnt) - expect) < 4.0 * std::sqrt(expect));
}

TEST_CASE("binary codes only carry weight 1") {
    DegreeDistribution dist;
    dist.lambda = validate_lambda({{3, 1.0}});
    dist.rho = concentrated_rho(dist.lambda, 0.5);
    const auto H = construct_code(dist, 2, 60, 30, 11);
    for (const auto& row : H.rows)
        for (const auto& e : row)
            CHECK(e.weight == 1);
}

TEST_CASE("impossible placements are reported") {
    SplitMix64 rng(5);
    // Two variables of degree 2 but a single check node: the second edge of
    // each variable would duplicate the first.
    CHECK_THROWS_AS(peg_construct({2, 2}, {4}, 8, rng), std::runtime_error);
    CHECK_THROWS_AS(peg_construct({2, 2}, {3}, 8, rng), std::invalid_argument);
}
