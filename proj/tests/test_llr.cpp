/*
 * Copyright (c) 2026 nbrecon authors.
 *
 * This file is part of nbrecon.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "nbrecon/llr.hpp"
#include "oracles.hpp"

using namespace nbrecon;

TEST_CASE("uniform probabilities give the all-zero message") {
    const std::vector<double> p(8, 1.0 / 8.0);
    const auto m = llr_from_probs(p);
    for (double v : m.v)
        CHECK(v == doctest::Approx(0.0));
}

TEST_CASE("prior-shaped probabilities give the expected gap") {
    std::vector<double> p(8, 0.0758 / 7.0);
    p[0] = 0.9242;
    const auto m = llr_from_probs(p);
    CHECK(m.v[0] == 0.0);
    for (unsigned j = 1; j < 8; ++j)
        CHECK(m.v[j] == doctest::Approx(4.447).epsilon(1e-3));
}

TEST_CASE("probability round trip is tight on random simplex points") {
    SplitMix64 rng(42);
    for (int i = 0; i < 1000; ++i) {
        const unsigned q = (i % 2) ? 8 : 16;
        const auto p = oracle::random_simplex(q, rng);
        const auto back = probs_from_llr(llr_from_probs(p));
        for (unsigned k = 0; k < q; ++k)
            CHECK(std::abs(back[k] - p[k]) < 1e-10);
    }
}

TEST_CASE("zero probabilities saturate") {
    const std::vector<double> p = {0.5, 0.5, 0.0, 0.0};
    const auto m = llr_from_probs(p);
    CHECK(m.v[0] == 0.0);
    CHECK(m.v[1] == doctest::Approx(0.0));
    CHECK(m.v[2] == kDefaultLlrMax);
    CHECK(m.v[3] == kDefaultLlrMax);
    CHECK_THROWS_AS(llr_from_probs(std::vector<double>{0.5, -0.1, 0.6}), std::invalid_argument);
}

TEST_CASE("probability form of a message always sums to one") {
    SplitMix64 rng(9);
    for (int i = 0; i < 200; ++i) {
        const auto m = oracle::random_message(8, 25.0, rng);
        const auto p = probs_from_llr(m);
        double sum = 0.0;
        for (double x : p)
            sum += x;
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("weight permutations: identity, inverse pair, hand table") {
    const GaloisField gf4(4);
    SplitMix64 rng(5);

    const auto m = oracle::random_message(4, 10.0, rng);
    const auto id = permute_mul(gf4, 1, m);
    for (unsigned k = 0; k < 4; ++k)
        CHECK(id.v[k] == m.v[k]);

    // GF(4) under x^2+x+1: multiplying indices by 2 permutes (0,1,2,3) to
    // (0,3,1,2) in the k/2 gather.
    LlrVector probe(4);
    probe.v = {0.0, 1.0, 2.0, 3.0};
    const auto g = permute_mul(gf4, 2, probe);
    CHECK(g.v[0] == 0.0);
    CHECK(g.v[1] == 3.0);
    CHECK(g.v[2] == 1.0);
    CHECK(g.v[3] == 2.0);

    const GaloisField gf8(8);
    for (int i = 0; i < 300; ++i) {
        const auto msg = oracle::random_message(8, 20.0, rng);
        const auto a = uint8_t(1 + rng.below(7));
        const auto round = permute_div(gf8, permute_mul(gf8, a, msg), a);
        for (unsigned k = 0; k < 8; ++k)
            CHECK(round.v[k] == msg.v[k]);
    }

    CHECK_THROWS_AS(permute_mul(gf8, 0, m), std::domain_error);
    CHECK_THROWS_AS(permute_div(gf8, m, 0), std::domain_error);
}

TEST_CASE("walsh-hadamard fixed points") {
    // Uniform distribution -> unit dc component only.
    std::vector<double> u(8, 1.0 / 8.0);
    wht(u);
    CHECK(u[0] == doctest::Approx(1.0));
    for (unsigned k = 1; k < 8; ++k)
        CHECK(u[k] == doctest::Approx(0.0));

    // Delta at zero -> flat spectrum.
    std::vector<double> d(8, 0.0);
    d[0] = 1.0;
    wht(d);
    for (unsigned k = 0; k < 8; ++k)
        CHECK(d[k] == doctest::Approx(1.0));
}

TEST_CASE("transform inverse identity over random messages and weights") {
    // Spectral reconstruction of a probability p carries an absolute error of
    // a few ulps of 1, i.e. a log-domain error of ~1e-15/p, so the 1e-10
    // identity is meaningful for messages in the decoder's operating range
    // (entries within a few nats). Wider messages are covered below in the
    // probability domain.
    SplitMix64 rng(13);
    for (int i = 0; i < 1000; ++i) {
        const unsigned q = (i % 3 == 0) ? 4 : 8;
        const GaloisField gf(q);
        const auto m = oracle::random_message(q, 4.5, rng);
        const auto h = uint8_t(1 + rng.below(q - 1));
        const auto back = inv_transform(gf, fwd_transform(gf, m, h), h);
        for (unsigned k = 0; k < q; ++k)
            CHECK(std::abs(back.v[k] - m.v[k]) < 1e-10);
    }
}

TEST_CASE("transform round trip of wide messages is exact in probability") {
    SplitMix64 rng(14);
    for (int i = 0; i < 300; ++i) {
        const GaloisField gf(8);
        const auto m = oracle::random_message(8, 20.0, rng);
        const auto h = uint8_t(1 + rng.below(7));
        const auto back = inv_transform(gf, fwd_transform(gf, m, h), h);
        const auto pm = probs_from_llr(m);
        const auto pb = probs_from_llr(back);
        for (unsigned k = 0; k < 8; ++k)
            CHECK(std::abs(pb[k] - pm[k]) < 1e-10);
    }
}

TEST_CASE("posterior and extrinsic updates") {
    SplitMix64 rng(21);
    const auto prior = oracle::random_message(8, 5.0, rng);

    CHECK(posterior(prior, {}).v == prior.v);

    const auto a = oracle::random_message(8, 5.0, rng);
    LlrVector neg(8);
    for (unsigned k = 0; k < 8; ++k)
        neg.v[k] = -a.v[k];
    const std::vector<LlrVector> pair = {a, neg};
    const auto cancel = posterior(LlrVector(8), pair);
    for (unsigned k = 0; k < 8; ++k)
        CHECK(cancel.v[k] == doctest::Approx(0.0));

    // Random case against direct summation, then the algebraic identity
    // var_to_check + incoming == posterior.
    const std::vector<LlrVector> incoming = {oracle::random_message(8, 5.0, rng),
                                             oracle::random_message(8, 5.0, rng),
                                             oracle::random_message(8, 5.0, rng)};
    const auto post = posterior(prior, incoming);
    for (unsigned k = 0; k < 8; ++k) {
        double expect = prior.v[k];
        for (const auto& msg : incoming)
            expect += msg.v[k];
        CHECK(post.v[k] == doctest::Approx(expect).epsilon(1e-12));
    }
    const auto extr = var_to_check(post, incoming[1]);
    for (unsigned k = 0; k < 8; ++k)
        CHECK(extr.v[k] + incoming[1].v[k] == doctest::Approx(post.v[k]).epsilon(1e-12));
}

TEST_CASE("hard decision argmin with lowest-symbol ties") {
    LlrVector m(8);
    m.v = {0.0, -2.0, 1.0, -2.0, 3.0, -1.0, 0.0, 0.0};
    CHECK(hard_decision(m) == 1);
    CHECK(hard_decision(LlrVector(8)) == 0);

    // Noiseless observation of symbol 5 decodes to 5.
    LlrVector obs(8);
    for (unsigned k = 0; k < 8; ++k)
        obs.v[k] = (k == 5) ? -20.0 : 0.0;
    obs.v[0] = 0.0;
    CHECK(hard_decision(obs) == 5);

    SplitMix64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const auto msg = oracle::random_message(16, 10.0, rng);
        unsigned best = 0;
        for (unsigned k = 1; k < 16; ++k)
            if (msg.v[k] < msg.v[best])
                best = k;
        CHECK(hard_decision(msg) == best);
    }
}

TEST_CASE("message entropy in base-q units") {
    CHECK(message_entropy(LlrVector(8)) == doctest::Approx(1.0));

    LlrVector sat(8);
    for (unsigned k = 1; k < 8; ++k)
        sat.v[k] = kDefaultLlrMax;
    CHECK(message_entropy(sat) < 1e-10);

    const auto half = llr_from_probs(std::vector<double>{0.5, 0.5, 0.0, 0.0});
    CHECK(message_entropy(half) == doctest::Approx(0.5).epsilon(1e-6));
}
