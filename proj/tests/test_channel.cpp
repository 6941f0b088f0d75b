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

#include "nbrecon/channel.hpp"
#include "oracles.hpp"

using namespace nbrecon;

namespace {

// Direct base-q evaluation, structured differently from the library path.
double entropy_reference(unsigned q, double p) {
    const double log2q = std::log2(double(q));
    double h_bits = 0.0;
    if (p > 0.0 && p < 1.0)
        h_bits = -(1.0 - p) * std::log2(1.0 - p) - p * std::log2(p / double(q - 1));
    else if (p == 1.0)
        h_bits = std::log2(double(q - 1));
    return h_bits / log2q;
}

} // namespace

TEST_CASE("channel validation") {
    CHECK_THROWS_AS(make_channel(8, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(make_channel(8, 0.9), std::invalid_argument); // above (q-1)/q
    CHECK_THROWS_AS(make_channel(6, 0.1), std::invalid_argument);
    CHECK(make_channel(8, 7.0 / 8.0).p == doctest::Approx(7.0 / 8.0));
}

TEST_CASE("noiseless channel is the identity") {
    const ChannelModel ch = make_channel(8, 0.0);
    SplitMix64 rng(1);
    std::vector<uint8_t> x;
    for (int i = 0; i < 256; ++i)
        x.push_back(uint8_t(i % 8));
    CHECK(qsc_sample(x, ch, rng) == x);
}

TEST_CASE("fully noisy channel hits every symbol uniformly") {
    const unsigned q = 8;
    const ChannelModel ch = make_channel(q, double(q - 1) / q);
    SplitMix64 rng(2);
    const size_t n = 200000;
    std::vector<uint8_t> x(n, 3);
    const auto y = qsc_sample(x, ch, rng);
    size_t same = 0;
    for (auto v : y)
        same += (v == 3);
    const double phat = double(same) / double(n);
    CHECK(std::abs(phat - 1.0 / q) < oracle::binomial_3sigma(1.0 / q, n));
}

TEST_CASE("empirical symbol error rate matches p within 3 sigma") {
    const ChannelModel ch = make_channel(8, 0.1);
    SplitMix64 rng(3);
    const size_t n = 1000000;
    std::vector<uint8_t> x(n, 0);
    SplitMix64 xgen(4);
    for (auto& v : x)
        v = uint8_t(xgen.below(8));
    const auto y = qsc_sample(x, ch, rng);
    size_t errs = 0;
    for (size_t i = 0; i < n; ++i)
        errs += (y[i] != x[i]);
    const double phat = double(errs) / double(n);
    CHECK(std::abs(phat - 0.1) < oracle::binomial_3sigma(0.1, n));
}

TEST_CASE("identical seeds give identical samples") {
    const ChannelModel ch = make_channel(16, 0.25);
    std::vector<uint8_t> x(5000);
    SplitMix64 xgen(5);
    for (auto& v : x)
        v = uint8_t(xgen.below(16));
    SplitMix64 r1(77), r2(77);
    CHECK(qsc_sample(x, ch, r1) == qsc_sample(x, ch, r2));
}

TEST_CASE("conditional entropy endpoints and known values") {
    CHECK(conditional_entropy(make_channel(8, 0.0)) == doctest::Approx(0.0));
    CHECK(conditional_entropy(make_channel(8, 7.0 / 8.0)) == doctest::Approx(1.0));
    // Values paired with rates 0.80 and 0.50 of the built-in family.
    CHECK(std::abs(conditional_entropy(make_channel(8, 0.0758)) - 0.200) < 0.003);
    CHECK(std::abs(conditional_entropy(make_channel(8, 0.247)) - 0.500) < 0.003);
}

TEST_CASE("conditional entropy matches the reference formula on a grid") {
    for (unsigned q : {2u, 4u, 8u, 64u}) {
        for (int i = 0; i <= 40; ++i) {
            const double p = double(q - 1) / q * i / 40.0;
            CHECK(conditional_entropy({q, p}) == doctest::Approx(entropy_reference(q, p)).epsilon(1e-12));
        }
    }
}

TEST_CASE("conditional entropy is monotone on [0, (q-1)/q]") {
    const unsigned q = 8;
    double prev = -1.0;
    for (int i = 0; i <= 200; ++i) {
        const double p = 7.0 / 8.0 * i / 200.0;
        const double h = conditional_entropy({q, p});
        CHECK(h > prev);
        prev = h;
    }
}

TEST_CASE("slepian-wolf minimum") {
    CHECK(slepian_wolf_min(1, make_channel(8, 0.0)) == doctest::Approx(0.0));
    CHECK(std::abs(slepian_wolf_min(30000, make_channel(8, 0.247)) - 15000.0) < 50.0);
    const ChannelModel ch = make_channel(8, 0.1);
    CHECK(slepian_wolf_min(1000, ch) == doctest::Approx(1000.0 * entropy_reference(8, 0.1)));
}

TEST_CASE("efficiency against table working points") {
    CHECK(efficiency(5000, 10000, make_channel(8, 0.239)) == doctest::Approx(1.024).epsilon(0.005));
    CHECK(efficiency(2000, 10000, make_channel(8, 0.0724)) == doctest::Approx(1.038).epsilon(0.005));
    // A code exactly at the bound has f = 1.
    const ChannelModel ch = make_channel(8, 0.2);
    const double h = conditional_entropy(ch);
    const size_t n = 100000;
    const auto m = size_t(std::llround(h * double(n)));
    CHECK(efficiency(m, n, ch) == doctest::Approx(1.0).epsilon(1e-4));
    CHECK_THROWS_AS(efficiency(10, 100, make_channel(8, 0.0)), std::domain_error);
}

TEST_CASE("beta/f conversions") {
    const ChannelModel ch = make_channel(8, 0.239);
    CHECK(beta_from_f(1.0, ch) == doctest::Approx(1.0));
    CHECK(f_from_beta(1.0, ch) == doctest::Approx(1.0));

    // Independent evaluation of the defining relation at a table point.
    const double h = entropy_reference(8, 0.239);
    const double expected = (1.0 - 1.024 * h) / (1.0 - h);
    CHECK(beta_from_f(1.024, ch) == doctest::Approx(expected).epsilon(1e-12));

    for (double f = 0.5; f <= 2.0; f += 0.1)
        for (double p = 0.02; p < 0.4; p += 0.05) {
            const ChannelModel c = make_channel(8, p);
            CHECK(f_from_beta(beta_from_f(f, c), c) == doctest::Approx(f).epsilon(1e-12));
        }

    CHECK_THROWS_AS(beta_from_f(1.0, make_channel(8, 7.0 / 8.0)), std::domain_error);
    CHECK_THROWS_AS(f_from_beta(1.0, make_channel(8, 0.0)), std::domain_error);
}

TEST_CASE("channel priors") {
    // Observed 0 through a QBER-0.0758 8-ary channel.
    const auto m = channel_priors(0, make_channel(8, 0.0758));
    const auto p = probs_from_llr(m);
    CHECK(p[0] == doctest::Approx(0.9242).epsilon(1e-9));
    for (unsigned j = 1; j < 8; ++j)
        CHECK(p[j] == doctest::Approx(0.0758 / 7.0).epsilon(1e-9));
    CHECK(m.v[1] == doctest::Approx(4.447).epsilon(1e-3));

    // Uniform limit.
    const auto u = channel_priors(5, make_channel(8, 7.0 / 8.0));
    for (unsigned j = 0; j < 8; ++j)
        CHECK(u.v[j] == doctest::Approx(0.0));

    // q=4, p=0.3, observed symbol 2: entry 2 holds log(0.1/0.7) < 0.
    const auto m4 = channel_priors(2, make_channel(4, 0.3));
    CHECK(m4.v[0] == doctest::Approx(0.0));
    CHECK(m4.v[2] == doctest::Approx(std::log(0.1 / 0.7)).epsilon(1e-12));
    CHECK(m4.v[1] == doctest::Approx(0.0));
    CHECK(m4.v[3] == doctest::Approx(0.0));

    // p == 0 saturates instead of diverging.
    const auto sat = channel_priors(1, make_channel(8, 0.0));
    CHECK(sat.v[1] == doctest::Approx(-kDefaultLlrMax));
    CHECK(sat.v[0] == doctest::Approx(0.0));
}
