/*
 * Copyright (c) 2026 nbrecon authors.
 *
 * This file is part of nbrecon.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "nbrecon/degree_dist.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace nbrecon {

std::map<unsigned, double> validate_lambda(const std::map<unsigned, double>& raw,
                                           const LambdaOptions& opts, double* rescaled_by) {
    if (raw.empty())
        throw std::invalid_argument("lambda: empty distribution");

    std::map<unsigned, double> out;
    double sum = 0.0;
    for (const auto& [deg, coeff] : raw) {
        if (coeff < 0.0 || !std::isfinite(coeff))
            throw std::invalid_argument("lambda: negative coefficient at degree " +
                                        std::to_string(deg));
        if (coeff == 0.0)
            continue;
        if (deg < 2)
            throw std::invalid_argument("lambda: variable degrees start at 2");
        if (deg > opts.d_v_max)
            throw std::invalid_argument("lambda: degree " + std::to_string(deg) +
                                        " exceeds d_v_max=" + std::to_string(opts.d_v_max));
        out[deg] = coeff;
        sum += coeff;
    }
    if (out.empty())
        throw std::invalid_argument("lambda: all coefficients are zero");
    if (out.size() > opts.max_distinct_degrees)
        throw std::invalid_argument("lambda: more than " +
                                    std::to_string(opts.max_distinct_degrees) +
                                    " distinct degrees");
    if (std::abs(sum - 1.0) > opts.sum_tolerance)
        throw std::invalid_argument("lambda: coefficients sum to " + std::to_string(sum) +
                                    ", outside tolerance");
    for (auto& [deg, coeff] : out)
        coeff /= sum;
    if (rescaled_by)
        *rescaled_by = 1.0 / sum;
    return out;
}

double inv_degree_sum(const std::map<unsigned, double>& dist) {
    double s = 0.0;
    for (const auto& [deg, coeff] : dist)
        s += coeff / double(deg);
    return s;
}

double design_rate(const DegreeDistribution& dist) {
    return 1.0 - inv_degree_sum(dist.rho) / inv_degree_sum(dist.lambda);
}

std::map<unsigned, double> concentrated_rho(const std::map<unsigned, double>& lambda,
                                            double rate) {
    if (!(rate > 0.0) || !(rate < 1.0))
        throw std::invalid_argument("concentrated_rho: rate must lie in (0, 1)");
    const double t = (1.0 - rate) * inv_degree_sum(lambda); // target sum rho_i / i
    const double avg = 1.0 / t;
    if (avg < 2.0)
        throw std::domain_error("concentrated_rho: required average check degree below 2");
    if (avg > 1e5)
        throw std::domain_error("concentrated_rho: degenerate rate, check degree explodes");

    const unsigned d = static_cast<unsigned>(avg);
    const double rho_d = double(d) * ((double(d) + 1.0) * t - 1.0);
    std::map<unsigned, double> rho;
    if (rho_d > 1e-12)
        rho[d] = rho_d;
    if (1.0 - rho_d > 1e-12)
        rho[d + 1] = 1.0 - rho_d;
    return rho;
}

namespace {

// Largest-remainder apportionment of `total` items proportional to weights.
std::map<unsigned, size_t> apportion(const std::map<unsigned, double>& weights, size_t total) {
    double wsum = 0.0;
    for (const auto& [k, w] : weights)
        wsum += w;
    if (!(wsum > 0.0))
        throw std::invalid_argument("apportion: zero total weight");

    std::map<unsigned, size_t> counts;
    std::vector<std::pair<double, unsigned>> remainders;
    size_t assigned = 0;
    for (const auto& [k, w] : weights) {
        const double share = double(total) * w / wsum;
        const size_t base = static_cast<size_t>(share);
        counts[k] = base;
        assigned += base;
        remainders.push_back({share - double(base), k});
    }
    std::sort(remainders.begin(), remainders.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first)
            return a.first > b.first;
        return a.second < b.second;
    });
    for (size_t i = 0; assigned < total; ++i, ++assigned)
        ++counts[remainders[i % remainders.size()].second];
    return counts;
}

std::vector<unsigned> expand_ascending(const std::map<unsigned, size_t>& counts) {
    std::vector<unsigned> out;
    for (const auto& [deg, cnt] : counts)
        out.insert(out.end(), cnt, deg);
    return out;
}

bool is_concentrated(const std::map<unsigned, double>& rho) {
    if (rho.size() == 1)
        return true;
    return rho.size() == 2 && rho.rbegin()->first == rho.begin()->first + 1;
}

} // namespace

DegreeSequences realize_degree_sequences(const DegreeDistribution& dist, size_t n, size_t m) {
    if (n == 0 || m == 0 || m >= n)
        throw std::invalid_argument("realize: need 0 < m < n");

    // Node-perspective variable distribution: L_i proportional to lambda_i/i.
    std::map<unsigned, double> var_node_weight;
    for (const auto& [deg, coeff] : dist.lambda)
        var_node_weight[deg] = coeff / double(deg);
    const auto var_counts = apportion(var_node_weight, n);

    DegreeSequences seq;
    seq.var_degrees = expand_ascending(var_counts);
    size_t edges = 0;
    for (unsigned d : seq.var_degrees)
        edges += d;
    seq.edge_count = edges;

    if (seq.var_degrees.back() > m)
        throw std::invalid_argument("realize: variable degree " +
                                    std::to_string(seq.var_degrees.back()) +
                                    " exceeds check count " + std::to_string(m));
    if (edges < m)
        throw std::invalid_argument("realize: fewer edges than check nodes");

    if (dist.rho.empty() || is_concentrated(dist.rho)) {
        // Exact two-degree fit to the variable-side edge count.
        const size_t d = edges / m;
        const size_t r = edges - d * m;
        std::map<unsigned, size_t> chk_counts;
        if (m - r > 0)
            chk_counts[static_cast<unsigned>(d)] = m - r;
        if (r > 0)
            chk_counts[static_cast<unsigned>(d + 1)] = r;
        seq.chk_degrees = expand_ascending(chk_counts);
    } else {
        std::map<unsigned, double> chk_node_weight;
        for (const auto& [deg, coeff] : dist.rho)
            chk_node_weight[deg] = coeff / double(deg);
        auto chk_counts = apportion(chk_node_weight, m);
        seq.chk_degrees = expand_ascending(chk_counts);
        size_t chk_edges = 0;
        for (unsigned d : seq.chk_degrees)
            chk_edges += d;
        // Absorb the quantization mismatch on the largest-degree check nodes.
        size_t i = seq.chk_degrees.size();
        while (chk_edges < edges) {
            i = (i == 0) ? seq.chk_degrees.size() - 1 : i - 1;
            ++seq.chk_degrees[i];
            ++chk_edges;
        }
        while (chk_edges > edges) {
            i = (i == 0) ? seq.chk_degrees.size() - 1 : i - 1;
            if (seq.chk_degrees[i] <= 1)
                throw std::invalid_argument("realize: cannot balance edge counts");
            --seq.chk_degrees[i];
            --chk_edges;
        }
        std::sort(seq.chk_degrees.begin(), seq.chk_degrees.end());
    }
    return seq;
}

std::map<unsigned, double> parse_degree_poly(const std::string& text) {
    std::map<unsigned, double> poly;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        const auto colon = token.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("degree polynomial: expected 'degree:coefficient', got '" +
                                        token + "'");
        size_t pos = 0;
        const int deg = std::stoi(token.substr(0, colon), &pos);
        const double coeff = std::stod(token.substr(colon + 1));
        if (deg <= 0)
            throw std::invalid_argument("degree polynomial: degree must be positive");
        if (poly.count(unsigned(deg)))
            throw std::invalid_argument("degree polynomial: duplicate degree " +
                                        std::to_string(deg));
        poly[unsigned(deg)] = coeff;
    }
    if (poly.empty())
        throw std::invalid_argument("degree polynomial: empty specification");
    return poly;
}

std::string format_degree_poly(const std::map<unsigned, double>& poly) {
    std::string out;
    char buf[64];
    for (const auto& [deg, coeff] : poly) {
        std::snprintf(buf, sizeof(buf), "%s%u:%.12g", out.empty() ? "" : ",", deg, coeff);
        out += buf;
    }
    return out;
}

} // namespace nbrecon
