/*
 * Copyright (c) 2026 nbrecon authors.
 *
 * This file is part of nbrecon.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

// Command-line harness for nonbinary-LDPC information reconciliation over the
// q-ary symmetric channel: code construction, single-frame reconciliation,
// FER/efficiency sweeps, ensemble threshold estimation, distribution
// optimization, and leakage metrics.

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "nbrecon/channel.hpp"
#include "nbrecon/de_opt.hpp"
#include "nbrecon/decoder.hpp"
#include "nbrecon/ensembles.hpp"
#include "nbrecon/mcde.hpp"
#include "nbrecon/parity_check.hpp"
#include "nbrecon/peg.hpp"
#include "nbrecon/protocol.hpp"
#include "nbrecon/sweep.hpp"

using json = nlohmann::ordered_json;
using namespace nbrecon;

namespace {

uint64_t resolve_seed(std::optional<uint64_t> seed, const char* command) {
    if (seed)
        return *seed;
    std::random_device rd;
    const uint64_t s = (uint64_t(rd()) << 32) ^ rd();
    std::fprintf(stderr, "[%s] no --seed given, using auto-generated seed %" PRIu64 "\n",
                 command, s);
    return s;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    out << text;
    if (!out)
        throw std::runtime_error("failed writing '" + path + "'");
}

// Lambda selection shared by construct/threshold: either a built-in rate or
// an explicit degree polynomial (rescaled like the published tables).
DegreeDistribution resolve_distribution(double rate, const std::string& lambda_text) {
    if (lambda_text.empty())
        return to_distribution(find_ensemble(rate));
    LambdaOptions opts;
    opts.sum_tolerance = 0.05;
    DegreeDistribution dist;
    dist.lambda = validate_lambda(parse_degree_poly(lambda_text), opts);
    dist.rho = concentrated_rho(dist.lambda, rate);
    return dist;
}

json distribution_json(const DegreeDistribution& dist) {
    json j;
    j["lambda"] = format_degree_poly(dist.lambda);
    j["rho"] = format_degree_poly(dist.rho);
    j["design_rate"] = design_rate(dist);
    return j;
}

struct ConstructArgs {
    double rate = 0.5;
    std::string lambda_text;
    unsigned q = 8;
    size_t n = 30000;
    size_t m = 0; // 0: derive from rate
    std::optional<uint64_t> seed;
    std::string out;
};

int run_construct(const ConstructArgs& a) {
    const uint64_t seed = resolve_seed(a.seed, "construct");
    const DegreeDistribution dist = resolve_distribution(a.rate, a.lambda_text);
    const size_t m = a.m ? a.m : size_t(std::llround(double(a.n) * (1.0 - a.rate)));

    const SparseParityCheck H = construct_code(dist, a.q, a.n, m, seed);
    write_code_file(H, a.out);

    const auto cols = column_degrees(H);
    unsigned dv_min = cols[0], dv_max = cols[0];
    for (unsigned d : cols) {
        dv_min = std::min(dv_min, d);
        dv_max = std::max(dv_max, d);
    }
    size_t dc_min = H.rows[0].size(), dc_max = H.rows[0].size();
    for (const auto& r : H.rows) {
        dc_min = std::min(dc_min, r.size());
        dc_max = std::max(dc_max, r.size());
    }
    std::printf("wrote %s\n", a.out.c_str());
    std::printf("q=%u n=%zu m=%zu rate=%.6g edges=%zu\n", H.q, H.n, H.m, H.rate(),
                H.edge_count());
    std::printf("variable degrees %u..%u, check degrees %zu..%zu\n", dv_min, dv_max, dc_min,
                dc_max);
    std::printf("girth=%u seed=%" PRIu64 "\n", compute_girth(H), seed);
    return 0;
}

struct ReconcileArgs {
    std::string code;
    double qber = 0.0;
    std::optional<uint64_t> seed;
    std::string x_file;
    std::string out;
    DecoderConfig dec;
};

int run_reconcile(const ReconcileArgs& a) {
    const uint64_t seed = resolve_seed(a.seed, "reconcile");
    const SparseParityCheck H = read_code_file(a.code);
    const GaloisField gf(H.q);
    const ChannelModel ch = make_channel(H.q, a.qber);
    Decoder dec(gf, H);

    FrameReport rep;
    if (a.x_file.empty()) {
        rep = reconcile_random_frame(dec, ch, a.dec, seed);
    } else {
        std::ifstream in(a.x_file);
        if (!in)
            throw std::runtime_error("cannot open frame file '" + a.x_file + "'");
        std::vector<uint8_t> x;
        long v = 0;
        while (in >> v) {
            if (v < 0 || unsigned(v) >= H.q)
                throw std::runtime_error("frame symbol out of alphabet in '" + a.x_file + "'");
            x.push_back(uint8_t(v));
        }
        if (x.size() != H.n)
            throw std::runtime_error("frame length does not match the code");
        rep = reconcile_frame(dec, ch, a.dec, x, SplitMix64::derive(seed, 0xc4a7));
    }

    json j;
    j["command"] = "reconcile";
    j["code"] = {{"file", a.code}, {"q", H.q}, {"n", H.n}, {"m", H.m}, {"rate", H.rate()}};
    j["qber"] = a.qber;
    j["seed"] = seed;
    j["rng"] = "splitmix64";
    j["hash"] = std::string(kHashAlgorithmId);
    j["max_iterations"] = a.dec.max_iterations;
    j["converged"] = rep.converged;
    j["verified"] = rep.verified;
    j["undetected_error"] = rep.undetected_error();
    j["iterations"] = rep.iterations;
    j["symbol_errors_channel"] = rep.symbol_errors_in;
    j["symbol_errors_residual"] = rep.symbol_errors_out;
    j["leak_ir_symbols"] = rep.leak_symbols;
    char hash_buf[17];
    std::snprintf(hash_buf, sizeof(hash_buf), "%016" PRIx64, rep.hash_sent);
    j["frame_hash_alice"] = hash_buf;
    std::snprintf(hash_buf, sizeof(hash_buf), "%016" PRIx64, rep.hash_decoded);
    j["frame_hash_bob"] = hash_buf;
    try {
        j["efficiency"] = efficiency(H.m, H.n, ch);
    } catch (const std::domain_error&) {
        j["efficiency"] = nullptr;
    }
    write_text(a.out, j.dump(2) + "\n");
    return 0; // a discarded frame is a result, not a tool failure
}

struct SimulateArgs {
    std::string code;
    std::vector<double> qbers;
    uint32_t frames = 5000;
    uint32_t error_stop = 100;
    std::optional<uint64_t> seed;
    unsigned threads = 1;
    std::string out;
    DecoderConfig dec;
    // FER working-point search mode
    double find_fer = 0.0;
    double qber_lo = -1.0, qber_hi = -1.0;
    unsigned probes = 8;
};

int run_simulate(const SimulateArgs& a) {
    const uint64_t seed = resolve_seed(a.seed, "simulate");
    const SparseParityCheck H = read_code_file(a.code);
    const GaloisField gf(H.q);

    if (a.find_fer > 0.0) {
        double lo = a.qber_lo, hi = a.qber_hi;
        if (lo < 0.0 || hi < 0.0) {
            const double p_max = qber_for_entropy(H.q, 1.0 - H.rate());
            lo = lo < 0.0 ? 0.2 * p_max : lo;
            hi = hi < 0.0 ? p_max : hi;
        }
        const auto op = find_fer_working_point(gf, H, a.find_fer, lo, hi, a.frames, a.probes,
                                               a.dec, seed, a.threads);
        json j;
        j["command"] = "simulate.find-fer";
        j["code"] = {{"file", a.code}, {"q", H.q}, {"n", H.n}, {"m", H.m}, {"rate", H.rate()}};
        j["target_fer"] = a.find_fer;
        j["bracket"] = {lo, hi};
        j["seed"] = seed;
        j["bracketed"] = op.bracketed;
        j["qber"] = op.qber;
        j["fer"] = op.fer;
        j["efficiency"] = op.efficiency;
        j["frames_total"] = op.frames;
        j["probes"] = op.probes;
        write_text(a.out, j.dump(2) + "\n");
        return 0;
    }

    if (a.qbers.empty())
        throw std::runtime_error("simulate: give at least one --qber (or --find-fer)");

    SweepConfig cfg;
    cfg.qbers = a.qbers;
    cfg.frames_per_point = a.frames;
    cfg.error_stop = a.error_stop;
    cfg.decoder = a.dec;
    cfg.master_seed = seed;
    cfg.threads = a.threads;

    const auto res = run_sweep(gf, H, cfg, [](const PointResult& p) {
        std::fprintf(stderr,
                     "qber=%.6g frames=%" PRIu64 " errors=%" PRIu64
                     " fer=%.4g mean_iter=%.2f (%.1fs)\n",
                     p.qber, p.frames, p.errors, p.fer, p.mean_iterations, p.wall_s);
    });
    write_text(a.out, sweep_csv(res, H, cfg));
    return 0;
}

struct ThresholdArgs {
    unsigned q = 8;
    double rate = 0.5;
    std::string lambda_text;
    std::vector<double> grid;
    McdeConfig mcde;
    std::optional<uint64_t> seed;
    std::string out;
};

json threshold_json(const ThresholdResult& res) {
    json points = json::array();
    for (size_t i = 0; i < res.grid.size(); ++i)
        points.push_back({{"qber", res.grid[i]}, {"success", bool(res.success[i])}});
    json j;
    j["points"] = points;
    if (res.threshold)
        j["threshold"] = *res.threshold;
    else
        j["threshold"] = nullptr;
    j["rerun_indices"] = res.reruns;
    j["at_lower_boundary"] = res.at_lower_boundary;
    j["at_upper_boundary"] = res.at_upper_boundary;
    return j;
}

int run_threshold(const ThresholdArgs& a) {
    const uint64_t seed = resolve_seed(a.seed, "threshold");
    const DegreeDistribution dist = resolve_distribution(a.rate, a.lambda_text);
    const GaloisField gf(a.q);
    const std::vector<double> grid = a.grid.empty() ? default_qber_grid(a.q, a.rate) : a.grid;

    const auto res = mcde_threshold(gf, dist, grid, a.mcde, seed);
    if (res.at_lower_boundary)
        std::fprintf(stderr, "warning: no grid point succeeded; widen the grid downward\n");
    if (res.at_upper_boundary)
        std::fprintf(stderr, "warning: every grid point succeeded; widen the grid upward\n");

    json j;
    j["command"] = "threshold";
    j["q"] = a.q;
    j["rate"] = a.rate;
    j["distribution"] = distribution_json(dist);
    j["node_count"] = a.mcde.node_count;
    j["max_iterations"] = a.mcde.max_iterations;
    j["entropy_epsilon"] = a.mcde.entropy_epsilon;
    j["seed"] = seed;
    j["rng"] = "splitmix64";
    j.update(threshold_json(res));
    write_text(a.out, j.dump(2) + "\n");
    return 0;
}

struct OptimizeArgs {
    unsigned q = 8;
    double rate = 0.5;
    DeConfig de;
    McdeConfig mcde;
    std::vector<double> grid;
    std::vector<std::string> seed_lambdas;
    std::optional<uint64_t> seed;
    std::string out;
};

int run_optimize(const OptimizeArgs& a) {
    const uint64_t seed = resolve_seed(a.seed, "optimize");
    DeConfig de = a.de;
    for (const auto& text : a.seed_lambdas)
        de.seed_candidates.push_back(parse_degree_poly(text));

    const auto res = de_optimize(a.q, a.rate, de, a.mcde, a.grid, seed);
    if (res.budget_warning)
        std::fprintf(stderr, "warning: generation budget too small to evolve; "
                             "reporting the best seed candidate\n");

    json evals = json::array();
    for (const auto& ev : res.evaluations) {
        json e;
        e["lambda"] = format_degree_poly(ev.lambda);
        if (std::isnan(ev.threshold))
            e["threshold"] = nullptr;
        else
            e["threshold"] = ev.threshold;
        evals.push_back(std::move(e));
    }

    json j;
    j["command"] = "optimize";
    j["q"] = a.q;
    j["rate"] = a.rate;
    j["population"] = de.population;
    j["weight"] = de.weight;
    j["crossover"] = de.crossover;
    j["generations"] = de.generations;
    j["max_distinct_degrees"] = de.max_distinct_degrees;
    j["d_v_max"] = de.d_v_max;
    j["node_count"] = a.mcde.node_count;
    j["seed"] = seed;
    j["rng"] = "splitmix64";
    j["budget_warning"] = res.budget_warning;
    j["best_lambda"] = format_degree_poly(res.lambda);
    j["best_threshold"] = res.threshold;
    j["best_distribution"] = distribution_json(res.dist);
    j["best_by_generation"] = res.best_by_generation;
    j["evaluations"] = std::move(evals);
    write_text(a.out, j.dump(2) + "\n");
    std::fprintf(stderr, "best lambda: %s (threshold %.6g)\n",
                 format_degree_poly(res.lambda).c_str(), res.threshold);
    return 0;
}

struct AnalyzeArgs {
    unsigned q = 8;
    double p = 0.0;
    size_t m = 0;
    size_t n = 0;
};

int run_analyze(const AnalyzeArgs& a) {
    const ChannelModel ch = make_channel(a.q, a.p);
    const double h = conditional_entropy(ch);
    std::printf("q-ary symmetric channel: q=%u p=%.10g\n", a.q, a.p);
    std::printf("H(X|Y) = %.6f q-ary symbols = %.6f bits\n", h, conditional_entropy_bits(ch));
    if (a.n) {
        std::printf("slepian-wolf minimum: %.2f symbols for n=%zu\n", slepian_wolf_min(a.n, ch),
                    a.n);
        if (a.m) {
            const double f = efficiency(a.m, a.n, ch); // throws at H == 0
            std::printf("leakage m=%zu symbols -> efficiency f = %.6f\n", a.m, f);
            std::printf("beta-notation equivalent: beta = %.6f\n", beta_from_f(f, ch));
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"nonbinary LDPC information reconciliation toolkit"};
    app.require_subcommand(1);
    app.set_config("--config", "",
                   "read options from a key=value config file (sections per subcommand; "
                   "command-line flags win)");

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "build a code and write an NBALIST file");
    construct->add_option("--rate", ca.rate, "design rate")
        ->check(CLI::Range(1e-6, 1.0 - 1e-6))
        ->required();
    construct->add_option("--lambda", ca.lambda_text,
                          "variable degree polynomial 'deg:coeff,...' (default: built-in "
                          "ensemble for --rate)");
    construct->add_option("--q", ca.q, "field order (power of two in [2,256])")->default_val(8);
    construct->add_option("--n", ca.n, "code length in symbols")->required();
    construct->add_option("--m", ca.m, "check count (default n*(1-rate))");
    construct->add_option("--seed", ca.seed, "construction seed");
    construct->add_option("--out", ca.out, "output code file")->required();

    ReconcileArgs ra;
    auto* reconcile =
        app.add_subcommand("reconcile", "run the one-way protocol for a single frame");
    reconcile->add_option("--code", ra.code, "NBALIST code file")->required();
    reconcile->add_option("--qber", ra.qber, "channel symbol error probability")->required();
    reconcile->add_option("--seed", ra.seed, "frame/channel seed");
    reconcile->add_option("--x-file", ra.x_file,
                          "Alice frame as whitespace-separated symbols (default: random)");
    reconcile->add_option("--max-iterations", ra.dec.max_iterations, "decoder iteration cap")
        ->default_val(100);
    reconcile->add_option("--llr-max", ra.dec.llr_max, "log-ratio saturation bound")
        ->default_val(kDefaultLlrMax);
    reconcile->add_option("--out", ra.out, "report file (default: stdout)");

    SimulateArgs sa;
    auto* simulate = app.add_subcommand("simulate", "frame error rate / efficiency sweep");
    simulate->add_option("--code", sa.code, "NBALIST code file")->required();
    simulate->add_option("--qber", sa.qbers, "channel parameters to sweep");
    simulate->add_option("--frames", sa.frames, "frame budget per point")->default_val(5000);
    simulate->add_option("--error-stop", sa.error_stop, "stop a point after this many errors")
        ->default_val(100);
    simulate->add_option("--seed", sa.seed, "master seed");
    simulate->add_option("--threads", sa.threads, "worker threads")->default_val(1);
    simulate->add_option("--max-iterations", sa.dec.max_iterations, "decoder iteration cap")
        ->default_val(100);
    simulate->add_option("--llr-max", sa.dec.llr_max, "log-ratio saturation bound")
        ->default_val(kDefaultLlrMax);
    simulate->add_option("--out", sa.out, "CSV output file (default: stdout)");
    simulate->add_option("--find-fer", sa.find_fer,
                         "bisect for the channel parameter with this frame error rate");
    simulate->add_option("--qber-lo", sa.qber_lo, "bisection lower bound");
    simulate->add_option("--qber-hi", sa.qber_hi, "bisection upper bound");
    simulate->add_option("--probes", sa.probes, "bisection steps")->default_val(8);

    ThresholdArgs ta;
    auto* threshold =
        app.add_subcommand("threshold", "Monte-Carlo density evolution threshold estimate");
    threshold->add_option("--q", ta.q, "field order")->default_val(8);
    threshold->add_option("--rate", ta.rate, "design rate")
        ->check(CLI::Range(1e-6, 1.0 - 1e-6))
        ->required();
    threshold->add_option("--lambda", ta.lambda_text,
                          "variable degree polynomial (default: built-in ensemble)");
    threshold->add_option("--grid", ta.grid,
                          "explicit qber grid (default: 20 steps below the entropy limit)");
    threshold->add_option("--node-count", ta.mcde.node_count, "message pool size")
        ->default_val(100000);
    threshold->add_option("--iterations", ta.mcde.max_iterations, "evolution iteration cap")
        ->default_val(150);
    threshold->add_option("--epsilon", ta.mcde.entropy_epsilon,
                          "mean-entropy success cutoff (q-ary units)")
        ->default_val(1e-4);
    threshold->add_option("--threads", ta.mcde.threads, "worker threads")->default_val(1);
    threshold->add_option("--seed", ta.seed, "evolution seed");
    threshold->add_option("--out", ta.out, "JSON report file (default: stdout)");

    OptimizeArgs oa;
    auto* optimize =
        app.add_subcommand("optimize", "differential evolution over degree distributions");
    optimize->add_option("--q", oa.q, "field order")->default_val(8);
    optimize->add_option("--rate", oa.rate, "design rate")
        ->check(CLI::Range(1e-6, 1.0 - 1e-6))
        ->required();
    optimize->add_option("--population", oa.de.population, "population size")->default_val(20);
    optimize->add_option("--weight", oa.de.weight, "differential weight F")->default_val(0.85);
    optimize->add_option("--crossover", oa.de.crossover, "crossover probability CR")
        ->default_val(0.7);
    optimize->add_option("--generations", oa.de.generations, "generation budget")
        ->default_val(30);
    optimize->add_option("--max-degrees", oa.de.max_distinct_degrees,
                         "sparsity: distinct degrees allowed")
        ->default_val(10);
    optimize->add_option("--dv-max", oa.de.d_v_max, "largest variable degree")->default_val(40);
    optimize->add_option("--seed-lambda", oa.seed_lambdas,
                         "known-good candidates to seed the population");
    optimize->add_option("--grid", oa.grid, "qber grid for threshold evaluation");
    optimize->add_option("--node-count", oa.mcde.node_count, "message pool size")
        ->default_val(100000);
    optimize->add_option("--iterations", oa.mcde.max_iterations, "evolution iteration cap")
        ->default_val(150);
    optimize->add_option("--epsilon", oa.mcde.entropy_epsilon, "mean-entropy success cutoff")
        ->default_val(1e-4);
    optimize->add_option("--threads", oa.mcde.threads, "worker threads")->default_val(1);
    optimize->add_option("--seed", oa.seed, "optimizer seed");
    optimize->add_option("--out", oa.out, "JSON audit file (default: stdout)");

    AnalyzeArgs aa;
    auto* analyze = app.add_subcommand("analyze", "leakage metrics for a channel working point");
    analyze->add_option("--q", aa.q, "field order")->default_val(8);
    analyze->add_option("--p", aa.p, "channel symbol error probability")->required();
    analyze->add_option("--m", aa.m, "syndrome length in symbols");
    analyze->add_option("--n", aa.n, "frame length in symbols");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (construct->parsed())
            return run_construct(ca);
        if (reconcile->parsed())
            return run_reconcile(ra);
        if (simulate->parsed())
            return run_simulate(sa);
        if (threshold->parsed())
            return run_threshold(ta);
        if (optimize->parsed())
            return run_optimize(oa);
        if (analyze->parsed())
            return run_analyze(aa);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
