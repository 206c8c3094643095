// Copyright 2026 The sievekit Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include "sievekit/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "sievekit/errors.hpp"
#include "sievekit/kuhn.hpp"
#include "sievekit/linear_sieve.hpp"
#include "sievekit/report.hpp"
#include "sievekit/verifier.hpp"

namespace sievekit {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

u128 parse_integer_flag(const std::string& text, const char* flag) {
    try {
        return parse_u128(text);
    } catch (const std::exception& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

std::uint64_t parse_u64_flag(const std::string& text, const char* flag) {
    const u128 v = parse_integer_flag(text, flag);
    if (!fits_u64(v)) throw UsageError(std::string(flag) + ": value does not fit in 64 bits");
    return static_cast<std::uint64_t>(v);
}

unsigned default_workers() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

std::optional<unsigned> env_workers() {
    const char* v = std::getenv("SIEVEKIT_WORKERS");
    if (v == nullptr || *v == '\0') return std::nullopt;
    char* end = nullptr;
    const unsigned long n = std::strtoul(v, &end, 10);
    if (*end != '\0' || n == 0 || n > 4096) throw UsageError("SIEVEKIT_WORKERS must be a positive integer");
    return static_cast<unsigned>(n);
}

Json tagged_counterexamples(const ScanReport& r) {
    Json arr = Json::array();
    for (const auto& c : r.counterexamples) {
        Json j = to_json(c);
        j["scan_id"] = r.scan_id;
        arr.push_back(std::move(j));
    }
    return arr;
}

void add_param_flags(CLI::App* sub, SieveParams& p) {
    sub->add_option("--s", p.s, "s = log D / log z")->capture_default_str();
    sub->add_option("--alpha", p.alpha, "level trim of the middle-range sums")->capture_default_str();
    sub->add_option("--k1", p.k1, "z = X^(1/k1)")->capture_default_str();
    sub->add_option("--k2", p.k2, "y = X^(1/k2)")->capture_default_str();
    sub->add_option("--epsilon", p.epsilon, "linear-sieve error constant")->capture_default_str();
    sub->add_option("--Q", p.Q, "squarefree range factor")->capture_default_str();
    sub->add_option("--C1", p.C1)->capture_default_str();
    sub->add_option("--C2", p.C2)->capture_default_str();
    sub->add_option("--c1", p.c1, "square-divisor constant")->capture_default_str();
    sub->add_option("--c2", p.c2, "square-divisor constant")->capture_default_str();
}

Json q2_json(u128 N) {
    try {
        const Q2Constants q = q2_condition_constants(N);
        return {{"ok", true},
                {"c1", q.c1},
                {"c1_required", q.c1_required},
                {"c2", q.c2},
                {"c2_required", q.c2_required}};
    } catch (const LedgerViolation& e) {
        return {{"ok", false}, {"error", e.what()}};
    }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Explicit sieve bounds and exhaustive verifications for almost primes between squares",
                 "sievekit"};
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::Throw);

    std::string format = "json";
    std::string out_path;
    unsigned workers = default_workers();
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "json, csv or text")
            ->check(CLI::IsMember({"json", "csv", "text"}))
            ->capture_default_str();
        sub->add_option("--out", out_path, "write the report here instead of stdout");
        sub->add_option("--workers", workers, "worker threads (SIEVEKIT_WORKERS overrides)")
            ->check(CLI::PositiveNumber);
    };

    SieveParams params;
    std::string N_text = "1.98e28+1";

    auto* theorem = app.add_subcommand("theorem", "r_4 lower bound and constants ledger for N > 1.98e28");
    theorem->add_option("--N", N_text, "N, integer or integral scientific form")->capture_default_str();
    add_param_flags(theorem, params);
    add_common(theorem);

    auto* lower = app.add_subcommand("lower-bound", "sieve bounds for any N, ledger reported but not enforced");
    lower->add_option("--N", N_text)->capture_default_str();
    add_param_flags(lower, params);
    add_common(lower);

    ParamGrid grid;
    auto* scan_params = app.add_subcommand("scan-params", "r_4 lower bound over an (s, alpha) grid");
    scan_params->add_option("--N", N_text)->capture_default_str();
    add_param_flags(scan_params, params);
    scan_params->add_option("--s-min", grid.s_min)->capture_default_str();
    scan_params->add_option("--s-max", grid.s_max)->capture_default_str();
    scan_params->add_option("--s-step", grid.s_step)->capture_default_str();
    scan_params->add_option("--alpha-min", grid.alpha_min)->capture_default_str();
    scan_params->add_option("--alpha-max", grid.alpha_max)->capture_default_str();
    scan_params->add_option("--alpha-step", grid.alpha_step)->capture_default_str();
    add_common(scan_params);

    auto* scan_eps = app.add_subcommand("scan-epsilon", "exhaustive epsilon scan for 3024 <= z < 12000");
    add_common(scan_eps);

    std::string limit_text = "1e8";
    std::string checkpoint;
    std::string segment_text = "1e8";
    std::optional<std::uint64_t> max_segments;
    auto* mertens = app.add_subcommand("verify-mertens", "explicit Mertens band at every prime up to --limit");
    mertens->add_option("--limit", limit_text)->capture_default_str();
    mertens->add_option("--checkpoint", checkpoint, "resumable checkpoint file");
    mertens->add_option("--segment-width", segment_text)->capture_default_str();
    mertens->add_option("--max-segments", max_segments, "stop after this many segments");
    add_common(mertens);

    std::string n_min_text = "1", n_max_text = "100";
    unsigned k = 4;
    auto* interval = app.add_subcommand("verify-interval", "least a in (n^2, (n+1)^2) with Omega(a) <= k");
    interval->add_option("--n-min", n_min_text)->capture_default_str();
    interval->add_option("--n-max", n_max_text)->capture_default_str();
    interval->add_option("--k", k)->check(CLI::PositiveNumber)->capture_default_str();
    add_common(interval);

    std::string four_min_text = "4", four_max_text = "100";
    auto* four_p = app.add_subcommand("verify-4p", "prime p with n^2 < 4p < (n+1)^2");
    four_p->add_option("--n-min", four_min_text)->capture_default_str();
    four_p->add_option("--n-max", four_max_text)->capture_default_str();
    add_common(four_p);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    const auto t0 = std::chrono::steady_clock::now();
    Json report;
    try {
        if (auto w = env_workers()) workers = *w;
        const OutputFormat fmt = *parse_format(format);

        auto finish = [&](std::string command, Json inputs, Json ledger, Json results, Json ce) {
            const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            report = make_report(std::move(command), std::move(inputs), std::move(ledger), std::move(results),
                                 std::move(ce), secs);
        };

        if (theorem->parsed() || lower->parsed()) {
            const bool is_theorem = theorem->parsed();
            const u128 N = parse_integer_flag(N_text, "--N");
            if (is_theorem && N <= threshold_N())
                throw UsageError("theorem requires N > 1.98e28; use lower-bound for smaller N");
            Json inputs = {{"N", int_json(N)}, {"params", to_json(params)}};
            params.validate();
            Json results;
            Json ledger = Json::array();
            try {
                const BoundBreakdown b = evaluate_bounds(N, params);
                results = to_json(b);
                results["bound_positive"] = b.r4_lower > 0;
                if (is_theorem) {
                    ledger = ledger_json(b.ledger);
                    results["q2_constants"] = q2_json(N);
                    if (!results["q2_constants"]["ok"].get<bool>()) results["bound_positive"] = false;
                } else {
                    results["ledger"] = ledger_json(b.ledger);
                }
            } catch (const PreconditionError& e) {
                results = {{"bound_positive", false}, {"error", e.what()}};
            }
            finish(is_theorem ? "theorem" : "lower-bound", std::move(inputs), std::move(ledger), std::move(results),
                   Json::array());
        } else if (scan_params->parsed()) {
            const u128 N = parse_integer_flag(N_text, "--N");
            Json inputs = {{"N", int_json(N)},
                           {"params", to_json(params)},
                           {"grid",
                            {{"s_min", grid.s_min},
                             {"s_max", grid.s_max},
                             {"s_step", grid.s_step},
                             {"alpha_min", grid.alpha_min},
                             {"alpha_max", grid.alpha_max},
                             {"alpha_step", grid.alpha_step}}}};
            Json results;
            try {
                const ParamScan scan = scan_parameters(N, grid, params, workers);
                results = to_json(scan);
                results["bound_positive"] = scan.best_r4 > 0;
            } catch (const DomainError& e) {
                if (!(grid.s_step > 0 && grid.alpha_step > 0 && grid.s_max >= grid.s_min &&
                      grid.alpha_max >= grid.alpha_min))
                    throw UsageError(e.what());
                results = {{"bound_positive", false}, {"error", e.what()}};
            }
            finish("scan-params", std::move(inputs), Json::array(), std::move(results), Json::array());
        } else if (scan_eps->parsed()) {
            const EpsilonScan scan = scan_epsilon_case1(workers);
            Json large = Json::array();
            bool large_ok = true;
            const std::pair<double, double> probes[] = {{12000.0, 3.0}, {1e6, 1e3}, {4e9, 3.0}, {1e12, 4e9}, {1e12, 1e11}};
            for (auto [z, u] : probes) {
                const EpsilonMargin m = check_epsilon_large_z(z, u);
                Json j = to_json(m);
                j["z"] = z;
                j["u"] = u;
                large.push_back(std::move(j));
                large_ok = large_ok && m.ok;
            }
            Json ce = tagged_counterexamples(scan.composite);
            for (auto& c : tagged_counterexamples(scan.prime)) ce.push_back(std::move(c));
            Json results = {{"composite", to_json(scan.composite)},
                            {"prime", to_json(scan.prime)},
                            {"large_z", std::move(large)},
                            {"holds", scan.composite.holds() && scan.prime.holds() && large_ok}};
            finish("scan-epsilon", Json::object(), Json::array(), std::move(results), std::move(ce));
        } else if (mertens->parsed()) {
            MertensOptions opts;
            const std::uint64_t limit = parse_u64_flag(limit_text, "--limit");
            opts.segment_width = parse_u64_flag(segment_text, "--segment-width");
            opts.workers = workers;
            opts.max_segments = max_segments;
            if (!checkpoint.empty()) opts.checkpoint = checkpoint;
            Json inputs = {{"limit", limit}, {"segment_width", opts.segment_width}};
            if (!checkpoint.empty()) inputs["checkpoint"] = checkpoint;
            if (max_segments) inputs["max_segments"] = *max_segments;
            ScanReport r;
            try {
                r = verify_mertens(limit, opts);
            } catch (const PreconditionError& e) {
                throw UsageError(e.what());
            }
            Json results = to_json(r);
            finish("verify-mertens", std::move(inputs), Json::array(), std::move(results), tagged_counterexamples(r));
        } else if (interval->parsed()) {
            const std::uint64_t lo = parse_u64_flag(n_min_text, "--n-min");
            const std::uint64_t hi = parse_u64_flag(n_max_text, "--n-max");
            IntervalScan scan;
            try {
                scan = verify_interval(lo, hi, k, workers);
            } catch (const PreconditionError& e) {
                throw UsageError(e.what());
            }
            Json witnesses = Json::array();
            for (const auto& w : scan.witnesses) witnesses.push_back({{"n", w.n}, {"a", int_json(w.a)}, {"omega", w.omega}});
            Json results = to_json(scan.report);
            results["witnesses"] = std::move(witnesses);
            finish("verify-interval", {{"n_min", lo}, {"n_max", hi}, {"k", k}}, Json::array(), std::move(results),
                   tagged_counterexamples(scan.report));
        } else if (four_p->parsed()) {
            const std::uint64_t lo = parse_u64_flag(four_min_text, "--n-min");
            const std::uint64_t hi = parse_u64_flag(four_max_text, "--n-max");
            FourPScan scan;
            try {
                scan = verify_4p(lo, hi, workers);
            } catch (const PreconditionError& e) {
                throw UsageError(e.what());
            }
            Json witnesses = Json::array();
            for (const auto& w : scan.witnesses)
                witnesses.push_back({{"n", w.n}, {"p", w.p}, {"four_p", int_json(w.four_p)}});
            Json results = to_json(scan.report);
            results["witnesses"] = std::move(witnesses);
            finish("verify-4p", {{"n_min", lo}, {"n_max", hi}}, Json::array(), std::move(results),
                   tagged_counterexamples(scan.report));
        }

        const std::string text = emit_report(report, fmt);
        if (out_path.empty()) {
            out << text;
        } else {
            std::ofstream f(out_path, std::ios::binary);
            f << text;
            if (!f) {
                err << "error: cannot write " << out_path << "\n";
                return kExitIo;
            }
        }
        return exit_status(report);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CheckpointError& e) {
        err << "checkpoint error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace sievekit
