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

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "sievekit/cli.hpp"
#include "sievekit/report.hpp"

using namespace sievekit;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "sievekit");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

Json parse(const Run& r) { return Json::parse(r.out); }

std::string without_runtime(Json j) {
    j["runtime_seconds"] = 0;
    return j.dump(2);
}

const Json* ledger_row(const Json& report, const std::string& name) {
    for (const auto& row : report["constants_ledger"])
        if (row["name"] == name) return &row;
    return nullptr;
}

}  // namespace

TEST_CASE("theorem command") {
    const Run r = run({"theorem", "--N", "1.98e28+1", "--s", "3.3", "--alpha", "0.07"});
    REQUIRE(r.code == 0);
    const Json j = parse(r);
    CHECK(j["schema_version"] == 1);
    CHECK(j["command"] == "theorem");
    CHECK(j["inputs"]["N"] == "19800000000000000000000000001");
    CHECK(j["results"]["r4_lower"].get<double>() > 0);
    CHECK(j["results"]["bound_positive"] == true);
    CHECK(j["counterexamples"].is_array());
    CHECK(j["counterexamples"].empty());
    const Json* lead = ledger_row(j, "4.526");
    REQUIRE(lead != nullptr);
    CHECK((*lead)["ok"] == true);
    CHECK((*lead)["computed"].get<double>() == doctest::Approx(4.5255).epsilon(1e-4));
    CHECK((*lead)["paper_value"].get<double>() == 4.526);
    const Json* advisory = ledger_row(j, "0.839");
    REQUIRE(advisory != nullptr);
    CHECK((*advisory)["ok"] == false);
    CHECK((*advisory)["enforced"] == false);
    CHECK(r.out.find("\"counterexamples\": []") != std::string::npos);
}

TEST_CASE("theorem and lower-bound failures") {
    CHECK(run({"theorem", "--N", "1e20"}).code == kExitUsage);
    CHECK(run({"theorem", "--N", "1.5"}).code == kExitUsage);
    CHECK(run({"theorem", "--alpha", "0.3"}).code == kExitUsage);
    const Run low = run({"lower-bound", "--N", "1e20"});
    CHECK(low.code == kExitFailed);
    CHECK(parse(low)["results"]["bound_positive"] == false);
    const Run ok = run({"lower-bound", "--N", "1e30"});
    CHECK(ok.code == kExitOk);
    CHECK(parse(ok)["constants_ledger"].empty());
    SUBCASE("a theorem run with a failing side condition exits 1") {
        CHECK(run({"theorem", "--s", "2"}).code == kExitFailed);
    }
}

TEST_CASE("verify-interval command") {
    const Run r = run({"verify-interval", "--n-min", "1", "--n-max", "100", "--k", "4"});
    REQUIRE(r.code == 0);
    const Json j = parse(r);
    CHECK(j["results"]["witnesses"].size() == 100);
    CHECK(j["results"]["holds"] == true);
    CHECK(run({"verify-interval", "--n-min", "1", "--n-max", "1e9"}).code == kExitUsage);
}

TEST_CASE("verify-4p command") {
    const Run r = run({"verify-4p", "--n-min", "1", "--n-max", "50"});
    CHECK(r.code == kExitFailed);  // n = 1, 2 have no room for p
    CHECK(parse(r)["counterexamples"].size() == 2);
    CHECK(run({"verify-4p", "--n-min", "4", "--n-max", "500"}).code == 0);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({"verify-mertens", "--limit", "100", "--limit", "0"}).code == kExitUsage);
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"no-such-command"}).code == kExitUsage);
    CHECK(run({"verify-mertens", "--limit", "2"}).code == kExitUsage);
    CHECK(run({"verify-mertens", "--limit", "abc"}).code == kExitUsage);
    CHECK(run({"verify-mertens", "--k", "3"}).code == kExitUsage);  // flag of another command
    CHECK(run({"scan-epsilon", "--format", "xml"}).code == kExitUsage);
    CHECK(run({"scan-epsilon", "--workers", "0"}).code == kExitUsage);
    const Run bad = run({"verify-interval", "--bogus"});
    CHECK(bad.code == kExitUsage);
    CHECK(bad.err.find("Usage") != std::string::npos);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("worker override from the environment") {
    ::setenv("SIEVEKIT_WORKERS", "0", 1);
    CHECK(run({"verify-4p", "--n-max", "10"}).code == kExitUsage);
    ::setenv("SIEVEKIT_WORKERS", "3", 1);
    CHECK(run({"verify-4p", "--n-min", "4", "--n-max", "10"}).code == 0);
    ::unsetenv("SIEVEKIT_WORKERS");
}

TEST_CASE("scan-epsilon command") {
    const Run r = run({"scan-epsilon"});
    REQUIRE(r.code == 0);
    const Json j = parse(r);
    CHECK(j["results"]["composite"]["argmax"] == Json::array({3298, 3947}));
    CHECK(j["results"]["prime"]["argmax"] == Json::array({1423, 3947}));
    CHECK(j["results"]["holds"] == true);
    CHECK(j["results"]["large_z"].size() == 5);
}

TEST_CASE("verify-mertens command with a checkpoint") {
    const fs::path dir = fs::temp_directory_path() / "sievekit-tests";
    fs::create_directories(dir);
    const fs::path ckpt = dir / "cli.ckpt";
    const fs::path report = dir / "cli-report.csv";
    fs::remove(ckpt);
    const Run part = run({"verify-mertens", "--limit", "1e6", "--segment-width", "2e5", "--checkpoint", ckpt.string(),
                          "--max-segments", "2"});
    CHECK(part.code == 0);
    const Run rest = run({"verify-mertens", "--limit", "1e6", "--segment-width", "2e5", "--checkpoint", ckpt.string(),
                          "--format", "csv", "--out", report.string()});
    CHECK(rest.code == 0);
    CHECK(rest.out.empty());
    std::ifstream in(report);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str().find("/results/checked_count,78498") != std::string::npos);
    CHECK(ss.str().find("/results/extras/resumed_from_segment,2.0") != std::string::npos);
    const Run mismatch = run({"verify-mertens", "--limit", "2e6", "--segment-width", "2e5", "--checkpoint", ckpt.string()});
    CHECK(mismatch.code == kExitIo);
}

TEST_CASE("JSON round trip keeps every value") {
    const Run r = run({"theorem"});
    const Json j = parse(r);
    CHECK(Json::parse(emit_report(j, OutputFormat::json)) == j);
    const double M1 = j["results"]["upper_sum_Sq"]["M1"].get<double>();
    CHECK(Json::parse(Json(M1).dump()).get<double>() == M1);
}

TEST_CASE("csv and text carry the same leaves") {
    const Json j = parse(run({"verify-interval", "--n-max", "20"}));
    const std::string csv = emit_report(j, OutputFormat::csv);
    const std::string text = emit_report(j, OutputFormat::text);
    std::istringstream cs(csv), ts(text);
    std::string cl, tl;
    std::getline(cs, cl);
    CHECK(cl == "path,value");
    std::size_t rows = 0;
    while (std::getline(cs, cl)) {
        REQUIRE(std::getline(ts, tl));
        const auto comma = cl.find(',');
        const auto eq = tl.find(" = ");
        CHECK(cl.substr(0, comma) == tl.substr(0, eq));
        CHECK(cl.substr(comma + 1) == tl.substr(eq + 3));
        ++rows;
    }
    CHECK_FALSE(std::getline(ts, tl));
    CHECK(rows > 60);
    CHECK(csv.find("/counterexamples,[]") != std::string::npos);
}

TEST_CASE("csv quoting") {
    Json j = make_report("x", {{"note", "a,b \"c\""}}, Json::array(), Json::object(), Json::array(), 0);
    CHECK(emit_report(j, OutputFormat::csv).find("/inputs/note,\"a,b \"\"c\"\"\"") != std::string::npos);
}

TEST_CASE("exit status is a function of report content") {
    Json base = make_report("x", Json::object(), Json::array(), {{"holds", true}}, Json::array(), 1.5);
    CHECK(exit_status(base) == 0);
    Json ce = base;
    ce["counterexamples"].push_back({{"at", {5}}});
    CHECK(exit_status(ce) == 1);
    Json ledger = base;
    ledger["constants_ledger"].push_back({{"name", "a"}, {"ok", false}, {"enforced", true}});
    CHECK(exit_status(ledger) == 1);
    Json advisory = base;
    advisory["constants_ledger"].push_back({{"name", "a"}, {"ok", false}, {"enforced", false}});
    CHECK(exit_status(advisory) == 0);
    Json neg = base;
    neg["results"]["bound_positive"] = false;
    CHECK(exit_status(neg) == 1);
    Json fails = base;
    fails["results"]["holds"] = false;
    CHECK(exit_status(fails) == 1);
    Json slower = base;
    slower["runtime_seconds"] = 99.0;
    CHECK(exit_status(slower) == exit_status(base));
}

TEST_CASE("reports do not depend on the worker count") {
    for (auto args : std::vector<std::vector<std::string>>{{"verify-interval", "--n-max", "3000", "--k", "3"},
                                                           {"verify-4p", "--n-min", "4", "--n-max", "3000"},
                                                           {"scan-params", "--s-min", "3.0", "--s-max", "4.0",
                                                            "--alpha-min", "0.05", "--alpha-max", "0.13"},
                                                           {"verify-mertens", "--limit", "3e5", "--segment-width", "1e5"}}) {
        auto one = args, eight = args;
        one.insert(one.end(), {"--workers", "1"});
        eight.insert(eight.end(), {"--workers", "8"});
        const Run a = run(one), b = run(eight);
        CHECK(a.code == b.code);
        CHECK(without_runtime(parse(a)) == without_runtime(parse(b)));
    }
}

TEST_CASE("wide integers are emitted as strings") {
    CHECK(int_json(5) == 5);
    CHECK(int_json(static_cast<u128>(1) << 70) == "1180591620717411303424");
    CHECK(int_json(~std::uint64_t{0}) == ~std::uint64_t{0});
}
