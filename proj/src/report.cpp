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

#include "sievekit/report.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace sievekit {

std::optional<OutputFormat> parse_format(std::string_view name) {
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    if (name == "text") return OutputFormat::text;
    return std::nullopt;
}

Json int_json(u128 v) {
    if (fits_u64(v)) return static_cast<std::uint64_t>(v);
    return to_string(v);
}

const char* direction_name(Direction d) { return d == Direction::at_most ? "at_most" : "at_least"; }

namespace {

Json ints_json(const std::vector<u128>& vs) {
    Json arr = Json::array();
    for (u128 v : vs) arr.push_back(int_json(v));
    return arr;
}

// Non-finite doubles become null.
Json real(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

}  // namespace

Json to_json(const Counterexample& c) {
    return {{"at", ints_json(c.at)}, {"value", real(c.value)}, {"detail", c.detail}};
}

Json to_json(const NearBoundary& nb) {
    return {{"at", ints_json(nb.at)},
            {"relative_margin", real(nb.relative_margin)},
            {"holds", nb.holds},
            {"detail", nb.detail}};
}

Json to_json(const ScanReport& r) {
    Json ce = Json::array();
    for (const auto& c : r.counterexamples) ce.push_back(to_json(c));
    Json nb = Json::array();
    for (const auto& n : r.near_boundary) nb.push_back(to_json(n));
    Json extras = Json::object();
    for (const auto& [k, v] : r.extras) extras[k] = real(v);
    return {{"scan_id", r.scan_id},
            {"range", {int_json(r.range_lo), int_json(r.range_hi)}},
            {"max_value", real(r.max_value)},
            {"argmax", ints_json(r.argmax)},
            {"checked_count", r.checked_count},
            {"holds", r.holds()},
            {"counterexamples", std::move(ce)},
            {"near_boundary", std::move(nb)},
            {"extras", std::move(extras)}};
}

Json to_json(const SieveParams& p) {
    return {{"k1", p.k1}, {"k2", p.k2}, {"alpha", p.alpha}, {"s", p.s}, {"epsilon", p.epsilon},
            {"Q", p.Q},   {"C1", p.C1}, {"C2", p.C2},       {"c1", p.c1}, {"c2", p.c2}};
}

Json to_json(const SieveGeometry& g) {
    return {{"N", int_json(g.N)},   {"X", int_json(g.X)},       {"size", int_json(g.size)},
            {"sqrt_N", g.sqrt_N},   {"log_X", g.log_X},         {"z", g.z},
            {"y", g.y},             {"D", g.D}};
}

Json to_json(const ConditionReport& c) {
    Json arr = Json::array();
    for (const auto& item : c.items)
        arr.push_back({{"name", item.name}, {"ok", item.ok}, {"value", real(item.value)}, {"threshold", real(item.threshold)}});
    return arr;
}

Json to_json(const LedgerEntry& e) {
    Json j = {{"name", e.name},
              {"computed", real(e.computed)},
              {"paper_value", real(e.paper_value)},
              {"direction", direction_name(e.direction)},
              {"ok", e.ok()},
              {"enforced", e.enforced}};
    if (!e.note.empty()) j["note"] = e.note;
    return j;
}

Json ledger_json(const std::vector<LedgerEntry>& ledger) {
    Json arr = Json::array();
    for (const auto& e : ledger) arr.push_back(to_json(e));
    return arr;
}

Json to_json(const BoundBreakdown& b) {
    return {{"geometry", to_json(b.geom)},
            {"conditions", to_json(b.conditions)},
            {"S_lower",
             {{"value", real(b.S_lower.value)},
              {"main_factor", real(b.S_lower.main_factor)},
              {"sieve_factor", real(b.S_lower.sieve_factor)},
              {"squarefree_term", real(b.S_lower.squarefree_term)},
              {"squarefree_exact", b.S_lower.squarefree_exact}}},
            {"upper_sum_Sq",
             {{"M1", real(b.upper.M1)},
              {"M2", real(b.upper.M2)},
              {"E", real(b.upper.E)},
              {"leading", real(b.upper.leading)},
              {"total", real(b.upper.total)}}},
            {"C_s", real(b.C_s)},
            {"kuhn_remainder", real(b.kuhn_remainder)},
            {"r4_lower", real(b.r4_lower)},
            {"ledger_ok", b.ledger_ok()}};
}

Json to_json(const ParamScan& scan) {
    Json surface = Json::array();
    for (const auto& p : scan.surface)
        surface.push_back({{"s", p.s}, {"alpha", p.alpha}, {"feasible", p.feasible}, {"r4_lower", real(p.r4_lower)}});
    return {{"best_s", scan.best_s}, {"best_alpha", scan.best_alpha}, {"best_r4", real(scan.best_r4)},
            {"surface", std::move(surface)}};
}

Json to_json(const EpsilonMargin& m) {
    return {{"case", m.case_id},
            {"regime", m.regime},
            {"excess", real(m.excess)},
            {"worst_case", real(m.worst_case)},
            {"bound", real(m.bound)},
            {"ok", m.ok}};
}

Json make_report(std::string command, Json inputs, Json constants_ledger, Json results, Json counterexamples,
                 double runtime_seconds) {
    Json r = Json::object();
    r["schema_version"] = kSchemaVersion;
    r["command"] = std::move(command);
    r["inputs"] = std::move(inputs);
    r["constants_ledger"] = constants_ledger.is_null() ? Json::array() : std::move(constants_ledger);
    r["results"] = std::move(results);
    r["counterexamples"] = counterexamples.is_null() ? Json::array() : std::move(counterexamples);
    r["runtime_seconds"] = runtime_seconds;
    return r;
}

namespace {

void flatten(const Json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& out) {
    if (j.is_object() && !j.empty()) {
        for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path + "/" + it.key(), out);
    } else if (j.is_array() && !j.empty()) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "/" + std::to_string(i), out);
    } else if (j.is_string()) {
        out.emplace_back(path, j.get<std::string>());
    } else {
        out.emplace_back(path, j.dump());
    }
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

}  // namespace

std::string emit_report(const Json& report, OutputFormat format) {
    if (format == OutputFormat::json) return report.dump(2) + "\n";
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(report, "", rows);
    std::ostringstream os;
    if (format == OutputFormat::csv) {
        os << "path,value\n";
        for (const auto& [p, v] : rows) os << csv_field(p) << ',' << csv_field(v) << '\n';
    } else {
        for (const auto& [p, v] : rows) os << p << " = " << v << '\n';
    }
    return os.str();
}

int exit_status(const Json& report) {
    if (report.contains("counterexamples") && !report["counterexamples"].empty()) return 1;
    if (report.contains("constants_ledger"))
        for (const auto& row : report["constants_ledger"])
            if (row.value("enforced", true) && !row.value("ok", false)) return 1;
    if (report.contains("results")) {
        const auto& r = report["results"];
        if (r.is_object()) {
            if (r.contains("holds") && r["holds"] == false) return 1;
            if (r.contains("bound_positive") && r["bound_positive"] == false) return 1;
        }
    }
    return 0;
}

}  // namespace sievekit
