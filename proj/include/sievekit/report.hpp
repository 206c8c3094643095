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

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sievekit/int128.hpp"
#include "sievekit/kuhn.hpp"
#include "sievekit/linear_sieve.hpp"
#include "sievekit/verifier.hpp"

namespace sievekit {

/// Insertion-ordered so that emitted reports are byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum class OutputFormat { json, csv, text };

std::optional<OutputFormat> parse_format(std::string_view name);

/// Integers that fit in 64 bits are JSON numbers, wider ones decimal strings.
Json int_json(u128 v);

const char* direction_name(Direction d);

Json to_json(const Counterexample& c);
Json to_json(const NearBoundary& nb);
Json to_json(const ScanReport& r);
Json to_json(const SieveParams& p);
Json to_json(const SieveGeometry& g);
Json to_json(const ConditionReport& c);
Json to_json(const LedgerEntry& e);
Json ledger_json(const std::vector<LedgerEntry>& ledger);
Json to_json(const BoundBreakdown& b);
Json to_json(const ParamScan& scan);
Json to_json(const EpsilonMargin& m);

/// Report envelope:
///
///     {schema_version, command, inputs, constants_ledger, results,
///      counterexamples, runtime_seconds}
Json make_report(std::string command, Json inputs, Json constants_ledger, Json results, Json counterexamples,
                 double runtime_seconds);

/// JSON is pretty-printed; CSV and text list every leaf of the flattened
/// document as a (JSON pointer, value) pair.
std::string emit_report(const Json& report, OutputFormat format);

/// 1 when the report carries a counterexample, a failed enforced ledger row,
/// results.holds == false or results.bound_positive == false; otherwise 0.
int exit_status(const Json& report);

}  // namespace sievekit
