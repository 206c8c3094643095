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
#include <vector>

#include "sievekit/int128.hpp"

namespace sievekit {

/// Parameter bundle for the weighted-sieve argument on A(N).
///
/// k1, k2 set the sifting levels z = X^{1/k1}, y = X^{1/k2}; s = log D / log z;
/// alpha trims the level of distribution of the middle-range sums; epsilon,
/// Q, C1, C2 are the linear-sieve constants; c1, c2 bound the square-divisor
/// sum sum_{z<=q<y} |A_{q^2}|.
struct SieveParams {
    double k1 = 8.0;
    int k2 = 4;
    double alpha = 0.07;
    double s = 3.3;
    double epsilon = 1.97e-3;
    unsigned Q = 2;
    double C1 = 121.0;
    double C2 = 122.0;
    double c1 = 0.01;
    double c2 = 0.07;

    double k_alpha() const { return k1 * (0.5 - 1.0 / k2 - alpha); }

    /// Throws DomainError naming the first violated constraint.
    void validate() const;

    bool operator==(const SieveParams&) const = default;
};

/// N above which the analytic argument is run (smaller N are covered by a
/// cited computation).
inline constexpr const char* kThresholdN = "1.98e28";
u128 threshold_N();

/// The quantities of A(N) every bound is expressed in.
struct SieveGeometry {
    u128 N = 0;
    u128 X = 0;       ///< max(A)
    u128 size = 0;    ///< |A|
    double sqrt_N = 0;
    double log_X = 0;
    double z = 0;     ///< X^{1/k1}
    double y = 0;     ///< X^{1/k2}
    double D = 0;     ///< z^s
};

SieveGeometry geometry(u128 N, const SieveParams& params);

struct Condition {
    std::string name;
    bool ok;
    double value;
    double threshold;
};

struct ConditionReport {
    std::vector<Condition> items;

    bool all_ok() const;
    std::optional<std::string> first_failure() const;
};

/// Side conditions of the lower bound: D >= z^2, f(s) > eps C2 e^2 h(s),
/// z >= 3024 (where eps = 1.97e-3 is proved), z >= 285 (V(z) band), eps <= 1/74.
ConditionReport check_conditions(const SieveParams& params, double z, double D);

enum class SquarefreeMode { automatic, exact, analytic };

/// Below this QD the squarefree remainder is counted exactly in automatic mode.
inline constexpr double kExactSquarefreeLimit = 1e9;

struct LowerBoundS {
    double value = 0;
    double main_factor = 0;     ///< e^-gamma (2 sqrt N - 1)/log z * (1 - 1/(2 log^2 z))
    double sieve_factor = 0;    ///< f(s) - eps C2 e^2 h(s)
    double squarefree_term = 0; ///< bound on sum_{d < QD} mu^2(d)
    bool squarefree_exact = false;
};

/// Lower bound for S(A, P, z). Throws PreconditionError if a condition fails.
LowerBoundS lower_bound_S(u128 N, const SieveParams& params, SquarefreeMode mode = SquarefreeMode::automatic);

/// Upper bound for sum_{z <= q < y} S(A_q, P, z) = leading * (M1 + M2) + E.
struct UpperSumSq {
    double M1 = 0;
    double M2 = 0;
    double E = 0;
    double leading = 0;
    double total = 0;
};

/// Throws PreconditionError unless y > z > 1000, 2 < k1 <= 8 and alpha is in range.
UpperSumSq upper_sum_Sq(u128 N, const SieveParams& params);

/// k1 e^-gamma (1 + k1^2 / (2 log^2 X)).
double leading_factor(u128 N, const SieveParams& params);

/// Closed form of int_z^y dt / (t log t log(X^{1/2-alpha}/t)).
double middle_integral_closed_form(double log_X, double k1, double k2, double alpha);

enum class Direction { at_most, at_least };

/// One recomputed constant checked against the value quoted for it.
struct LedgerEntry {
    std::string name;
    double computed = 0;
    double paper_value = 0;
    Direction direction = Direction::at_most;
    bool enforced = true;  ///< advisory rows are reported but never fail a run
    std::string note;

    bool ok() const { return direction == Direction::at_most ? computed <= paper_value : computed >= paper_value; }
};

/// Every intermediate quantity of the r_4 lower bound for one N.
struct BoundBreakdown {
    SieveParams params;
    SieveGeometry geom;
    ConditionReport conditions;
    LowerBoundS S_lower;
    UpperSumSq upper;
    double C_s = 0;
    double kuhn_remainder = 0;  ///< k1 c1 |A| log|A| / (2z) + c2 y / (2 log z)
    double r4_lower = 0;
    std::vector<LedgerEntry> ledger;

    bool ledger_ok() const;
    std::vector<const LedgerEntry*> violations() const;
};

}  // namespace sievekit
