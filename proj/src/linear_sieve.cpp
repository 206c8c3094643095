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

#include "sievekit/linear_sieve.hpp"

#include <cmath>
#include <numbers>

#include "sievekit/bounds.hpp"
#include "sievekit/errors.hpp"
#include "sievekit/primes.hpp"

namespace sievekit {

void SieveParams::validate() const {
    if (!(k2 >= 2 && k1 >= k2)) throw DomainError("need k1 >= k2 >= 2");
    if (!(k1 > 2.0 && k1 <= 8.0)) throw DomainError("need 2 < k1 <= 8");
    const double alpha_max = 0.5 - 1.0 / k1 - 1.0 / k2;
    if (!(alpha > 0.0 && alpha < alpha_max)) {
        throw DomainError("need 0 < alpha < 1/2 - 1/k1 - 1/k2 = " + std::to_string(alpha_max));
    }
    if (!(epsilon > 0.0 && epsilon <= 1.0 / 74.0)) throw DomainError("need 0 < epsilon <= 1/74");
    if (Q == 0) throw DomainError("Q must be positive");
    if (!(C1 > 0 && C2 > 0 && c1 > 0 && c2 > 0)) throw DomainError("C1, C2, c1, c2 must be positive");
}

u128 threshold_N() { return parse_u128(kThresholdN); }

SieveGeometry geometry(u128 N, const SieveParams& params) {
    if (N == 0) throw PreconditionError("N must be positive");
    SieveGeometry g;
    g.N = N;
    g.size = interval_size(N);
    g.X = N + g.size;
    g.sqrt_N = std::sqrt(static_cast<double>(to_long_double(N)));
    g.log_X = static_cast<double>(std::log(to_long_double(g.X)));
    g.z = std::exp(g.log_X / params.k1);
    g.y = std::exp(g.log_X / params.k2);
    g.D = std::exp(params.s * g.log_X / params.k1);
    return g;
}

bool ConditionReport::all_ok() const {
    for (const auto& c : items)
        if (!c.ok) return false;
    return true;
}

std::optional<std::string> ConditionReport::first_failure() const {
    for (const auto& c : items)
        if (!c.ok) return c.name;
    return std::nullopt;
}

ConditionReport check_conditions(const SieveParams& params, double z, double D) {
    ConditionReport r;
    r.items.push_back({"D >= z^2", D >= z * z, D, z * z});

    const double s = params.s;
    double f = 0.0;
    double err = 0.0;
    bool f_ok = false;
    if (s >= 2.0 && s <= 4.0) {
        f = f_of(s);
        err = params.epsilon * params.C2 * std::exp(2.0) * h_of(s);
        f_ok = f > err;
    } else if (s >= 1.0) {
        // Outside the closed form of f the condition cannot be certified.
        err = params.epsilon * params.C2 * std::exp(2.0) * h_of(s);
    }
    r.items.push_back({"f(s) > eps C2 e^2 h(s)", f_ok, f, err});
    r.items.push_back({"z >= 3024", z >= 3024.0, z, 3024.0});
    r.items.push_back({"z >= 285", z >= 285.0, z, 285.0});
    r.items.push_back({"eps <= 1/74", params.epsilon > 0 && params.epsilon <= 1.0 / 74.0, params.epsilon, 1.0 / 74.0});
    return r;
}

LowerBoundS lower_bound_S(u128 N, const SieveParams& params, SquarefreeMode mode) {
    const SieveGeometry g = geometry(N, params);
    const ConditionReport cond = check_conditions(params, g.z, g.D);
    if (auto failed = cond.first_failure()) throw PreconditionError("lower_bound_S: condition failed: " + *failed);

    LowerBoundS out;
    const double lz = std::log(g.z);
    out.main_factor = exp_neg_gamma() * (2.0 * g.sqrt_N - 1.0) / lz * (1.0 - 1.0 / (2.0 * lz * lz));
    out.sieve_factor = f_of(params.s) - params.epsilon * params.C2 * std::exp(2.0) * h_of(params.s);

    const double QD = params.Q * g.D;
    const bool exact = mode == SquarefreeMode::exact ||
                       (mode == SquarefreeMode::automatic && QD <= kExactSquarefreeLimit);
    if (exact) {
        // d < QD  <=>  d <= ceil(QD) - 1
        out.squarefree_term = static_cast<double>(squarefree_count(std::ceil(QD) - 1.0));
    } else {
        out.squarefree_term = 6.0 / (std::numbers::pi * std::numbers::pi) * QD + 0.5 * std::sqrt(QD);
    }
    out.squarefree_exact = exact;
    out.value = out.main_factor * out.sieve_factor - out.squarefree_term;
    return out;
}

double leading_factor(u128 N, const SieveParams& params) {
    const SieveGeometry g = geometry(N, params);
    return params.k1 * exp_neg_gamma() * (1.0 + params.k1 * params.k1 / (2.0 * g.log_X * g.log_X));
}

double middle_integral_closed_form(double log_X, double k1, double k2, double alpha) {
    const double ratio = (k1 - 2.0 * k1 * alpha - 2.0) / (k2 - 2.0 * k2 * alpha - 2.0);
    return std::log(ratio) / ((0.5 - alpha) * log_X);
}

UpperSumSq upper_sum_Sq(u128 N, const SieveParams& params) {
    const SieveGeometry g = geometry(N, params);
    const double k1 = params.k1;
    const double k2 = params.k2;
    const double alpha = params.alpha;
    if (!(g.y > g.z && g.z > 1000.0)) throw PreconditionError("upper_sum_Sq: need y > z > 1000");
    if (!(k1 > 2.0 && k1 <= 8.0)) throw PreconditionError("upper_sum_Sq: need 2 < k1 <= 8");
    if (!(alpha > 0.0 && alpha < 0.5 - 1.0 / k1 - 1.0 / k2)) {
        throw PreconditionError("upper_sum_Sq: need 0 < alpha < 1/2 - 1/k1 - 1/k2");
    }

    const double LX = g.log_X;
    const double LX3 = LX * LX * LX;
    const double ka = params.k_alpha();
    const double eg = exp_gamma();
    const double err_weight = params.epsilon * params.C1 * std::exp(2.0) * h_of(ka);
    const double reciprocal_sum = std::log(k1 / k2) + 5.0 * k1 * k1 * k1 / LX3;

    UpperSumSq out;
    const double log_part = middle_integral_closed_form(LX, k1, k2, alpha) * LX;
    out.M1 = 2.0 * g.sqrt_N / LX *
             (2.0 * eg / k1 * (log_part + 5.0 * std::pow(k1, 4) / (ka * LX3)) + err_weight * reciprocal_sum);
    out.M2 = g.y / LX * (2.0 * eg / ka + err_weight);
    out.E = params.Q * std::exp((0.5 - alpha) * LX) * reciprocal_sum;
    out.leading = k1 * exp_neg_gamma() * (1.0 + k1 * k1 / (2.0 * LX * LX));
    out.total = out.leading * (out.M1 + out.M2) + out.E;
    return out;
}

bool BoundBreakdown::ledger_ok() const { return violations().empty(); }

std::vector<const LedgerEntry*> BoundBreakdown::violations() const {
    std::vector<const LedgerEntry*> out;
    for (const auto& e : ledger)
        if (e.enforced && !e.ok()) out.push_back(&e);
    return out;
}

}  // namespace sievekit
