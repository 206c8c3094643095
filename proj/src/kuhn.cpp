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

#include "sievekit/kuhn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "sievekit/bounds.hpp"
#include "sievekit/errors.hpp"
#include "sievekit/parallel.hpp"

namespace sievekit {

namespace {

u128 ceil_to_int(double v) { return static_cast<u128>(std::ceil(v)); }

bool is_integral(double v) { return std::floor(v) == v; }

u128 ipow(u128 base, unsigned e) { return saturating_pow(base, e); }

// True when no sifting prime below z divides the member.
bool survives(std::span<const PrimePower> factors, u128 z_ceil, const SiftingInstance& inst) {
    for (const auto& f : factors) {
        if (f.prime >= z_ceil) break;
        if (inst.in_P(f.prime)) return false;
    }
    return true;
}

bool in_middle(const PrimePower& f, const SiftingInstance& inst) {
    return f.prime >= inst.z_ceil() && f.prime < inst.y_ceil() && inst.in_P(f.prime);
}

// l - 1 < log a / log q <= log X / log z = k1 for every counted q^l || a.
void check_multiplicity(u128 a, const PrimePower& f, double k1) {
    if (!(ipow(f.prime, f.exponent - 1) < a) || !(static_cast<double>(f.exponent - 1) < k1)) {
        throw std::logic_error("prime-power multiplicity bound l - 1 < k1 violated at " + to_string(a));
    }
}

}  // namespace

SiftingInstance::SiftingInstance(FactorTable members, double z, double y, PrimeSet primes)
    : members_(std::move(members)), primes_(std::move(primes)), z_(z), y_(y) {
    if (members_.empty()) throw PreconditionError("sifting set A must be nonempty");
    if (!(z >= 2.0)) throw PreconditionError("sifting level z must be at least 2");
    if (!(y > z)) throw PreconditionError("need y > z");
    z_ceil_ = ceil_to_int(z);
    y_ceil_ = ceil_to_int(y);
    for (std::size_t i = 0; i < members_.size(); ++i) {
        max_ = std::max(max_, members_.value(i));
        for (const auto& f : members_.factors(i)) {
            if (!in_P(f.prime)) {
                throw PreconditionError("member " + to_string(members_.value(i)) +
                                        " is divisible by a prime outside the sifting set");
            }
        }
    }
    k1_ = std::log(static_cast<double>(to_long_double(max_))) / std::log(z_);
}

SiftingInstance SiftingInstance::from_interval(u128 N, double k1, double k2, const PrimeTable& table,
                                               PrimeSet primes) {
    FactoredInterval fi = factor_interval(N, table);
    const long double log_X = std::log(to_long_double(fi.X));
    const double z = static_cast<double>(std::exp(log_X / k1));
    const double y = static_cast<double>(std::exp(log_X / k2));
    SiftingInstance inst(std::move(fi.members), z, y, std::move(primes));
    if (is_integral(k1)) inst.z_ceil_ = iroot_ceil(inst.max_, static_cast<unsigned>(k1));
    if (is_integral(k2)) inst.y_ceil_ = iroot_ceil(inst.max_, static_cast<unsigned>(k2));
    inst.k1_ = k1;
    return inst;
}

SiftingInstance SiftingInstance::from_values(std::span<const u128> values, double z, double y, PrimeSet primes) {
    return SiftingInstance(FactorTable::from_values(values), z, y, std::move(primes));
}

SiftingInstance SiftingInstance::from_factors(FactorTable members, double z, double y, PrimeSet primes) {
    return SiftingInstance(std::move(members), z, y, std::move(primes));
}

Rational weight(std::span<const PrimePower> factors, u128 z_ceil, u128 y_ceil, int b, const PrimeSet& primes) {
    if (b < 1) throw PreconditionError("weight: b must be a positive integer");
    std::int64_t total = 0;
    for (const auto& f : factors) {
        const bool sifting = !primes || primes(f.prime);
        if (!sifting) continue;
        if (f.prime < z_ceil) {
            throw PreconditionError("weight: argument has the sifting prime factor " + to_string(f.prime) + " below z");
        }
        if (f.prime < y_ceil) total += f.exponent;
    }
    return Rational(1) - Rational(total, b + 1);
}

Rational weight(u128 a, double z, double y, int b) {
    if (a == 0) throw PreconditionError("weight: a must be positive");
    const auto factors = factorize(a);
    return weight(factors, ceil_to_int(z), ceil_to_int(y), b);
}

std::uint64_t exact_S(const SiftingInstance& inst) {
    const auto& A = inst.members();
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < A.size(); ++i)
        if (survives(A.factors(i), inst.z_ceil(), inst)) ++count;
    return count;
}

std::uint64_t exact_sum_S_q(const SiftingInstance& inst) {
    const auto& A = inst.members();
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < A.size(); ++i) {
        const auto f = A.factors(i);
        if (!survives(f, inst.z_ceil(), inst)) continue;
        for (const auto& pp : f)
            if (in_middle(pp, inst)) ++total;
    }
    return total;
}

std::uint64_t exact_sum_A_q2(const SiftingInstance& inst) {
    const auto& A = inst.members();
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < A.size(); ++i)
        for (const auto& pp : A.factors(i))
            if (pp.exponent >= 2 && in_middle(pp, inst)) ++total;
    return total;
}

WitnessedCount exact_rk(const FactorTable& A, unsigned k) {
    WitnessedCount out;
    out.k = k;
    for (std::size_t i = 0; i < A.size(); ++i) {
        if (A.omega(i) > k) continue;
        ++out.count;
        if (out.witnesses.size() < kWitnessCap) out.witnesses.push_back(A.value(i));
    }
    return out;
}

Rational weight_sum(const SiftingInstance& inst, int b) {
    const auto& A = inst.members();
    Rational total(0);
    for (std::size_t i = 0; i < A.size(); ++i) {
        const auto f = A.factors(i);
        if (!survives(f, inst.z_ceil(), inst)) continue;
        for (const auto& pp : f)
            if (in_middle(pp, inst)) check_multiplicity(A.value(i), pp, inst.k1());
        total += weight(f, inst.z_ceil(), inst.y_ceil(), b,
                        [&inst](u128 p) { return inst.in_P(p); });
    }
    return total;
}

WeightDecomposition decompose_weights(const SiftingInstance& inst) {
    const auto& A = inst.members();
    WeightDecomposition out;
    for (std::size_t i = 0; i < A.size(); ++i) {
        const auto f = A.factors(i);
        if (!survives(f, inst.z_ceil(), inst)) continue;
        for (const auto& pp : f) {
            if (!in_middle(pp, inst)) continue;
            check_multiplicity(A.value(i), pp, inst.k1());
            out.total_multiplicity += pp.exponent;
            out.sum_S_q += 1;
            out.extra_multiplicity += pp.exponent - 1;
        }
    }
    return out;
}

KuhnLower kuhn_lower(const SiftingInstance& inst, KuhnMode mode) {
    KuhnLower out;
    out.S = exact_S(inst);
    out.sum_S_q = exact_sum_S_q(inst);
    out.sum_A_q2 = exact_sum_A_q2(inst);
    out.k1 = inst.k1();
    if (mode.kind == KuhnMode::exact_q2) {
        out.square_term = out.k1 / 2.0 * static_cast<double>(out.sum_A_q2);
    } else {
        const double size = static_cast<double>(inst.members().size());
        out.square_term = out.k1 * mode.c1 * size * std::log(size) / (2.0 * inst.z()) +
                          mode.c2 * inst.y() / (2.0 * std::log(inst.z()));
    }
    out.value = static_cast<double>(out.S) - static_cast<double>(out.sum_S_q) / 2.0 - out.square_term;
    return out;
}

Q2Constants q2_condition_constants(u128 N) {
    if (N <= threshold_N()) throw DomainError("q2_condition_constants requires N > 1.98e28");
    SieveParams p;
    p.k1 = 8;
    p.k2 = 4;
    const SieveGeometry g = geometry(N, p);
    Q2Constants out;
    out.z = g.z;
    out.y = g.y;
    out.c1_required = 2.22 / (std::log(static_cast<double>(g.size)) * std::log(g.z));
    out.c2_required = 1.1 / std::log(1e7);
    if (!(g.z > 3444.0)) throw LedgerViolation("q2 constants: z > 3444 fails");
    if (!(g.y > 1e7)) throw LedgerViolation("q2 constants: y > 10^7 fails");
    if (!(out.c1_required <= out.c1)) throw LedgerViolation("q2 constants: c1 = 0.01 is not admissible");
    if (!(out.c2_required <= out.c2)) throw LedgerViolation("q2 constants: c2 = 0.07 is not admissible");
    return out;
}

BoundBreakdown evaluate_bounds(u128 N, const SieveParams& params) {
    params.validate();
    BoundBreakdown b;
    b.params = params;
    b.geom = geometry(N, params);
    const SieveGeometry& g = b.geom;
    b.conditions = check_conditions(params, g.z, g.D);
    if (auto failed = b.conditions.first_failure()) {
        throw PreconditionError("theorem pipeline: condition failed: " + *failed);
    }

    b.S_lower = lower_bound_S(N, params);
    b.upper = upper_sum_Sq(N, params);
    const double size = static_cast<double>(g.size);
    const double lz = std::log(g.z);
    b.kuhn_remainder = params.k1 * params.c1 * size * std::log(size) / (2.0 * g.z) + params.c2 * g.y / (2.0 * lz);
    b.r4_lower = b.S_lower.value - b.upper.total / 2.0 - b.kuhn_remainder;

    const bool s_in_C_range = params.s >= 3.0 && params.s <= 4.0;
    b.C_s = s_in_C_range ? C_of(params.s) : std::numeric_limits<double>::quiet_NaN();

    // Coefficients in units of sqrt(N)/log X unless noted.
    const double unit = g.sqrt_N / g.log_X;
    const double M1c = b.upper.M1 / unit;
    const double M2c = b.upper.M2 * g.log_X / g.y;
    const double Ec = b.upper.E / std::exp((0.5 - params.alpha) * g.log_X);
    const double total_c = b.upper.total / unit;
    const double rem_c = b.kuhn_remainder / unit;
    const double err_weight_1 = params.epsilon * params.C1 * std::exp(2.0) * h_of(params.k_alpha());
    const double QD = params.Q * g.D;
    const double squarefree_c = (6.0 / (std::numbers::pi * std::numbers::pi) * QD + 0.5 * std::sqrt(QD)) / g.D;

    auto add = [&b](std::string name, double computed, double quoted, Direction dir, std::string note,
                    bool enforced = true) {
        b.ledger.push_back(LedgerEntry{std::move(name), computed, quoted, dir, enforced, std::move(note)});
    };

    add("3444", g.z, 3444.0, Direction::at_least, "z = X^(1/k1) exceeds 3444");
    add("1e7", g.y, 1e7, Direction::at_least, "y = X^(1/k2) exceeds 10^7");
    add("0.01", 2.22 / (std::log(size) * lz), 0.01, Direction::at_most, "c1 admissible: 2.22/(log|A| log z)");
    add("0.07", 1.1 / std::log(1e7), 0.07, Direction::at_most, "c2 admissible: 1.1/log(10^7)");
    add("0.051", rem_c, 0.051, Direction::at_most, "square-divisor remainder, units sqrt(N)/log X");
    add("8.8", b.S_lower.main_factor / unit, 8.8, Direction::at_least,
        "e^-gamma (2 sqrt N - 1)/log z (1 - 1/(2 log^2 z)), units sqrt(N)/log X");
    add("0.73", 3.0 * params.epsilon * params.C2, 0.73, Direction::at_most, "3 eps C2 in the C(s) error term");
    add("4e10", g.z * g.z * g.z, 4e10, Direction::at_least, "D >= z^3 exceeds 4e10");
    add("1.216", squarefree_c, 1.216, Direction::at_most, "squarefree count below QD, units D");
    add("4.526", b.upper.leading, 4.526, Direction::at_most, "k1 e^-gamma (1 + k1^2/(2 log^2 X))");
    add("2.909", M1c, 2.909, Direction::at_most, "M1 with the exact log ratio, units sqrt(N)/log X");
    add("0.24", err_weight_1, 0.24, Direction::at_most, "eps C1 e^2 h(k_alpha)");
    add("2.713", M2c, 2.713, Direction::at_most, "M2, units X^(1/k2)/log X");
    add("1.405", Ec, 1.405, Direction::at_most, "E, units X^(1/2 - alpha)");
    add("13.167", b.upper.leading * M1c, 13.167, Direction::at_most, "leading * M1");
    add("12.28", b.upper.leading * M2c, 12.28, Direction::at_most, "leading * M2");
    add("14.124", total_c, 14.124, Direction::at_most, "sum of S(A_q) bound, units sqrt(N)/log X");
    add("7.113", total_c / 2.0 + rem_c, 7.113, Direction::at_most, "half the S(A_q) bound plus remainder");

    if (s_in_C_range) {
        add("C(s) < f(s) - eps C2 e^2 h(s)", b.S_lower.sieve_factor, b.C_s, Direction::at_least,
            "sieve factor dominates C(s)");
        add("8.8 C(s) - 7.113 > 0", 8.8 * b.C_s - 7.113, 0.0, Direction::at_least, "final main coefficient");
        const double final_form = (8.8 * b.C_s - 7.113) * unit - 1.216 * g.D;
        add("r4 closed form", b.r4_lower, final_form, Direction::at_least,
            "recomputed r4 bound dominates (8.8 C(s) - 7.113) sqrt(N)/log X - 1.216 X^(s/k1)");
        if (params.s == 3.3) {
            add("0.839", b.C_s, 0.839, Direction::at_least, "quoted lower bound for C(3.3); direct evaluation is 0.83879",
                false);
        }
    }

    // The printed specialization of M1 rounds the log ratio to log 3.4; it is
    // reported for comparison only.
    if (params.k1 == 8.0 && params.k2 == 4 && params.alpha == 0.07) {
        const double LX = g.log_X;
        const double LX3 = LX * LX * LX;
        const double eg4 = exp_gamma() / 4.0;
        const double tail = 0.24 * (std::log(2.0) + 2560.0 / LX3);
        add("2.909 (printed, log 3.4, (log X)^3)", 2.0 * (eg4 * (std::log(3.4) / 0.43 + 20480.0 / (1.44 * LX3)) + tail),
            2.909, Direction::at_most, "rounded log ratio", false);
        add("2.909 (printed, log 3.4, (log X)^2)",
            2.0 * (eg4 * (std::log(3.4) / 0.43 + 20480.0 / (1.44 * LX * LX)) + tail), 2.909, Direction::at_most,
            "printed power of log X", false);
    }
    return b;
}

BoundBreakdown theorem_pipeline(u128 N, const SieveParams& params) {
    if (N <= threshold_N()) throw PreconditionError("theorem pipeline requires N > 1.98e28");
    BoundBreakdown b = evaluate_bounds(N, params);
    const auto bad = b.violations();
    if (!bad.empty()) {
        std::string msg = "ledger direction violated:";
        for (const auto* e : bad) msg += " " + e->name + " (computed " + std::to_string(e->computed) + ")";
        throw LedgerViolation(msg);
    }
    return b;
}

namespace {

std::vector<double> grid_values(double lo, double hi, double step, const char* what) {
    if (!(step > 0.0) || !(hi >= lo)) throw DomainError(std::string("bad grid for ") + what);
    const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(std::round((lo + static_cast<double>(i) * step) * 1e9) / 1e9);
    return out;
}

}  // namespace

std::vector<double> ParamGrid::s_values() const { return grid_values(s_min, s_max, s_step, "s"); }
std::vector<double> ParamGrid::alpha_values() const {
    return grid_values(alpha_min, alpha_max, alpha_step, "alpha");
}

ParamScan scan_parameters(u128 N, const ParamGrid& grid, const SieveParams& base, unsigned workers) {
    const auto ss = grid.s_values();
    const auto as = grid.alpha_values();
    ParamScan out;
    out.surface.resize(ss.size() * as.size());

    parallel_for(out.surface.size(), workers, [&](std::size_t idx) {
        SieveParams p = base;
        p.s = ss[idx / as.size()];
        p.alpha = as[idx % as.size()];
        SurfacePoint pt{p.s, p.alpha, false, std::numeric_limits<double>::quiet_NaN()};
        if (p.s >= 3.0 && p.s <= 4.0) {
            try {
                pt.r4_lower = evaluate_bounds(N, p).r4_lower;
                pt.feasible = true;
            } catch (const DomainError&) {
            } catch (const PreconditionError&) {
            }
        }
        out.surface[idx] = pt;
    });

    bool any = false;
    for (const auto& pt : out.surface) {
        if (!pt.feasible) continue;
        if (!any || pt.r4_lower > out.best_r4) {
            out.best_s = pt.s;
            out.best_alpha = pt.alpha;
            out.best_r4 = pt.r4_lower;
            any = true;
        }
    }
    if (!any) throw DomainError("scan_parameters: no feasible grid point");
    return out;
}

}  // namespace sievekit
