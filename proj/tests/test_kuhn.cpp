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

#include <cmath>
#include <random>

#include "kuhn_suite.hpp"
#include "oracles.hpp"
#include "sievekit/bounds.hpp"
#include "sievekit/errors.hpp"
#include "sievekit/kuhn.hpp"

using namespace sievekit;

namespace {

const u128 kN0 = parse_u128("1.98e28") + 1;

std::vector<u128> range_values(u128 lo, u128 hi) {
    std::vector<u128> v;
    for (u128 a = lo; a <= hi; ++a) v.push_back(a);
    return v;
}

const LedgerEntry& row(const BoundBreakdown& b, const std::string& name) {
    for (const auto& e : b.ledger)
        if (e.name == name) return e;
    FAIL("missing ledger row " << name);
    throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("weights") {
    const double z = 10, y = 100;
    CHECK(weight(101, z, y) == Rational(1));
    CHECK(weight(11, z, y) == Rational(1, 2));
    CHECK(weight(11 * 11 * 11, z, y) == Rational(-1, 2));
    CHECK(weight(11 * 13, z, y) == Rational(0));
    CHECK(weight(11, z, y, 2) == Rational(2, 3));
    CHECK(weight(1, z, y) == Rational(1));
    CHECK_THROWS_AS(weight(22, z, y), PreconditionError);
    CHECK_THROWS_AS(weight(11, z, y, 0), PreconditionError);
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<u64> pick(1, 1'000'000);
    for (int i = 0; i < 500; ++i) {
        const u64 a = pick(rng);
        if (oracle::has_factor_below(a, 10)) continue;
        const Rational w = weight(a, z, y);
        CHECK(w <= Rational(1));
        bool middle = false;
        for (u64 q = 11; q < 100; ++q)
            if (oracle::is_prime(q) && a % q == 0) middle = true;
        CHECK((w == Rational(1)) == !middle);
    }
}

TEST_CASE("exact_S on small sets") {
    const auto A = range_values(11, 20);
    CHECK(exact_S(SiftingInstance::from_values(A, 3, 7)) == 5);
    CHECK(exact_S(SiftingInstance::from_values(A, 2, 7)) == A.size());
    CHECK_THROWS_AS(SiftingInstance::from_values(A, 1.5, 7), PreconditionError);
    CHECK_THROWS_AS(SiftingInstance::from_values(A, 5, 5), PreconditionError);
    CHECK_THROWS_AS(SiftingInstance::from_values({}, 3, 7), PreconditionError);

    // the odd-only prime set forbids even members
    auto odd = [](u128 p) { return p != 2; };
    CHECK_THROWS_AS(SiftingInstance::from_values(A, 3, 7, odd), PreconditionError);
    const std::vector<u128> odds = {11, 13, 15, 17, 19, 21};
    CHECK(exact_S(SiftingInstance::from_values(odds, 4, 7, odd)) == 4);
}

TEST_CASE("sifting counts against brute force on A(10^6)") {
    const PrimeTable t = primes_up_to(2000);
    const SiftingInstance inst = SiftingInstance::from_interval(1'000'000, 6, 3, t);
    const auto& A = inst.members();
    u64 S = 0, sum_Sq = 0, sum_q2 = 0;
    for (std::size_t i = 0; i < A.size(); ++i) {
        const u128 a = A.value(i);
        const bool survivor = !oracle::has_factor_below(a, inst.z_ceil());
        S += survivor;
        for (u128 q = inst.z_ceil(); q < inst.y_ceil(); ++q) {
            if (!oracle::is_prime(static_cast<u64>(q))) continue;
            if (a % q == 0 && survivor) ++sum_Sq;
            if (a % (q * q) == 0) ++sum_q2;
        }
    }
    CHECK(exact_S(inst) == S);
    CHECK(exact_sum_S_q(inst) == sum_Sq);
    CHECK(exact_sum_A_q2(inst) == sum_q2);

    const SiftingInstance z10 = SiftingInstance::from_values(
        std::vector<u128>(A.values().begin(), A.values().end()), 10, 1000);
    u64 lpf_ge_10 = 0;
    for (std::size_t i = 0; i < A.size(); ++i) lpf_ge_10 += !oracle::has_factor_below(A.value(i), 10);
    CHECK(exact_S(z10) == lpf_ge_10);
}

TEST_CASE("exact_rk") {
    const std::vector<u128> small = {2, 3, 4};
    CHECK(exact_rk(FactorTable::from_values(small), 1).count == 2);
    const std::vector<u128> eight = {8};
    CHECK(exact_rk(FactorTable::from_values(eight), 2).count == 0);
    const PrimeTable t = primes_up_to(100);
    const auto A100 = factor_interval(100, t);
    const WitnessedCount r = exact_rk(A100.members, 1);
    CHECK(r.count >= 5);
    for (u128 w : r.witnesses) CHECK(oracle::omega(w) <= 1);
    CHECK_FALSE(r.truncated());

    const PrimeTable big = primes_up_to(100'000);
    const auto wide = factor_interval(parse_u128("1e9"), big);
    const WitnessedCount all = exact_rk(wide.members, 60);
    CHECK(all.count == wide.size());
    CHECK(all.witnesses.size() == kWitnessCap);
    CHECK(all.truncated());
}

TEST_CASE("kuhn_lower with an empty middle range") {
    // members are primes >= y, so no weight is reduced
    const std::vector<u128> primes = {1009, 1013, 1019, 1021};
    const SiftingInstance inst = SiftingInstance::from_values(primes, 10, 100);
    const KuhnLower L = kuhn_lower(inst, KuhnMode::exact());
    CHECK(L.S == 4);
    CHECK(L.sum_S_q == 0);
    CHECK(L.value == doctest::Approx(static_cast<double>(L.S) - L.k1 / 2 * L.sum_A_q2));
    CHECK(weight_sum(inst) == Rational(4));
}

TEST_CASE("Kuhn inequalities on seeded random instances") {
    const auto results = kuhn_suite::run(40, 1000, 1);
    for (const auto& o : results) {
        INFO("N = " << o.N << ", k1 = " << o.k1 << ", k2 = " << o.k2);
        CHECK(o.rk_ge_weights);
        CHECK(o.weights_ge_lower);
        CHECK(o.decomposition_ok);
        CHECK(o.b2_ok);
    }
}

TEST_CASE("q2 constants at the threshold") {
    const Q2Constants q = q2_condition_constants(kN0);
    CHECK(q.c1 == 0.01);
    CHECK(q.c2 == 0.07);
    CHECK(q.c1_required <= 0.01);
    CHECK(q.c2_required <= 0.07);
    CHECK(q.z > 3444);
    CHECK(q.y > 1e7);
    CHECK_THROWS_AS(q2_condition_constants(parse_u128("1e28")), DomainError);
}

TEST_CASE("theorem pipeline at the threshold") {
    const BoundBreakdown b = theorem_pipeline(kN0, SieveParams{});
    CHECK(b.r4_lower > 0);
    CHECK(b.ledger_ok());
    CHECK(b.conditions.all_ok());
    for (const char* name : {"8.8", "4.526", "2.909", "2.713", "1.405", "13.167", "12.28", "14.124", "1.216", "0.051"}) {
        const LedgerEntry& e = row(b, name);
        CHECK_MESSAGE(e.ok(), name);
        CHECK(e.enforced);
    }
    CHECK(row(b, "4.526").computed == doctest::Approx(4.5255).epsilon(1e-4));
    CHECK(row(b, "2.909").computed == doctest::Approx(2.9083).epsilon(1e-4));
    CHECK(row(b, "14.124").computed == doctest::Approx(14.1185).epsilon(1e-4));
    // 0.839 is reported, not enforced, and fails
    const LedgerEntry& c = row(b, "0.839");
    CHECK_FALSE(c.enforced);
    CHECK_FALSE(c.ok());
    CHECK(b.C_s == doctest::Approx(oracle::C_of(oracle::Dec50("3.3")).convert_to<double>()).epsilon(1e-14));
    CHECK(b.r4_lower == doctest::Approx(b.S_lower.value - b.upper.total / 2 - b.kuhn_remainder).epsilon(1e-12));
}

TEST_CASE("theorem pipeline preconditions") {
    CHECK_THROWS_AS(theorem_pipeline(parse_u128("1.98e28"), SieveParams{}), PreconditionError);
    SieveParams s2;
    s2.s = 2.0;
    CHECK_THROWS_AS(theorem_pipeline(kN0, s2), PreconditionError);
    SieveParams bad;
    bad.alpha = 0.3;
    CHECK_THROWS_AS(theorem_pipeline(kN0, bad), DomainError);
}

TEST_CASE("r4 lower bound grows along an N ladder") {
    double prev = -1e300;
    for (const char* n : {"1.98e28+1", "1e29", "1e30", "1e32"}) {
        const BoundBreakdown b = theorem_pipeline(parse_u128(n), SieveParams{});
        CHECK(b.r4_lower > 0);
        CHECK(b.r4_lower >= prev);
        prev = b.r4_lower;
    }
}

TEST_CASE("parameter scan") {
    ParamGrid single;
    const ParamScan one = scan_parameters(kN0, single, SieveParams{});
    REQUIRE(one.surface.size() == 1);
    CHECK(one.best_r4 == theorem_pipeline(kN0, SieveParams{}).r4_lower);

    ParamGrid grid{3.0, 4.0, 0.05, 0.01, 0.17, 0.01};
    const ParamScan scan = scan_parameters(kN0, grid, SieveParams{}, 1);
    CHECK(scan.surface.size() == 21 * 17);
    CHECK(scan.best_r4 >= one.best_r4);
    for (const auto& p : scan.surface) {
        if (p.alpha >= 0.125) CHECK_FALSE(p.feasible);
        if (p.feasible) CHECK(p.r4_lower <= scan.best_r4);
    }
    const ParamScan again = scan_parameters(kN0, grid, SieveParams{}, 4);
    CHECK(again.best_s == scan.best_s);
    CHECK(again.best_alpha == scan.best_alpha);
    CHECK(again.best_r4 == scan.best_r4);

    ParamGrid none{3.3, 3.3, 0.1, 0.2, 0.3, 0.05};
    CHECK_THROWS_AS(scan_parameters(kN0, none, SieveParams{}), DomainError);
}
