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

// Seeded random Kuhn instances A(N) with N <= 10^10, shared by the unit tests
// and the acceptance binary.

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sievekit/kuhn.hpp"
#include "sievekit/parallel.hpp"
#include "sievekit/primes.hpp"

namespace kuhn_suite {

using namespace sievekit;

struct Outcome {
    std::uint64_t N = 0;
    int k1 = 0;
    int k2 = 0;
    std::size_t size = 0;
    std::uint64_t rk = 0;
    Rational weight_sum;
    KuhnLower lower;
    bool rk_ge_weights = false;
    bool weights_ge_lower = false;
    bool decomposition_ok = false;
    bool b2_ok = false;  ///< positive w_2 implies Omega <= k2 + 1

    bool ok() const { return rk_ge_weights && weights_ge_lower && decomposition_ok && b2_ok; }
};

inline constexpr std::uint64_t kMaxN = 10'000'000'000ULL;

inline const PrimeTable& table() {
    static const PrimeTable t = primes_up_to(100'010);
    return t;
}

inline Outcome run_one(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> logN(std::log(1e4), std::log(static_cast<double>(kMaxN)));
    std::uniform_int_distribution<int> pick_k1(5, 8), pick_k2(2, 4);
    Outcome o;
    o.N = static_cast<std::uint64_t>(std::exp(logN(rng)));
    o.k1 = pick_k1(rng);
    o.k2 = pick_k2(rng);
    const SiftingInstance inst = SiftingInstance::from_interval(o.N, o.k1, o.k2, table());
    const auto& A = inst.members();
    o.size = A.size();
    o.rk = exact_rk(A, o.k2).count;
    o.weight_sum = weight_sum(inst);
    o.lower = kuhn_lower(inst, KuhnMode::exact());
    o.rk_ge_weights = Rational(static_cast<std::int64_t>(o.rk)) >= o.weight_sum;
    o.weights_ge_lower = boost::rational_cast<double>(o.weight_sum) >= o.lower.value;

    const WeightDecomposition d = decompose_weights(inst);
    o.decomposition_ok = d.sum_S_q == exact_sum_S_q(inst) && d.total_multiplicity == d.sum_S_q + d.extra_multiplicity &&
                         Rational(static_cast<std::int64_t>(exact_S(inst))) -
                                 Rational(static_cast<std::int64_t>(d.total_multiplicity), 2) ==
                             o.weight_sum;

    o.b2_ok = true;
    for (std::size_t i = 0; i < A.size(); ++i) {
        const auto f = A.factors(i);
        if (!f.empty() && f.front().prime < inst.z_ceil()) continue;
        if (weight(f, inst.z_ceil(), inst.y_ceil(), 2) > 0 && A.omega(i) > static_cast<unsigned>(o.k2) + 1)
            o.b2_ok = false;
        if (weight(f, inst.z_ceil(), inst.y_ceil(), 1) > 0 && A.omega(i) > static_cast<unsigned>(o.k2))
            o.b2_ok = false;
    }
    return o;
}

/// Instance i uses seed base_seed + i; results are in instance order.
inline std::vector<Outcome> run(std::size_t count, std::uint64_t base_seed, unsigned workers) {
    table();
    std::vector<Outcome> out(count);
    parallel_for(count, workers, [&](std::size_t i) { out[i] = run_one(base_seed + i); });
    return out;
}

}  // namespace kuhn_suite
