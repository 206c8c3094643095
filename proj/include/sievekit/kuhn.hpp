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

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <boost/rational.hpp>

#include "sievekit/linear_sieve.hpp"
#include "sievekit/primes.hpp"

namespace sievekit {

using Rational = boost::rational<std::int64_t>;

/// Membership test for the sifting prime set; an empty function means all primes.
using PrimeSet = std::function<bool(u128)>;

/// A finite set A with sifting level z and middle-range top y.
///
/// Real thresholds are turned into integer ones once: a prime p sifts when
/// p < z_ceil, and q lies in [z, y) when z_ceil <= q < y_ceil.
class SiftingInstance {
 public:
    /// A(N) with z = X^{1/k1}, y = X^{1/k2}; integral k use exact integer roots.
    static SiftingInstance from_interval(u128 N, double k1, double k2, const PrimeTable& table,
                                         PrimeSet primes = {});
    static SiftingInstance from_values(std::span<const u128> values, double z, double y, PrimeSet primes = {});
    static SiftingInstance from_factors(FactorTable members, double z, double y, PrimeSet primes = {});

    const FactorTable& members() const noexcept { return members_; }
    double z() const noexcept { return z_; }
    double y() const noexcept { return y_; }
    u128 z_ceil() const noexcept { return z_ceil_; }
    u128 y_ceil() const noexcept { return y_ceil_; }
    u128 max() const noexcept { return max_; }
    /// log X / log z.
    double k1() const noexcept { return k1_; }
    bool in_P(u128 p) const { return !primes_ || primes_(p); }

 private:
    SiftingInstance(FactorTable members, double z, double y, PrimeSet primes);

    FactorTable members_;
    PrimeSet primes_;
    double z_ = 0;
    double y_ = 0;
    u128 z_ceil_ = 0;
    u128 y_ceil_ = 0;
    u128 max_ = 0;
    double k1_ = 0;
};

/// w_b(a) = 1 - (1/(b+1)) sum_{z <= q < y, q^l || a} l, for a coprime to P(z).
/// Throws PreconditionError if a has a sifting prime factor below z.
Rational weight(std::span<const PrimePower> factors, u128 z_ceil, u128 y_ceil, int b = 1,
                const PrimeSet& primes = {});
Rational weight(u128 a, double z, double y, int b = 1);

/// S(A, P, z): members with no sifting prime factor below z.
std::uint64_t exact_S(const SiftingInstance& inst);

/// sum_{z <= q < y, q in P} S(A_q, P, z).
std::uint64_t exact_sum_S_q(const SiftingInstance& inst);

/// sum_{z <= q < y, q in P} |A_{q^2}| over all of A.
std::uint64_t exact_sum_A_q2(const SiftingInstance& inst);

inline constexpr std::size_t kWitnessCap = 10000;

struct WitnessedCount {
    unsigned k = 0;
    std::uint64_t count = 0;
    std::vector<u128> witnesses;  ///< first kWitnessCap members with Omega <= k
    bool truncated() const { return count > witnesses.size(); }
};

/// r_k(A) = |{a in A : Omega(a) <= k}|.
WitnessedCount exact_rk(const FactorTable& A, unsigned k);

/// sum of w_b(a) over members coprime to P(z).
Rational weight_sum(const SiftingInstance& inst, int b = 1);

/// Splits the total middle-range multiplicity over survivors into the
/// distinct-prime count (= sum S(A_q)) and the excess of higher powers.
struct WeightDecomposition {
    std::uint64_t total_multiplicity = 0;
    std::uint64_t sum_S_q = 0;
    std::uint64_t extra_multiplicity = 0;
};

WeightDecomposition decompose_weights(const SiftingInstance& inst);

struct KuhnMode {
    enum Kind { exact_q2, bounded_q2 } kind = exact_q2;
    double c1 = 0;
    double c2 = 0;

    static KuhnMode exact() { return {}; }
    static KuhnMode bounded(double c1, double c2) { return {bounded_q2, c1, c2}; }
};

struct KuhnLower {
    double value = 0;
    std::uint64_t S = 0;
    std::uint64_t sum_S_q = 0;
    std::uint64_t sum_A_q2 = 0;
    double k1 = 0;
    double square_term = 0;  ///< what is subtracted for prime squares
};

/// S - (1/2) sum S(A_q) - square_term, where square_term is (k1/2) sum |A_{q^2}|
/// in exact mode and k1 c1 |A| log|A| / (2z) + c2 y / (2 log z) in bounded mode.
KuhnLower kuhn_lower(const SiftingInstance& inst, KuhnMode mode);

struct Q2Constants {
    double c1 = 0.01;
    double c2 = 0.07;
    double c1_required = 0;  ///< 2.22 / (log|A| log z)
    double c2_required = 0;  ///< 1.1 / log(10^7)
    double z = 0;
    double y = 0;
};

/// Re-derives the square-divisor constants (c1, c2) = (0.01, 0.07) for
/// z = X^{1/8}, y = X^{1/4}. Throws DomainError for N <= 1.98e28 and
/// LedgerViolation if any step of the derivation fails.
Q2Constants q2_condition_constants(u128 N);

/// Evaluates the full r_4 chain for A(N) without enforcing the ledger.
/// Throws PreconditionError naming the failing side condition.
BoundBreakdown evaluate_bounds(u128 N, const SieveParams& params);

/// evaluate_bounds for N > 1.98e28, then throws LedgerViolation if any
/// enforced ledger row fails its direction.
BoundBreakdown theorem_pipeline(u128 N, const SieveParams& params);

struct ParamGrid {
    double s_min = 3.3, s_max = 3.3, s_step = 0.05;
    double alpha_min = 0.07, alpha_max = 0.07, alpha_step = 0.01;

    std::vector<double> s_values() const;
    std::vector<double> alpha_values() const;
};

struct SurfacePoint {
    double s;
    double alpha;
    bool feasible;
    double r4_lower;  ///< NaN when infeasible
};

struct ParamScan {
    double best_s = 0;
    double best_alpha = 0;
    double best_r4 = 0;
    std::vector<SurfacePoint> surface;
};

/// r4_lower over the grid, visited in lexicographic (s, alpha) order; a later
/// point replaces the best only when strictly larger. Points outside
/// s in [3, 4] or the alpha range are marked infeasible. Throws DomainError
/// if no point is feasible.
ParamScan scan_parameters(u128 N, const ParamGrid& grid, const SieveParams& base, unsigned workers = 1);

}  // namespace sievekit
