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
#include <span>
#include <vector>

#include "sievekit/compensated.hpp"
#include "sievekit/int128.hpp"

namespace sievekit {

using u64 = std::uint64_t;

/// Odd-only bits per sieve segment (covers 2^21 integers).
inline constexpr u64 kSegmentBits = u64{1} << 20;

/// All primes up to `limit`, ascending.
class PrimeTable {
 public:
    PrimeTable() = default;
    PrimeTable(u64 limit, std::vector<u64> primes) : limit_(limit), primes_(std::move(primes)) {}

    u64 limit() const noexcept { return limit_; }
    std::span<const u64> primes() const noexcept { return primes_; }
    std::size_t size() const noexcept { return primes_.size(); }
    bool empty() const noexcept { return primes_.empty(); }
    u64 operator[](std::size_t i) const { return primes_[i]; }
    u64 back() const { return primes_.back(); }

    bool contains(u64 n) const;
    /// Number of tabled primes <= x (x may exceed limit; only tabled primes count).
    std::size_t count_le(u64 x) const;

 private:
    u64 limit_ = 0;
    std::vector<u64> primes_;
};

/// Segmented odd-only sieve of Eratosthenes. Throws DomainError for limit < 2.
PrimeTable primes_up_to(u64 limit);

/// Primes in [lo, hi), sieved with the primes of `base`, whose limit must be
/// at least sqrt(hi - 1). Appends to `out` in ascending order.
void primes_in_range(u64 lo, u64 hi, const PrimeTable& base, std::vector<u64>& out);

/// pi(limit) without materializing the table.
u64 count_primes(u64 limit);

/// Least prime strictly greater than x.
u64 next_prime_after(u64 x);

/// Number of prime factors counted with multiplicity. Trial division; throws
/// PreconditionError for a == 0.
unsigned big_omega(u128 a);

/// big_omega by trial division with the table's primes. Throws
/// PreconditionError if a cofactor is left that the table cannot resolve.
unsigned big_omega(u128 a, const PrimeTable& table);

struct PrimePower {
    u128 prime;
    unsigned exponent;
};

/// Trial-division factorization (ascending primes). a >= 1.
std::vector<PrimePower> factorize(u128 a);

/// Factorizations of an explicit list of integers, stored flat.
class FactorTable {
 public:
    FactorTable() = default;

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    u128 value(std::size_t i) const { return values_[i]; }
    std::span<const u128> values() const noexcept { return values_; }
    unsigned omega(std::size_t i) const { return omega_[i]; }
    std::span<const PrimePower> factors(std::size_t i) const {
        return std::span<const PrimePower>(factors_).subspan(offsets_[i], offsets_[i + 1] - offsets_[i]);
    }

    /// Appends one member with its ascending prime-power factorization.
    void push_back(u128 value, std::span<const PrimePower> factors);

    /// Factors each listed value by trial division.
    static FactorTable from_values(std::span<const u128> values);

 private:
    std::vector<u128> values_;
    std::vector<std::uint8_t> omega_;
    std::vector<std::uint32_t> offsets_{0};
    std::vector<PrimePower> factors_;
};

/// Factorizations of [first, first + count) via an interval smallest-factor
/// sieve with the table's primes <= sqrt(first + count - 1). Residual
/// cofactors above that bound are prime and count once. Throws
/// PreconditionError if the table is too small.
FactorTable factor_range(u128 first, u64 count, const PrimeTable& table);

/// Omega only, same sieve without recording factor lists.
std::vector<std::uint8_t> omega_range(u128 first, u64 count, const PrimeTable& table);

/// The integers strictly between N and N + 2 sqrt(N), factored.
struct FactoredInterval {
    u128 N = 0;
    u128 X = 0;  ///< largest member
    FactorTable members;

    std::size_t size() const noexcept { return members.size(); }
};

/// Member count of A(N): number of t >= 1 with t^2 < 4N.
u128 interval_size(u128 N);

FactoredInterval factor_interval(u128 N, const PrimeTable& table);

/// Exact count of squarefree n <= floor(x).
u64 squarefree_count(double x);

/// Sum of -log(1 - 1/p) over tabled primes p <= x, compensated.
CompensatedSum mertens_log_sum(double x, const PrimeTable& table);

/// I(x) = prod_{p <= x} (1 - 1/p)^{-1}. Requires table.limit() >= floor(x).
double mertens_product(double x, const PrimeTable& table);

/// Sum of 1/p over a <= p < b. Requires 2 <= a < b <= table.limit().
double prime_reciprocal_sum(double a, double b, const PrimeTable& table);

/// log I at every tabled prime, for O(log n) evaluation of I(x) and ratios
/// I(x)/I(w) without re-summing.
class MertensPrefix {
 public:
    explicit MertensPrefix(const PrimeTable& table);

    /// log I(x) for x <= table limit.
    double log_product(double x) const;
    double product(double x) const;

 private:
    u64 limit_;
    std::vector<u64> primes_;
    std::vector<CompensatedSum> prefix_;  // prefix_[i] = sum over the first i primes
};

}  // namespace sievekit
