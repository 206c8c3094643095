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

#include "sievekit/primes.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "sievekit/errors.hpp"

namespace sievekit {

namespace {

// Plain sieve for base primes; limits here are at most a few hundred thousand.
PrimeTable small_sieve(u64 limit) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<u64> primes;
    for (u64 i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return PrimeTable(limit, std::move(primes));
}

// Walks [lo, hi) in odd-only segments of kSegmentBits bits and hands each
// sieved segment to visit(seg_lo, words, nbits); bit i stands for seg_lo + 2i.
template <class Visit>
void sieve_segments(u64 lo, u64 hi, const PrimeTable& base, Visit&& visit) {
    if (hi <= lo) return;
    if (hi > 2 && base.limit() < static_cast<u64>(isqrt(hi - 1))) {
        throw PreconditionError("base prime table to " + std::to_string(base.limit()) +
                                " cannot sieve up to " + std::to_string(hi - 1));
    }
    const u64 start = std::max<u64>(lo, 3) | 1;
    std::vector<std::uint64_t> words(kSegmentBits / 64);
    const auto primes = base.primes();

    for (u64 seg_lo = start; seg_lo < hi; seg_lo += 2 * kSegmentBits) {
        const u64 seg_hi = std::min(hi, seg_lo + 2 * kSegmentBits);
        const u64 nbits = (seg_hi - seg_lo + 1) / 2;
        const u64 nwords = (nbits + 63) / 64;
        std::fill(words.begin(), words.begin() + nwords, ~std::uint64_t{0});
        if (nbits % 64 != 0) words[nwords - 1] = (std::uint64_t{1} << (nbits % 64)) - 1;

        for (u64 p : primes) {
            if (p == 2) continue;
            if (p * p >= seg_hi) break;
            u64 m = std::max(p * p, ((seg_lo + p - 1) / p) * p);
            if (m % 2 == 0) m += p;
            for (u64 i = (m - seg_lo) / 2; i < nbits; i += p) words[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
        }
        visit(seg_lo, std::span<const std::uint64_t>(words.data(), nwords), nbits);
    }
}

template <class Int>
struct Hit {
    std::uint32_t index;
    unsigned exponent;
    Int prime;
};

// Interval smallest-factor sieve over [first, first + count).
template <class Int>
void sieve_interval(Int first, u64 count, const PrimeTable& table, std::vector<std::uint8_t>& omega,
                    std::vector<Hit<Int>>* hits) {
    const Int last = first + static_cast<Int>(count - 1);
    const u64 root = static_cast<u64>(isqrt(last));
    if (table.limit() < root) {
        throw PreconditionError("prime table to " + std::to_string(table.limit()) + " is too small to factor up to " +
                                to_string(last) + " (needs " + std::to_string(root) + ")");
    }
    std::vector<Int> residual(count);
    for (u64 i = 0; i < count; ++i) residual[i] = first + static_cast<Int>(i);
    omega.assign(count, 0);

    for (u64 p : table.primes()) {
        if (p > root) break;
        const u64 r = static_cast<u64>(first % p);
        for (u64 i = r == 0 ? 0 : p - r; i < count; i += p) {
            Int v = residual[i];
            unsigned e = 0;
            do {
                v /= p;
                ++e;
            } while (v % p == 0);
            residual[i] = v;
            omega[i] = static_cast<std::uint8_t>(omega[i] + e);
            if (hits) hits->push_back({static_cast<std::uint32_t>(i), e, static_cast<Int>(p)});
        }
    }
    for (u64 i = 0; i < count; ++i) {
        if (residual[i] > 1) {
            ++omega[i];
            if (hits) hits->push_back({static_cast<std::uint32_t>(i), 1, residual[i]});
        }
    }
}

template <class Int>
FactorTable assemble(Int first, u64 count, const std::vector<Hit<Int>>& hits) {
    std::vector<std::uint32_t> per(count + 1, 0);
    for (const auto& h : hits) ++per[h.index + 1];
    for (u64 i = 0; i < count; ++i) per[i + 1] += per[i];
    std::vector<PrimePower> flat(hits.size());
    std::vector<std::uint32_t> fill(per.begin(), per.end() - 1);
    for (const auto& h : hits) flat[fill[h.index]++] = PrimePower{static_cast<u128>(h.prime), h.exponent};

    FactorTable out;
    for (u64 i = 0; i < count; ++i) {
        out.push_back(static_cast<u128>(first) + i,
                      std::span<const PrimePower>(flat).subspan(per[i], per[i + 1] - per[i]));
    }
    return out;
}

void check_range(u128 first, u64 count) {
    if (count == 0) throw PreconditionError("empty range");
    if (first == 0) throw PreconditionError("ranges must start at 1 or above");
    if (count > 0xffffffffULL) throw PreconditionError("range too long");
}

}  // namespace

bool PrimeTable::contains(u64 n) const { return std::binary_search(primes_.begin(), primes_.end(), n); }

std::size_t PrimeTable::count_le(u64 x) const {
    return static_cast<std::size_t>(std::upper_bound(primes_.begin(), primes_.end(), x) - primes_.begin());
}

PrimeTable primes_up_to(u64 limit) {
    if (limit < 2) throw DomainError("primes_up_to: limit must be at least 2");
    const PrimeTable base = small_sieve(static_cast<u64>(isqrt(limit)));
    std::vector<u64> primes;
    if (limit > 100) primes.reserve(static_cast<std::size_t>(1.3 * limit / std::log(static_cast<double>(limit))));
    primes_in_range(2, limit + 1, base, primes);
    return PrimeTable(limit, std::move(primes));
}

void primes_in_range(u64 lo, u64 hi, const PrimeTable& base, std::vector<u64>& out) {
    if (lo <= 2 && 2 < hi) out.push_back(2);
    sieve_segments(lo, hi, base, [&](u64 seg_lo, std::span<const std::uint64_t> words, u64) {
        for (std::size_t w = 0; w < words.size(); ++w) {
            std::uint64_t bits = words[w];
            while (bits) {
                const int b = std::countr_zero(bits);
                out.push_back(seg_lo + 2 * (64 * w + static_cast<u64>(b)));
                bits &= bits - 1;
            }
        }
    });
}

u64 count_primes(u64 limit) {
    if (limit < 2) return 0;
    const PrimeTable base = small_sieve(static_cast<u64>(isqrt(limit)));
    u64 total = 1;  // the prime 2
    sieve_segments(3, limit + 1, base, [&](u64, std::span<const std::uint64_t> words, u64) {
        for (auto w : words) total += static_cast<u64>(std::popcount(w));
    });
    return total;
}

u64 next_prime_after(u64 x) {
    for (u64 width = 1024;; width *= 2) {
        const u64 lo = x + 1;
        const u64 hi = lo + width;
        const PrimeTable base = small_sieve(static_cast<u64>(isqrt(hi - 1)));
        std::vector<u64> found;
        primes_in_range(lo, hi, base, found);
        if (!found.empty()) return found.front();
    }
}

std::vector<PrimePower> factorize(u128 a) {
    if (a == 0) throw PreconditionError("cannot factor 0");
    std::vector<PrimePower> out;
    auto run = [&out](auto n) {
        using Int = decltype(n);
        auto take = [&](Int p) {
            unsigned e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            if (e) out.push_back({static_cast<u128>(p), e});
        };
        take(2);
        take(3);
        for (Int p = 5; p * p <= n; p += 6) {
            take(p);
            take(p + 2);
        }
        if (n > 1) out.push_back({static_cast<u128>(n), 1});
    };
    // The u64 path keeps p * p from overflowing for n < 2^62.
    if (a < (u128{1} << 62)) {
        run(static_cast<u64>(a));
    } else {
        run(a);
    }
    return out;
}

unsigned big_omega(u128 a) {
    if (a == 0) throw PreconditionError("big_omega: undefined for 0");
    unsigned total = 0;
    for (const auto& pp : factorize(a)) total += pp.exponent;
    return total;
}

unsigned big_omega(u128 a, const PrimeTable& table) {
    if (a == 0) throw PreconditionError("big_omega: undefined for 0");
    unsigned total = 0;
    auto run = [&](auto n) {
        using Int = decltype(n);
        for (u64 p : table.primes()) {
            if (static_cast<Int>(p) * p > n) break;
            while (n % p == 0) {
                n /= p;
                ++total;
            }
        }
        if (n > 1) {
            const u128 lim = table.limit();
            if (lim * lim < static_cast<u128>(n)) {
                throw PreconditionError("big_omega: prime table to " + std::to_string(table.limit()) +
                                        " cannot resolve cofactor " + to_string(static_cast<u128>(n)));
            }
            ++total;
        }
    };
    if (fits_u64(a) && a < (u128{1} << 63)) {
        run(static_cast<u64>(a));
    } else {
        run(a);
    }
    return total;
}

void FactorTable::push_back(u128 value, std::span<const PrimePower> factors) {
    unsigned om = 0;
    for (const auto& f : factors) om += f.exponent;
    values_.push_back(value);
    omega_.push_back(static_cast<std::uint8_t>(om));
    factors_.insert(factors_.end(), factors.begin(), factors.end());
    offsets_.push_back(static_cast<std::uint32_t>(factors_.size()));
}

FactorTable FactorTable::from_values(std::span<const u128> values) {
    FactorTable out;
    for (u128 v : values) {
        const auto f = factorize(v);
        out.push_back(v, f);
    }
    return out;
}

FactorTable factor_range(u128 first, u64 count, const PrimeTable& table) {
    check_range(first, count);
    std::vector<std::uint8_t> omega;
    if (fits_u64(first + count - 1)) {
        std::vector<Hit<u64>> hits;
        hits.reserve(count * 4);
        sieve_interval<u64>(static_cast<u64>(first), count, table, omega, &hits);
        return assemble<u64>(static_cast<u64>(first), count, hits);
    }
    std::vector<Hit<u128>> hits;
    hits.reserve(count * 4);
    sieve_interval<u128>(first, count, table, omega, &hits);
    return assemble<u128>(first, count, hits);
}

std::vector<std::uint8_t> omega_range(u128 first, u64 count, const PrimeTable& table) {
    check_range(first, count);
    std::vector<std::uint8_t> omega;
    if (fits_u64(first + count - 1)) {
        sieve_interval<u64>(static_cast<u64>(first), count, table, omega, nullptr);
    } else {
        sieve_interval<u128>(first, count, table, omega, nullptr);
    }
    return omega;
}

u128 interval_size(u128 N) {
    if (N == 0) return 0;
    if (N > (~static_cast<u128>(0)) / 4) throw PreconditionError("N too large for 128-bit interval arithmetic");
    return isqrt(4 * N - 1);
}

FactoredInterval factor_interval(u128 N, const PrimeTable& table) {
    if (N == 0) throw PreconditionError("factor_interval: N must be positive");
    const u128 m = interval_size(N);
    if (m > 0xffffffffULL) throw PreconditionError("factor_interval: interval too long to enumerate");
    FactoredInterval out;
    out.N = N;
    out.X = N + m;
    out.members = factor_range(N + 1, static_cast<u64>(m), table);
    return out;
}

u64 squarefree_count(double x) {
    if (!(x >= 1.0)) return 0;
    const u64 n = static_cast<u64>(std::floor(x));
    const u64 r = static_cast<u64>(isqrt(n));

    // Linear sieve for the Moebius function up to sqrt(n).
    std::vector<signed char> mu(r + 1, 1);
    std::vector<u64> primes;
    std::vector<bool> composite(r + 1, false);
    for (u64 i = 2; i <= r; ++i) {
        if (!composite[i]) {
            primes.push_back(i);
            mu[i] = -1;
        }
        for (u64 p : primes) {
            if (i * p > r) break;
            composite[i * p] = true;
            if (i % p == 0) {
                mu[i * p] = 0;
                break;
            }
            mu[i * p] = static_cast<signed char>(-mu[i]);
        }
    }
    std::int64_t total = 0;
    for (u64 d = 1; d <= r; ++d) {
        if (mu[d] != 0) total += mu[d] * static_cast<std::int64_t>(n / (d * d));
    }
    return static_cast<u64>(total);
}

CompensatedSum mertens_log_sum(double x, const PrimeTable& table) {
    CompensatedSum sum;
    if (x < 2.0) return sum;
    const double fx = std::floor(x);
    if (fx > static_cast<double>(table.limit())) {
        throw PreconditionError("mertens_product: table limit " + std::to_string(table.limit()) + " below x");
    }
    const auto upto = static_cast<u64>(fx);
    for (u64 p : table.primes()) {
        if (p > upto) break;
        sum += -std::log1p(-1.0 / static_cast<double>(p));
    }
    return sum;
}

double mertens_product(double x, const PrimeTable& table) {
    const CompensatedSum s = mertens_log_sum(x, table);
    return std::exp(s.hi()) * std::exp(s.lo());
}

double prime_reciprocal_sum(double a, double b, const PrimeTable& table) {
    if (!(a >= 2.0) || !(a < b) || b > static_cast<double>(table.limit())) {
        throw PreconditionError("prime_reciprocal_sum: need 2 <= a < b <= table limit");
    }
    const auto lo = static_cast<u64>(std::ceil(a));
    const auto hi = static_cast<u64>(std::ceil(b));  // p < b  <=>  p < ceil(b)
    const auto primes = table.primes();
    CompensatedSum sum;
    for (auto it = std::lower_bound(primes.begin(), primes.end(), lo); it != primes.end() && *it < hi; ++it) {
        sum += 1.0 / static_cast<double>(*it);
    }
    return sum.value();
}

MertensPrefix::MertensPrefix(const PrimeTable& table)
    : limit_(table.limit()), primes_(table.primes().begin(), table.primes().end()) {
    prefix_.reserve(primes_.size() + 1);
    prefix_.emplace_back();
    CompensatedSum running;
    for (u64 p : primes_) {
        running += -std::log1p(-1.0 / static_cast<double>(p));
        prefix_.push_back(running);
    }
}

double MertensPrefix::log_product(double x) const {
    if (x < 2.0) return 0.0;
    const double fx = std::floor(x);
    if (fx > static_cast<double>(limit_)) throw PreconditionError("MertensPrefix: x beyond table limit");
    const auto upto = static_cast<u64>(fx);
    const auto idx = std::upper_bound(primes_.begin(), primes_.end(), upto) - primes_.begin();
    return prefix_[static_cast<std::size_t>(idx)].value();
}

double MertensPrefix::product(double x) const {
    if (x < 2.0) return 1.0;
    const auto idx =
        std::upper_bound(primes_.begin(), primes_.end(), static_cast<u64>(std::floor(x))) - primes_.begin();
    if (std::floor(x) > static_cast<double>(limit_)) throw PreconditionError("MertensPrefix: x beyond table limit");
    const CompensatedSum& s = prefix_[static_cast<std::size_t>(idx)];
    return std::exp(s.hi()) * std::exp(s.lo());
}

}  // namespace sievekit
