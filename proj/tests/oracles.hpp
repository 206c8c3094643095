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

// Brute-force reference implementations used only by the tests. None of them
// share code with the library.

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>

namespace oracle {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using Dec50 = boost::multiprecision::cpp_dec_float_50;

inline const Dec50& euler_gamma() {
    static const Dec50 g("0.57721566490153286060651209008240243104215933593992");
    return g;
}

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<u64> primes_below_or_equal(u64 n) {
    std::vector<u64> out;
    for (u64 k = 2; k <= n; ++k)
        if (is_prime(k)) out.push_back(k);
    return out;
}

inline unsigned omega(u128 a) {
    unsigned count = 0;
    for (u128 d = 2; d * d <= a; ++d)
        while (a % d == 0) {
            a /= d;
            ++count;
        }
    return count + (a > 1 ? 1 : 0);
}

inline bool is_squarefree(u64 n) {
    for (u64 d = 2; d * d <= n; ++d)
        if (n % (d * d) == 0) return false;
    return true;
}

inline bool has_factor_below(u128 a, u128 z_ceil) {
    for (u128 d = 2; d < z_ceil && d * d <= a; ++d)
        if (a % d == 0) return true;
    return a > 1 && a < z_ceil;
}

/// prod_{p <= x} p / (p - 1) as a running product of exact ratios.
inline Dec50 mertens_product(u64 x) {
    Dec50 prod = 1;
    for (u64 p = 2; p <= x; ++p)
        if (is_prime(p)) prod *= Dec50(p) / Dec50(p - 1);
    return prod;
}

inline Dec50 C_of(const Dec50& s) {
    using boost::multiprecision::exp;
    using boost::multiprecision::log;
    return (2 * exp(euler_gamma()) * log(s - 1) - Dec50("0.73") * exp(2 - s)) / s;
}

}  // namespace oracle
