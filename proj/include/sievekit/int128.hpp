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
#include <string>
#include <string_view>

namespace sievekit {

// Interval endpoints reach N > 1.98e28, which exceeds 64 bits.
using u128 = unsigned __int128;

std::string to_string(u128 value);

/// Parses an exact non-negative integer. Accepts plain digits, scientific
/// forms whose value is integral ("1.98e28"), and '+'-joined sums of those
/// ("1.98e28+1"). Throws std::invalid_argument on anything else, including
/// overflow and fractional values.
u128 parse_u128(std::string_view text);

u128 isqrt(u128 n);

/// Smallest t with t^k >= n (k >= 1).
u128 iroot_ceil(u128 n, unsigned k);

/// t^k, saturating at the u128 maximum.
u128 saturating_pow(u128 t, unsigned k);

inline long double to_long_double(u128 v) { return static_cast<long double>(v); }
inline double to_double(u128 v) { return static_cast<double>(v); }

inline bool fits_u64(u128 v) { return (v >> 64) == 0; }

}  // namespace sievekit
