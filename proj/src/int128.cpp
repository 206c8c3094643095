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

#include "sievekit/int128.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sievekit {

namespace {

constexpr u128 kMax = ~static_cast<u128>(0);

bool mul_overflows(u128 a, u128 b) { return a != 0 && b > kMax / a; }

u128 parse_term(std::string_view term) {
    if (term.empty()) throw std::invalid_argument("empty integer term");

    std::string_view mantissa = term;
    long exponent = 0;
    if (auto pos = term.find_first_of("eE"); pos != std::string_view::npos) {
        mantissa = term.substr(0, pos);
        std::string_view exp_text = term.substr(pos + 1);
        bool negative = false;
        if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
            negative = exp_text.front() == '-';
            exp_text.remove_prefix(1);
        }
        if (exp_text.empty() || exp_text.size() > 4) throw std::invalid_argument("bad exponent in '" + std::string(term) + "'");
        for (char c : exp_text) {
            if (c < '0' || c > '9') throw std::invalid_argument("bad exponent in '" + std::string(term) + "'");
            exponent = exponent * 10 + (c - '0');
        }
        if (negative) exponent = -exponent;
    }

    std::string digits;
    bool seen_point = false;
    for (char c : mantissa) {
        if (c == '.') {
            if (seen_point) throw std::invalid_argument("two decimal points in '" + std::string(term) + "'");
            seen_point = true;
        } else if (c >= '0' && c <= '9') {
            digits.push_back(c);
            if (seen_point) --exponent;
        } else {
            throw std::invalid_argument("unexpected character in '" + std::string(term) + "'");
        }
    }
    if (digits.empty()) throw std::invalid_argument("no digits in '" + std::string(term) + "'");

    // Drop trailing zeros absorbed by a negative exponent; anything left over is fractional.
    while (exponent < 0 && !digits.empty() && digits.back() == '0') {
        digits.pop_back();
        ++exponent;
    }
    if (exponent < 0) {
        if (std::all_of(digits.begin(), digits.end(), [](char c) { return c == '0'; })) return 0;
        throw std::invalid_argument("'" + std::string(term) + "' is not an integer");
    }

    u128 value = 0;
    for (char c : digits) {
        if (mul_overflows(value, 10)) throw std::invalid_argument("integer overflow in '" + std::string(term) + "'");
        value = value * 10;
        u128 d = static_cast<u128>(c - '0');
        if (value > kMax - d) throw std::invalid_argument("integer overflow in '" + std::string(term) + "'");
        value += d;
    }
    for (long i = 0; i < exponent; ++i) {
        if (value == 0) break;
        if (mul_overflows(value, 10)) throw std::invalid_argument("integer overflow in '" + std::string(term) + "'");
        value *= 10;
    }
    return value;
}

}  // namespace

std::string to_string(u128 value) {
    if (value == 0) return "0";
    std::string out;
    while (value != 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
        value /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

u128 parse_u128(std::string_view text) {
    // Split on '+' that is not the sign of an exponent.
    u128 total = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        bool split = i == text.size();
        if (!split && text[i] == '+') split = !(i > 0 && (text[i - 1] == 'e' || text[i - 1] == 'E'));
        if (!split) continue;
        u128 term = parse_term(text.substr(start, i - start));
        if (total > kMax - term) throw std::invalid_argument("integer overflow in '" + std::string(text) + "'");
        total += term;
        start = i + 1;
    }
    return total;
}

u128 isqrt(u128 n) {
    if (n < 2) return n;
    auto r = static_cast<u128>(std::sqrt(static_cast<long double>(n)));
    // long double has a 64-bit mantissa; correct the estimate in both directions.
    while (r > 0 && (mul_overflows(r, r) || r * r > n)) --r;
    while (!mul_overflows(r + 1, r + 1) && (r + 1) * (r + 1) <= n) ++r;
    return r;
}

u128 saturating_pow(u128 t, unsigned k) {
    u128 result = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (mul_overflows(result, t)) return kMax;
        result *= t;
    }
    return result;
}

u128 iroot_ceil(u128 n, unsigned k) {
    if (k == 0) throw std::invalid_argument("iroot_ceil: k must be positive");
    if (n <= 1) return n;
    if (k == 1) return n;
    auto t = static_cast<u128>(std::pow(static_cast<long double>(n), 1.0L / k));
    while (t > 1 && saturating_pow(t - 1, k) >= n) --t;
    while (saturating_pow(t, k) < n) ++t;
    return t;
}

}  // namespace sievekit
