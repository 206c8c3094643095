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

#include "sievekit/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sievekit/errors.hpp"

namespace sievekit {

namespace {

std::string fmt(double v) { return std::to_string(v); }

}  // namespace

double exp_gamma() { return std::exp(kEulerGamma); }
double exp_neg_gamma() { return std::exp(-kEulerGamma); }

// Breakpoints resolve to the left branch; the branches agree there.
double h_of(double s) {
    if (!(s >= 1.0)) throw DomainError("h(s) requires s >= 1, got " + fmt(s));
    if (s <= 2.0) return std::exp(-2.0);
    if (s <= 3.0) return std::exp(-s);
    return 3.0 / s * std::exp(-s);
}

double F_of(double s) {
    if (!(s >= 1.0 && s <= 3.0)) throw DomainError("F(s) closed form requires 1 <= s <= 3, got " + fmt(s));
    return 2.0 * exp_gamma() / s;
}

double f_of(double s) {
    if (!(s >= 2.0 && s <= 4.0)) throw DomainError("f(s) closed form requires 2 <= s <= 4, got " + fmt(s));
    return 2.0 * exp_gamma() * std::log(s - 1.0) / s;
}

double C_of(double s) {
    if (!(s >= 3.0 && s <= 4.0)) throw DomainError("C(s) requires 3 <= s <= 4, got " + fmt(s));
    return (2.0 * exp_gamma() * std::log(s - 1.0) - 0.73 * std::exp(2.0 - s)) / s;
}

VBand V_band(double z) {
    if (!(z > 1.0)) throw DomainError("V_band requires z > 1");
    const double lz = std::log(z);
    const double main = exp_neg_gamma() / lz;
    const double rel = 1.0 / (2.0 * lz * lz);
    VBand band{std::nullopt, main * (1.0 + rel)};
    if (z >= 285.0) band.lower = main * (1.0 - rel);
    return band;
}

MertensBand mertens_band_unchecked(double x) {
    const double eg = exp_gamma();
    return MertensBand{x, eg * std::log(x), eg * std::log(x) + 2.0 * eg / std::sqrt(x), MertensRegime::computational,
                       true};
}

MertensBand mertens_band(double x) {
    if (!(x >= 2.0)) throw DomainError("mertens_band: no proved regime below x = 2 (got " + fmt(x) + ")");
    const bool computational = x <= kMertensComputedLimit;
    const double lx = std::log(x);
    const bool asymptotic = lx >= kMertensAsymptoticLogStart;

    MertensBand out{};
    if (computational) out = mertens_band_unchecked(x);
    if (asymptotic) {
        const double main = exp_gamma() * lx;
        const double t = 0.841 / (lx * lx * lx);
        const double lo = main / (1.0 + t);
        const double hi = main / (1.0 - t);
        if (computational) {
            out.lower = std::max(out.lower, lo);
            out.upper = std::min(out.upper, hi);
            out.regime = MertensRegime::both;
        } else {
            out = MertensBand{x, lo, hi, MertensRegime::asymptotic, false};
        }
    }
    out.x = x;
    return out;
}

double pi_upper(double y) {
    if (!(y >= 1e7)) throw DomainError("pi_upper requires y >= 10^7, got " + fmt(y));
    return 1.1 * y / std::log(y);
}

}  // namespace sievekit
