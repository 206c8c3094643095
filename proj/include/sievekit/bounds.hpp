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

#include <optional>

namespace sievekit {

/// Euler-Mascheroni constant to 30 significant digits.
inline constexpr double kEulerGamma = 0.577215664901532860606512090082;
inline constexpr const char* kEulerGammaDigits = "0.57721566490153286060651209008240243104215933593992359880576723";

/// e^gamma and e^-gamma.
double exp_gamma();
double exp_neg_gamma();

/// Error weight of the linear sieve: e^-2 on [1,2], e^-s on [2,3], 3 e^-s / s beyond.
double h_of(double s);

/// Upper linear-sieve function, closed form for 1 <= s <= 3.
double F_of(double s);

/// Lower linear-sieve function, closed form for 2 <= s <= 4.
double f_of(double s);

/// (2 e^gamma log(s-1) - 0.73 e^{2-s}) / s on [3, 4]; the lower-bound factor
/// used once f(s) - eps C2 e^2 h(s) is made numeric.
double C_of(double s);

/// Rosser-Schoenfeld band for V(z) = prod_{p<z} (1 - 1/p).
struct VBand {
    std::optional<double> lower;  ///< only asserted for z >= 285
    double upper;
};

VBand V_band(double z);

enum class MertensRegime { computational, asymptotic, both };

/// Band for I(x) = prod_{p<=x} (1 - 1/p)^{-1}.
struct MertensBand {
    double x;
    double lower;
    double upper;
    MertensRegime regime;
    bool strict;  ///< the computational band is strict on both sides
};

inline constexpr double kMertensComputedLimit = 4e9;
inline constexpr double kMertensAsymptoticLogStart = 22.0;

/// Throws DomainError when x < 2 (no regime applies). Overlapping regimes
/// return the intersection.
MertensBand mertens_band(double x);

/// The computational-regime formula evaluated with no range check. Exists so
/// callers can demonstrate where the band stops holding (it fails at x = 1.9).
MertensBand mertens_band_unchecked(double x);

/// 1.1 y / log y, valid for y >= 10^7.
double pi_upper(double y);

}  // namespace sievekit
