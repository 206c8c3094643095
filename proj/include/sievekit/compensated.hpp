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

namespace sievekit {

/// Double-double accumulator: (hi, lo) with hi = fl(hi + lo). Keeps roughly
/// 106 bits of the running sum, which is what the long Mertens scans need
/// across ~2e8 terms.
class CompensatedSum {
 public:
    constexpr CompensatedSum() noexcept = default;
    constexpr explicit CompensatedSum(double hi, double lo = 0.0) noexcept { renormalize(hi, lo); }

    constexpr CompensatedSum& operator+=(double x) noexcept {
        double s = hi_ + x;
        double bb = s - hi_;
        double err = (hi_ - (s - bb)) + (x - bb);
        renormalize(s, err + lo_);
        return *this;
    }

    constexpr CompensatedSum& operator+=(const CompensatedSum& other) noexcept {
        double s = hi_ + other.hi_;
        double bb = s - hi_;
        double err = (hi_ - (s - bb)) + (other.hi_ - bb);
        renormalize(s, err + (lo_ + other.lo_));
        return *this;
    }

    friend constexpr CompensatedSum operator+(CompensatedSum a, const CompensatedSum& b) noexcept {
        a += b;
        return a;
    }

    constexpr double value() const noexcept { return hi_ + lo_; }
    constexpr double hi() const noexcept { return hi_; }
    constexpr double lo() const noexcept { return lo_; }

    constexpr bool operator==(const CompensatedSum&) const noexcept = default;

 private:
    constexpr void renormalize(double a, double b) noexcept {
        hi_ = a + b;
        lo_ = b - (hi_ - a);
    }

    double hi_ = 0.0;
    double lo_ = 0.0;
};

}  // namespace sievekit
