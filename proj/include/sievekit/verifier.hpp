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
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sievekit/int128.hpp"

namespace sievekit {

struct Counterexample {
    std::vector<u128> at;
    double value = 0;
    std::string detail;
};

/// A comparison that fell within the near-boundary tolerance and was
/// re-decided in 50-digit arithmetic.
struct NearBoundary {
    std::vector<u128> at;
    double relative_margin = 0;
    bool holds = false;  ///< verdict of the high-precision re-evaluation
    std::string detail;
};

struct ScanReport {
    std::string scan_id;
    u128 range_lo = 0;
    u128 range_hi = 0;
    double max_value = 0;
    std::vector<u128> argmax;  ///< first lexicographic maximizer
    std::vector<Counterexample> counterexamples;
    std::uint64_t checked_count = 0;
    std::vector<NearBoundary> near_boundary;
    std::map<std::string, double> extras;

    bool holds() const { return counterexamples.empty(); }
};

/// Relative margin below which a double-precision verdict is escalated.
inline constexpr double kNearBoundaryTolerance = 1e-9;

struct MertensOptions {
    std::optional<std::filesystem::path> checkpoint;
    std::uint64_t segment_width = 100'000'000;
    std::uint64_t block_width = std::uint64_t{1} << 22;
    unsigned workers = 1;
    double near_tolerance = kNearBoundaryTolerance;
    /// Stop after this many segments in this call (simulates an interrupted run).
    std::optional<std::uint64_t> max_segments;
};

/// Checks e^gamma log p_{n+1} < prod_{p <= p_n} (1 - 1/p)^{-1} < e^gamma log p_n + 2 e^gamma / sqrt(p_n)
/// at every prime p_n <= limit, where p_{n+1} of the last one is the next
/// prime after limit. max_value is the largest I(p_n)/upper(p_n) with its
/// prime as argmax; extras carry the tightest lower-side margin.
///
/// Throws PreconditionError for limit < 3 and CheckpointError on checkpoint
/// I/O failures or a checkpoint written for different scan settings.
ScanReport verify_mertens(std::uint64_t limit, const MertensOptions& options = {});

inline constexpr double kEpsilon = 1.97e-3;

struct EpsilonScan {
    ScanReport composite;  ///< max of I(z)/I(u) * log u / log z over 4 <= u <= z
    ScanReport prime;      ///< max of I(z)/I(u-1) * log u / log z over primes 3 <= u < z
};

/// Exhaustive pair scan for 3024 <= z < 12000 (z, u integral, as floor z and
/// ceil u). max_value is the ratio itself; extras["excess"] is ratio - 1.
EpsilonScan scan_epsilon_case1(unsigned workers = 1);

/// log I(m) as used by the epsilon scan, exposed for consistency checks.
double epsilon_scan_log_product(std::uint64_t m);

struct EpsilonMargin {
    int case_id = 0;           ///< 2, or 3 for z >= 4e9
    std::string regime;
    double excess = 0;         ///< factor - 1 at this (z, u)
    double worst_case = 0;     ///< factor - 1 over the whole regime
    double bound = 0;          ///< quoted bound on the excess
    bool ok = false;           ///< excess <= worst_case < bound < epsilon
};

/// Analytic cases z >= 12000. Throws DomainError for z < 12000 or u outside [3, z].
EpsilonMargin check_epsilon_large_z(double z, double u);

/// Largest n accepted by the interval scans.
inline constexpr std::uint64_t kMaxScanN = 100'000'000;

struct IntervalWitness {
    std::uint64_t n = 0;
    u128 a = 0;
    unsigned omega = 0;
};

struct IntervalScan {
    ScanReport report;
    std::vector<IntervalWitness> witnesses;
};

/// For each n in [n_lo, n_hi], the least a in (n^2, (n+1)^2) with Omega(a) <= k.
/// max_value is the largest a - n^2 with its n as argmax.
IntervalScan verify_interval(std::uint64_t n_lo, std::uint64_t n_hi, unsigned k, unsigned workers = 1);

struct FourPWitness {
    std::uint64_t n = 0;
    std::uint64_t p = 0;
    u128 four_p = 0;
};

struct FourPScan {
    ScanReport report;
    std::vector<FourPWitness> witnesses;
};

/// For each n, the least prime p in (h^2, h(h+1)) for even n = 2h, or in
/// ((m-1)m, m^2) for odd n = 2m - 1, and confirms n^2 < 4p < (n+1)^2 with
/// Omega(4p) = 3.
FourPScan verify_4p(std::uint64_t n_lo, std::uint64_t n_hi, unsigned workers = 1);

}  // namespace sievekit
