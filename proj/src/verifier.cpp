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

#include "sievekit/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <tuple>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "sievekit/bounds.hpp"
#include "sievekit/checkpoint.hpp"
#include "sievekit/compensated.hpp"
#include "sievekit/errors.hpp"
#include "sievekit/parallel.hpp"
#include "sievekit/primes.hpp"

namespace sievekit {

namespace {

namespace mp = boost::multiprecision;
using Precise = mp::number<mp::cpp_dec_float<60>, mp::et_off>;

const Precise& precise_gamma() {
    static const Precise g(kEulerGammaDigits);
    return g;
}

const Precise& precise_exp_gamma() {
    static const Precise e = mp::exp(precise_gamma());
    return e;
}

double neg_log_term(u64 p) { return -std::log1p(-1.0 / static_cast<double>(p)); }

Precise precise_neg_log_term(u64 p) { return mp::log(Precise(p) / Precise(p - 1)); }

std::string to_decimal50(const CompensatedSum& s) {
    Precise v = Precise(s.hi()) + Precise(s.lo());
    return v.str(50, std::ios_base::scientific);
}

CompensatedSum from_decimal(const std::string& text) {
    Precise v;
    try {
        v = Precise(text);
    } catch (const std::exception&) {
        throw CheckpointError("checkpoint sum is not a decimal number: " + text);
    }
    const double hi = v.convert_to<double>();
    const double lo = Precise(v - Precise(hi)).convert_to<double>();
    return CompensatedSum(hi, lo);
}

// Sum of log(p / (p - 1)) over p <= upto, in 60-digit arithmetic.
Precise precise_log_sum(u64 upto, const PrimeTable& base) {
    Precise total = 0;
    std::vector<u64> buf;
    constexpr u64 kStep = u64{1} << 22;
    for (u64 lo = 2; lo <= upto; lo += kStep) {
        buf.clear();
        primes_in_range(lo, std::min(lo + kStep, upto + 1), base, buf);
        for (u64 p : buf) total += precise_neg_log_term(p);
    }
    return total;
}

struct PrimeVerdict {
    bool holds = true;
    bool lower_ok = true;
    bool upper_ok = true;
    double I = 0;
    double lower_margin = 0;  // (I - L) / I
    double upper_margin = 0;  // (U - I) / I
    bool escalated = false;
};

PrimeVerdict check_prime(const CompensatedSum& S, u64 p, u64 next, double tol, const PrimeTable& base) {
    const double eg = exp_gamma();
    PrimeVerdict v;
    v.I = std::exp(S.hi()) * std::exp(S.lo());
    const double L = eg * std::log(static_cast<double>(next));
    const double U = eg * std::log(static_cast<double>(p)) + 2.0 * eg / std::sqrt(static_cast<double>(p));
    v.lower_margin = (v.I - L) / v.I;
    v.upper_margin = (U - v.I) / v.I;
    if (std::fabs(v.lower_margin) < tol || std::fabs(v.upper_margin) < tol) {
        v.escalated = true;
        const Precise I = mp::exp(precise_log_sum(p, base));
        const Precise& e = precise_exp_gamma();
        const Precise Lp = e * mp::log(Precise(next));
        const Precise Up = e * mp::log(Precise(p)) + 2 * e / mp::sqrt(Precise(p));
        v.I = I.convert_to<double>();
        v.lower_margin = Precise((I - Lp) / I).convert_to<double>();
        v.upper_margin = Precise((Up - I) / I).convert_to<double>();
        v.lower_ok = Lp < I;
        v.upper_ok = I < Up;
    } else {
        v.lower_ok = v.lower_margin > 0;
        v.upper_ok = v.upper_margin > 0;
    }
    v.holds = v.lower_ok && v.upper_ok;
    return v;
}

struct BlockResult {
    std::vector<u64> primes;
    CompensatedSum sum;
    CompensatedSum end_running;
    u64 checked = 0;
    double max_ratio = -std::numeric_limits<double>::infinity();
    u64 argmax = 0;
    double min_lower = std::numeric_limits<double>::infinity();
    u64 argmin = 0;
    std::vector<Counterexample> counterexamples;
    std::vector<NearBoundary> near;
};

std::string mertens_detail(const PrimeVerdict& v) {
    std::string out;
    if (!v.lower_ok) out += "lower inequality fails";
    if (!v.upper_ok) out += std::string(out.empty() ? "" : "; ") + "upper inequality fails";
    return out;
}

}  // namespace

ScanReport verify_mertens(std::uint64_t limit, const MertensOptions& options) {
    if (limit < 3) throw PreconditionError("verify_mertens: limit must be at least 3");
    if (options.segment_width == 0 || options.block_width == 0)
        throw PreconditionError("verify_mertens: segment and block widths must be positive");

    const u64 successor = next_prime_after(limit);
    const PrimeTable base = primes_up_to(std::max<u64>(isqrt(static_cast<u128>(successor)) + 1, 2));
    const u64 width = options.segment_width;
    const u64 n_segments = (limit - 1 + width - 1) / width;  // segments cover [2, limit]

    ScanReport report;
    report.scan_id = "mertens";
    report.range_lo = 2;
    report.range_hi = limit;
    report.max_value = -std::numeric_limits<double>::infinity();

    Checkpoint cp{.limit = limit, .segment_width = width, .records = {}};
    u64 start_segment = 0;
    CompensatedSum running;
    if (options.checkpoint) {
        if (auto loaded = read_checkpoint(*options.checkpoint)) {
            if (loaded->limit != limit || loaded->segment_width != width)
                throw CheckpointError("checkpoint was written for limit " + std::to_string(loaded->limit) +
                                      " and segment width " + std::to_string(loaded->segment_width));
            cp = std::move(*loaded);
            if (!cp.records.empty()) {
                const auto& last = cp.records.back();
                start_segment = last.segment_index + 1;
                running = from_decimal(last.sum_neg_log_terms);
                report.checked_count = last.checked_count;
            }
        }
    }
    report.extras["resumed_from_segment"] = static_cast<double>(start_segment);

    double min_lower = std::numeric_limits<double>::infinity();
    u64 argmin = 0;
    u64 processed = 0;
    u64 seg = start_segment;
    for (; seg < n_segments; ++seg) {
        if (options.max_segments && processed >= *options.max_segments) break;
        const u64 seg_lo = 2 + seg * width;
        const u64 seg_hi = std::min(limit + 1, seg_lo + width);  // exclusive
        const u64 n_blocks = (seg_hi - seg_lo + options.block_width - 1) / options.block_width;
        std::vector<BlockResult> blocks(n_blocks);

        parallel_for(n_blocks, options.workers, [&](std::size_t b) {
            const u64 lo = seg_lo + b * options.block_width;
            const u64 hi = std::min(seg_hi, lo + options.block_width);
            auto& blk = blocks[b];
            primes_in_range(lo, hi, base, blk.primes);
            for (u64 p : blk.primes) blk.sum += neg_log_term(p);
        });

        std::vector<CompensatedSum> offsets(n_blocks);
        for (std::size_t b = 0; b < n_blocks; ++b) {
            offsets[b] = running;
            running += blocks[b].sum;
        }

        parallel_for(n_blocks, options.workers, [&](std::size_t b) {
            auto& blk = blocks[b];
            CompensatedSum S = offsets[b];
            for (std::size_t i = 0; i < blk.primes.size(); ++i) {
                const u64 p = blk.primes[i];
                u64 next = 0;
                if (i + 1 < blk.primes.size()) {
                    next = blk.primes[i + 1];
                } else {
                    for (std::size_t c = b + 1; c < n_blocks && next == 0; ++c)
                        if (!blocks[c].primes.empty()) next = blocks[c].primes.front();
                    if (next == 0) next = next_prime_after(p);
                }
                S += neg_log_term(p);
                const PrimeVerdict v = check_prime(S, p, next, options.near_tolerance, base);
                ++blk.checked;
                const double ratio = 1.0 - v.upper_margin;  // I / U
                if (ratio > blk.max_ratio) {
                    blk.max_ratio = ratio;
                    blk.argmax = p;
                }
                if (v.lower_margin < blk.min_lower) {
                    blk.min_lower = v.lower_margin;
                    blk.argmin = p;
                }
                if (v.escalated)
                    blk.near.push_back({{p, next}, std::min(v.lower_margin, v.upper_margin), v.holds,
                                        "re-decided at 60 digits"});
                if (!v.holds) blk.counterexamples.push_back({{p, next}, v.I, mertens_detail(v)});
            }
            blk.end_running = S;
        });

        for (std::size_t b = 0; b < n_blocks; ++b) {
            const auto& blk = blocks[b];
            const CompensatedSum expected = b + 1 < n_blocks ? offsets[b + 1] : running;
            const double drift = std::fabs((blk.end_running.hi() - expected.hi()) + (blk.end_running.lo() - expected.lo()));
            if (drift > 1e-12 * std::max(1.0, std::fabs(expected.value())))
                throw std::logic_error("verify_mertens: blocked sum diverged from sequential sum");
            report.checked_count += blk.checked;
            if (blk.checked > 0 && blk.max_ratio > report.max_value) {
                report.max_value = blk.max_ratio;
                report.argmax = {blk.argmax};
            }
            if (blk.checked > 0 && blk.min_lower < min_lower) {
                min_lower = blk.min_lower;
                argmin = blk.argmin;
            }
            report.counterexamples.insert(report.counterexamples.end(), blk.counterexamples.begin(),
                                          blk.counterexamples.end());
            report.near_boundary.insert(report.near_boundary.end(), blk.near.begin(), blk.near.end());
        }

        if (options.checkpoint && report.counterexamples.empty()) {
            u64 last_prime = cp.records.empty() ? 0 : cp.records.back().last_prime;
            for (auto it = blocks.rbegin(); it != blocks.rend(); ++it)
                if (!it->primes.empty()) {
                    last_prime = it->primes.back();
                    break;
                }
            cp.records.push_back({seg, last_prime, to_decimal50(running), report.checked_count});
            write_checkpoint(*options.checkpoint, cp);
        }
        ++processed;
    }

    if (report.argmax.empty()) report.max_value = 0;
    report.extras["successor_prime"] = static_cast<double>(successor);
    report.extras["min_lower_margin"] = std::isfinite(min_lower) ? min_lower : 0.0;
    report.extras["argmin_lower_prime"] = static_cast<double>(argmin);
    report.extras["segments_completed"] = static_cast<double>(seg);
    report.extras["segments_total"] = static_cast<double>(n_segments);
    report.extras["complete"] = seg == n_segments ? 1.0 : 0.0;
    report.extras["final_log_product"] = running.value();
    return report;
}

namespace {

constexpr u64 kScanZMin = 3024;
constexpr u64 kScanZEnd = 12000;  // exclusive
constexpr u64 kScanChunk = 64;
constexpr double kTieTolerance = 1e-9;

struct ScanTables {
    std::vector<double> log_I;     // log I(m), m <= kScanZEnd
    std::vector<double> log_log;   // log log m, m >= 2
    std::vector<Precise> precise_log_I;
    std::vector<u64> primes;       // primes < kScanZEnd
};

const ScanTables& scan_tables() {
    static const ScanTables tables = [] {
        ScanTables t;
        const PrimeTable table = primes_up_to(kScanZEnd);
        t.log_I.assign(kScanZEnd + 1, 0.0);
        t.log_log.assign(kScanZEnd + 1, 0.0);
        t.precise_log_I.assign(kScanZEnd + 1, Precise(0));
        CompensatedSum acc;
        Precise precise_acc = 0;
        std::size_t next = 0;
        for (u64 m = 2; m <= kScanZEnd; ++m) {
            if (next < table.size() && table[next] == m) {
                acc += neg_log_term(m);
                precise_acc += precise_neg_log_term(m);
                if (m < kScanZEnd) t.primes.push_back(m);
                ++next;
            }
            t.log_I[m] = acc.value();
            t.precise_log_I[m] = precise_acc;
            t.log_log[m] = std::log(std::log(static_cast<double>(m)));
        }
        return t;
    }();
    return tables;
}

// One candidate ratio: log of I(z)/I(w) * log u / log z, with w = u or u - 1.
struct Candidate {
    bool valid = false;
    double log_ratio = 0;
    u64 u = 0;
    u64 z = 0;
    u64 w = 0;
};

Precise precise_log_ratio(const Candidate& c) {
    const auto& t = scan_tables();
    return t.precise_log_I[c.z] - t.precise_log_I[c.w] + mp::log(mp::log(Precise(c.u))) -
           mp::log(mp::log(Precise(c.z)));
}

bool better(const Candidate& c, const Candidate& cur) {
    if (!cur.valid) return true;
    const double d = c.log_ratio - cur.log_ratio;
    if (std::fabs(d) > kTieTolerance) return d > 0;
    const Precise pc = precise_log_ratio(c);
    const Precise pcur = precise_log_ratio(cur);
    if (pc != pcur) return pc > pcur;
    return std::tie(c.u, c.z) < std::tie(cur.u, cur.z);
}

struct ChunkResult {
    Candidate best;
    u64 checked = 0;
    std::vector<Counterexample> counterexamples;
    std::vector<NearBoundary> near;
};

void classify(const Candidate& c, ChunkResult& out) {
    static const double threshold = std::log1p(kEpsilon);
    static const Precise precise_threshold = mp::log1p(Precise("1.97e-3"));
    const double margin = threshold - c.log_ratio;
    if (std::fabs(margin) >= kTieTolerance) {
        if (margin <= 0) out.counterexamples.push_back({{c.u, c.z}, std::exp(c.log_ratio), "ratio >= 1 + 1.97e-3"});
        return;
    }
    const bool holds = precise_log_ratio(c) < precise_threshold;
    out.near.push_back({{c.u, c.z}, margin, holds, "re-decided at 60 digits"});
    if (!holds) out.counterexamples.push_back({{c.u, c.z}, std::exp(c.log_ratio), "ratio >= 1 + 1.97e-3"});
}

ScanReport merge_scan(const std::string& id, std::vector<ChunkResult>& chunks) {
    ScanReport report;
    report.scan_id = id;
    report.range_lo = kScanZMin;
    report.range_hi = kScanZEnd - 1;
    Candidate best;
    for (auto& ch : chunks) {
        report.checked_count += ch.checked;
        if (ch.best.valid && better(ch.best, best)) best = ch.best;
        report.counterexamples.insert(report.counterexamples.end(), ch.counterexamples.begin(), ch.counterexamples.end());
        report.near_boundary.insert(report.near_boundary.end(), ch.near.begin(), ch.near.end());
    }
    if (best.valid) {
        report.max_value = std::exp(best.log_ratio);
        report.argmax = {best.u, best.z};
        report.extras["excess"] = std::expm1(best.log_ratio);
    }
    report.extras["threshold_excess"] = kEpsilon;
    return report;
}

}  // namespace

double epsilon_scan_log_product(std::uint64_t m) {
    const auto& t = scan_tables();
    if (m > kScanZEnd) throw PreconditionError("epsilon_scan_log_product: m exceeds the scan table");
    return t.log_I[m];
}

EpsilonScan scan_epsilon_case1(unsigned workers) {
    const auto& t = scan_tables();
    const u64 n_chunks = (kScanZEnd - kScanZMin + kScanChunk - 1) / kScanChunk;
    std::vector<ChunkResult> composite(n_chunks), prime(n_chunks);

    parallel_for(n_chunks, workers, [&](std::size_t ci) {
        const u64 z_lo = kScanZMin + ci * kScanChunk;
        const u64 z_hi = std::min(kScanZEnd, z_lo + kScanChunk);
        auto& comp = composite[ci];
        auto& pr = prime[ci];
        for (u64 z = z_lo; z < z_hi; ++z) {
            const double base = t.log_I[z] - t.log_log[z];
            for (u64 u = 4; u <= z; ++u) {
                Candidate c{true, base - t.log_I[u] + t.log_log[u], u, z, u};
                classify(c, comp);
                if (better(c, comp.best)) comp.best = c;
            }
            comp.checked += z - 3;
            for (u64 u : t.primes) {
                if (u < 3) continue;
                if (u >= z) break;
                Candidate c{true, base - t.log_I[u - 1] + t.log_log[u], u, z, u - 1};
                classify(c, pr);
                if (better(c, pr.best)) pr.best = c;
                ++pr.checked;
            }
        }
    });

    return {merge_scan("epsilon_composite", composite), merge_scan("epsilon_prime", prime)};
}

EpsilonMargin check_epsilon_large_z(double z, double u) {
    if (!(z >= static_cast<double>(kScanZEnd)))
        throw DomainError("check_epsilon_large_z: z < 12000 is covered by scan_epsilon_case1");
    if (!(u >= 3.0) || u > z) throw DomainError("check_epsilon_large_z: u must lie in [3, z]");

    constexpr double kLarge = 4e9;
    const double log22_cube = std::pow(kMertensAsymptoticLogStart, 3);
    EpsilonMargin m;
    if (z < kLarge) {
        m.case_id = 2;
        m.regime = "12000 <= z < 4e9";
        m.excess = 2.0 / (std::sqrt(z) * std::log(z));
        const double z0 = static_cast<double>(kScanZEnd);
        m.worst_case = 2.0 / (std::sqrt(z0) * std::log(z0));
        m.bound = 1.95e-3;
    } else if (u <= kLarge) {
        m.case_id = 3;
        m.regime = "z >= 4e9, u <= 4e9";
        const double lz = std::log(z);
        m.excess = 1.0 / (1.0 - 0.841 / (lz * lz * lz)) - 1.0;
        m.worst_case = 1.0 / (1.0 - 0.841 / log22_cube) - 1.0;
        m.bound = 1e-4;
    } else {
        m.case_id = 3;
        m.regime = "z >= 4e9, u > 4e9";
        const double tz = 0.841 / std::pow(std::log(z), 3);
        const double tu = 0.841 / std::pow(std::log(u), 3);
        m.excess = (1.0 + tu) / (1.0 - tz) - 1.0;
        const double t22 = 0.841 / log22_cube;
        m.worst_case = (1.0 + t22) / (1.0 - t22) - 1.0;
        m.bound = 1.6e-4;
    }
    m.ok = m.excess <= m.worst_case && m.worst_case < m.bound && m.bound < kEpsilon;
    return m;
}

namespace {

constexpr u64 kScanNChunk = 1024;

struct NChunk {
    std::vector<IntervalWitness> witnesses;
    std::vector<FourPWitness> four_p;
    std::vector<Counterexample> counterexamples;
    double max_gap = -1;
    u64 argmax = 0;
    u64 checked = 0;
};

// Least index in [0, total) with pred(omega) true, scanning lo + index in
// doubling windows. Returns total when none.
template <class Pred>
std::pair<u64, unsigned> first_matching(u128 lo, u64 total, u64 window, const PrimeTable& table, Pred pred) {
    u64 off = 0;
    u64 w = std::min(window, total);
    while (off < total) {
        const auto om = omega_range(lo + off, w, table);
        for (u64 i = 0; i < w; ++i)
            if (pred(om[i])) return {off + i, om[i]};
        off += w;
        w = std::min(2 * w, total - off);
    }
    return {total, 0};
}

void check_range(std::uint64_t n_lo, std::uint64_t n_hi, const char* who) {
    if (n_lo < 1 || n_lo > n_hi) throw PreconditionError(std::string(who) + ": need 1 <= n_lo <= n_hi");
    if (n_hi > kMaxScanN)
        throw PreconditionError(std::string(who) + ": n_hi exceeds the factorable range (" +
                                std::to_string(kMaxScanN) + ")");
}

}  // namespace

IntervalScan verify_interval(std::uint64_t n_lo, std::uint64_t n_hi, unsigned k, unsigned workers) {
    check_range(n_lo, n_hi, "verify_interval");
    if (k < 1) throw PreconditionError("verify_interval: k must be at least 1");
    const PrimeTable table = primes_up_to(n_hi + 1);
    const u64 count = n_hi - n_lo + 1;
    const u64 n_chunks = (count + kScanNChunk - 1) / kScanNChunk;
    std::vector<NChunk> chunks(n_chunks);

    parallel_for(n_chunks, workers, [&](std::size_t ci) {
        auto& ch = chunks[ci];
        const u64 first = n_lo + ci * kScanNChunk;
        const u64 last = std::min(n_hi, first + kScanNChunk - 1);
        for (u64 n = first; n <= last; ++n) {
            const u128 sq = static_cast<u128>(n) * n;
            const u64 total = 2 * n;  // n^2 + 1 .. n^2 + 2n
            auto [idx, om] = first_matching(sq + 1, total, k <= 1 ? 256 : 32, table,
                                            [k](std::uint8_t w) { return w <= k; });
            ++ch.checked;
            if (idx == total) {
                ch.counterexamples.push_back({{n}, 0, "no a in (n^2, (n+1)^2) with Omega(a) <= k"});
                continue;
            }
            const u128 a = sq + 1 + idx;
            const u128 next_sq = static_cast<u128>(n + 1) * (n + 1);
            const unsigned recheck = big_omega(a, table);
            if (!(sq < a && a < next_sq) || recheck != om || recheck > k) {
                ch.counterexamples.push_back({{n, a}, static_cast<double>(recheck), "witness failed re-verification"});
                continue;
            }
            ch.witnesses.push_back({n, a, recheck});
            const double gap = static_cast<double>(a - sq);
            if (gap > ch.max_gap) {
                ch.max_gap = gap;
                ch.argmax = n;
            }
        }
    });

    IntervalScan out;
    auto& r = out.report;
    r.scan_id = "interval_k" + std::to_string(k);
    r.range_lo = n_lo;
    r.range_hi = n_hi;
    double best = -1;
    for (auto& ch : chunks) {
        r.checked_count += ch.checked;
        if (ch.max_gap > best) {
            best = ch.max_gap;
            r.argmax = {ch.argmax};
        }
        r.counterexamples.insert(r.counterexamples.end(), ch.counterexamples.begin(), ch.counterexamples.end());
        out.witnesses.insert(out.witnesses.end(), ch.witnesses.begin(), ch.witnesses.end());
    }
    r.max_value = best < 0 ? 0 : best;
    r.extras["k"] = k;
    r.extras["witnesses"] = static_cast<double>(out.witnesses.size());
    return out;
}

FourPScan verify_4p(std::uint64_t n_lo, std::uint64_t n_hi, unsigned workers) {
    check_range(n_lo, n_hi, "verify_4p");
    const PrimeTable table = primes_up_to(n_hi / 2 + 2);
    const u64 count = n_hi - n_lo + 1;
    const u64 n_chunks = (count + kScanNChunk - 1) / kScanNChunk;
    std::vector<NChunk> chunks(n_chunks);

    parallel_for(n_chunks, workers, [&](std::size_t ci) {
        auto& ch = chunks[ci];
        const u64 first = n_lo + ci * kScanNChunk;
        const u64 last = std::min(n_hi, first + kScanNChunk - 1);
        for (u64 n = first; n <= last; ++n) {
            ++ch.checked;
            // open interval (lo, hi) for p
            u64 lo = 0, hi = 0;
            if (n % 2 == 0) {
                const u64 h = n / 2;
                lo = h * h;
                hi = h * (h + 1);
            } else {
                const u64 m = (n + 1) / 2;
                lo = (m - 1) * m;
                hi = m * m;
            }
            const u64 total = hi > lo + 1 ? hi - lo - 1 : 0;
            auto [idx, om] = first_matching(static_cast<u128>(lo) + 1, total, 32, table,
                                            [](std::uint8_t w) { return w == 1; });
            if (total == 0 || idx == total) {
                ch.counterexamples.push_back({{n}, 0, "no prime in the half-interval"});
                continue;
            }
            const u64 p = lo + 1 + idx;
            const u128 four_p = static_cast<u128>(4) * p;
            const u128 sq = static_cast<u128>(n) * n;
            const u128 next_sq = static_cast<u128>(n + 1) * (n + 1);
            const bool square = isqrt(four_p) * isqrt(four_p) == four_p;
            const unsigned omega4 = big_omega(four_p, table);
            if (!(sq < four_p && four_p < next_sq) || omega4 != 3 || square || big_omega(p, table) != 1) {
                ch.counterexamples.push_back({{n, p}, static_cast<double>(omega4), "4p failed re-verification"});
                continue;
            }
            ch.four_p.push_back({n, p, four_p});
            const double gap = static_cast<double>(p - lo);
            if (gap > ch.max_gap) {
                ch.max_gap = gap;
                ch.argmax = n;
            }
        }
    });

    FourPScan out;
    auto& r = out.report;
    r.scan_id = "four_p";
    r.range_lo = n_lo;
    r.range_hi = n_hi;
    double best = -1;
    for (auto& ch : chunks) {
        r.checked_count += ch.checked;
        if (ch.max_gap > best) {
            best = ch.max_gap;
            r.argmax = {ch.argmax};
        }
        r.counterexamples.insert(r.counterexamples.end(), ch.counterexamples.begin(), ch.counterexamples.end());
        out.witnesses.insert(out.witnesses.end(), ch.four_p.begin(), ch.four_p.end());
    }
    r.max_value = best < 0 ? 0 : best;
    r.extras["witnesses"] = static_cast<double>(out.witnesses.size());
    return out;
}

}  // namespace sievekit
