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
#include <optional>
#include <string>
#include <vector>

namespace sievekit {

/// One completed segment of a Mertens scan.
struct CheckpointRecord {
    std::uint64_t segment_index = 0;
    std::uint64_t last_prime = 0;
    std::string sum_neg_log_terms;  ///< 50 significant digits
    std::uint64_t checked_count = 0;

    bool operator==(const CheckpointRecord&) const = default;
};

/// Text format, version 1:
///
///     sievekit-mertens-checkpoint 1
///     limit <limit>
///     segment_width <width>
///     <segment_index>, <last_prime>, <sum_neg_log_terms>, <checked_count>
///     ...
///     checksum crc32 <8 hex digits over every preceding byte>
struct Checkpoint {
    static constexpr int kVersion = 1;

    std::uint64_t limit = 0;
    std::uint64_t segment_width = 0;
    std::vector<CheckpointRecord> records;

    bool operator==(const Checkpoint&) const = default;
};

std::string serialize_checkpoint(const Checkpoint& cp);

/// Throws CheckpointError on a malformed body or checksum mismatch.
Checkpoint parse_checkpoint(const std::string& text);

/// Writes through a temporary file and renames it into place.
void write_checkpoint(const std::filesystem::path& path, const Checkpoint& cp);

/// std::nullopt when the file does not exist.
std::optional<Checkpoint> read_checkpoint(const std::filesystem::path& path);

}  // namespace sievekit
