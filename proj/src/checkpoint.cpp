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

#include "sievekit/checkpoint.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <boost/crc.hpp>

#include "sievekit/errors.hpp"

namespace sievekit {

namespace {

constexpr const char* kMagic = "sievekit-mertens-checkpoint";

std::uint32_t crc32_of(const std::string& bytes) {
    boost::crc_32_type crc;
    crc.process_bytes(bytes.data(), bytes.size());
    return crc.checksum();
}

std::uint64_t parse_u64(const std::string& field, const char* what) {
    try {
        std::size_t used = 0;
        const auto v = std::stoull(field, &used);
        if (used != field.size()) throw std::invalid_argument(what);
        return v;
    } catch (const std::exception&) {
        throw CheckpointError(std::string("checkpoint: bad ") + what + " '" + field + "'");
    }
}

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    const auto e = s.find_last_not_of(" \t\r\n");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

}  // namespace

std::string serialize_checkpoint(const Checkpoint& cp) {
    std::ostringstream body;
    body << kMagic << ' ' << Checkpoint::kVersion << '\n';
    body << "limit " << cp.limit << '\n';
    body << "segment_width " << cp.segment_width << '\n';
    for (const auto& r : cp.records) {
        body << r.segment_index << ", " << r.last_prime << ", " << r.sum_neg_log_terms << ", " << r.checked_count
             << '\n';
    }
    std::string text = body.str();
    char line[64];
    std::snprintf(line, sizeof line, "checksum crc32 %08x\n", crc32_of(text));
    return text + line;
}

Checkpoint parse_checkpoint(const std::string& text) {
    const auto last_line_start = text.rfind("checksum crc32 ");
    if (last_line_start == std::string::npos) throw CheckpointError("checkpoint: missing checksum line");
    const std::string body = text.substr(0, last_line_start);
    const std::string stored = trim(text.substr(last_line_start + 15));
    char expected[16];
    std::snprintf(expected, sizeof expected, "%08x", crc32_of(body));
    if (stored != expected) throw CheckpointError("checkpoint: checksum mismatch");

    std::istringstream in(body);
    std::string line;
    Checkpoint cp;
    if (!std::getline(in, line) || line != std::string(kMagic) + " " + std::to_string(Checkpoint::kVersion)) {
        throw CheckpointError("checkpoint: unsupported header '" + line + "'");
    }
    auto keyed = [&](const char* key) {
        if (!std::getline(in, line) || line.rfind(std::string(key) + " ", 0) != 0) {
            throw CheckpointError(std::string("checkpoint: expected ") + key);
        }
        return parse_u64(line.substr(std::string(key).size() + 1), key);
    };
    cp.limit = keyed("limit");
    cp.segment_width = keyed("segment_width");

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::istringstream row(line);
        for (std::string f; std::getline(row, f, ',');) fields.push_back(trim(f));
        if (fields.size() != 4) throw CheckpointError("checkpoint: malformed record '" + line + "'");
        CheckpointRecord r;
        r.segment_index = parse_u64(fields[0], "segment_index");
        r.last_prime = parse_u64(fields[1], "last_prime");
        r.sum_neg_log_terms = fields[2];
        r.checked_count = parse_u64(fields[3], "checked_count");
        if (!cp.records.empty() && r.segment_index != cp.records.back().segment_index + 1) {
            throw CheckpointError("checkpoint: segment indices are not consecutive");
        }
        cp.records.push_back(std::move(r));
    }
    return cp;
}

void write_checkpoint(const std::filesystem::path& path, const Checkpoint& cp) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw CheckpointError("checkpoint: cannot open " + tmp.string() + " for writing");
        out << serialize_checkpoint(cp);
        out.flush();
        if (!out) throw CheckpointError("checkpoint: write to " + tmp.string() + " failed");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw CheckpointError("checkpoint: cannot move into place at " + path.string() + ": " + ec.message());
}

std::optional<Checkpoint> read_checkpoint(const std::filesystem::path& path) {
    std::error_code ec;
    if (!std::filesystem::exists(path, ec)) return std::nullopt;
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CheckpointError("checkpoint: cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_checkpoint(buf.str());
}

}  // namespace sievekit
