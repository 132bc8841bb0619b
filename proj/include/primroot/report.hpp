// Deterministic artifact emission: CSV tables and JSON-lines record
// streams, every file stamped with the config hash and seed.  Identical
// inputs must serialize byte-for-byte identically, so all formatting is
// snprintf-based and locale-free.
#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "primroot/errors.hpp"
#include "primroot/logreal.hpp"

namespace primroot {

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::string hex16(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

// 12 significant digits, shortest form ("%.12g").
inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct ArtifactMeta {
    std::string config_hash;
    std::uint64_t seed = 1;
    std::string command;
};

inline std::string meta_comment(const ArtifactMeta& m) {
    return "# config_hash=" + m.config_hash + " seed=" + std::to_string(m.seed) +
           " command=" + m.command;
}

inline nlohmann::json meta_record(const ArtifactMeta& m) {
    nlohmann::json j;
    j["type"] = "meta";
    j["config_hash"] = m.config_hash;
    j["seed"] = m.seed;
    j["command"] = m.command;
    return j;
}

inline std::string csv_table(const ArtifactMeta& meta, const std::vector<std::string>& header,
                             const std::vector<std::vector<std::string>>& rows) {
    std::string out = meta_comment(meta) + "\n";
    for (std::size_t i = 0; i < header.size(); ++i)
        out += (i ? "," : "") + header[i];
    out += '\n';
    for (const auto& row : rows) {
        if (row.size() != header.size()) throw argument_error("csv_table: ragged row");
        for (std::size_t i = 0; i < row.size(); ++i)
            out += (i ? "," : "") + row[i];
        out += '\n';
    }
    return out;
}

inline std::string jsonl_records(const ArtifactMeta& meta,
                                 const std::vector<nlohmann::json>& records) {
    std::string out = meta_record(meta).dump() + "\n";
    for (const auto& r : records) out += r.dump() + "\n";
    return out;
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw argument_error("write_text_file: cannot open " + path);
    out << content;
    if (!out) throw argument_error("write_text_file: write failed for " + path);
}

}  // namespace primroot
