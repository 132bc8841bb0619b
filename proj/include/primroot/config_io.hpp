// Config file loading/saving.  The on-disk format is JSON; big naturals
// may be written as decimal or scientific strings ("2.5e15") and are
// normalized to exact integers.  Unknown keys are rejected so typos
// cannot silently fall back to defaults.
#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "primroot/bigint.hpp"
#include "primroot/bound_config.hpp"
#include "primroot/errors.hpp"
#include "primroot/report.hpp"

namespace primroot {
namespace detail {

inline std::size_t line_of_byte(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n') ++line;
    return line;
}

inline BigInt json_to_big_natural(const nlohmann::json& j, const std::string& key) {
    if (j.is_string()) {
        const BigInt v = parse_big_decimal(j.get<std::string>());
        if (v < 0) throw config_error("config: " + key + " must be non-negative");
        return v;
    }
    if (j.is_number_integer()) {
        const auto v = j.get<std::int64_t>();
        if (v < 0) throw config_error("config: " + key + " must be non-negative");
        return BigInt(v);
    }
    if (j.is_number_float()) {
        const double v = j.get<double>();
        if (v < 0 || v != std::floor(v) || v >= 9.007199254740992e15)
            throw config_error("config: " + key +
                               " must be an exact natural; use a decimal string for big values");
        return BigInt(static_cast<std::int64_t>(v));
    }
    throw config_error("config: " + key + " must be a number or decimal string");
}

inline std::uint64_t json_to_u64(const nlohmann::json& j, const std::string& key) {
    const BigInt v = json_to_big_natural(j, key);
    if (!fits_u64(v)) throw config_error("config: " + key + " too large");
    return to_u64(v);
}

}  // namespace detail

inline BoundConfig parse_config(const std::string& text, const std::string& source = "config") {
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw config_error(source + ": parse error at line " +
                           std::to_string(detail::line_of_byte(text, e.byte)) + ": " + e.what());
    }
    if (!root.is_object()) throw config_error(source + ": top level must be an object");
    BoundConfig cfg;
    for (const auto& [key, value] : root.items()) {
        if (key == "burgess_constants") {
            if (!value.is_object())
                throw config_error(source + ": burgess_constants must be an object");
            for (const auto& [rkey, entry] : value.items()) {
                int r = 0;
                try {
                    std::size_t used = 0;
                    r = std::stoi(rkey, &used);
                    if (used != rkey.size()) throw std::invalid_argument(rkey);
                } catch (const std::exception&) {
                    throw config_error(source + ": burgess_constants key '" + rkey +
                                       "' is not an integer r");
                }
                if (!entry.is_object() || !entry.contains("value") || !entry.contains("provenance"))
                    throw config_error(source + ": C(" + rkey +
                                       ") must be {\"value\": ..., \"provenance\": ...}");
                for (const auto& [ek, ev] : entry.items())
                    if (ek != "value" && ek != "provenance")
                        throw config_error(source + ": unknown key '" + ek + "' in C(" + rkey + ")");
                BurgessConstant c;
                c.value = entry.at("value").get<double>();
                c.provenance = entry.at("provenance").get<std::string>();
                cfg.burgess_constants[r] = c;
            }
        } else if (key == "pv_reference_prime") {
            cfg.pv_reference_prime = detail::json_to_big_natural(value, key);
        } else if (key == "robin_constant") {
            cfg.robin_constant = value.get<double>();
        } else if (key == "verified_cutoff") {
            cfg.verified_cutoff = detail::json_to_big_natural(value, key);
        } else if (key == "enumeration_threshold") {
            cfg.enumeration_threshold = detail::json_to_u64(value, key);
        } else if (key == "tree_max_nodes") {
            cfg.tree_max_nodes = detail::json_to_u64(value, key);
        } else if (key == "tree_wall_ms") {
            cfg.tree_wall_ms = detail::json_to_u64(value, key);
        } else {
            throw config_error(source + ": unknown key '" + key + "'");
        }
    }
    validate(cfg);
    return cfg;
}

inline BoundConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw config_error("load_config: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), path);
}

inline nlohmann::json config_to_json(const BoundConfig& cfg) {
    nlohmann::json j;
    for (const auto& [r, c] : cfg.burgess_constants) {
        nlohmann::json e;
        e["value"] = c.value;
        e["provenance"] = c.provenance;
        j["burgess_constants"][std::to_string(r)] = e;
    }
    j["pv_reference_prime"] = to_decimal(cfg.pv_reference_prime);
    j["robin_constant"] = cfg.robin_constant;
    j["verified_cutoff"] = to_decimal(cfg.verified_cutoff);
    j["enumeration_threshold"] = cfg.enumeration_threshold;
    j["tree_max_nodes"] = cfg.tree_max_nodes;
    j["tree_wall_ms"] = cfg.tree_wall_ms;
    return j;
}

inline void save_config(const BoundConfig& cfg, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw config_error("save_config: cannot open " + path);
    out << config_to_json(cfg).dump(2) << '\n';
}

// Hash of the effective (defaults-applied) configuration; embedded in
// every artifact for reproducibility.
inline std::string config_hash(const BoundConfig& cfg) {
    return hex16(fnv1a64(config_to_json(cfg).dump()));
}

}  // namespace primroot
