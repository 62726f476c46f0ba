#pragma once

// Private helpers shared by the JSON readers and writers.

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "onto2cdm/cardinality.hpp"
#include "onto2cdm/error.hpp"

namespace onto2cdm::detail {

/// Sorted keys (nlohmann::json objects are std::map-backed), two-space
/// indent, trailing newline.
inline std::string dump_canonical(const nlohmann::json& j) {
    return j.dump(2) + "\n";
}

inline const nlohmann::json& require(const nlohmann::json& obj, const char* key,
                                     const std::string& path) {
    if (!obj.is_object()) {
        throw SchemaViolation(path, "expected object");
    }
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw SchemaViolation(path, std::string("missing key '") + key + "'");
    }
    return *it;
}

inline std::string require_string(const nlohmann::json& obj, const char* key,
                                  const std::string& path) {
    const auto& v = require(obj, key, path);
    if (!v.is_string()) {
        throw SchemaViolation(path + "." + key, "expected string");
    }
    return v.get<std::string>();
}

inline std::optional<std::string> optional_string(const nlohmann::json& obj, const char* key,
                                                  const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) {
        return std::nullopt;
    }
    if (!it->is_string()) {
        throw SchemaViolation(path + "." + key, "expected string or null");
    }
    return it->get<std::string>();
}

inline bool optional_bool(const nlohmann::json& obj, const char* key, const std::string& path,
                          bool fallback) {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) {
        return fallback;
    }
    if (!it->is_boolean()) {
        throw SchemaViolation(path + "." + key, "expected boolean");
    }
    return it->get<bool>();
}

inline std::uint32_t to_count(const nlohmann::json& v, const std::string& path) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0 ||
        v.get<std::int64_t>() > static_cast<std::int64_t>(UINT32_MAX)) {
        throw SchemaViolation(path, "expected non-negative integer");
    }
    return static_cast<std::uint32_t>(v.get<std::int64_t>());
}

/// {"min": n, "max": n | null}
inline nlohmann::json cardinality_to_json(const Cardinality& c) {
    nlohmann::json j;
    j["min"] = c.min;
    j["max"] = c.max ? nlohmann::json(*c.max) : nlohmann::json(nullptr);
    return j;
}

inline Cardinality cardinality_from_json(const nlohmann::json& obj, const std::string& path) {
    Cardinality c;
    c.min = to_count(require(obj, "min", path), path + ".min");
    auto it = obj.find("max");
    if (it != obj.end() && !it->is_null()) {
        c.max = to_count(*it, path + ".max");
    }
    if (!c.valid()) {
        throw SchemaViolation(path, "min exceeds max");
    }
    return c;
}

}  // namespace onto2cdm::detail
