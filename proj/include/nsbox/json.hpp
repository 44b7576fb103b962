#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "nsbox/behavior.hpp"
#include "nsbox/errors.hpp"
#include "nsbox/pqdetect.hpp"

namespace nsbox {

inline constexpr const char* kBehaviorSchema = "nsbox/behavior-v1";
inline constexpr const char* kRowOrder = "xy:00,01,10,11";
inline constexpr const char* kColOrder = "ab:00,01,10,11";

inline nlohmann::ordered_json behavior_to_json(const Behavior& b) {
    nlohmann::ordered_json j;
    j["schema"] = kBehaviorSchema;
    j["row_order"] = kRowOrder;
    j["col_order"] = kColOrder;
    j["p"] = b.p;
    return j;
}

inline Behavior behavior_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("schema") || !j["schema"].is_string())
        throw SchemaError("behavior JSON: missing schema string");
    if (j["schema"].get<std::string>() != kBehaviorSchema)
        throw SchemaError("behavior JSON: unknown schema \"" + j["schema"].get<std::string>() +
                          "\"");
    if (j.contains("row_order") && j["row_order"] != kRowOrder)
        throw SchemaError("behavior JSON: unexpected row_order");
    if (j.contains("col_order") && j["col_order"] != kColOrder)
        throw SchemaError("behavior JSON: unexpected col_order");
    if (!j.contains("p")) throw SchemaError("behavior JSON: missing table p");
    const auto& table = j["p"];
    if (!table.is_array() || table.size() != 4) throw SchemaError("behavior JSON: p must be 4x4");
    Behavior b{};
    for (int s = 0; s < 4; ++s) {
        const auto& row = table[std::size_t(s)];
        if (!row.is_array() || row.size() != 4) throw SchemaError("behavior JSON: p must be 4x4");
        for (int o = 0; o < 4; ++o) {
            if (!row[std::size_t(o)].is_number())
                throw SchemaError("behavior JSON: table entries must be numbers");
            b.p[s][o] = row[std::size_t(o)].get<double>();
        }
    }
    return b;
}

inline void write_behavior_file(const std::string& path, const Behavior& b) {
    std::ofstream os(path);
    if (!os) throw Error("cannot open for writing: " + path);
    os << behavior_to_json(b).dump(2) << '\n';
}

inline Behavior read_behavior_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw Error("cannot open for reading: " + path);
    nlohmann::json j;
    try {
        is >> j;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("behavior JSON: parse failure: ") + e.what());
    }
    return behavior_from_json(j);
}

inline nlohmann::ordered_json verdict_to_json(const detect::DetectionVerdict& v) {
    nlohmann::ordered_json j;
    j["detector"] = v.detector;
    j["quantity"] = v.quantity;
    j["threshold"] = v.threshold;
    j["positive"] = v.positive;
    j["witness"] = v.witness ? nlohmann::ordered_json(*v.witness) : nlohmann::ordered_json(nullptr);
    j["caveat"] = v.caveat ? nlohmann::ordered_json(*v.caveat) : nlohmann::ordered_json(nullptr);
    return j;
}

}  // namespace nsbox
