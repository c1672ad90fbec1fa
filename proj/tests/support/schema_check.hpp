#pragma once

// Just enough of JSON Schema to check the documents this project emits:
// type (string or list), enum, minimum/maximum, minItems/maxItems,
// properties/required/additionalProperties, and a single items schema.

#include "json.hpp"

#include <string>
#include <vector>

namespace schema {

using json = nlohmann::json;

inline bool type_matches(const std::string& name, const json& value) {
    if (name == "object") return value.is_object();
    if (name == "array") return value.is_array();
    if (name == "string") return value.is_string();
    if (name == "boolean") return value.is_boolean();
    if (name == "null") return value.is_null();
    if (name == "integer") return value.is_number_integer() || value.is_number_unsigned();
    if (name == "number") return value.is_number();
    return false;
}

inline void check(const json& schema, const json& value, const std::string& path,
                  std::vector<std::string>& problems) {
    if (schema.contains("type")) {
        const json& type = schema["type"];
        bool ok = false;
        if (type.is_string()) {
            ok = type_matches(type.get<std::string>(), value);
        } else {
            for (const auto& alt : type) {
                if (type_matches(alt.get<std::string>(), value)) { ok = true; break; }
            }
        }
        if (!ok) {
            problems.push_back(path + ": type mismatch, got " + std::string(value.type_name()));
            return;
        }
    }

    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& allowed : schema["enum"]) {
            if (allowed == value) { ok = true; break; }
        }
        if (!ok) problems.push_back(path + ": value not in enum: " + value.dump());
    }

    if (value.is_number()) {
        if (schema.contains("minimum") && value.get<double>() < schema["minimum"].get<double>())
            problems.push_back(path + ": below minimum: " + value.dump());
        if (schema.contains("maximum") && value.get<double>() > schema["maximum"].get<double>())
            problems.push_back(path + ": above maximum: " + value.dump());
    }

    if (value.is_object()) {
        if (schema.contains("required")) {
            for (const auto& key : schema["required"]) {
                if (!value.contains(key.get<std::string>()))
                    problems.push_back(path + ": missing required key " + key.get<std::string>());
            }
        }
        const json* props = schema.contains("properties") ? &schema["properties"] : nullptr;
        bool extra_ok = true;
        if (schema.contains("additionalProperties") && schema["additionalProperties"].is_boolean())
            extra_ok = schema["additionalProperties"].get<bool>();
        for (auto it = value.begin(); it != value.end(); ++it) {
            if (props != nullptr && props->contains(it.key())) {
                check((*props)[it.key()], it.value(), path + "." + it.key(), problems);
            } else if (!extra_ok) {
                problems.push_back(path + ": unexpected key " + it.key());
            }
        }
    }

    if (value.is_array()) {
        if (schema.contains("minItems") && value.size() < schema["minItems"].get<std::size_t>())
            problems.push_back(path + ": fewer than minItems elements");
        if (schema.contains("maxItems") && value.size() > schema["maxItems"].get<std::size_t>())
            problems.push_back(path + ": more than maxItems elements");
        if (schema.contains("items")) {
            for (std::size_t i = 0; i < value.size(); ++i)
                check(schema["items"], value[i], path + "[" + std::to_string(i) + "]", problems);
        }
    }
}

inline std::vector<std::string> validate(const json& schema, const json& value) {
    std::vector<std::string> problems;
    check(schema, value, "$", problems);
    return problems;
}

}  // namespace schema
