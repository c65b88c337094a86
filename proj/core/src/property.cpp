#include "mgm/property.hpp"

namespace mgm {

auto parse_property_json(const std::string & text) -> property_map
{
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw load_error("invalid JSON property object: " + text);
    if (!j.is_object())
        throw load_error("property field must be a JSON object, got: " + text);

    property_map out;
    for (auto it = j.begin(); it != j.end(); ++it) {
        auto v = property_value::from_json(it.value());
        if (!v)
            throw load_error("unsupported property value for key '" + it.key() +
                             "' (only text, integer, float and boolean are allowed)");
        out.emplace(it.key(), *v);
    }
    return out;
}

auto property_map_to_json(const property_map & props, bool include_metadata) -> nlohmann::json
{
    auto j = nlohmann::json::object();
    for (const auto & [key, value] : props) {
        if (!include_metadata && is_metadata_key(key)) continue;
        j[key] = value.to_json();
    }
    return j;
}

}
