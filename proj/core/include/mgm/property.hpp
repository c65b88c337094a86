#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "mgm/errors.hpp"

namespace mgm {

// A scalar annotation value: text, 64-bit integer, 64-bit float or boolean.
// Equality is type-and-value equality (integer 5 != text "5"); ordering is
// defined only between values of the same kind.
class property_value {
public:
    using storage = std::variant<std::string, std::int64_t, double, bool>;

    property_value() : value_(std::int64_t{0}) {}
    explicit property_value(std::string v) : value_(std::move(v)) {}
    explicit property_value(const char * v) : value_(std::string(v)) {}
    explicit property_value(std::int64_t v) : value_(v) {}
    explicit property_value(int v) : value_(std::int64_t{v}) {}
    explicit property_value(double v) : value_(v) {}
    explicit property_value(bool v) : value_(v) {}

    enum class kind { text, integer, real, boolean };

    auto which() const -> kind { return static_cast<kind>(value_.index()); }

    auto is_text() const -> bool { return std::holds_alternative<std::string>(value_); }
    auto as_text() const -> const std::string & { return std::get<std::string>(value_); }
    auto as_integer() const -> std::int64_t { return std::get<std::int64_t>(value_); }
    auto as_real() const -> double { return std::get<double>(value_); }
    auto as_boolean() const -> bool { return std::get<bool>(value_); }

    friend auto operator==(const property_value & a, const property_value & b) -> bool
    {
        return a.value_ == b.value_;
    }

    friend auto operator!=(const property_value & a, const property_value & b) -> bool
    {
        return !(a == b);
    }

    // Three-way ordering for <, <=, >, >=. Cross-kind comparison is an
    // evaluation error, not false.
    auto compare(const property_value & other) const -> int
    {
        if (value_.index() != other.value_.index())
            throw eval_error("cannot order values of different kinds ('" + to_display() +
                             "' vs '" + other.to_display() + "')");
        if (value_ < other.value_) return -1;
        if (other.value_ < value_) return 1;
        return 0;
    }

    auto to_json() const -> nlohmann::json
    {
        switch (which()) {
            case kind::text: return as_text();
            case kind::integer: return as_integer();
            case kind::real: return as_real();
            case kind::boolean: return as_boolean();
        }
        return nullptr;
    }

    auto to_display() const -> std::string { return to_json().dump(); }

    static auto from_json(const nlohmann::json & j) -> std::optional<property_value>
    {
        if (j.is_string()) return property_value(j.get<std::string>());
        if (j.is_boolean()) return property_value(j.get<bool>());
        if (j.is_number_integer()) return property_value(j.get<std::int64_t>());
        if (j.is_number_unsigned()) return property_value(static_cast<std::int64_t>(j.get<std::uint64_t>()));
        if (j.is_number_float()) return property_value(j.get<double>());
        return std::nullopt;
    }

private:
    storage value_;
};

using property_map = std::map<std::string, property_value>;

// Keys beginning with '_' are loader metadata (e.g. "_orig_id") and take no
// part in the property-containment conditions of a match. They stay visible
// to WHERE and RETURN.
inline auto is_metadata_key(const std::string & key) -> bool
{
    return !key.empty() && key.front() == '_';
}

// True iff every non-metadata (key, value) pair of `wanted` appears in `have`.
inline auto properties_contain(const property_map & have, const property_map & wanted) -> bool
{
    for (const auto & [key, value] : wanted) {
        if (is_metadata_key(key)) continue;
        auto it = have.find(key);
        if (it == have.end() || !(it->second == value)) return false;
    }
    return true;
}

auto parse_property_json(const std::string & text) -> property_map;
auto property_map_to_json(const property_map & props, bool include_metadata = true) -> nlohmann::json;

}
