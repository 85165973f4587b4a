#pragma once

#include <string>
#include <variant>

namespace blockfarm {

// Runtime value: unit, number (64-bit float), boolean, text.
using Value = std::variant<std::monostate, double, bool, std::string>;

inline bool is_unit(const Value& v) { return std::holds_alternative<std::monostate>(v); }
inline bool is_number(const Value& v) { return std::holds_alternative<double>(v); }
inline bool is_bool(const Value& v) { return std::holds_alternative<bool>(v); }
inline bool is_text(const Value& v) { return std::holds_alternative<std::string>(v); }

// Integral doubles render without a decimal point ("30"); everything else
// uses the shortest decimal that round-trips. Text renders verbatim,
// booleans as "true"/"false", unit as "".
std::string render_number(double v);
std::string render(const Value& v);

const char* value_kind_name(const Value& v);

}  // namespace blockfarm
