#include "blockfarm/value.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>

namespace blockfarm {

std::string render_number(double v) {
  if (std::isfinite(v) && v == std::floor(v) && std::fabs(v) <= 9007199254740992.0) {
    return std::to_string(static_cast<long long>(v));
  }
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, r.ptr);
}

std::string render(const Value& v) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(double d) const { return render_number(d); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, v);
}

const char* value_kind_name(const Value& v) {
  switch (v.index()) {
    case 0: return "unit";
    case 1: return "number";
    case 2: return "boolean";
    default: return "text";
  }
}

}  // namespace blockfarm
