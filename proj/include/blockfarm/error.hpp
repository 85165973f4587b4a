#pragma once

#include <stdexcept>
#include <string>

namespace blockfarm {

// Every failure the toolchain can produce carries one of these cases.
// The HTTP layer serves them as {"error": message, "case": name} and the
// CLI maps them onto exit codes, so the set is part of the public surface.
enum class Errc {
  // xml
  malformed_xml,
  wrong_namespace,
  missing_type,
  missing_name,
  bad_child_count,
  unknown_element,
  duplicate_name,
  unexpected_text,
  // block registry
  duplicate_type,
  invalid_definition,
  rule_mismatch,
  unknown_block_type,
  macro_cycle,
  unresolved_placeholder,
  // compile
  bad_placement,
  missing_field,
  bad_field_value,
  forever_misplaced,
  // ledger
  unknown_method,
  mutating_call,
  nonexistent_token,
  unknown_trait,
  unknown_account,
  not_owner,
  bad_args,
  duplicate_account,
  corrupt_journal,
  // runtime
  type_error,
  division_by_zero,
  negative_duration,
  sensor_not_ready,
  no_token,
  // api / cli
  bad_request,
  io_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const { return code_; }
  const char* case_name() const { return errc_name(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace blockfarm
