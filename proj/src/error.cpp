#include "blockfarm/error.hpp"

namespace blockfarm {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::malformed_xml: return "malformed_xml";
    case Errc::wrong_namespace: return "wrong_namespace";
    case Errc::missing_type: return "missing_type";
    case Errc::missing_name: return "missing_name";
    case Errc::bad_child_count: return "bad_child_count";
    case Errc::unknown_element: return "unknown_element";
    case Errc::duplicate_name: return "duplicate_name";
    case Errc::unexpected_text: return "unexpected_text";
    case Errc::duplicate_type: return "duplicate_type";
    case Errc::invalid_definition: return "invalid_definition";
    case Errc::rule_mismatch: return "rule_mismatch";
    case Errc::unknown_block_type: return "unknown_block_type";
    case Errc::macro_cycle: return "macro_cycle";
    case Errc::unresolved_placeholder: return "unresolved_placeholder";
    case Errc::bad_placement: return "bad_placement";
    case Errc::missing_field: return "missing_field";
    case Errc::bad_field_value: return "bad_field_value";
    case Errc::forever_misplaced: return "forever_misplaced";
    case Errc::unknown_method: return "unknown_method";
    case Errc::mutating_call: return "mutating_call";
    case Errc::nonexistent_token: return "nonexistent_token";
    case Errc::unknown_trait: return "unknown_trait";
    case Errc::unknown_account: return "unknown_account";
    case Errc::not_owner: return "not_owner";
    case Errc::bad_args: return "bad_args";
    case Errc::duplicate_account: return "duplicate_account";
    case Errc::corrupt_journal: return "corrupt_journal";
    case Errc::type_error: return "type_error";
    case Errc::division_by_zero: return "division_by_zero";
    case Errc::negative_duration: return "negative_duration";
    case Errc::sensor_not_ready: return "sensor_not_ready";
    case Errc::no_token: return "no_token";
    case Errc::bad_request: return "bad_request";
    case Errc::io_error: return "io_error";
  }
  return "unknown";
}

}  // namespace blockfarm
