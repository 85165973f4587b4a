#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "blockfarm/workspace.hpp"

namespace blockfarm {

enum class FieldKind { label, text_input, number_input, dropdown };

struct FieldSpec {
  FieldKind kind = FieldKind::label;
  std::string name;  // empty for labels
  std::string text;  // label caption
  std::optional<std::string> default_text;
  std::optional<double> default_number;
  std::vector<std::pair<std::string, std::string>> options;  // (display, value)

  static FieldSpec Label(std::string caption);
  static FieldSpec Text(std::string name, std::string default_text);
  static FieldSpec TextRequired(std::string name);
  static FieldSpec Number(std::string name, double default_number);
  static FieldSpec Dropdown(std::string name,
                            std::vector<std::pair<std::string, std::string>> options);
};

enum class InputKind { dummy, value, statement };

struct InputSpec {
  InputKind kind = InputKind::dummy;
  std::string name;  // empty for dummy inputs
  std::vector<FieldSpec> fields;

  static InputSpec Dummy(std::vector<FieldSpec> fields);
  static InputSpec ValueIn(std::string name, std::vector<FieldSpec> fields = {});
  static InputSpec StatementIn(std::string name, std::vector<FieldSpec> fields = {});
};

struct BlockDefinition {
  std::string type;
  std::vector<InputSpec> inputs;
  bool previous_statement = false;
  bool next_statement = false;
  bool output = false;
  int colour = 0;  // hue in [0, 360)
  std::string tooltip;
  std::string help_url;
};

struct NativeLowering {
  std::string opcode;
};

// Workspace fragment spliced in place of the custom block. Placeholder
// blocks "arg_value"/"arg_statements" (field NAME) pull in the instance's
// children; "{field:NAME}" inside any field text pulls in its field value.
struct MacroLowering {
  Workspace expansion;
};

struct GeneratorRule {
  std::string block_type;
  std::string listing_template;
  std::variant<NativeLowering, MacroLowering> lowering;
};

struct BlockRegistry {
  std::map<std::string, BlockDefinition> definitions;
  std::map<std::string, GeneratorRule> rules;

  bool has(const std::string& type) const { return definitions.count(type) > 0; }
  const BlockDefinition& definition(const std::string& type) const;
  const GeneratorRule& rule(const std::string& type) const;
  std::vector<std::string> types() const;
};

struct ToolboxManifest {
  std::vector<std::pair<std::string, std::vector<std::string>>> categories;

  bool operator==(const ToolboxManifest&) const = default;
};

inline constexpr const char* kArgValueType = "arg_value";
inline constexpr const char* kArgStatementsType = "arg_statements";

// The compiled-in catalog: 17 native block types covering the plant demo.
BlockRegistry builtin_registry();

// Violations are data, not failures; empty means the definition is valid.
std::vector<std::string> validate_definition(const BlockDefinition& def);

// Adds a custom block. Throws duplicate_type / invalid_definition /
// rule_mismatch / unknown_block_type / unresolved_placeholder.
void register_block(BlockRegistry& registry, const BlockDefinition& def,
                    const GeneratorRule& rule);

// Loads custom definitions+rules from the documented JSON schema and
// registers them in order.
void register_blocks_json(BlockRegistry& registry, const std::string& json_text);
void register_blocks_file(BlockRegistry& registry, const std::string& path);

// Checks every category entry resolves in the registry.
std::vector<std::string> validate_toolbox(const ToolboxManifest& manifest,
                                          const BlockRegistry& registry);

bool registries_equal(const BlockRegistry& a, const BlockRegistry& b);

}  // namespace blockfarm
