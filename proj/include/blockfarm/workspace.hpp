#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "blockfarm/box.hpp"

namespace blockfarm {

// One placed block. value_inputs hold expression children, statement_inputs
// hold the head of a chain, next links the following statement.
// id/x/y come from the editor; they are kept for diagnostics but ignored by
// structural equality and never affect semantics.
struct BlockInstance {
  std::string type;
  std::optional<std::string> id;
  std::optional<std::string> x;
  std::optional<std::string> y;
  std::map<std::string, std::string> fields;
  std::map<std::string, Box<BlockInstance>> value_inputs;
  std::map<std::string, Box<BlockInstance>> statement_inputs;
  Box<BlockInstance> next;
};

struct Workspace {
  std::vector<BlockInstance> top_blocks;
};

// Structural equality ignoring id/x/y.
bool structurally_equal(const BlockInstance& a, const BlockInstance& b);
bool structurally_equal(const Workspace& a, const Workspace& b);

}  // namespace blockfarm
