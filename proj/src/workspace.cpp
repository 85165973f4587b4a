#include "blockfarm/workspace.hpp"

namespace blockfarm {

namespace {

bool box_equal(const Box<BlockInstance>& a, const Box<BlockInstance>& b) {
  if (!a || !b) return static_cast<bool>(a) == static_cast<bool>(b);
  return structurally_equal(*a, *b);
}

template <class M>
bool map_equal(const M& a, const M& b) {
  if (a.size() != b.size()) return false;
  auto it = b.begin();
  for (const auto& [name, child] : a) {
    if (it->first != name || !box_equal(child, it->second)) return false;
    ++it;
  }
  return true;
}

}  // namespace

bool structurally_equal(const BlockInstance& a, const BlockInstance& b) {
  return a.type == b.type && a.fields == b.fields &&
         map_equal(a.value_inputs, b.value_inputs) &&
         map_equal(a.statement_inputs, b.statement_inputs) &&
         box_equal(a.next, b.next);
}

bool structurally_equal(const Workspace& a, const Workspace& b) {
  if (a.top_blocks.size() != b.top_blocks.size()) return false;
  for (size_t i = 0; i < a.top_blocks.size(); ++i) {
    if (!structurally_equal(a.top_blocks[i], b.top_blocks[i])) return false;
  }
  return true;
}

}  // namespace blockfarm
