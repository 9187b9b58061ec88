#include "ymmst/tree_gen.hpp"

#include <random>
#include <string>

#include "ymmst/errors.hpp"

namespace ymmst {

RootedTree random_tree(std::size_t nodes, std::size_t max_fanout, std::uint64_t seed) {
  if (nodes == 0) throw UsageError("random_tree needs at least one node");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<NodeId>> children(nodes);
  std::vector<NodeId> open{0};
  for (NodeId u = 1; u < nodes; ++u) {
    std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
    const std::size_t slot = pick(rng);
    const NodeId p = open[slot];
    children[p].push_back(u);
    if (max_fanout != 0 && children[p].size() == max_fanout) {
      open[slot] = open.back();
      open.pop_back();
    }
    open.push_back(u);
  }
  return RootedTree(0, std::move(children));
}

namespace {

// Walks every Dyck word of the remaining length; '(' opens a child of the
// current node, ')' returns to its parent.
void enumerate(std::size_t nodes, std::vector<NodeId>& parent, std::vector<NodeId>& stack,
               std::size_t opens_left, std::vector<RootedTree>& out) {
  if (opens_left == 0 && stack.size() == 1) {
    out.push_back(RootedTree::from_parents(parent));
    return;
  }
  if (opens_left > 0) {
    const NodeId child = nodes - opens_left;
    parent[child] = stack.back();
    stack.push_back(child);
    enumerate(nodes, parent, stack, opens_left - 1, out);
    stack.pop_back();
    parent[child] = kNoNode;
  }
  if (stack.size() > 1) {
    const NodeId top = stack.back();
    stack.pop_back();
    enumerate(nodes, parent, stack, opens_left, out);
    stack.push_back(top);
  }
}

}  // namespace

std::vector<RootedTree> all_plane_trees(std::size_t nodes) {
  if (nodes == 0) throw UsageError("all_plane_trees needs at least one node");
  std::vector<RootedTree> out;
  std::vector<NodeId> parent(nodes, kNoNode);
  std::vector<NodeId> stack{0};
  enumerate(nodes, parent, stack, nodes - 1, out);
  return out;
}

}  // namespace ymmst
