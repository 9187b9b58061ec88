#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ymmst/drawer.hpp"

namespace ymmst {

// Random recursive tree: node i attaches to a uniformly chosen earlier node
// that still has fewer than max_fanout children (0 = unbounded).
RootedTree random_tree(std::size_t nodes, std::size_t max_fanout, std::uint64_t seed);

// Every ordered (plane) rooted tree with exactly `nodes` nodes, Catalan(nodes-1)
// of them. Ids follow preorder with the root at 0.
std::vector<RootedTree> all_plane_trees(std::size_t nodes);

}  // namespace ymmst
