#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kpath {

class MalformedTree : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A k-node pattern tree. Nodes are 0..k-1 internally (1..k in files);
// node 0 is the root.
struct TreePattern {
  int k = 1;
  std::vector<std::pair<int, int>> edges;

  // Path 0 - 1 - ... - (k-1).
  static TreePattern path(int k);
  // Node 0 joined to every other node.
  static TreePattern star(int k);
};

// Throws MalformedTree naming the violated property (node range,
// edge count, cycle or disconnection).
void validate_tree(const TreePattern& t);

// Rooted view of a validated tree.
struct RootedTree {
  std::vector<int> parent;                 // -1 for the root
  std::vector<std::vector<int>> children;  // ascending
  std::vector<int> preorder;               // root first
};

RootedTree root_tree(const TreePattern& t);

}  // namespace kpath
