#include "kpath/tree.hpp"

#include <algorithm>
#include <numeric>

namespace kpath {

TreePattern TreePattern::path(int k) {
  TreePattern t{k, {}};
  for (int i = 0; i + 1 < k; ++i) t.edges.emplace_back(i, i + 1);
  return t;
}

TreePattern TreePattern::star(int k) {
  TreePattern t{k, {}};
  for (int i = 1; i < k; ++i) t.edges.emplace_back(0, i);
  return t;
}

void validate_tree(const TreePattern& t) {
  if (t.k < 1) throw MalformedTree("tree must have at least one node");
  for (const auto& [a, b] : t.edges) {
    if (a < 0 || b < 0 || a >= t.k || b >= t.k) throw MalformedTree("edge endpoint out of range");
    if (a == b) throw MalformedTree("cycle: self-loop");
  }
  // Union-find: any edge joining one component twice closes a cycle.
  std::vector<int> root(static_cast<std::size_t>(t.k));
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[static_cast<std::size_t>(x)] != x) {
      root[static_cast<std::size_t>(x)] = root[static_cast<std::size_t>(root[static_cast<std::size_t>(x)])];
      x = root[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& [a, b] : t.edges) {
    const int ra = find(a);
    const int rb = find(b);
    if (ra == rb) throw MalformedTree("cycle");
    root[static_cast<std::size_t>(ra)] = rb;
  }
  if (static_cast<int>(t.edges.size()) != t.k - 1) throw MalformedTree("disconnected");
}

RootedTree root_tree(const TreePattern& t) {
  validate_tree(t);
  const auto k = static_cast<std::size_t>(t.k);
  std::vector<std::vector<int>> adj(k);
  for (const auto& [a, b] : t.edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  RootedTree r{std::vector<int>(k, -1), std::vector<std::vector<int>>(k), {}};
  std::vector<int> stack{0};
  std::vector<char> seen(k, 0);
  seen[0] = 1;
  while (!stack.empty()) {
    const int node = stack.back();
    stack.pop_back();
    r.preorder.push_back(node);
    auto& nb = adj[static_cast<std::size_t>(node)];
    std::sort(nb.begin(), nb.end());
    for (auto it = nb.rbegin(); it != nb.rend(); ++it) {
      if (seen[static_cast<std::size_t>(*it)]) continue;
      seen[static_cast<std::size_t>(*it)] = 1;
      r.parent[static_cast<std::size_t>(*it)] = node;
      stack.push_back(*it);
    }
    for (int c : nb) {
      if (r.parent[static_cast<std::size_t>(c)] == node) r.children[static_cast<std::size_t>(node)].push_back(c);
    }
  }
  return r;
}

}  // namespace kpath
