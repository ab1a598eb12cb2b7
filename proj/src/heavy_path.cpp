#include "fewseg/heavy_path.hpp"

namespace fewseg {

HeavyPathDecomposition heavy_path_decomposition(const RootedTree& tree) {
  const int n = tree.vertex_count();
  HeavyPathDecomposition hpd;
  hpd.heavy_child.assign(n, -1);
  hpd.path_of.assign(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    int best = -1;
    for (Vertex c : tree.children(v)) {
      // children are sorted ascending, so strict '>' keeps the lowest index on ties
      if (tree.subtree_size(c) > best) {
        best = tree.subtree_size(c);
        hpd.heavy_child[v] = c;
      }
    }
  }
  for (Vertex v : tree.preorder()) {
    if (hpd.path_of[v] != -1) continue;
    const int id = int(hpd.paths.size());
    hpd.paths.push_back(heavy_path_from(tree, hpd, v));
    for (Vertex w : hpd.paths.back()) hpd.path_of[w] = id;
  }
  return hpd;
}

std::vector<Vertex> heavy_path_from(const RootedTree&, const HeavyPathDecomposition& hpd, Vertex v) {
  std::vector<Vertex> path{v};
  while (hpd.heavy_child[path.back()] != -1) path.push_back(hpd.heavy_child[path.back()]);
  return path;
}

}  // namespace fewseg
