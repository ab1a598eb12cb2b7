#pragma once

#include <vector>

#include "fewseg/graph.hpp"

namespace fewseg {

/// Heavy/light classification of a rooted tree. The heavy child of an
/// internal vertex is a child of maximum subtree size, lowest index on ties.
struct HeavyPathDecomposition {
  std::vector<Vertex> heavy_child;  // -1 for leaves
  /// Maximal heavy paths, each listed top-down; ordered by the pre-order
  /// position of their head.
  std::vector<std::vector<Vertex>> paths;
  /// Index into `paths` for every vertex.
  std::vector<int> path_of;

  bool is_heavy_edge(const RootedTree& t, Vertex child) const {
    const Vertex p = t.parent(child);
    return p != -1 && heavy_child[p] == child;
  }
};

HeavyPathDecomposition heavy_path_decomposition(const RootedTree& tree);

/// Heavy path starting at v and following heavy children downwards.
std::vector<Vertex> heavy_path_from(const RootedTree& tree, const HeavyPathDecomposition& hpd, Vertex v);

}  // namespace fewseg
