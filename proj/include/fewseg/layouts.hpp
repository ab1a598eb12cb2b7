#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fewseg/fewsegments.hpp"
#include "fewseg/force.hpp"
#include "fewseg/graph.hpp"
#include "fewseg/tree_layout.hpp"

namespace fewseg {

class LayoutError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LayoutOptions {
  QuadParams quad;
  FewSegParams fewseg;
  ForceParams force;
  /// fdfewseg: explicit paths; otherwise select_paths on a forcedir drawing.
  std::optional<PathSet> paths;
  double max_turn_deg = 30.0;
  int min_path_len = 2;
};

struct LayoutResult {
  Drawing drawing;
  std::optional<GridDrawing> grid;  // exact coordinates of tree layouts
  PathSet paths;                    // fdfewseg only
};

/// tidier, quad, fewsegments, forcedir, fdfewseg
const std::vector<std::string>& layout_names();
bool is_tree_layout(const std::string& name);

/// Tree layouts need a tree (rooted at `root`, default vertex 0) and throw
/// LayoutError otherwise. Unknown names throw std::invalid_argument.
LayoutResult run_layout(const std::string& name, const Graph& graph, std::optional<Vertex> root,
                        const LayoutOptions& options);

}  // namespace fewseg
