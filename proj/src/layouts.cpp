#include "fewseg/layouts.hpp"

#include <algorithm>

namespace fewseg {

const std::vector<std::string>& layout_names() {
  static const std::vector<std::string> names{"tidier", "quad", "fewsegments", "forcedir", "fdfewseg"};
  return names;
}

bool is_tree_layout(const std::string& name) {
  return name == "tidier" || name == "quad" || name == "fewsegments";
}

LayoutResult run_layout(const std::string& name, const Graph& graph, std::optional<Vertex> root,
                        const LayoutOptions& options) {
  const auto& names = layout_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw std::invalid_argument("unknown layout '" + name + "'");
  LayoutResult out;
  if (is_tree_layout(name)) {
    if (!graph.is_tree()) throw LayoutError(name + " needs a tree, got a graph that is not one");
    const RootedTree tree = RootedTree::from_graph(graph, root.value_or(0));
    GridDrawing g;
    if (name == "tidier") g = layout_tidier(tree);
    else if (name == "quad") g = layout_quad(tree, options.quad);
    else g = layout_fewsegments(tree, options.fewseg);
    // tree layouts list edges by child; present them in the input's order
    g.graph = graph;
    out.drawing = to_real(g);
    out.grid = std::move(g);
    return out;
  }
  if (name == "forcedir") {
    out.drawing = layout_force_directed(graph, options.force);
    return out;
  }
  if (options.paths) {
    out.paths = validate_path_set(graph, *options.paths).paths;
  } else {
    const Drawing base = layout_force_directed(graph, options.force);
    out.paths = select_paths(graph, base, options.max_turn_deg, options.min_path_len);
  }
  out.drawing = layout_fdfewseg(graph, out.paths, options.force);
  return out;
}

}  // namespace fewseg
