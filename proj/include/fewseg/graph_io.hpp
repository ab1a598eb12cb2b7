#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fewseg/graph.hpp"

namespace fewseg {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parsed graph file. `labels[i]` is the external id of vertex i; edge
/// lists keep their integer labels (1..n), GraphML ids are renumbered 1..n in
/// order of first appearance.
struct GraphFile {
  Graph graph;
  std::vector<std::string> labels;
  std::optional<Vertex> root;  // from a "# root: R" line
  std::string generator;       // from a "# generator: ..." line
  bool is_tree() const { return graph.is_tree(); }
  /// Rooted at the annotated root, or at vertex 1.
  RootedTree rooted() const;
};

/// Edge list: one "u v" pair per line, 1-based labels, '#' comments. The
/// directives "# vertices: N", "# root: R" and "# generator: text" are
/// honoured. Strict: any malformed line, self-loop or duplicate edge is a
/// ParseError naming the line.
GraphFile parse_edge_list(const std::string& text);

/// GraphML subset: <node id=...> and <edge source=... target=...>.
GraphFile parse_graphml(const std::string& text);

/// Dispatches on content: GraphML if the file starts with '<', else edge list.
GraphFile load_graph_file(const std::string& path);

std::string format_edge_list(const Graph& g, std::optional<Vertex> root = std::nullopt,
                             const std::string& generator = {});

/// Writes `content` to a temporary sibling and renames it over `path`.
void write_file_atomic(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace fewseg
