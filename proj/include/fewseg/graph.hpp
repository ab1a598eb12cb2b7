#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fewseg {

// Vertices are dense 0-based indices internally. Files and JSON use the
// 1-based labels (index + 1).
using Vertex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  bool operator==(const Edge&) const = default;
  bool touches(Vertex w) const { return u == w || v == w; }
  Vertex other(Vertex w) const { return w == u ? v : u; }
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Undirected simple graph. Edge order is preserved as given.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n) {}
  /// Throws GraphError on self-loops, duplicates or out-of-range indices.
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  void add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;
  std::vector<std::vector<Vertex>> adjacency() const;
  std::vector<int> degrees() const;
  bool is_connected() const;
  bool is_tree() const { return n_ >= 1 && edge_count() + 1 == std::size_t(n_) && is_connected(); }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

/// Rooted tree stored as a parent array; parent[root] == -1.
class RootedTree {
 public:
  RootedTree() = default;
  RootedTree(std::vector<Vertex> parent);
  /// Orients a tree-shaped graph away from `root`.
  static RootedTree from_graph(const Graph& g, Vertex root);

  int vertex_count() const { return int(parent_.size()); }
  Vertex root() const { return root_; }
  Vertex parent(Vertex v) const { return parent_[v]; }
  const std::vector<Vertex>& parents() const { return parent_; }
  /// Children in ascending index order.
  const std::vector<Vertex>& children(Vertex v) const { return children_[v]; }
  int subtree_size(Vertex v) const { return subtree_size_[v]; }
  int depth(Vertex v) const { return depth_[v]; }
  /// Length of the longest root-leaf path, in edges.
  int height() const;
  /// Pre-order with children visited in ascending index order.
  const std::vector<Vertex>& preorder() const { return preorder_; }
  std::vector<Vertex> postorder() const;
  /// Edges (parent, child) ordered by child index.
  Graph as_graph() const;

 private:
  std::vector<Vertex> parent_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<int> subtree_size_;
  std::vector<int> depth_;
  std::vector<Vertex> preorder_;
  Vertex root_ = -1;
};

template <class T>
struct Point {
  T x{};
  T y{};

  bool operator==(const Point&) const = default;
  auto operator<=>(const Point&) const = default;
  Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
  Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
  Point operator-() const { return {-x, -y}; }
  Point operator*(T k) const { return {x * k, y * k}; }
  Point& operator+=(const Point& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
};

using IVec = Point<std::int64_t>;
using RVec = Point<double>;

/// Straight-line drawing: one position per vertex of `graph`.
template <class T>
struct BasicDrawing {
  Graph graph;
  std::vector<Point<T>> positions;
};

/// Integer grid drawing (tree layouts).
using GridDrawing = BasicDrawing<std::int64_t>;
/// Real-coordinate drawing (force layouts).
using Drawing = BasicDrawing<double>;

Drawing to_real(const GridDrawing& d);

}  // namespace fewseg
