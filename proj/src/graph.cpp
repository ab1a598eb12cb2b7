#include "fewseg/graph.hpp"

#include <algorithm>
#include <set>

namespace fewseg {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw GraphError("negative vertex count");
  edges_.reserve(edges.size());
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw GraphError("edge (" + std::to_string(u + 1) + "," + std::to_string(v + 1) +
                     ") references a vertex outside 1.." + std::to_string(n_));
  if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u + 1));
  if (has_edge(u, v))
    throw GraphError("duplicate edge (" + std::to_string(u + 1) + "," + std::to_string(v + 1) + ")");
  edges_.push_back({u, v});
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  return std::any_of(edges_.begin(), edges_.end(), [&](const Edge& e) {
    return (e.u == u && e.v == v) || (e.u == v && e.v == u);
  });
}

std::vector<std::vector<Vertex>> Graph::adjacency() const {
  std::vector<std::vector<Vertex>> adj(n_);
  for (const Edge& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(n_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  const auto adj = adjacency();
  std::vector<char> seen(n_, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n_;
}

RootedTree::RootedTree(std::vector<Vertex> parent) : parent_(std::move(parent)) {
  const int n = int(parent_.size());
  if (n == 0) throw GraphError("tree must have at least one vertex");
  children_.assign(n, {});
  for (Vertex v = 0; v < n; ++v) {
    const Vertex p = parent_[v];
    if (p == -1) {
      if (root_ != -1) throw GraphError("tree has more than one root");
      root_ = v;
    } else if (p < 0 || p >= n || p == v) {
      throw GraphError("invalid parent for vertex " + std::to_string(v + 1));
    } else {
      children_[p].push_back(v);
    }
  }
  if (root_ == -1) throw GraphError("tree has no root");

  depth_.assign(n, 0);
  preorder_.reserve(n);
  std::vector<Vertex> stack{root_};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    preorder_.push_back(v);
    const auto& ch = children_[v];
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) {
      depth_[*it] = depth_[v] + 1;
      stack.push_back(*it);
    }
  }
  if (int(preorder_.size()) != n) throw GraphError("parent map is cyclic or disconnected");

  subtree_size_.assign(n, 1);
  for (auto it = preorder_.rbegin(); it != preorder_.rend(); ++it)
    if (parent_[*it] != -1) subtree_size_[parent_[*it]] += subtree_size_[*it];
}

RootedTree RootedTree::from_graph(const Graph& g, Vertex root) {
  if (!g.is_tree()) throw GraphError("graph is not a tree");
  if (root < 0 || root >= g.vertex_count()) throw GraphError("root outside vertex range");
  const auto adj = g.adjacency();
  std::vector<Vertex> parent(g.vertex_count(), -2);
  parent[root] = -1;
  std::vector<Vertex> stack{root};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adj[v]) {
      if (parent[w] == -2) {
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  return RootedTree(std::move(parent));
}

int RootedTree::height() const { return *std::max_element(depth_.begin(), depth_.end()); }

std::vector<Vertex> RootedTree::postorder() const {
  std::vector<Vertex> out;
  out.reserve(parent_.size());
  // Iterative post-order with children in ascending order.
  std::vector<std::pair<Vertex, std::size_t>> stack{{root_, 0}};
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next < children_[v].size()) {
      Vertex c = children_[v][next++];
      stack.push_back({c, 0});
    } else {
      out.push_back(v);
      stack.pop_back();
    }
  }
  return out;
}

Graph RootedTree::as_graph() const {
  Graph g(vertex_count());
  for (Vertex v = 0; v < vertex_count(); ++v)
    if (parent_[v] != -1) g.add_edge(parent_[v], v);
  return g;
}

Drawing to_real(const GridDrawing& d) {
  Drawing out{d.graph, {}};
  out.positions.reserve(d.positions.size());
  for (const IVec& p : d.positions) out.positions.push_back({double(p.x), double(p.y)});
  return out;
}

}  // namespace fewseg
