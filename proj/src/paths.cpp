#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "fewseg/force.hpp"
#include "fewseg/geometry.hpp"

namespace fewseg {

namespace {

std::string label(Vertex v) { return std::to_string(v + 1); }

std::pair<Vertex, Vertex> key(Vertex a, Vertex b) { return {std::min(a, b), std::max(a, b)}; }

// Stable Kahn order of the precedence "v internal in P_i, endpoint of P_j ->
// i before j". Returns the order and the paths left on a cycle.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> precedence_order(const PathSet& paths, int n) {
  std::vector<long> owner(n, -1);
  for (std::size_t i = 0; i < paths.size(); ++i)
    for (std::size_t t = 1; t + 1 < paths[i].size(); ++t) owner[paths[i][t]] = long(i);
  std::vector<std::set<std::size_t>> after(paths.size());
  std::vector<int> indegree(paths.size(), 0);
  for (std::size_t j = 0; j < paths.size(); ++j) {
    if (paths[j].empty()) continue;
    for (Vertex v : {paths[j].front(), paths[j].back()}) {
      const long i = owner[v];
      if (i >= 0 && std::size_t(i) != j && after[i].insert(j).second) ++indegree[j];
    }
  }
  std::set<std::size_t> ready;
  for (std::size_t j = 0; j < paths.size(); ++j)
    if (indegree[j] == 0) ready.insert(j);
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    const std::size_t i = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(i);
    for (std::size_t j : after[i])
      if (--indegree[j] == 0) ready.insert(j);
  }
  std::vector<std::size_t> stuck;
  for (std::size_t j = 0; j < paths.size(); ++j)
    if (indegree[j] > 0) stuck.push_back(j);
  return {order, stuck};
}

}  // namespace

PathSetCheck validate_path_set(const Graph& graph, const PathSet& paths) {
  using K = PathSetError::Kind;
  const int n = graph.vertex_count();
  std::set<std::pair<Vertex, Vertex>> graph_edges;
  for (const Edge& e : graph.edges()) graph_edges.insert(key(e.u, e.v));

  std::map<std::pair<Vertex, Vertex>, std::size_t> used;
  std::vector<long> internal_of(n, -1);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const auto& p = paths[i];
    const std::string name = "path " + std::to_string(i + 1);
    if (p.size() < 3) throw PathSetError(K::not_a_path, "not a path in graph: " + name + " has fewer than 2 edges");
    std::set<Vertex> seen;
    for (Vertex v : p) {
      if (v < 0 || v >= n) throw PathSetError(K::not_a_path, "not a path in graph: " + name + " has an unknown vertex");
      if (!seen.insert(v).second)
        throw PathSetError(K::not_a_path, "not a path in graph: " + name + " repeats vertex " + label(v));
    }
    for (std::size_t t = 0; t + 1 < p.size(); ++t) {
      const auto e = key(p[t], p[t + 1]);
      if (!graph_edges.count(e))
        throw PathSetError(K::not_a_path, "not a path in graph: " + name + " uses non-edge " + label(p[t]) + "-" +
                                              label(p[t + 1]));
      if (auto [it, fresh] = used.emplace(e, i); !fresh)
        throw PathSetError(K::not_edge_disjoint, "not edge-disjoint: paths " + std::to_string(it->second + 1) +
                                                     " and " + std::to_string(i + 1) + " share edge " +
                                                     label(e.first) + "-" + label(e.second));
    }
    for (std::size_t t = 1; t + 1 < p.size(); ++t) {
      const Vertex v = p[t];
      if (internal_of[v] != -1)
        throw PathSetError(K::internal_vertex_conflict, "internal-vertex conflict: vertex " + label(v) +
                                                            " is internal to paths " +
                                                            std::to_string(internal_of[v] + 1) + " and " +
                                                            std::to_string(i + 1));
      internal_of[v] = long(i);
    }
  }

  const auto [order, stuck] = precedence_order(paths, n);
  if (!stuck.empty())
    throw PathSetError(K::ordering_cycle, "ordering cycle: no input order satisfies path " +
                                              std::to_string(stuck.front() + 1));
  PathSetCheck out;
  for (std::size_t i : order) out.paths.push_back(paths[i]);
  out.status = std::is_sorted(order.begin(), order.end()) ? PathSetCheck::Status::ok : PathSetCheck::Status::reordered;
  return out;
}

PathSet select_paths(const Graph& graph, const Drawing& base, double max_turn_deg, int min_len) {
  const auto& edges = graph.edges();
  const auto& P = base.positions;
  const int n = graph.vertex_count();
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    incident[edges[i].u].push_back(i);
    incident[edges[i].v].push_back(i);
  }

  // Through-pairs (v, e, f) ranked by the turn from e into f at v.
  struct Pair {
    double turn;
    Vertex v;
    std::size_t e, f;
  };
  std::vector<Pair> cand;
  for (Vertex v = 0; v < n; ++v) {
    const auto& inc = incident[v];
    for (std::size_t a = 0; a < inc.size(); ++a)
      for (std::size_t b = a + 1; b < inc.size(); ++b) {
        const RVec x = P[edges[inc[a]].other(v)] - P[v], y = P[edges[inc[b]].other(v)] - P[v];
        if (norm(x) == 0 || norm(y) == 0) continue;
        const double inner = std::atan2(std::abs(cross(x, y)), dot(x, y)) * 180.0 / std::numbers::pi;
        const double turn = 180.0 - inner;
        if (turn <= max_turn_deg) cand.push_back({turn, v, inc[a], inc[b]});
      }
  }
  std::stable_sort(cand.begin(), cand.end(), [](const Pair& a, const Pair& b) {
    return std::tie(a.turn, a.v, a.e, a.f) < std::tie(b.turn, b.v, b.e, b.f);
  });

  // link[e][end]: neighbouring edge through edge e's endpoint u (0) or v (1)
  std::vector<std::array<long, 2>> link(edges.size(), {-1, -1});
  auto end_of = [&](std::size_t e, Vertex v) { return edges[e].u == v ? 0 : 1; };
  std::vector<char> vertex_used(n, 0);
  std::vector<std::size_t> uf(edges.size());
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](std::size_t x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (const Pair& c : cand) {
    if (vertex_used[c.v]) continue;
    // joining two ends of one chain would close a cycle
    if (find(c.e) == find(c.f)) continue;
    vertex_used[c.v] = 1;
    link[c.e][end_of(c.e, c.v)] = long(c.f);
    link[c.f][end_of(c.f, c.v)] = long(c.e);
    uf[find(c.e)] = find(c.f);
  }

  PathSet chains;
  std::vector<char> done(edges.size(), 0);
  for (std::size_t s = 0; s < edges.size(); ++s) {
    if (done[s]) continue;
    int free_end = link[s][0] == -1 ? 0 : (link[s][1] == -1 ? 1 : -1);
    if (free_end == -1) continue;  // interior of a chain, reached from its start
    std::vector<Vertex> verts{free_end == 0 ? edges[s].u : edges[s].v};
    std::size_t cur = s;
    int entry = free_end;
    while (true) {
      done[cur] = 1;
      const Vertex exit_v = entry == 0 ? edges[cur].v : edges[cur].u;
      verts.push_back(exit_v);
      const long nxt = link[cur][1 - entry];
      if (nxt < 0) break;
      cur = std::size_t(nxt);
      entry = end_of(cur, exit_v);
    }
    // keep the simple prefix
    std::set<Vertex> seen;
    std::size_t cut = 0;
    while (cut < verts.size() && seen.insert(verts[cut]).second) ++cut;
    verts.resize(cut);
    if (int(verts.size()) - 1 >= std::max(2, min_len)) chains.push_back(std::move(verts));
  }

  // Drop paths caught in precedence cycles until an order exists.
  while (true) {
    const auto [order, stuck] = precedence_order(chains, n);
    if (stuck.empty()) {
      PathSet out;
      for (std::size_t i : order) out.push_back(chains[i]);
      return out;
    }
    chains.erase(chains.begin() + long(stuck.back()));
  }
}

PathSet parse_path_set(const std::string& text) {
  PathSet out;
  std::istringstream in(text);
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::vector<Vertex> path;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long v = 0;
      try {
        v = std::stol(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || v < 1)
        throw std::invalid_argument("paths line " + std::to_string(lineno) + ": bad vertex label '" + tok + "'");
      path.push_back(Vertex(v - 1));
    }
    if (!path.empty()) out.push_back(std::move(path));
  }
  return out;
}

std::string format_path_set(const PathSet& paths) {
  std::string out;
  for (const auto& p : paths) {
    for (std::size_t i = 0; i < p.size(); ++i) out += (i ? " " : "") + label(p[i]);
    out += '\n';
  }
  return out;
}

}  // namespace fewseg
