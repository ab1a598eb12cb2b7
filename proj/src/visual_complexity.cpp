#include "fewseg/visual_complexity.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <type_traits>

namespace fewseg {

namespace {

bool straight_through(const IVec& a, const IVec& b) {
  return !(a == IVec{}) && !(b == IVec{}) && cross(a, b) == 0 && dot(a, b) < 0;
}

struct RealStraight {
  double eps;
  bool operator()(const RVec& a, const RVec& b) const {
    return norm(a) > 0 && norm(b) > 0 && parallel(a, b, eps) && dot(a, b) < 0;
  }
};

template <class T, class Straight>
SegmentPartition segments_impl(const BasicDrawing<T>& d, Straight straight) {
  const auto& edges = d.graph.edges();
  const std::size_t m = edges.size();
  const int n = d.graph.vertex_count();
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t i = 0; i < m; ++i) {
    incident[edges[i].u].push_back(i);
    incident[edges[i].v].push_back(i);
  }
  // link[i][k]: edge chained to edge i through endpoint k (0 = u, 1 = v)
  std::vector<std::array<long, 2>> link(m, {-1, -1});
  auto end_index = [&](std::size_t e, Vertex v) { return edges[e].u == v ? 0 : 1; };
  auto away = [&](std::size_t e, Vertex v) {
    return d.positions[edges[e].other(v)] - d.positions[v];
  };
  for (Vertex v = 0; v < n; ++v) {
    const auto& inc = incident[v];
    for (std::size_t a = 0; a < inc.size(); ++a) {
      const std::size_t e = inc[a];
      if (link[e][end_index(e, v)] != -1) continue;
      for (std::size_t b = a + 1; b < inc.size(); ++b) {
        const std::size_t f = inc[b];
        if (link[f][end_index(f, v)] != -1) continue;
        if (straight(away(e, v), away(f, v))) {
          link[e][end_index(e, v)] = long(f);
          link[f][end_index(f, v)] = long(e);
          break;
        }
      }
    }
  }

  SegmentPartition out;
  std::vector<char> used(m, 0);
  auto walk_from = [&](std::size_t start, int free_end) {
    Segment seg;
    std::size_t cur = start;
    int entry = free_end;  // endpoint through which we entered `cur`
    while (true) {
      used[cur] = 1;
      seg.edges.push_back(cur);
      const int exit = 1 - entry;
      const long nxt = link[cur][exit];
      if (nxt < 0) break;
      const Vertex through = exit == 0 ? edges[cur].u : edges[cur].v;
      cur = std::size_t(nxt);
      entry = end_index(cur, through);
    }
    if constexpr (std::is_integral_v<T>) {
      const Edge& e = edges[seg.edges.front()];
      const IVec v = d.positions[e.v] - d.positions[e.u];
      seg.direction = v == IVec{} ? IVec{} : primitive_vector(v);
    }
    out.segments.push_back(std::move(seg));
  };
  for (std::size_t i = 0; i < m; ++i) {
    if (used[i]) continue;
    if (link[i][0] == -1) walk_from(i, 0);
    else if (link[i][1] == -1) walk_from(i, 1);
  }
  // Straight chains cannot close up; this only guards against degenerate input.
  for (std::size_t i = 0; i < m; ++i)
    if (!used[i]) walk_from(i, 0);
  out.count = out.segments.size();
  return out;
}

template <class T>
CrossingStats crossings_impl(const BasicDrawing<T>& d) {
  const auto& edges = d.graph.edges();
  const auto& P = d.positions;
  const std::size_t m = edges.size();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  auto min_x = [&](std::size_t e) { return std::min(P[edges[e].u].x, P[edges[e].v].x); };
  auto max_x = [&](std::size_t e) { return std::max(P[edges[e].u].x, P[edges[e].v].x); };
  auto min_y = [&](std::size_t e) { return std::min(P[edges[e].u].y, P[edges[e].v].y); };
  auto max_y = [&](std::size_t e) { return std::max(P[edges[e].u].y, P[edges[e].v].y); };
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return min_x(a) < min_x(b); });

  CrossingStats stats;
  std::vector<std::size_t> active;
  for (std::size_t e : order) {
    const T left = min_x(e);
    std::erase_if(active, [&](std::size_t f) { return max_x(f) < left; });
    const Edge& E = edges[e];
    for (std::size_t f : active) {
      if (max_y(f) < min_y(e) || max_y(e) < min_y(f)) continue;
      const Edge& F = edges[f];
      const auto a = P[E.u], b = P[E.v], c = P[F.u], dd = P[F.v];
      const bool collinear = orientation(a, b, c) == 0 && orientation(a, b, dd) == 0;
      Vertex shared = -1;
      if (E.touches(F.u)) shared = F.u;
      else if (E.touches(F.v)) shared = F.v;
      if (shared != -1) {
        // Incident edges meet elsewhere only when they overlap.
        const auto s = P[shared];
        const auto x = P[E.other(shared)] - s, y = P[F.other(shared)] - s;
        if (collinear && dot(x, y) > 0) {
          ++stats.crossings;
          ++stats.overlaps;
        }
        continue;
      }
      if (segments_intersect(a, b, c, dd)) {
        ++stats.crossings;
        if (collinear) ++stats.overlaps;
      }
    }
    active.push_back(e);
  }
  return stats;
}

template <class T>
bool planar_impl(const BasicDrawing<T>& d) {
  const auto& P = d.positions;
  std::vector<Point<T>> sorted(P.begin(), P.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (crossings_impl(d).crossings != 0) return false;
  for (const Edge& e : d.graph.edges()) {
    const auto a = P[e.u], b = P[e.v];
    for (Vertex w = 0; w < int(P.size()); ++w) {
      if (e.touches(w)) continue;
      if (in_segment_interior(a, b, P[w])) return false;
    }
  }
  return true;
}

int odd_count(const std::vector<int>& deg) {
  return int(std::count_if(deg.begin(), deg.end(), [](int k) { return k % 2 == 1; }));
}

}  // namespace

SegmentPartition count_segments(const GridDrawing& d) { return segments_impl(d, straight_through); }

SegmentPartition count_segments(const Drawing& d, double eps) { return segments_impl(d, RealStraight{eps}); }

int odd_degree_bound(const RootedTree& tree) { return odd_degree_bound(tree.as_graph()); }

int odd_degree_bound(const Graph& tree) {
  if (tree.vertex_count() <= 1) return 0;
  return odd_count(tree.degrees()) / 2;
}

CrossingStats crossing_stats(const GridDrawing& d) { return crossings_impl(d); }
CrossingStats crossing_stats(const Drawing& d) { return crossings_impl(d); }

bool is_planar_drawing(const GridDrawing& d) { return planar_impl(d); }
bool is_planar_drawing(const Drawing& d) { return planar_impl(d); }

}  // namespace fewseg
