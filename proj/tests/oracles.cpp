#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "fewseg/generators.hpp"

namespace oracle {

namespace {

template <class T>
struct P2 {
  T x, y;
};

// orientation with exact arithmetic for integers, plain for doubles
template <class T>
int orient(P2<T> a, P2<T> b, P2<T> c) {
  if constexpr (std::is_integral_v<T>) {
    const __int128 v = __int128(b.x - a.x) * (c.y - a.y) - __int128(b.y - a.y) * (c.x - a.x);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
  } else {
    const double v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
  }
}

template <class T>
bool within(P2<T> a, P2<T> b, P2<T> p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

template <class T>
bool closed_intersect(P2<T> a, P2<T> b, P2<T> c, P2<T> d) {
  const int d1 = orient(c, d, a), d2 = orient(c, d, b), d3 = orient(a, b, c), d4 = orient(a, b, d);
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && within(c, d, a)) return true;
  if (d2 == 0 && within(c, d, b)) return true;
  if (d3 == 0 && within(a, b, c)) return true;
  if (d4 == 0 && within(a, b, d)) return true;
  return false;
}

template <class D>
std::size_t crossings_impl(const D& dr) {
  using T = decltype(dr.positions[0].x);
  auto at = [&](int v) { return P2<T>{dr.positions[v].x, dr.positions[v].y}; };
  const auto& E = dr.graph.edges();
  std::size_t count = 0;
  for (std::size_t i = 0; i < E.size(); ++i)
    for (std::size_t j = i + 1; j < E.size(); ++j) {
      const auto e = E[i], f = E[j];
      int shared = -1;
      if (e.u == f.u || e.u == f.v) shared = e.u;
      if (e.v == f.u || e.v == f.v) shared = e.v;
      if (shared >= 0) {
        // only an overlap along a common ray counts
        const int a = e.u == shared ? e.v : e.u, b = f.u == shared ? f.v : f.u;
        const P2<T> s = at(shared), pa = at(a), pb = at(b);
        if (orient(s, pa, pb) != 0) continue;
        const T dx1 = pa.x - s.x, dy1 = pa.y - s.y, dx2 = pb.x - s.x, dy2 = pb.y - s.y;
        if (dx1 * dx2 + dy1 * dy2 > 0) ++count;
        continue;
      }
      if (closed_intersect(at(e.u), at(e.v), at(f.u), at(f.v))) ++count;
    }
  return count;
}

}  // namespace

std::size_t crossings(const GridDrawing& d) { return crossings_impl(d); }
std::size_t crossings(const Drawing& d) { return crossings_impl(d); }

std::size_t segments(const GridDrawing& d) {
  const auto& E = d.graph.edges();
  std::vector<std::size_t> parent(E.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (std::size_t i = 0; i < E.size(); ++i)
    for (std::size_t j = i + 1; j < E.size(); ++j) {
      const auto e = E[i], f = E[j];
      int s = -1;
      if (e.u == f.u || e.u == f.v) s = e.u;
      if (e.v == f.u || e.v == f.v) s = e.v;
      if (s < 0) continue;
      const IVec a = d.positions[e.u == s ? e.v : e.u] - d.positions[s];
      const IVec b = d.positions[f.u == s ? f.v : f.u] - d.positions[s];
      if (__int128(a.x) * b.y == __int128(a.y) * b.x && __int128(a.x) * b.x + __int128(a.y) * b.y < 0)
        parent[find(i)] = find(j);
    }
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < E.size(); ++i) roots.insert(find(i));
  return roots.size();
}

std::vector<int> prufer_encode(const Graph& tree) {
  const int n = tree.vertex_count();
  auto adj = tree.adjacency();
  std::vector<std::set<int>> nb(n);
  for (int v = 0; v < n; ++v) nb[v] = std::set<int>(adj[v].begin(), adj[v].end());
  std::vector<int> seq;
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (nb[v].size() == 1) leaves.insert(v);
  for (int step = 0; step < n - 2; ++step) {
    const int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    const int p = *nb[leaf].begin();
    seq.push_back(p + 1);
    nb[p].erase(leaf);
    nb[leaf].clear();
    if (nb[p].size() == 1) leaves.insert(p);
  }
  return seq;
}

std::vector<CorpusTree> tree_corpus(int count) {
  std::vector<CorpusTree> out;
  for (int i = 0; i < count; ++i) {
    const int c = i % 6;
    fewseg::TreeSpec spec;
    spec.size_class = c / 3 + 1;
    spec.depth_class = fewseg::DepthClass(c % 3);
    spec.seed = 20240u + std::uint64_t(i);
    out.push_back({"s" + std::to_string(spec.size_class) + "-" + fewseg::to_string(spec.depth_class) + "-" +
                       std::to_string(i),
                   fewseg::random_tree(spec)});
  }
  return out;
}

std::vector<double> edge_angles(const Drawing& d, fewseg::Vertex v) {
  std::vector<double> a;
  for (const auto& e : d.graph.edges()) {
    if (!e.touches(v)) continue;
    const auto w = d.positions[e.other(v)];
    double deg = std::atan2(w.y - d.positions[v].y, w.x - d.positions[v].x) * 180.0 / M_PI;
    if (deg < 0) deg += 360.0;
    a.push_back(deg);
  }
  std::sort(a.begin(), a.end());
  return a;
}

std::vector<double> angle_gaps(const Drawing& d, fewseg::Vertex v) {
  const auto a = edge_angles(d, v);
  std::vector<double> gaps;
  if (a.size() < 2) return gaps;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) gaps.push_back(a[i + 1] - a[i]);
  gaps.push_back(360.0 - a.back() + a.front());
  return gaps;
}

GridChoice exhaustive_rounding(const IVec& v, int s, const std::function<std::int64_t(const IVec&)>& size_s,
                               const std::function<std::int64_t(const IVec&)>& size_partner) {
  const std::int64_t x = std::abs(v.x), y = std::abs(v.y);
  const std::int64_t sx = v.x < 0 ? -1 : 1, sy = v.y < 0 ? -1 : 1;
  bool have = false;
  GridChoice best;
  for (std::int64_t i = 0; i <= s * x; ++i)
    for (std::int64_t j = 0; j <= s * y; ++j) {
      if (x == 0 ? i != 0 : (y + j) * x > y * (x + i)) continue;
      const IVec w{v.x + sx * i, v.y + sy * j};
      std::int64_t size = size_s(w);
      if (size_partner) size = std::max(size, size_partner(IVec{-w.x, -w.y}));
      const GridChoice c{i, j, i + j + size};
      auto rank = [](const GridChoice& g) { return std::make_tuple(g.cost, g.i + g.j, g.i, g.j); };
      if (!have || rank(c) < rank(best)) {
        best = c;
        have = true;
      }
    }
  return best;
}

RootedTree random_recursive_tree(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<fewseg::Vertex> parent(n, -1);
  for (int v = 1; v < n; ++v) parent[v] = int(rng() % std::uint64_t(v));
  return RootedTree(parent);
}

}  // namespace oracle
