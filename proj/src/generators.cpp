#include "fewseg/generators.hpp"

#include <limits>
#include <queue>

namespace fewseg {

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
  const std::uint64_t span = std::uint64_t(hi) - std::uint64_t(lo);
  if (span == std::numeric_limits<std::uint64_t>::max()) return std::int64_t(next());
  const std::uint64_t range = span + 1;
  // reject the incomplete top block
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do x = next();
  while (x >= limit);
  return lo + std::int64_t(x % range);
}

Graph prufer_decode(const std::vector<int>& sequence, int n) {
  if (n < 2) throw std::invalid_argument("prufer_decode: n must be at least 2");
  if (sequence.size() != std::size_t(n - 2))
    throw std::invalid_argument("prufer_decode: sequence length must be n-2");
  std::vector<int> degree(n + 1, 1);
  for (int a : sequence) {
    if (a < 1 || a > n) throw std::invalid_argument("prufer_decode: label out of range");
    ++degree[a];
  }
  // min-heap of current leaves
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 1; v <= n; ++v)
    if (degree[v] == 1) leaves.push(v);
  Graph g(n);
  for (int a : sequence) {
    const int leaf = leaves.top();
    leaves.pop();
    g.add_edge(leaf - 1, a - 1);
    if (--degree[a] == 1) leaves.push(a);
  }
  const int u = leaves.top();
  leaves.pop();
  g.add_edge(u - 1, leaves.top() - 1);
  return g;
}

int tree_size(int size_class) {
  if (size_class == 1) return 20;
  if (size_class == 2) return 40;
  throw std::invalid_argument("size class must be 1 or 2");
}

int target_depth(int size_class, DepthClass depth_class) {
  static const int table[2][3] = {{8, 5, 3}, {14, 9, 5}};
  tree_size(size_class);
  return table[size_class - 1][int(depth_class)];
}

DepthClass parse_depth_class(const std::string& s) {
  if (s == "deep") return DepthClass::deep;
  if (s == "balanced") return DepthClass::balanced;
  if (s == "wide") return DepthClass::wide;
  throw std::invalid_argument("unknown depth class: " + s);
}

std::string to_string(DepthClass c) {
  switch (c) {
    case DepthClass::deep: return "deep";
    case DepthClass::balanced: return "balanced";
    case DepthClass::wide: return "wide";
  }
  return "?";
}

RootedTree random_labeled_tree(int n, Rng& rng) {
  if (n == 1) return RootedTree(std::vector<Vertex>{-1});
  std::vector<int> seq(n - 2);
  for (int& a : seq) a = int(rng.uniform_int(1, n));
  return RootedTree::from_graph(prufer_decode(seq, n), 0);
}

RootedTree random_tree(const TreeSpec& spec) {
  const int n = tree_size(spec.size_class);
  const int depth = target_depth(spec.size_class, spec.depth_class);
  Rng rng(spec.seed);
  for (long attempt = 0; attempt < spec.max_attempts; ++attempt) {
    RootedTree t = random_labeled_tree(n, rng);
    if (t.height() == depth) return t;
  }
  throw GenerationError("depth unreachable");
}

Graph random_connected_graph(int n, int m, Rng& rng, long max_attempts) {
  const std::int64_t pairs = std::int64_t(n) * (n - 1) / 2;
  if (n < 1 || m < 0 || m > pairs) throw std::invalid_argument("random graph: invalid vertex/edge counts");
  std::vector<Edge> all;
  all.reserve(pairs);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) all.push_back({u, v});
  for (long attempt = 0; attempt < max_attempts; ++attempt) {
    // partial Fisher-Yates: the first m entries are a uniform m-subset
    for (int i = 0; i < m; ++i) std::swap(all[i], all[rng.uniform_int(i, pairs - 1)]);
    Graph g(n, std::vector<Edge>(all.begin(), all.begin() + m));
    if (g.is_connected()) return g;
  }
  throw GenerationError("no connected graph within the attempt cap");
}

Graph random_sparse_graph(const GraphSpec& spec) {
  if (spec.type_class != GraphType::random)
    throw std::invalid_argument("random_sparse_graph: only the random type class is generated");
  const int n = tree_size(spec.size_class);
  Rng rng(spec.seed);
  return random_connected_graph(n, n * 3 / 2, rng, spec.max_attempts);
}

}  // namespace fewseg
