#include <algorithm>
#include <numeric>

#include <boost/rational.hpp>

#include "fewseg/tree_layout.hpp"

namespace fewseg {

namespace {

using Q = boost::rational<std::int64_t>;

// Leftmost / rightmost x per depth below a subtree root, relative to it.
struct Contour {
  std::vector<Q> left;
  std::vector<Q> right;
};

Q separation(const Contour& l, const Contour& r) {
  const std::size_t depth = std::min(l.right.size(), r.left.size());
  Q need = 0;
  for (std::size_t d = 0; d < depth; ++d) need = std::max(need, l.right[d] - r.left[d]);
  return need + 1;
}

}  // namespace

GridDrawing layout_tidier(const RootedTree& tree) {
  const int n = tree.vertex_count();
  std::vector<Contour> contour(n);
  std::vector<Q> offset(n, Q(0));  // x relative to parent

  auto order = tree.postorder();
  for (Vertex v : order) {
    const auto& kids = tree.children(v);
    Contour& c = contour[v];
    c.left = {Q(0)};
    c.right = {Q(0)};
    if (kids.empty()) continue;

    const std::size_t k = kids.size();
    std::vector<Q> pos(k, Q(0));
    for (std::size_t i = 1; i < k; ++i) {
      pos[i] = pos[i - 1] + separation(contour[kids[i - 1]], contour[kids[i]]);
      for (std::size_t j = i - 1; j-- > 0;) {
        const Q need = pos[j] + separation(contour[kids[j]], contour[kids[i]]);
        if (need <= pos[i]) continue;
        const Q shift = need - pos[i];
        pos[i] = need;
        // spread the gap over the subtrees squeezed between j and i
        for (std::size_t t = j + 1; t < i; ++t)
          pos[t] += shift * Q(std::int64_t(t - j), std::int64_t(i - j));
      }
    }
    const Q center = (pos.front() + pos.back()) / 2;
    for (std::size_t i = 0; i < k; ++i) {
      const Vertex ch = kids[i];
      offset[ch] = pos[i] - center;
      const Contour& cc = contour[ch];
      for (std::size_t d = 0; d < cc.left.size(); ++d) {
        const Q l = cc.left[d] + offset[ch], r = cc.right[d] + offset[ch];
        if (c.left.size() <= d + 1) {
          c.left.push_back(l);
          c.right.push_back(r);
        } else {
          c.left[d + 1] = std::min(c.left[d + 1], l);
          c.right[d + 1] = std::max(c.right[d + 1], r);
        }
      }
    }
    // children contours are no longer needed
    for (Vertex ch : kids) contour[ch] = {};
  }

  std::vector<Q> x(n, Q(0));
  for (Vertex v : tree.preorder())
    if (tree.parent(v) != -1) x[v] = x[tree.parent(v)] + offset[v];

  std::int64_t scale = 1;
  for (const Q& q : x) scale = std::lcm(scale, q.denominator());
  std::vector<std::int64_t> xi(n);
  for (int v = 0; v < n; ++v) xi[v] = (x[v] * scale).numerator();
  const std::int64_t lo = *std::min_element(xi.begin(), xi.end());
  std::int64_t g = 0;
  for (auto& xv : xi) {
    xv -= lo;
    g = std::gcd(g, xv);
  }
  // Coarsest grid that still represents every position (midpoints stay exact).
  if (g > 1)
    for (auto& xv : xi) xv /= g;

  GridDrawing out{tree.as_graph(), std::vector<IVec>(n)};
  for (int v = 0; v < n; ++v) out.positions[v] = {xi[v], -std::int64_t(tree.depth(v))};
  return out;
}

}  // namespace fewseg
