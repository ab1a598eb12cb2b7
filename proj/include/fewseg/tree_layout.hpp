#pragma once

#include "fewseg/graph.hpp"

namespace fewseg {

/// Layered tidy drawing: the root on y = 0, depth-d vertices on y = -d,
/// every parent exactly centered over its outermost children and every
/// subtree drawn identically wherever it occurs. Smaller subtrees squeezed
/// between two separated siblings are spread evenly. The x unit is scaled to
/// the smallest integer grid that represents all positions exactly; the
/// leftmost vertex sits on x = 0.
GridDrawing layout_tidier(const RootedTree& tree);

struct QuadParams {
  double angular_coefficient = 22.5;  // degrees, in (0, 90]
  int quadrants = 4;                  // 1..4
};

/// Radial-style drawing where the children of each vertex are spread over
/// at most `quadrants` quadrants, with consecutive edge angles kept above the
/// angular coefficient when the child count allows and evenly spread
/// otherwise.
GridDrawing layout_quad(const RootedTree& tree, const QuadParams& params = {});

/// Gap between consecutive child edges targeted at a vertex with `children`
/// children; `is_root` selects the root sector (no parent edge). Also tells
/// whether the coefficient is attainable there.
struct QuadSpacing {
  double gap_deg = 0;
  bool coefficient_feasible = false;
};
QuadSpacing quad_spacing(int children, bool is_root, const QuadParams& params);

}  // namespace fewseg
