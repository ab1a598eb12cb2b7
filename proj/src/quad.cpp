#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fewseg/geometry.hpp"
#include "fewseg/tree_layout.hpp"
#include "fewseg/visual_complexity.hpp"

namespace fewseg {

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

double normalize_deg(double a) {
  a = std::fmod(a, 360.0);
  return a < 0 ? a + 360.0 : a;
}

double angle_deg(const IVec& v) { return normalize_deg(std::atan2(double(v.y), double(v.x)) / kDeg); }

double angular_error(double a, double b) {
  const double d = std::abs(normalize_deg(a) - normalize_deg(b));
  return std::min(d, 360.0 - d);
}

// Smallest-scale integer direction within `tol` degrees of `target`.
IVec integer_direction(double target, double tol) {
  const double c = std::cos(target * kDeg), s = std::sin(target * kDeg);
  for (std::int64_t r = 1;; r = r < 64 ? r + 1 : r + r / 8) {
    const IVec v{std::llround(double(r) * c), std::llround(double(r) * s)};
    if (v == IVec{}) continue;
    if (angular_error(angle_deg(v), target) <= tol) return primitive_vector(v);
    if (r > (std::int64_t(1) << 40)) throw std::logic_error("integer_direction: no approximation found");
  }
}

struct Placed {
  std::vector<Vertex> vertices;  // subtree vertices, root first
  std::vector<IVec> rel;         // positions relative to the subtree root
};

class QuadBuilder {
 public:
  QuadBuilder(const RootedTree& t, const QuadParams& p) : tree_(t), params_(p) {}

  // Lays out the subtree of v; `incoming` is the direction of the edge from
  // the parent (ignored for the root).
  Placed build(Vertex v, const IVec& incoming) {
    const bool is_root = tree_.parent(v) == -1;
    std::vector<Vertex> kids = tree_.children(v);
    Placed out;
    out.vertices.push_back(v);
    out.rel.push_back({0, 0});
    if (kids.empty()) return out;

    const int k = int(kids.size());
    const QuadSpacing sp = quad_spacing(k, is_root, params_);
    const double forward = is_root ? 270.0 : angle_deg(incoming);
    std::vector<double> slots = slot_angles(k, is_root, forward, sp.gap_deg);
    // Largest subtrees take the slots closest to straight ahead.
    std::stable_sort(kids.begin(), kids.end(),
                     [&](Vertex a, Vertex b) { return tree_.subtree_size(a) > tree_.subtree_size(b); });
    std::stable_sort(slots.begin(), slots.end(), [&](double a, double b) {
      return angular_error(a, forward) < angular_error(b, forward);
    });
    const double tol = sp.coefficient_feasible && sp.gap_deg > params_.angular_coefficient
                           ? std::min(0.25 * (sp.gap_deg - params_.angular_coefficient), 1.0)
                           : 0.5;

    std::vector<IVec> dirs(k);
    std::vector<Placed> sub(k);
    for (int i = 0; i < k; ++i) {
      dirs[i] = integer_direction(slots[i], tol);
      sub[i] = build(kids[i], dirs[i]);
    }

    for (std::int64_t scale = 1;; ++scale) {
      Placed cand = out;
      for (int i = 0; i < k; ++i) {
        const IVec base = dirs[i] * scale;
        for (std::size_t j = 0; j < sub[i].vertices.size(); ++j) {
          cand.vertices.push_back(sub[i].vertices[j]);
          cand.rel.push_back(base + sub[i].rel[j]);
        }
      }
      if (valid(cand, is_root ? nullptr : &incoming)) return cand;
      if (scale > (std::int64_t(1) << 24)) throw std::logic_error("layout_quad: no planar placement");
    }
  }

 private:
  std::vector<double> slot_angles(int k, bool is_root, double forward, double gap) const {
    std::vector<double> a;
    if (params_.quadrants >= 4) {
      if (is_root) {
        for (int t = 0; t < k; ++t) a.push_back(normalize_deg(forward + t * gap));
      } else {
        for (int t = 1; t <= k; ++t) a.push_back(normalize_deg(forward + 180.0 + t * gap));
      }
    } else {
      const double width = 90.0 * params_.quadrants;
      for (int t = 0; t < k; ++t) a.push_back(normalize_deg(forward - width / 2 + (t + 0.5) * gap));
    }
    return a;
  }

  bool valid(const Placed& p, const IVec* incoming) const {
    GridDrawing d;
    d.graph = Graph(int(p.vertices.size()));
    std::vector<int> local(tree_.vertex_count(), -1);
    for (std::size_t i = 0; i < p.vertices.size(); ++i) local[p.vertices[i]] = int(i);
    for (std::size_t i = 1; i < p.vertices.size(); ++i)
      d.graph.add_edge(local[tree_.parent(p.vertices[i])], int(i));
    d.positions = p.rel;
    if (!is_planar_drawing(d)) return false;
    if (incoming == nullptr) return true;
    // The subtree must leave the ray back towards the parent free.
    std::int64_t reach = 1;
    for (const IVec& q : p.rel) reach = std::max({reach, q.x < 0 ? -q.x : q.x, q.y < 0 ? -q.y : q.y});
    const IVec far = -(*incoming) * (2 * reach + 1);
    const IVec origin{0, 0};
    for (const Edge& e : d.graph.edges()) {
      if (e.touches(0)) continue;
      if (segments_intersect(d.positions[e.u], d.positions[e.v], origin, far)) return false;
    }
    return true;
  }

  const RootedTree& tree_;
  const QuadParams& params_;
};

}  // namespace

QuadSpacing quad_spacing(int children, bool is_root, const QuadParams& params) {
  QuadSpacing s;
  if (children <= 0) return s;
  const double c = params.angular_coefficient;
  if (params.quadrants >= 4) {
    // All incident edges (parent edge included) are spread around the circle.
    const int edges = is_root ? children : children + 1;
    s.gap_deg = 360.0 / edges;
    s.coefficient_feasible = edges * c <= 360.0;
  } else {
    const double width = 90.0 * params.quadrants;
    s.gap_deg = width / children;
    s.coefficient_feasible = children * c <= width;
  }
  return s;
}

GridDrawing layout_quad(const RootedTree& tree, const QuadParams& params) {
  if (!(params.angular_coefficient > 0 && params.angular_coefficient <= 90))
    throw std::invalid_argument("angular coefficient must lie in (0, 90]");
  if (params.quadrants < 1 || params.quadrants > 4) throw std::invalid_argument("quadrants must lie in 1..4");
  QuadBuilder b(tree, params);
  const Placed p = b.build(tree.root(), IVec{0, -1});
  GridDrawing out{tree.as_graph(), std::vector<IVec>(tree.vertex_count())};
  for (std::size_t i = 0; i < p.vertices.size(); ++i) out.positions[p.vertices[i]] = p.rel[i];
  return out;
}

}  // namespace fewseg
