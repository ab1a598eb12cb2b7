#include "fewseg/fewsegments.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "fewseg/visual_complexity.hpp"

namespace fewseg {

namespace {

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }
std::int64_t l1(const IVec& v) { return abs64(v.x) + abs64(v.y); }

constexpr std::int64_t kSearchLimit = std::int64_t(1) << 22;

// Vertices with positions and tree edges; the drawing being assembled.
struct Sketch {
  std::vector<Vertex> vertices;
  std::vector<IVec> pos;
  std::vector<Edge> edges;  // local indices

  int add(Vertex v, const IVec& p) {
    vertices.push_back(v);
    pos.push_back(p);
    return int(vertices.size()) - 1;
  }

  GridDrawing drawing() const {
    GridDrawing d;
    d.graph = Graph(int(vertices.size()));
    for (const Edge& e : edges) d.graph.add_edge(e.u, e.v);
    d.positions = pos;
    return d;
  }
};

}  // namespace

// ---------------------------------------------------------------------------

std::vector<IVec> FewSegLayout::positions() const {
  std::vector<IVec> p(tree.vertex_count());
  for (Vertex v : tree.preorder())
    p[v] = tree.parent(v) == -1 ? IVec{0, 0} : p[tree.parent(v)] + offset[v];
  return p;
}

GridDrawing FewSegLayout::drawing() const { return {tree.as_graph(), positions()}; }

SubtreeExtent drawing_extent(const std::vector<IVec>& positions) {
  if (positions.empty()) return {};
  const auto b = bounding_box<std::int64_t>(positions);
  return {b.width(), b.height()};
}

// ---------------------------------------------------------------------------

IVec rounded_vector(const IVec& v, std::int64_t i, std::int64_t j) {
  return {v.x + (v.x < 0 ? -i : i), v.y + (v.y < 0 ? -j : j)};
}

bool rounding_slope_ok(const IVec& v, std::int64_t i, std::int64_t j) {
  const Wide x = abs64(v.x), y = abs64(v.y);
  if (x == 0) return i == 0;
  return (y + j) * x <= y * (x + i);
}

std::optional<RoundingCandidate> heuristic1_round_vector(const IVec& v, const RoundingSearch& search) {
  const std::int64_t s = std::max(0, search.stretch);
  const std::int64_t max_i = s * abs64(v.x), max_j = s * abs64(v.y);
  std::optional<RoundingCandidate> best;
  for (std::int64_t sum = 0; sum <= max_i + max_j; ++sum) {
    // cost >= i + j, and later candidates lose ties
    if (best && sum >= best->cost) break;
    for (std::int64_t i = std::max<std::int64_t>(0, sum - max_j); i <= std::min(max_i, sum); ++i) {
      const std::int64_t j = sum - i;
      if (!rounding_slope_ok(v, i, j)) continue;
      const IVec w = rounded_vector(v, i, j);
      if (best && search.extent_lower_bound && sum + search.extent_lower_bound(w) >= best->cost) continue;
      const SubtreeExtent a = search.subtree(w);
      std::int64_t size = a.width + a.height;
      if (search.partner) {
        const SubtreeExtent b = search.partner(-w);
        size = std::max(size, b.width + b.height);
      }
      RoundingCandidate cand{i, j, w, -w, sum + size};
      if (best && cand.cost >= best->cost) continue;
      if (search.accept && !search.accept(cand)) continue;
      best = cand;
    }
  }
  return best;
}

// ---------------------------------------------------------------------------

FewSegmentsEngine::FewSegmentsEngine(const RootedTree& tree, FewSegParams params)
    : tree_(tree), params_(params), hpd_(heavy_path_decomposition(tree)) {
  if (params_.stretch < 0) throw std::invalid_argument("stretch must be non-negative");
  if (params_.heuristic_rounds < 0) throw std::invalid_argument("heuristic rounds must be non-negative");
  const int n = tree_.vertex_count();
  partner_.assign(n, -1);
  slot_.assign(n, -1);
  side_.assign(n, 0);
  slots_used_.assign(n, 0);
  heavy_len_.assign(n, 0);

  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> light;
    for (Vertex c : tree_.children(v))
      if (c != hpd_.heavy_child[v]) light.push_back(c);
    std::stable_sort(light.begin(), light.end(),
                     [&](Vertex a, Vertex b) { return tree_.subtree_size(a) > tree_.subtree_size(b); });
    // An even number of root children leaves one light child unpaired next to
    // the unpaired heavy edge; it continues the heavy line backwards instead.
    if (v == tree_.root() && tree_.children(v).size() % 2 == 0 && !light.empty()) {
      root_opposite_ = light.back();
      light.pop_back();
    }
    for (std::size_t t = 0; t < light.size(); ++t) {
      slot_[light[t]] = int(t / 2);
      side_[light[t]] = t % 2 == 0 ? 1 : -1;
      if (t % 2 == 1) {
        partner_[light[t]] = light[t - 1];
        partner_[light[t - 1]] = light[t];
      }
    }
    slots_used_[v] = int((light.size() + 1) / 2);
  }
  for (Vertex v : tree_.postorder())
    if (hpd_.heavy_child[v] != -1) heavy_len_[v] = heavy_len_[hpd_.heavy_child[v]] + 1;
}

std::vector<IVec> FewSegmentsEngine::palette(const IVec& dir, std::size_t count) const {
  std::vector<IVec> out;
  for (std::int64_t r = 1; out.size() < count; ++r) {
    std::vector<IVec> ring;
    for (std::int64_t a = -r; a <= r; ++a) {
      const std::int64_t b = r - abs64(a);
      for (std::int64_t sb : {b, -b}) {
        const IVec d{a, sb};
        if (std::gcd(abs64(a), abs64(sb)) != 1) continue;
        if (cross(dir, d) <= 0) continue;
        if (std::find(ring.begin(), ring.end(), d) == ring.end()) ring.push_back(d);
        if (b == 0) break;
      }
    }
    const RVec fd{double(dir.x), double(dir.y)};
    auto angle_from_dir = [&](const IVec& d) {
      const RVec rd{double(d.x), double(d.y)};
      return std::atan2(cross(fd, rd), dot(fd, rd));
    };
    std::stable_sort(ring.begin(), ring.end(),
                     [&](const IVec& a, const IVec& b) { return angle_from_dir(a) < angle_from_dir(b); });
    for (const IVec& d : ring) {
      if (out.size() == count) break;
      out.push_back(d);
    }
  }
  return out;
}

const FewSegmentsEngine::SubtreeLayout& FewSegmentsEngine::subtree_layout(Vertex r, const IVec& vec) {
  const IVec dir = primitive_vector(vec);
  const auto key = std::make_tuple(r, dir.x, dir.y);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  SubtreeLayout built = build_subtree(r, dir);
  return cache_.emplace(key, std::move(built)).first->second;
}

FewSegmentsEngine::SubtreeLayout FewSegmentsEngine::build_subtree(Vertex r, const IVec& dir) {
  const std::vector<Vertex> path = heavy_path_from(tree_, hpd_, r);

  Sketch sketch;
  std::vector<int> local(tree_.vertex_count(), -1);
  local[r] = sketch.add(r, {0, 0});

  // Appends the subtree of c drawn with vector `vec` from the anchor point.
  auto append_child = [&](Sketch& sk, int parent_local, const IVec& anchor, Vertex c, const IVec& vec,
                          std::vector<int>* map) {
    const SubtreeLayout& sl = subtree_layout(c, vec);
    const IVec root_pos = anchor + vec;
    std::vector<int> idx;
    const int ci = sk.add(c, root_pos);
    sk.edges.push_back({parent_local, ci});
    if (map) (*map)[c] = ci;
    // entries are stored parents first
    std::vector<std::pair<Vertex, int>> seen{{c, ci}};
    for (const auto& [w, rel] : sl.offsets) {
      const int wi = sk.add(w, root_pos + rel);
      const Vertex p = tree_.parent(w);
      int pi = -1;
      for (auto it = seen.rbegin(); it != seen.rend(); ++it)
        if (it->first == p) {
          pi = it->second;
          break;
        }
      sk.edges.push_back({pi, wi});
      seen.push_back({w, wi});
      if (map) (*map)[w] = wi;
    }
  };

  // Children of one heavy vertex placed around the origin; valid when planar
  // and every child subtree stays strictly on one side of the heavy line.
  auto children_fit = [&](Vertex h, const std::vector<std::pair<Vertex, IVec>>& vecs) {
    Sketch sk;
    sk.add(h, {0, 0});
    for (const auto& [c, vec] : vecs) {
      const std::size_t first = sk.vertices.size();
      append_child(sk, 0, {0, 0}, c, vec, nullptr);
      const Wide side = cross(dir, sk.pos[first]);
      if (side == 0) return false;
      for (std::size_t k = first; k < sk.vertices.size(); ++k) {
        const Wide s = cross(dir, sk.pos[k]);
        if ((s > 0) != (side > 0) || s == 0) return false;
      }
    }
    return is_planar_drawing(sk.drawing());
  };

  IVec prev_pos{0, 0};
  for (std::size_t idx = 0; idx < path.size(); ++idx) {
    const Vertex h = path[idx];
    std::vector<Vertex> light;
    for (Vertex c : tree_.children(h))
      if (slot_[c] >= 0) light.push_back(c);
    std::stable_sort(light.begin(), light.end(), [&](Vertex a, Vertex b) {
      return std::make_pair(slot_[a], -side_[a]) < std::make_pair(slot_[b], -side_[b]);
    });
    const std::vector<IVec> pal = palette(dir, std::size_t(slots_used_[h]));

    std::vector<std::pair<Vertex, IVec>> vecs;
    if (!light.empty()) {
      for (std::int64_t a = 1;; ++a) {
        vecs.clear();
        for (Vertex c : light) vecs.push_back({c, pal[slot_[c]] * (a * side_[c])});
        if (children_fit(h, vecs)) break;
        if (a > kSearchLimit) throw std::logic_error("fewsegments: children do not fit");
      }
      // Vector rounding, pair by pair from the inside out.
      for (std::size_t k = 0; k < vecs.size(); ++k) {
        if (side_[vecs[k].first] != 1) continue;
        const Vertex c = vecs[k].first;
        const Vertex c2 = partner_[c];
        const std::size_t k2 = c2 == -1 ? k : k + 1;
        RoundingSearch search;
        search.stretch = params_.stretch;
        search.subtree = [&, c](const IVec& w) { return subtree_layout(c, w).extent; };
        if (c2 != -1) search.partner = [&, c2](const IVec& w) { return subtree_layout(c2, w).extent; };
        const std::int64_t hl = std::max(heavy_len_[c], c2 == -1 ? 0 : heavy_len_[c2]);
        search.extent_lower_bound = [hl](const IVec& w) { return hl * l1(primitive_vector(w)); };
        search.accept = [&](const RoundingCandidate& cand) {
          if (cand.di == 0 && cand.dj == 0) return true;
          auto trial = vecs;
          trial[k].second = cand.for_subtree;
          if (c2 != -1) trial[k2].second = cand.for_partner;
          return children_fit(h, trial);
        };
        const auto choice = heuristic1_round_vector(vecs[k].second, search);
        if (choice) {
          vecs[k].second = choice->for_subtree;
          if (c2 != -1) vecs[k2].second = choice->for_partner;
        }
      }
    }

    // Next heavy vertex: smallest step along the heavy line that keeps the
    // partial drawing planar.
    for (std::int64_t b = idx == 0 ? 0 : 1;; ++b) {
      Sketch trial = sketch;
      std::vector<int> trial_local = local;
      IVec hp{0, 0};
      int hi = 0;
      if (idx > 0) {
        hp = prev_pos + dir * b;
        hi = trial.add(h, hp);
        trial.edges.push_back({trial_local[path[idx - 1]], hi});
        trial_local[h] = hi;
      }
      for (const auto& [c, vec] : vecs) append_child(trial, hi, hp, c, vec, &trial_local);
      if (idx == 0 || is_planar_drawing(trial.drawing())) {
        sketch = std::move(trial);
        local = std::move(trial_local);
        prev_pos = hp;
        break;
      }
      if (b > kSearchLimit) throw std::logic_error("fewsegments: heavy path does not fit");
    }
  }

  if (r == tree_.root() && root_opposite_ != -1) {
    for (std::int64_t a = 1;; ++a) {
      Sketch trial = sketch;
      std::vector<int> trial_local = local;
      append_child(trial, local[r], {0, 0}, root_opposite_, -dir * a, &trial_local);
      if (is_planar_drawing(trial.drawing())) {
        sketch = std::move(trial);
        local = std::move(trial_local);
        break;
      }
      if (a > kSearchLimit) throw std::logic_error("fewsegments: root continuation does not fit");
    }
  }

  SubtreeLayout out;
  // sketch order already lists parents before children
  for (std::size_t i = 1; i < sketch.vertices.size(); ++i) out.offsets.push_back({sketch.vertices[i], sketch.pos[i]});
  out.extent = drawing_extent(sketch.pos);
  return out;
}

FewSegLayout FewSegmentsEngine::initial_layout() {
  FewSegLayout out;
  out.tree = tree_;
  out.hpd = hpd_;
  out.partner = partner_;
  out.offset.assign(tree_.vertex_count(), IVec{0, 0});
  const SubtreeLayout& sl = subtree_layout(tree_.root(), kRootDirection);
  std::vector<IVec> pos(tree_.vertex_count());
  for (const auto& [v, p] : sl.offsets) {
    pos[v] = p;
    out.offset[v] = p - pos[tree_.parent(v)];
  }
  return out;
}

void FewSegmentsEngine::heuristic2_compress(FewSegLayout& layout) const {
  GridDrawing d = layout.drawing();
  SubtreeExtent box = drawing_extent(d.positions);
  const std::size_t segments = count_segments(d).count;
  for (Vertex v : tree_.postorder()) {
    if (tree_.parent(v) == -1) continue;
    const IVec vec = layout.offset[v];
    const IVec unit = primitive_vector(vec);
    const std::int64_t k = unit.x != 0 ? vec.x / unit.x : vec.y / unit.y;
    for (std::int64_t m = 1; m < k; ++m) {
      layout.offset[v] = unit * m;
      GridDrawing trial = layout.drawing();
      const SubtreeExtent tb = drawing_extent(trial.positions);
      if (tb.width <= box.width && tb.height <= box.height && is_planar_drawing(trial) &&
          count_segments(trial).count == segments) {
        box = tb;
        break;
      }
      layout.offset[v] = vec;
    }
  }
}

void FewSegmentsEngine::heuristic3_revector(FewSegLayout& layout) {
  const std::size_t segments = count_segments(layout.drawing()).count;
  for (Vertex r : tree_.postorder()) {
    const Vertex p = tree_.parent(r);
    if (p == -1 || hpd_.heavy_child[p] == r || r == root_opposite_) continue;
    const std::vector<IVec> pos = layout.positions();
    const SubtreeExtent box = drawing_extent(pos);
    const IVec vec = layout.offset[r];
    const std::int64_t len = l1(vec);
    if (5 * len <= box.width + box.height) continue;
    const auto bb = bounding_box<std::int64_t>(pos);
    auto inside = [&](const IVec& q) {
      return bb.min_x <= q.x && q.x <= bb.max_x && bb.min_y <= q.y && q.y <= bb.max_y;
    };
    const Vertex r2 = partner_[r];

    bool accepted = false;
    for (std::int64_t sum = 1; sum < len && !accepted; ++sum) {
      for (std::int64_t i = -sum; i <= sum && !accepted; ++i) {
        const std::int64_t rest = sum - abs64(i);
        for (std::int64_t j : {-rest, rest}) {
          const IVec w{i, j};
          // Cheap rejection: the new heavy paths alone must fit in the box.
          const IVec unit = primitive_vector(w);
          if (!inside(pos[p] + w) || !inside(pos[p] + w + unit * heavy_len_[r])) {
            if (rest == 0) break;
            continue;
          }
          if (r2 != -1 && (!inside(pos[p] - w) || !inside(pos[p] - w - unit * heavy_len_[r2]))) {
            if (rest == 0) break;
            continue;
          }
          FewSegLayout trial = layout;
          auto install = [&](Vertex c, const IVec& cv) {
            trial.offset[c] = cv;
            const SubtreeLayout& sl = subtree_layout(c, cv);
            std::vector<IVec> rel(tree_.vertex_count());
            for (const auto& [v, q] : sl.offsets) {
              rel[v] = q;
              trial.offset[v] = q - (tree_.parent(v) == c ? IVec{0, 0} : rel[tree_.parent(v)]);
            }
          };
          install(r, w);
          if (r2 != -1) install(r2, -w);
          const GridDrawing d = trial.drawing();
          const SubtreeExtent tb = drawing_extent(d.positions);
          if (tb.width <= box.width && tb.height <= box.height && is_planar_drawing(d) &&
              count_segments(d).count == segments) {
            layout = std::move(trial);
            accepted = true;
            break;
          }
          if (rest == 0) break;
        }
      }
    }
  }
}

FewSegLayout FewSegmentsEngine::run() {
  FewSegLayout layout = initial_layout();
  for (int round = 0; round < params_.heuristic_rounds; ++round) {
    heuristic2_compress(layout);
    heuristic3_revector(layout);
  }
  return layout;
}

GridDrawing layout_fewsegments(const RootedTree& tree, const FewSegParams& params) {
  FewSegmentsEngine engine(tree, params);
  return engine.run().drawing();
}

}  // namespace fewseg
