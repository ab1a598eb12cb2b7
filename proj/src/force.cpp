#include "fewseg/force.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fewseg/generators.hpp"
#include "fewseg/geometry.hpp"

namespace fewseg {

ForceParams resolve_force_params(const ForceParams& p, int n) {
  ForceParams r = p;
  if (!(r.C > 0)) throw std::invalid_argument("force layout: C must be positive");
  if (r.A == 0) r.A = std::max(1, n);
  if (!(r.A > 0)) throw std::invalid_argument("force layout: A must be positive");
  if (r.iterations < 1) throw std::invalid_argument("force layout: iterations must be at least 1");
  if (r.initial_temperature == 0) r.initial_temperature = 0.1 * std::sqrt(r.A);
  if (!(r.initial_temperature > 0)) throw std::invalid_argument("force layout: initial temperature must be positive");
  return r;
}

double optimal_distance(const ForceParams& resolved, int n) {
  return resolved.C * std::sqrt(resolved.A / std::max(1, n));
}

double fr_attractive(double d, double k) { return d * d / k; }
double fr_repulsive(double d, double k) { return -k * k / d; }

void apply_path_constraints(const std::vector<RVec>& positions, std::vector<RVec>& displacements,
                            const PathSet& paths) {
  for (const auto& path : paths) {
    if (path.size() < 3) continue;
    const std::size_t k = path.size() - 1;
    const RVec a = positions[path.front()] + displacements[path.front()];
    const RVec b = positions[path.back()] + displacements[path.back()];
    for (std::size_t i = 1; i < k; ++i) {
      const double t = double(i) / double(k);
      const RVec target = a * (1 - t) + b * t;
      displacements[path[i]] = target - positions[path[i]];
    }
  }
}

namespace {

Drawing run_spring_embedder(const Graph& graph, const PathSet& paths, const ForceParams& params,
                            const ForceObserver& observer) {
  const int n = graph.vertex_count();
  const ForceParams p = resolve_force_params(params, n);
  const double k = optimal_distance(p, n);
  const double side = std::sqrt(p.A);
  const double d_min = 1e-6 * side;
  Rng rng(p.seed);

  Drawing out{graph, std::vector<RVec>(n)};
  auto& pos = out.positions;
  for (RVec& q : pos) {
    q.x = rng.uniform_real(0, side);
    q.y = rng.uniform_real(0, side);
  }

  std::vector<RVec> disp(n);
  for (int it = 0; it < p.iterations; ++it) {
    const double temperature = p.initial_temperature * (1.0 - double(it) / p.iterations);
    std::fill(disp.begin(), disp.end(), RVec{});
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = i + 1; j < n; ++j) {
        RVec delta = pos[i] - pos[j];
        double d = norm(delta);
        RVec dir;
        if (d < d_min) {
          const double phi = 2 * std::numbers::pi * rng.uniform01();
          dir = {std::cos(phi), std::sin(phi)};
          d = d_min;
        } else {
          dir = {delta.x / d, delta.y / d};
        }
        const double push = -fr_repulsive(d, k);
        disp[i] += dir * push;
        disp[j] += dir * -push;
      }
    }
    for (const Edge& e : graph.edges()) {
      const RVec delta = pos[e.u] - pos[e.v];
      const double d = norm(delta);
      if (d == 0) continue;
      const RVec pull = RVec{delta.x / d, delta.y / d} * fr_attractive(d, k);
      disp[e.u] += -pull;
      disp[e.v] += pull;
    }
    for (RVec& m : disp) {
      const double len = norm(m);
      if (len > temperature) m = m * (temperature / len);
    }
    const std::vector<RVec> capped = observer ? disp : std::vector<RVec>{};
    apply_path_constraints(pos, disp, paths);
    for (Vertex v = 0; v < n; ++v) pos[v] += disp[v];
    if (observer) observer(it, temperature, pos, capped);
  }
  return out;
}

}  // namespace

Drawing layout_force_directed(const Graph& graph, const ForceParams& params) {
  return run_spring_embedder(graph, {}, params, {});
}

Drawing layout_fdfewseg(const Graph& graph, const PathSet& paths, const ForceParams& params,
                        const ForceObserver& observer) {
  const PathSetCheck check = validate_path_set(graph, paths);
  return run_spring_embedder(graph, check.paths, params, observer);
}

std::vector<RVec> fr_net_forces(const Drawing& d, double k) {
  const int n = d.graph.vertex_count();
  std::vector<RVec> f(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) {
      const RVec delta = d.positions[i] - d.positions[j];
      const double dist = norm(delta);
      if (dist == 0) continue;
      const RVec dir{delta.x / dist, delta.y / dist};
      f[i] += dir * -fr_repulsive(dist, k);
      f[j] += dir * fr_repulsive(dist, k);
    }
  for (const Edge& e : d.graph.edges()) {
    const RVec delta = d.positions[e.u] - d.positions[e.v];
    const double dist = norm(delta);
    if (dist == 0) continue;
    const RVec pull = RVec{delta.x / dist, delta.y / dist} * fr_attractive(dist, k);
    f[e.u] += -pull;
    f[e.v] += pull;
  }
  return f;
}

}  // namespace fewseg
