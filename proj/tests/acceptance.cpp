#include <boost/math/distributions/chi_squared.hpp>
#include <chrono>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "fewseg/cli.hpp"
#include "fewseg/fewsegments.hpp"
#include "fewseg/force.hpp"
#include "fewseg/generators.hpp"
#include "fewseg/geometry.hpp"
#include "fewseg/graph_io.hpp"
#include "fewseg/layouts.hpp"
#include "fewseg/tree_layout.hpp"
#include "fewseg/visual_complexity.hpp"
#include "oracles.hpp"

using namespace fewseg;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int n, const std::string& what, bool ok, const std::string& detail = {}) {
  std::cout << (ok ? "PASS" : "FAIL") << " [" << n << "] " << what;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  failures += !ok;
}

// Runs a criterion body; an exception counts as a failure.
void criterion(int n, const std::string& what, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  report(n, what, ok, detail);
}

bool same_bits(const std::vector<RVec>& a, const std::vector<RVec>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(RVec)) == 0;
}

std::vector<Vertex> subtree_vertices(const RootedTree& t, Vertex r) {
  std::vector<Vertex> out{r};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (Vertex c : t.children(out[i])) out.push_back(c);
  return out;
}

}  // namespace

int main() {
  const auto corpus = oracle::tree_corpus(200);

  criterion(1, "FewSegments reaches the odd-degree bound on 200 trees in under 60 s", [&](std::string& d) {
    const auto start = std::chrono::steady_clock::now();
    int bad = 0;
    for (const auto& c : corpus)
      bad += int(count_segments(layout_fewsegments(c.tree)).count) != odd_degree_bound(c.tree);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    d = std::to_string(bad) + " suboptimal, " + std::to_string(secs) + " s";
    return bad == 0 && secs < 60;
  });

  criterion(2, "tidier, quad and fewsegments are planar on the corpus", [&](std::string& d) {
    int bad = 0;
    for (const auto& c : corpus) {
      bad += !is_planar_drawing(layout_tidier(c.tree));
      bad += !is_planar_drawing(layout_quad(c.tree));
      bad += !is_planar_drawing(layout_fewsegments(c.tree));
    }
    d = std::to_string(bad) + " violations";
    return bad == 0;
  });

  criterion(3, "heuristic rounds never grow the box or change the segment count", [&](std::string& d) {
    int bad = 0;
    for (const auto& c : corpus) {
      FewSegmentsEngine engine(c.tree);
      FewSegLayout layout = engine.initial_layout();
      auto box = drawing_extent(layout.positions());
      const auto segs = count_segments(layout.drawing()).count;
      for (int round = 0; round < 5; ++round)
        for (int pass = 0; pass < 2; ++pass) {
          if (pass == 0) engine.heuristic2_compress(layout);
          else engine.heuristic3_revector(layout);
          const auto dr = layout.drawing();
          const auto b = drawing_extent(dr.positions);
          bad += b.width > box.width || b.height > box.height || count_segments(dr).count != segs;
          box = b;
        }
    }
    d = std::to_string(bad) + " violations";
    return bad == 0;
  });

  criterion(4, "rounding (6,11) by (0,1) gives (6,12) with direction (1,2)", [&](std::string& d) {
    const IVec w = rounded_vector({6, 11}, 0, 1);
    const IVec p = primitive_vector(w);
    d = "(" + std::to_string(w.x) + "," + std::to_string(w.y) + ") -> (" + std::to_string(p.x) + "," +
        std::to_string(p.y) + ")";
    return w == IVec{6, 12} && p == IVec{1, 2};
  });

  criterion(5, "tidier: equal depth gives equal y; duplicated subtrees are translates", [&](std::string& d) {
    int bad = 0;
    for (const auto& c : corpus) {
      const auto dr = layout_tidier(c.tree);
      std::map<int, std::int64_t> y_of_depth;
      for (Vertex v = 0; v < c.tree.vertex_count(); ++v) {
        auto [it, fresh] = y_of_depth.emplace(c.tree.depth(v), dr.positions[v].y);
        bad += !fresh && it->second != dr.positions[v].y;
      }
    }
    int bad3 = 0;
    for (int t = 0; t < 20; ++t) {
      const RootedTree shape = oracle::random_recursive_tree(3 + t % 7, 500 + t);
      std::vector<Vertex> parents{-1, 0, 0, 1, 2};
      std::vector<Vertex> roots;
      for (Vertex at : {Vertex(3), Vertex(4), Vertex(1)}) {
        const Vertex base = Vertex(parents.size());
        roots.push_back(base);
        for (Vertex v = 0; v < shape.vertex_count(); ++v) parents.push_back(v == 0 ? at : base + shape.parent(v));
      }
      const RootedTree tree(parents);
      const auto dr = layout_tidier(tree);
      const auto ref = subtree_vertices(tree, roots[0]);
      for (std::size_t k = 1; k < roots.size(); ++k) {
        const auto other = subtree_vertices(tree, roots[k]);
        const IVec shift = dr.positions[roots[k]] - dr.positions[roots[0]];
        for (std::size_t i = 0; i < ref.size(); ++i) bad3 += dr.positions[other[i]] - dr.positions[ref[i]] != shift;
      }
    }
    d = std::to_string(bad) + " layer violations, " + std::to_string(bad3) + " congruence violations";
    return bad == 0 && bad3 == 0;
  });

  criterion(6, "quad keeps consecutive angles at least 22.5 degrees where the child count permits",
            [&](std::string& d) {
              int bad = 0, checked = 0;
              const QuadParams params;
              for (const auto& c : corpus) {
                const auto dr = to_real(layout_quad(c.tree, params));
                for (Vertex v = 0; v < c.tree.vertex_count(); ++v) {
                  const int k = int(c.tree.children(v).size());
                  if (k == 0 || !quad_spacing(k, v == c.tree.root(), params).coefficient_feasible) continue;
                  ++checked;
                  for (double g : oracle::angle_gaps(dr, v)) bad += g < params.angular_coefficient - 1e-9;
                }
              }
              d = std::to_string(checked) + " vertices, " + std::to_string(bad) + " narrow gaps";
              return bad == 0;
            });

  criterion(7, "two vertices settle within 5% of k, bitwise reproducibly", [&](std::string& d) {
    const Graph g(2, {{0, 1}});
    ForceParams p;
    p.seed = 42;
    const Drawing a = layout_force_directed(g, p), b = layout_force_directed(g, p);
    const double k = optimal_distance(resolve_force_params(p, 2), 2);
    const double dist = norm(a.positions[1] - a.positions[0]);
    d = "distance " + std::to_string(dist) + ", k " + std::to_string(k);
    return std::abs(dist - k) <= 0.05 * k && same_bits(a.positions, b.positions);
  });

  criterion(8, "fdfewseg paths end collinear and evenly spaced; empty set equals forcedir", [&](std::string& d) {
    int bad = 0, paths = 0, mismatched = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const Graph g = random_sparse_graph({int(seed % 2) + 1, GraphType::random, 1000 + seed});
      ForceParams p;
      p.seed = seed;
      const Drawing base = layout_force_directed(g, p);
      const PathSet ps = select_paths(g, base);
      const Drawing dr = layout_fdfewseg(g, ps, p);
      for (const auto& path : ps) {
        ++paths;
        const RVec a = dr.positions[path.front()], b = dr.positions[path.back()];
        const double len = norm(b - a);
        const double k = double(path.size() - 1);
        for (std::size_t i = 1; i + 1 < path.size(); ++i) {
          const RVec q = dr.positions[path[i]];
          const double off = std::abs(cross(b - a, q - a)) / len;
          const RVec want = a + (b - a) * (double(i) / k);
          bad += off > 1e-6 * len || norm(q - want) > 1e-3 * len;
        }
      }
      mismatched += !same_bits(layout_fdfewseg(g, {}, p).positions, base.positions);
    }
    d = std::to_string(paths) + " paths, " + std::to_string(bad) + " off-line vertices, " +
        std::to_string(mismatched) + " empty-set mismatches";
    return paths > 0 && bad == 0 && mismatched == 0;
  });

  criterion(9, "fdfewseg uses fewer segments than forcedir on average over 50 sparse graphs", [&](std::string& d) {
    double fd = 0, fs_ = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const Graph g = random_sparse_graph({int(seed % 2) + 1, GraphType::random, 2000 + seed});
      LayoutOptions opt;
      opt.force.seed = seed;
      fd += double(count_segments(run_layout("forcedir", g, std::nullopt, opt).drawing).count);
      fs_ += double(count_segments(run_layout("fdfewseg", g, std::nullopt, opt).drawing).count);
    }
    d = "forcedir " + std::to_string(fd / 50) + ", fdfewseg " + std::to_string(fs_ / 50);
    return fs_ < fd;
  });

  criterion(10, "Prufer round trip, uniform sampling and exact depths", [&](std::string& d) {
    int bad = 0;
    for (int n = 2; n <= 7; ++n) {
      std::vector<int> seq(std::max(0, n - 2), 1);
      while (true) {
        const Graph g = prufer_decode(seq, n);
        bad += !g.is_tree() || oracle::prufer_encode(g) != seq;
        int i = n - 3;
        while (i >= 0 && seq[i] == n) seq[i--] = 1;
        if (i < 0) break;
        ++seq[i];
      }
    }
    Rng rng(12345);
    std::map<std::vector<int>, int> counts;
    for (int s = 0; s < 12500; ++s) ++counts[oracle::prufer_encode(random_labeled_tree(5, rng).as_graph())];
    double chi2 = 0;
    for (const auto& [seq, c] : counts) chi2 += (c - 100.0) * (c - 100.0) / 100.0;
    chi2 += 100.0 * double(125 - counts.size());
    const double pval = boost::math::cdf(boost::math::complement(boost::math::chi_squared(124), chi2));
    int depth_bad = 0;
    for (const auto& c : corpus) {
      const int size = c.tree.vertex_count() == 20 ? 1 : 2;
      for (DepthClass dc : {DepthClass::deep, DepthClass::balanced, DepthClass::wide})
        if (c.id.find("-" + to_string(dc) + "-") != std::string::npos)
          depth_bad += c.tree.height() != target_depth(size, dc);
    }
    d = std::to_string(bad) + " round-trip errors, p = " + std::to_string(pval) + ", " +
        std::to_string(depth_bad) + " depth misses";
    return bad == 0 && pval > 0.01 && depth_bad == 0;
  });

  criterion(11, "crossing count agrees with the brute-force oracle on 100 drawings", [&](std::string& d) {
    Rng rng(777);
    int bad = 0;
    for (int t = 0; t < 100; ++t) {
      const int n = int(rng.uniform_int(4, 60));
      const int m = int(std::min<std::int64_t>(n * (n - 1) / 2, rng.uniform_int(1, 200)));
      Graph g(n);
      while (int(g.edge_count()) < m) {
        const Vertex a = Vertex(rng.uniform_int(0, n - 1)), b = Vertex(rng.uniform_int(0, n - 1));
        if (a != b && !g.has_edge(a, b)) g.add_edge(a, b);
      }
      GridDrawing dr{g, {}};
      const std::int64_t span = t % 2 ? 10 : 1000;
      for (int v = 0; v < n; ++v) dr.positions.push_back({rng.uniform_int(0, span), rng.uniform_int(0, span)});
      bad += count_crossings(dr) != oracle::crossings(dr);
    }
    d = std::to_string(bad) + " disagreements";
    return bad == 0;
  });

  criterion(12, "generate, layout, metrics with a fixed seed gives byte-identical CSV", [&](std::string& d) {
    const fs::path dir = fs::temp_directory_path() / "fewseg_acceptance_pipeline";
    auto pipeline = [&]() {
      fs::remove_all(dir);
      fs::create_directories(dir);
      std::ostringstream out, err;
      auto cli = [&](std::vector<std::string> args) {
        if (run_cli(args, out, err) != 0) throw std::runtime_error("cli failed: " + err.str());
      };
      const std::string tree = (dir / "tree.txt").string(), graph = (dir / "graph.txt").string();
      cli({"--seed", "31", "--out", tree, "generate", "tree", "--size", "2", "--depth-class", "balanced"});
      cli({"--seed", "31", "--out", graph, "generate", "graph", "--size", "1"});
      cli({"--seed", "31", "--out", (dir / "tree_fewsegments.json").string(), "layout", tree, "--algo",
           "fewsegments"});
      cli({"--seed", "31", "--out", (dir / "graph_fdfewseg.json").string(), "layout", graph, "--algo", "fdfewseg"});
      std::ostringstream csv;
      if (run_cli({"--seed", "31", "metrics", dir.string()}, csv, err) != 0) throw std::runtime_error(err.str());
      return csv.str();
    };
    const std::string first = pipeline(), second = pipeline();
    fs::remove_all(dir);
    d = std::to_string(first.size()) + " bytes";
    return !first.empty() && first == second;
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
