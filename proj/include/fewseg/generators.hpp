#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "fewseg/graph.hpp"

namespace fewseg {

/// Seeded 64-bit generator with portable bounded draws (the standard
/// distributions are implementation-defined, so they are not used).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  /// Uniform real in [0, 1).
  double uniform01() { return double(engine_() >> 11) * 0x1.0p-53; }
  double uniform_real(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

 private:
  std::mt19937_64 engine_;
};

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Standard Prüfer decoding. Labels are 1-based in the sequence; the result
/// uses vertex index label-1. Edges are listed in decoding order.
Graph prufer_decode(const std::vector<int>& sequence, int n);

enum class DepthClass { deep, balanced, wide };

struct TreeSpec {
  int size_class = 1;  // 1 -> 20 vertices, 2 -> 40 vertices
  DepthClass depth_class = DepthClass::balanced;
  std::uint64_t seed = 0;
  long max_attempts = 1000000;
};

int tree_size(int size_class);
/// Target depth (edges on the longest root-leaf path).
int target_depth(int size_class, DepthClass depth_class);
DepthClass parse_depth_class(const std::string& s);
std::string to_string(DepthClass c);

/// Uniform labeled tree rooted at label 1, conditioned on the target depth.
/// Throws GenerationError("depth unreachable") when the attempt cap is hit.
RootedTree random_tree(const TreeSpec& spec);

/// One uniformly random labeled tree on n vertices, rooted at label 1.
RootedTree random_labeled_tree(int n, Rng& rng);

enum class GraphType { rome, random };

struct GraphSpec {
  int size_class = 1;  // 1 -> 20 vertices / 30 edges, 2 -> 40 / 60
  GraphType type_class = GraphType::random;
  std::uint64_t seed = 0;
  long max_attempts = 1000000;
};

/// Connected graph with the class's vertex and edge counts; edges are
/// distinct pairs drawn uniformly without replacement.
Graph random_sparse_graph(const GraphSpec& spec);
Graph random_connected_graph(int n, int m, Rng& rng, long max_attempts = 1000000);

}  // namespace fewseg
