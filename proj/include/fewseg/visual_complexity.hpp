#pragma once

#include <cstddef>
#include <vector>

#include "fewseg/geometry.hpp"
#include "fewseg/graph.hpp"

namespace fewseg {

/// A maximal chain of incident, collinear edges drawn as one straight line.
struct Segment {
  IVec direction;             // primitive direction (grid drawings); (0,0) for real drawings
  std::vector<std::size_t> edges;  // indices into graph.edges(), in chain order
};

struct SegmentPartition {
  std::size_t count = 0;
  std::vector<Segment> segments;
};

/// Partitions the edges into maximal chains. Two edges sharing a vertex are
/// chained when they continue straight through it (collinear, opposite
/// directions). Ties at a vertex with three or more such edges are resolved
/// greedily in edge-input order.
SegmentPartition count_segments(const GridDrawing& d);
SegmentPartition count_segments(const Drawing& d, double eps = kCollinearEps);

/// n_odd / 2 for the underlying tree (0 for a single vertex).
int odd_degree_bound(const RootedTree& tree);
int odd_degree_bound(const Graph& tree);

struct CrossingStats {
  std::size_t crossings = 0;
  /// Subset of `crossings` where the two edges overlap along a line.
  std::size_t overlaps = 0;
};

/// Unordered edge pairs meeting at a point other than a shared endpoint.
CrossingStats crossing_stats(const GridDrawing& d);
CrossingStats crossing_stats(const Drawing& d);
inline std::size_t count_crossings(const GridDrawing& d) { return crossing_stats(d).crossings; }
inline std::size_t count_crossings(const Drawing& d) { return crossing_stats(d).crossings; }

/// No crossings, no two vertices at the same point and no vertex inside a
/// non-incident edge.
bool is_planar_drawing(const GridDrawing& d);
bool is_planar_drawing(const Drawing& d);

}  // namespace fewseg
