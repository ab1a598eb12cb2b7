#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "fewseg/geometry.hpp"
#include "fewseg/graph.hpp"
#include "fewseg/heavy_path.hpp"

namespace fewseg {

struct FewSegParams {
  int stretch = 2;           // s >= 0, rounding budget of the vector-rounding step
  int heuristic_rounds = 5;  // alternating compress / re-vector rounds
};

/// A FewSegments drawing together with the vector bookkeeping the
/// size-reduction passes work on. Every position is the sum of the edge
/// vectors on the root path, so moving a subtree rigidly means changing one
/// entry of `offset`.
struct FewSegLayout {
  RootedTree tree;
  HeavyPathDecomposition hpd;
  std::vector<IVec> offset;     // position(v) - position(parent(v)); (0,0) at the root
  std::vector<Vertex> partner;  // light sibling drawn on the opposite ray, or -1

  std::vector<IVec> positions() const;
  GridDrawing drawing() const;
};

// ---------------------------------------------------------------------------
// Vector rounding.
//
// A subtree S (and possibly its partner S' on the opposite ray) is about to
// be drawn with vector v. Candidates (i, j) with 0 <= i <= s*|x| and
// 0 <= j <= s*|y| lengthen v away from the origin, component by component,
// while never making it steeper than v. Each candidate costs
//   i + j + max(w + h of S drawn with the new vector, w' + h' of S' drawn with its negation)
// and the cheapest one is taken.

struct SubtreeExtent {
  std::int64_t width = 0;
  std::int64_t height = 0;
};

struct RoundingCandidate {
  std::int64_t di = 0;
  std::int64_t dj = 0;
  IVec for_subtree;  // vector assigned to S
  IVec for_partner;  // vector assigned to S' (the negation)
  std::int64_t cost = 0;
};

using ExtentOracle = std::function<SubtreeExtent(const IVec&)>;

/// (x + sign(x) i, y + sign(y) j): the candidate in the caller's orientation.
IVec rounded_vector(const IVec& v, std::int64_t i, std::int64_t j);

/// Slope guard: the candidate is not steeper than v (compared on |.|).
bool rounding_slope_ok(const IVec& v, std::int64_t i, std::int64_t j);

struct RoundingSearch {
  int stretch = 2;
  ExtentOracle subtree;
  ExtentOracle partner;  // empty when S' does not exist
  /// Optional lower bound on w + h for a vector; lets the search skip work.
  std::function<std::int64_t(const IVec&)> extent_lower_bound;
  /// Optional feasibility filter; rejected candidates are skipped.
  std::function<bool(const RoundingCandidate&)> accept;
};

/// Cheapest candidate; ties go to the smaller i + j, then smaller i, then
/// smaller j. Returns nullopt only if `accept` rejects every candidate.
std::optional<RoundingCandidate> heuristic1_round_vector(const IVec& v, const RoundingSearch& search);

// ---------------------------------------------------------------------------

/// Builds FewSegments drawings of one tree. Subtree layouts are cached by
/// (subtree root, primitive heavy-path direction), so one engine should be
/// reused for all passes over the same tree.
class FewSegmentsEngine {
 public:
  FewSegmentsEngine(const RootedTree& tree, FewSegParams params = {});

  /// Heavy-path layout with vector rounding applied while placing subtrees.
  FewSegLayout initial_layout();
  /// One compression pass over all edges in post-order.
  void heuristic2_compress(FewSegLayout& layout) const;
  /// One re-vectoring pass over the long light edges in post-order.
  void heuristic3_revector(FewSegLayout& layout);
  /// Initial layout followed by `heuristic_rounds` compress / re-vector rounds.
  FewSegLayout run();

  const FewSegParams& params() const { return params_; }
  const RootedTree& tree() const { return tree_; }
  std::size_t cached_subtree_layouts() const { return cache_.size(); }

  /// Heavy direction of the root's heavy path.
  static constexpr IVec kRootDirection{0, -1};

 private:
  struct SubtreeLayout {
    std::vector<std::pair<Vertex, IVec>> offsets;  // every vertex below the subtree root
    SubtreeExtent extent;
  };

  const SubtreeLayout& subtree_layout(Vertex r, const IVec& vec);
  SubtreeLayout build_subtree(Vertex r, const IVec& dir);
  std::vector<IVec> palette(const IVec& dir, std::size_t count) const;

  RootedTree tree_;
  FewSegParams params_;
  HeavyPathDecomposition hpd_;
  std::vector<Vertex> partner_;
  std::vector<int> slot_;        // pair slot of a light child at its parent
  std::vector<int> side_;        // +1 / -1 along the slot direction
  std::vector<int> slots_used_;  // per vertex
  std::vector<int> heavy_len_;   // heavy edges below each vertex on its heavy path
  Vertex root_opposite_ = -1;    // light root child continuing the heavy line backwards
  std::map<std::tuple<Vertex, std::int64_t, std::int64_t>, SubtreeLayout> cache_;
};

/// Heavy-path drawing with the minimum number of segments (n_odd / 2).
GridDrawing layout_fewsegments(const RootedTree& tree, const FewSegParams& params = {});

/// Width/height of a drawing's bounding box.
SubtreeExtent drawing_extent(const std::vector<IVec>& positions);

}  // namespace fewseg
