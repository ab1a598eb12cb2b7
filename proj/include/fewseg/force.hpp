#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fewseg/graph.hpp"

namespace fewseg {

/// Spring embedder parameters. A zero `A` or `initial_temperature` selects
/// the default: A = n, initial temperature 0.1 * sqrt(A).
struct ForceParams {
  double C = 1.0;
  double A = 0.0;
  int iterations = 500;
  double initial_temperature = 0.0;
  std::uint64_t seed = 0;
};

/// Parameters with defaults filled in for an n-vertex graph; throws
/// std::invalid_argument on invalid values.
ForceParams resolve_force_params(const ForceParams& p, int n);

/// Optimal distance k = C * sqrt(A / n).
double optimal_distance(const ForceParams& resolved, int n);

double fr_attractive(double d, double k);
/// Negative magnitude (pointing towards the other vertex means attraction).
double fr_repulsive(double d, double k);

using PathSet = std::vector<std::vector<Vertex>>;

/// Overwrites the displacement of every internal path vertex so that, after
/// the move, it sits at parameter i/k between the moved endpoints. Paths
/// are applied in list order.
void apply_path_constraints(const std::vector<RVec>& positions, std::vector<RVec>& displacements,
                            const PathSet& paths);

/// Per-iteration observer: iteration index, temperature, positions after the
/// move, and the capped displacements before projection.
using ForceObserver =
    std::function<void(int, double, const std::vector<RVec>&, const std::vector<RVec>&)>;

Drawing layout_force_directed(const Graph& graph, const ForceParams& params);

/// Throws PathSetError when `paths` is not valid for `graph`. A set that is
/// valid up to ordering is reordered before the run.
Drawing layout_fdfewseg(const Graph& graph, const PathSet& paths, const ForceParams& params,
                        const ForceObserver& observer = {});

/// Net FR force on every vertex of a drawing (for equilibrium checks).
std::vector<RVec> fr_net_forces(const Drawing& d, double k);

// ---------------------------------------------------------------------------
// Path sets

class PathSetError : public std::runtime_error {
 public:
  enum class Kind { not_a_path, not_edge_disjoint, internal_vertex_conflict, ordering_cycle };
  PathSetError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct PathSetCheck {
  enum class Status { ok, reordered };
  Status status = Status::ok;
  PathSet paths;  // the input, or its stable topological reordering
};

/// Validates membership, edge-disjointness and internal-vertex uniqueness and
/// orders the paths so that a path with v internal precedes every path
/// ending at v. Throws PathSetError.
PathSetCheck validate_path_set(const Graph& graph, const PathSet& paths);

/// Greedy selector: joins consecutive edges whose turn in `base` is at most
/// `max_turn_deg`, straightest pairs first, and keeps chains of at least
/// `min_len` edges. The result always validates.
PathSet select_paths(const Graph& graph, const Drawing& base, double max_turn_deg = 30.0, int min_len = 2);

/// Text format: one path per line, whitespace-separated 1-based labels,
/// `#` comments.
PathSet parse_path_set(const std::string& text);
std::string format_path_set(const PathSet& paths);

}  // namespace fewseg
