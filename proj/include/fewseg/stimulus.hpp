#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "fewseg/graph.hpp"

namespace fewseg {

struct StimulusVertex {
  long id = 0;
  double x = 0;
  double y = 0;
};

struct StimulusEdge {
  long source = 0;
  long target = 0;
};

/// {"vertices":[{id,x,y}], "edges":[{source,target}],
///  "metadata":{layout, seed, generator}}; ids are the 1-based labels.
struct StimulusDocument {
  std::vector<StimulusVertex> vertices;
  std::vector<StimulusEdge> edges;
  std::string layout;
  std::uint64_t seed = 0;
  std::string generator;
};

/// Tree layouts grow upwards (y = -depth); pass `flip_y` to emit them root
/// at the top in screen coordinates.
StimulusDocument make_stimulus(const Drawing& d, bool flip_y, const std::string& layout, std::uint64_t seed,
                               const std::string& generator);

std::string stimulus_to_json(const StimulusDocument& doc);
/// Throws ParseError with the line/column of malformed JSON, or naming the
/// offending element for schema violations.
StimulusDocument parse_stimulus(const std::string& text);

struct SvgStyle {
  std::string node_color = "#1f6fb5";
  std::string edge_color = "#000000";
  std::string halo_color = "#ffffff";
  std::string selected_color = "#2ca02c";
  std::string selectable_color = "#9ecae1";
  double edge_width = 0.04;   // in units of the mean edge length
  double node_radius = 0.12;  // in units of the mean edge length
  double halo_factor = 3.0;
  double margin = 0.05;       // fraction of the larger drawing extent
  int pixel_width = 800;
};

/// One circle per vertex; each edge is a halo line followed by the edge line.
std::string render_svg(const StimulusDocument& doc, const SvgStyle& style = {},
                       const std::set<long>& selected = {}, const std::set<long>& selectable = {});

}  // namespace fewseg
