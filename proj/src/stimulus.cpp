#include "fewseg/stimulus.hpp"

#include <cmath>
#include <cstdio>
#include <map>

#include <json.hpp>

#include "fewseg/geometry.hpp"
#include "fewseg/graph_io.hpp"

namespace fewseg {

using nlohmann::json;

StimulusDocument make_stimulus(const Drawing& d, bool flip_y, const std::string& layout, std::uint64_t seed,
                               const std::string& generator) {
  StimulusDocument doc;
  doc.layout = layout;
  doc.seed = seed;
  doc.generator = generator;
  for (Vertex v = 0; v < d.graph.vertex_count(); ++v) {
    const RVec p = d.positions[v];
    doc.vertices.push_back({long(v) + 1, p.x, flip_y && p.y != 0 ? -p.y : p.y});
  }
  for (const Edge& e : d.graph.edges()) doc.edges.push_back({long(e.u) + 1, long(e.v) + 1});
  return doc;
}

std::string stimulus_to_json(const StimulusDocument& doc) {
  json vertices = json::array(), edges = json::array();
  for (const auto& v : doc.vertices) vertices.push_back({{"id", v.id}, {"x", v.x}, {"y", v.y}});
  for (const auto& e : doc.edges) edges.push_back({{"source", e.source}, {"target", e.target}});
  json out;
  out["vertices"] = std::move(vertices);
  out["edges"] = std::move(edges);
  out["metadata"] = {{"layout", doc.layout}, {"seed", doc.seed}, {"generator", doc.generator}};
  return out.dump(2) + "\n";
}

namespace {

std::string location(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

double finite_number(const json& j, const std::string& where) {
  if (!j.is_number()) throw ParseError(where + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(where + " must be finite");
  return v;
}

long integer_id(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + " must be an integer");
  return j.get<long>();
}

}  // namespace

StimulusDocument parse_stimulus(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON at " + location(text, e.byte));
  }
  if (!j.is_object()) throw ParseError("stimulus: top level must be an object");
  StimulusDocument doc;
  if (!j.contains("vertices") || !j["vertices"].is_array()) throw ParseError("stimulus: missing 'vertices' array");
  if (!j.contains("edges") || !j["edges"].is_array()) throw ParseError("stimulus: missing 'edges' array");
  std::map<long, std::size_t> ids;
  for (std::size_t i = 0; i < j["vertices"].size(); ++i) {
    const json& v = j["vertices"][i];
    const std::string where = "vertices[" + std::to_string(i) + "]";
    if (!v.is_object() || !v.contains("id") || !v.contains("x") || !v.contains("y"))
      throw ParseError(where + ": needs id, x and y");
    StimulusVertex sv{integer_id(v["id"], where + ".id"), finite_number(v["x"], where + ".x"),
                      finite_number(v["y"], where + ".y")};
    if (!ids.emplace(sv.id, i).second) throw ParseError(where + ": duplicate id " + std::to_string(sv.id));
    doc.vertices.push_back(sv);
  }
  for (std::size_t i = 0; i < j["edges"].size(); ++i) {
    const json& e = j["edges"][i];
    const std::string where = "edges[" + std::to_string(i) + "]";
    if (!e.is_object() || !e.contains("source") || !e.contains("target"))
      throw ParseError(where + ": needs source and target");
    StimulusEdge se{integer_id(e["source"], where + ".source"), integer_id(e["target"], where + ".target")};
    if (!ids.count(se.source) || !ids.count(se.target)) throw ParseError(where + ": unknown endpoint");
    doc.edges.push_back(se);
  }
  if (j.contains("metadata")) {
    const json& m = j["metadata"];
    if (!m.is_object()) throw ParseError("metadata must be an object");
    if (m.contains("layout") && m["layout"].is_string()) doc.layout = m["layout"];
    if (m.contains("seed") && m["seed"].is_number_unsigned()) doc.seed = m["seed"];
    if (m.contains("generator") && m["generator"].is_string()) doc.generator = m["generator"];
  }
  return doc;
}

namespace {

std::string num(double v) {
  if (v == 0) v = 0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const StimulusDocument& doc, const SvgStyle& style, const std::set<long>& selected,
                       const std::set<long>& selectable) {
  std::map<long, RVec> at;
  for (const auto& v : doc.vertices) at[v.id] = {v.x, v.y};

  double unit = 0;
  for (const auto& e : doc.edges) unit += norm(at[e.source] - at[e.target]);
  unit = doc.edges.empty() || unit == 0 ? 1.0 : unit / double(doc.edges.size());
  const double r = style.node_radius * unit, w = style.edge_width * unit;

  Box<double> box{0, 0, 0, 0};
  if (!doc.vertices.empty()) {
    std::vector<RVec> pts;
    for (const auto& v : doc.vertices) pts.push_back({v.x, v.y});
    box = bounding_box<double>(pts);
  }
  // circles must stay inside the frame as well
  const double pad = style.margin * std::max({box.width(), box.height(), unit}) + r;
  const double vx = box.min_x - pad, vy = box.min_y - pad;
  const double vw = box.width() + 2 * pad, vh = box.height() + 2 * pad;
  const double px_h = style.pixel_width * vh / vw;

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(style.pixel_width) +
         "\" height=\"" + num(px_h) + "\" viewBox=\"" + num(vx) + " " + num(vy) + " " + num(vw) + " " + num(vh) +
         "\">\n";
  if (!doc.layout.empty()) out += "  <title>" + escape_xml(doc.layout) + "</title>\n";
  out += "  <g stroke-linecap=\"round\">\n";
  for (const auto& e : doc.edges) {
    const RVec a = at[e.source], b = at[e.target];
    const std::string coords =
        "x1=\"" + num(a.x) + "\" y1=\"" + num(a.y) + "\" x2=\"" + num(b.x) + "\" y2=\"" + num(b.y) + "\"";
    out += "    <line class=\"halo\" " + coords + " stroke=\"" + escape_xml(style.halo_color) + "\" stroke-width=\"" +
           num(w * style.halo_factor) + "\"/>\n";
    out += "    <line class=\"edge\" " + coords + " stroke=\"" + escape_xml(style.edge_color) + "\" stroke-width=\"" +
           num(w) + "\"/>\n";
  }
  out += "  </g>\n  <g>\n";
  for (const auto& v : doc.vertices) {
    const std::string& fill = selected.count(v.id)     ? style.selected_color
                              : selectable.count(v.id) ? style.selectable_color
                                                       : style.node_color;
    out += "    <circle id=\"v" + std::to_string(v.id) + "\" cx=\"" + num(v.x) + "\" cy=\"" + num(v.y) + "\" r=\"" +
           num(r) + "\" fill=\"" + escape_xml(fill) + "\"/>\n";
  }
  out += "  </g>\n</svg>\n";
  return out;
}

}  // namespace fewseg
