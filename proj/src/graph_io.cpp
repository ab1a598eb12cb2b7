#include "fewseg/graph_io.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

namespace fewseg {

RootedTree GraphFile::rooted() const {
  if (!graph.is_tree()) throw GraphError("input graph is not a tree");
  return RootedTree::from_graph(graph, root.value_or(0));
}

namespace {

long parse_label(const std::string& tok, int lineno) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size() || v < 1)
    throw ParseError("line " + std::to_string(lineno) + ": expected a positive vertex label, got '" + tok + "'");
  return v;
}

}  // namespace

GraphFile parse_edge_list(const std::string& text) {
  static const std::regex directive(R"(^\s*#\s*(vertices|root)\s*:\s*(\S+)\s*$)");
  static const std::regex generator(R"(^\s*#\s*generator\s*:\s*(.*?)\s*$)");
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<std::pair<long, long>, int>> raw;  // edge, line
  std::optional<long> declared_n, root;
  int root_line = 0;
  std::string generator_text;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::smatch m;
    if (std::regex_match(line, m, directive)) {
      const long value = parse_label(m[2], lineno);
      if (m[1] == "vertices") declared_n = value;
      else {
        root = value;
        root_line = lineno;
      }
      continue;
    }
    if (std::regex_match(line, m, generator)) {
      generator_text = m[1];
      continue;
    }
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() != 2)
      throw ParseError("line " + std::to_string(lineno) + ": expected 'u v', got " + std::to_string(tok.size()) +
                       " fields");
    raw.push_back({{parse_label(tok[0], lineno), parse_label(tok[1], lineno)}, lineno});
  }

  long n = declared_n.value_or(0);
  if (!declared_n)
    for (const auto& [e, l] : raw) n = std::max({n, e.first, e.second});
  if (root && !declared_n) n = std::max(n, *root);
  GraphFile out;
  out.graph = Graph(int(n));
  std::set<std::pair<long, long>> seen;
  for (const auto& [e, l] : raw) {
    const std::string where = "line " + std::to_string(l) + ": ";
    if (e.first > n || e.second > n)
      throw ParseError(where + "label exceeds the declared vertex count " + std::to_string(n));
    if (e.first == e.second) throw ParseError(where + "self-loop at vertex " + std::to_string(e.first));
    if (!seen.insert(std::minmax(e.first, e.second)).second)
      throw ParseError(where + "duplicate edge " + std::to_string(e.first) + " " + std::to_string(e.second));
    out.graph.add_edge(Vertex(e.first - 1), Vertex(e.second - 1));
  }
  if (root) {
    if (*root > n) throw ParseError("line " + std::to_string(root_line) + ": root label out of range");
    out.root = Vertex(*root - 1);
  }
  out.generator = generator_text;
  for (long v = 1; v <= n; ++v) out.labels.push_back(std::to_string(v));
  return out;
}

GraphFile parse_graphml(const std::string& text) {
  namespace pt = boost::property_tree;
  pt::ptree doc;
  std::istringstream in(text);
  try {
    pt::read_xml(in, doc);
  } catch (const pt::xml_parser_error& e) {
    throw ParseError("GraphML line " + std::to_string(e.line()) + ": " + e.message());
  }
  const auto graphml = doc.get_child_optional("graphml");
  if (!graphml) throw ParseError("GraphML: missing <graphml> root element");
  const auto graph = graphml->get_child_optional("graph");
  if (!graph) throw ParseError("GraphML: missing <graph> element");

  GraphFile out;
  std::map<std::string, Vertex> ids;
  std::vector<std::pair<std::string, std::string>> edges;
  int node_no = 0, edge_no = 0;
  for (const auto& [tag, child] : *graph) {
    if (tag == "node") {
      ++node_no;
      const auto id = child.get_optional<std::string>("<xmlattr>.id");
      if (!id) throw ParseError("GraphML node #" + std::to_string(node_no) + ": missing id");
      if (!ids.emplace(*id, Vertex(out.labels.size())).second)
        throw ParseError("GraphML node #" + std::to_string(node_no) + ": duplicate id '" + *id + "'");
      out.labels.push_back(*id);
    } else if (tag == "edge") {
      ++edge_no;
      const auto s = child.get_optional<std::string>("<xmlattr>.source");
      const auto t = child.get_optional<std::string>("<xmlattr>.target");
      if (!s || !t) throw ParseError("GraphML edge #" + std::to_string(edge_no) + ": missing source or target");
      edges.push_back({*s, *t});
    }
  }
  out.graph = Graph(int(out.labels.size()));
  std::set<std::pair<Vertex, Vertex>> seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "GraphML edge #" + std::to_string(i + 1) + ": ";
    const auto s = ids.find(edges[i].first), t = ids.find(edges[i].second);
    if (s == ids.end() || t == ids.end()) throw ParseError(where + "unknown node id");
    if (s->second == t->second) throw ParseError(where + "self-loop at '" + s->first + "'");
    if (!seen.insert(std::minmax(s->second, t->second)).second) throw ParseError(where + "duplicate edge");
    out.graph.add_edge(s->second, t->second);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

GraphFile load_graph_file(const std::string& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  try {
    return first != std::string::npos && text[first] == '<' ? parse_graphml(text) : parse_edge_list(text);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string format_edge_list(const Graph& g, std::optional<Vertex> root, const std::string& generator) {
  std::string out;
  if (!generator.empty()) out += "# generator: " + generator + "\n";
  out += "# vertices: " + std::to_string(g.vertex_count()) + "\n";
  if (root) out += "# root: " + std::to_string(*root + 1) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + "\n";
  return out;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
    f << content;
    f.close();
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot rename into " + path + ": " + ec.message());
  }
}

}  // namespace fewseg
