#include "fewseg/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "fewseg/force.hpp"
#include "fewseg/generators.hpp"
#include "fewseg/graph_io.hpp"
#include "fewseg/layouts.hpp"
#include "fewseg/metrics.hpp"
#include "fewseg/stimulus.hpp"

namespace fewseg {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<std::uint64_t> seed;
  std::string out_path;
  std::string format;

  // generate
  int size_class = 1;
  std::string depth_class = "balanced";
  std::string type_class = "random";
  int vertices = 0;
  int edges = 0;
  long max_attempts = 1000000;

  // layout / paths / metrics
  std::vector<std::string> inputs;
  std::string input;
  std::string algo;
  std::vector<std::string> algos;
  double angular_coefficient = 22.5;
  int quadrants = 4;
  int stretch = 2;
  int rounds = 5;
  double C = 1.0;
  double A = 0.0;
  int iterations = 500;
  double temperature = 0.0;
  std::string paths_file;
  double max_turn = 30.0;
  int min_len = 2;
  int exact_size = 0;
  int size_tolerance = 0;

  // render
  SvgStyle style;
  std::vector<long> selected;
  std::vector<long> selectable;
};

std::uint64_t resolve_seed(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("FEWSEG_SEED"); env && *env) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(env, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != std::string(env).size()) throw UsageError("FEWSEG_SEED must be an unsigned integer");
    return v;
  }
  return 0;
}

void emit(const Options& o, std::ostream& out, const std::string& content) {
  if (o.out_path.empty()) out << content;
  else write_file_atomic(o.out_path, content);
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  if (o.format.empty()) return;
  for (const char* a : allowed)
    if (o.format == a) return;
  throw UsageError("--format " + o.format + " is not available for this command");
}

LayoutOptions layout_options(const Options& o, std::uint64_t seed) {
  LayoutOptions lo;
  lo.quad.angular_coefficient = o.angular_coefficient;
  lo.quad.quadrants = o.quadrants;
  lo.fewseg.stretch = o.stretch;
  lo.fewseg.heuristic_rounds = o.rounds;
  lo.force.C = o.C;
  lo.force.A = o.A;
  lo.force.iterations = o.iterations;
  lo.force.initial_temperature = o.temperature;
  lo.force.seed = seed;
  lo.max_turn_deg = o.max_turn;
  lo.min_path_len = o.min_len;
  return lo;
}

bool integral(const Drawing& d) {
  return std::all_of(d.positions.begin(), d.positions.end(), [](const RVec& p) {
    return std::floor(p.x) == p.x && std::floor(p.y) == p.y && std::abs(p.x) < 9e15 && std::abs(p.y) < 9e15;
  });
}

// Drawing stored in a stimulus document; ids are mapped to dense indices in
// document order.
Drawing drawing_of(const StimulusDocument& doc) {
  std::map<long, Vertex> index;
  Drawing d;
  for (const auto& v : doc.vertices) {
    index[v.id] = Vertex(d.positions.size());
    d.positions.push_back({v.x, v.y});
  }
  d.graph = Graph(int(d.positions.size()));
  for (const auto& e : doc.edges) d.graph.add_edge(index[e.source], index[e.target]);
  return d;
}

int cmd_generate_tree(const Options& o, std::ostream& out, std::ostream& err) {
  require_format(o, {});
  const std::uint64_t seed = resolve_seed(o);
  err << "seed: " << seed << "\n";
  TreeSpec spec;
  spec.size_class = o.size_class;
  spec.depth_class = parse_depth_class(o.depth_class);
  spec.seed = seed;
  spec.max_attempts = o.max_attempts;
  const RootedTree t = random_tree(spec);
  const std::string gen = "tree size=" + std::to_string(o.size_class) + " depth-class=" + o.depth_class +
                          " seed=" + std::to_string(seed);
  emit(o, out, format_edge_list(t.as_graph(), t.root(), gen));
  return kExitOk;
}

int cmd_generate_graph(const Options& o, std::ostream& out, std::ostream& err) {
  require_format(o, {});
  if (o.type_class == "rome") throw UsageError("rome graphs are loaded from files, not generated");
  if (o.type_class != "random") throw UsageError("--type must be random or rome");
  if ((o.vertices > 0) != (o.edges > 0)) throw UsageError("--vertices and --edges go together");
  const std::uint64_t seed = resolve_seed(o);
  err << "seed: " << seed << "\n";
  Graph g;
  std::string gen;
  if (o.vertices > 0) {
    Rng rng(seed);
    g = random_connected_graph(o.vertices, o.edges, rng, o.max_attempts);
    gen = "graph vertices=" + std::to_string(o.vertices) + " edges=" + std::to_string(o.edges);
  } else {
    GraphSpec spec;
    spec.size_class = o.size_class;
    spec.seed = seed;
    spec.max_attempts = o.max_attempts;
    g = random_sparse_graph(spec);
    gen = "graph size=" + std::to_string(o.size_class) + " type=random";
  }
  gen += " seed=" + std::to_string(seed);
  emit(o, out, format_edge_list(g, std::nullopt, gen));
  return kExitOk;
}

int cmd_layout(const Options& o, std::ostream& out, std::ostream& err) {
  require_format(o, {"json", "svg"});
  const std::uint64_t seed = resolve_seed(o);
  err << "seed: " << seed << "\n";
  const GraphFile gf = load_graph_file(o.input);
  LayoutOptions lo = layout_options(o, seed);
  if (!o.paths_file.empty()) {
    if (o.algo != "fdfewseg") throw UsageError("--paths only applies to fdfewseg");
    try {
      lo.paths = parse_path_set(read_file(o.paths_file));
    } catch (const std::invalid_argument& e) {
      throw ParseError(o.paths_file + ": " + e.what());
    }
  }
  const LayoutResult res = run_layout(o.algo, gf.graph, gf.root, lo);
  const std::string generator = gf.generator.empty() ? std::filesystem::path(o.input).filename().string() : gf.generator;
  const StimulusDocument doc = make_stimulus(res.drawing, is_tree_layout(o.algo), o.algo, seed, generator);
  emit(o, out, o.format == "svg" ? render_svg(doc) : stimulus_to_json(doc));
  return kExitOk;
}

int cmd_render(const Options& o, std::ostream& out, std::ostream&) {
  require_format(o, {"svg"});
  const StimulusDocument doc = parse_stimulus(read_file(o.input));
  const std::set<long> selected(o.selected.begin(), o.selected.end());
  const std::set<long> selectable(o.selectable.begin(), o.selectable.end());
  emit(o, out, render_svg(doc, o.style, selected, selectable));
  return kExitOk;
}

int cmd_paths(const Options& o, std::ostream& out, std::ostream& err) {
  require_format(o, {});
  const std::uint64_t seed = resolve_seed(o);
  err << "seed: " << seed << "\n";
  const GraphFile gf = load_graph_file(o.input);
  const LayoutOptions lo = layout_options(o, seed);
  const Drawing base = layout_force_directed(gf.graph, lo.force);
  emit(o, out, format_path_set(select_paths(gf.graph, base, o.max_turn, o.min_len)));
  return kExitOk;
}

int cmd_metrics(const Options& o, std::ostream& out, std::ostream& err) {
  require_format(o, {"csv"});
  namespace fs = std::filesystem;
  const std::uint64_t seed = resolve_seed(o);
  err << "seed: " << seed << "\n";
  std::vector<std::string> layouts = o.algos.empty() ? layout_names() : o.algos;
  for (const auto& a : layouts)
    if (std::find(layout_names().begin(), layout_names().end(), a) == layout_names().end())
      throw UsageError("unknown layout '" + a + "'");

  std::vector<fs::path> files;
  for (const std::string& in : o.inputs) {
    const fs::path p(in);
    if (fs::is_directory(p)) {
      std::vector<fs::path> found;
      for (const auto& entry : fs::directory_iterator(p))
        if (entry.is_regular_file()) found.push_back(entry.path());
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else if (fs::exists(p)) {
      files.push_back(p);
    } else {
      throw ParseError("cannot read " + in);
    }
  }

  std::vector<CorpusItem> corpus;
  std::vector<ReportRow> drawn;  // stimulus documents are measured as given
  for (const fs::path& f : files) {
    const std::string id = f.stem().string();
    if (f.extension() == ".json") {
      const StimulusDocument doc = parse_stimulus(read_file(f.string()));
      const Drawing d = drawing_of(doc);
      ReportRow row{id, doc.layout, std::nullopt, std::nullopt, {}};
      const bool tree_mode = d.graph.is_tree();
      if (integral(d)) {
        GridDrawing g{d.graph, {}};
        for (const RVec& p : d.positions) g.positions.push_back({std::int64_t(p.x), std::int64_t(p.y)});
        row.metrics = evaluate(g, tree_mode);
      } else {
        row.metrics = evaluate(d, tree_mode);
      }
      drawn.push_back(std::move(row));
      continue;
    }
    if (f.extension() == ".svg" || f.extension() == ".csv") continue;
    const GraphFile gf = load_graph_file(f.string());
    const int n = gf.graph.vertex_count();
    if (o.exact_size > 0 && std::abs(n - o.exact_size) > o.size_tolerance) continue;
    corpus.push_back({id, gf.graph, gf.root});
  }

  std::vector<ReportRow> rows;
  if (!drawn.empty()) {
    // aggregate stimulus rows by their layout, in first-seen order
    rows = drawn;
    std::vector<std::string> seen;
    for (const auto& r : drawn)
      if (std::find(seen.begin(), seen.end(), r.layout) == seen.end()) seen.push_back(r.layout);
    for (const auto& name : seen) rows.push_back(mean_row(drawn, name));
  }
  const std::vector<ReportRow> laid = batch_report(corpus, layouts, layout_options(o, seed));
  rows.insert(rows.end(), laid.begin(), laid.end());
  emit(o, out, report_to_csv(rows));
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Tree and graph layouts with few segments", "fewseg"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", o.seed, "random seed (default: $FEWSEG_SEED, else 0)");
  app.add_option("--out", o.out_path, "write the result to this file instead of stdout");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "svg", "csv"}));

  auto* generate = app.add_subcommand("generate", "generate a random tree or graph as an edge list");
  generate->require_subcommand(1);
  auto* gen_tree = generate->add_subcommand("tree", "uniform random tree conditioned on its depth");
  gen_tree->add_option("--size", o.size_class, "1 (20 vertices) or 2 (40 vertices)")->check(CLI::Range(1, 2));
  gen_tree->add_option("--depth-class", o.depth_class, "deep, balanced or wide")
      ->check(CLI::IsMember({"deep", "balanced", "wide"}));
  gen_tree->add_option("--max-attempts", o.max_attempts, "rejection cap")->check(CLI::PositiveNumber);
  auto* gen_graph = generate->add_subcommand("graph", "random connected sparse graph");
  gen_graph->add_option("--size", o.size_class, "1 (20/30) or 2 (40/60)")->check(CLI::Range(1, 2));
  gen_graph->add_option("--type", o.type_class, "random (rome graphs are loaded from files)");
  gen_graph->add_option("--vertices", o.vertices, "explicit vertex count")->check(CLI::PositiveNumber);
  gen_graph->add_option("--edges", o.edges, "explicit edge count")->check(CLI::PositiveNumber);
  gen_graph->add_option("--max-attempts", o.max_attempts, "rejection cap")->check(CLI::PositiveNumber);

  auto add_force_options = [&](CLI::App* sub) {
    sub->add_option("--C", o.C, "constant in the optimal distance C*sqrt(A/n)");
    sub->add_option("--A", o.A, "drawing area (default: n)");
    sub->add_option("--iterations", o.iterations, "spring embedder iterations");
    sub->add_option("--temperature", o.temperature, "initial temperature (default: 0.1*sqrt(A))");
    sub->add_option("--max-turn", o.max_turn, "path selection: largest turn in degrees");
    sub->add_option("--min-len", o.min_len, "path selection: fewest edges per path");
  };
  auto add_tree_options = [&](CLI::App* sub) {
    sub->add_option("--angular-coefficient", o.angular_coefficient, "quad: smallest angle between edges");
    sub->add_option("--quadrants", o.quadrants, "quad: quadrants used per vertex")->check(CLI::Range(1, 4));
    sub->add_option("--stretch", o.stretch, "fewsegments: vector rounding budget");
    sub->add_option("--rounds", o.rounds, "fewsegments: compress/re-vector rounds");
  };

  auto* layout = app.add_subcommand("layout", "lay out a graph file and write a stimulus document");
  layout->add_option("input", o.input, "edge list or GraphML file")->required();
  layout->add_option("--algo", o.algo, "layout algorithm")->required()->check(CLI::IsMember(layout_names()));
  layout->add_option("--paths", o.paths_file, "fdfewseg: paths file (default: selected automatically)");
  add_force_options(layout);
  add_tree_options(layout);

  auto* render = app.add_subcommand("render", "render a stimulus document as SVG");
  render->add_option("input", o.input, "stimulus JSON")->required();
  render->add_option("--selected", o.selected, "vertex ids drawn as selected")->delimiter(',');
  render->add_option("--selectable", o.selectable, "vertex ids drawn as selectable")->delimiter(',');
  render->add_option("--node-color", o.style.node_color);
  render->add_option("--edge-color", o.style.edge_color);
  render->add_option("--halo-color", o.style.halo_color);
  render->add_option("--selected-color", o.style.selected_color);
  render->add_option("--selectable-color", o.style.selectable_color);
  render->add_option("--edge-width", o.style.edge_width, "relative to the mean edge length")
      ->check(CLI::PositiveNumber);
  render->add_option("--node-radius", o.style.node_radius, "relative to the mean edge length")
      ->check(CLI::PositiveNumber);

  auto* metrics = app.add_subcommand("metrics", "measure layouts over a corpus and write CSV");
  metrics->add_option("inputs", o.inputs, "directories or files (graphs, or stimulus .json)");
  metrics->add_option("--algo", o.algos, "layouts to run on graph inputs (default: all)")->delimiter(',');
  metrics->add_option("--exact-size", o.exact_size, "keep graphs with this many vertices");
  metrics->add_option("--size-tolerance", o.size_tolerance, "allowed deviation from --exact-size")
      ->check(CLI::NonNegativeNumber);
  add_force_options(metrics);
  add_tree_options(metrics);

  auto* paths = app.add_subcommand("paths", "select paths for fdfewseg on a forcedir drawing");
  paths->add_option("input", o.input, "edge list or GraphML file")->required();
  add_force_options(paths);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen_tree->parsed()) return cmd_generate_tree(o, out, err);
    if (gen_graph->parsed()) return cmd_generate_graph(o, out, err);
    if (layout->parsed()) return cmd_layout(o, out, err);
    if (render->parsed()) return cmd_render(o, out, err);
    if (metrics->parsed()) return cmd_metrics(o, out, err);
    if (paths->parsed()) return cmd_paths(o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const PathSetError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const LayoutError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitAlgorithm;
  }
  return kExitUsage;
}

}  // namespace fewseg
