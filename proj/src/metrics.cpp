#include "fewseg/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "fewseg/geometry.hpp"
#include "fewseg/visual_complexity.hpp"

namespace fewseg {

double min_incident_angle_deg(const Drawing& d) {
  const int n = d.graph.vertex_count();
  std::vector<std::vector<double>> angles(n);
  for (const Edge& e : d.graph.edges()) {
    const RVec a = d.positions[e.v] - d.positions[e.u];
    angles[e.u].push_back(std::atan2(a.y, a.x));
    angles[e.v].push_back(std::atan2(-a.y, -a.x));
  }
  double best = 180;
  for (auto& list : angles) {
    if (list.size() < 2) continue;
    std::sort(list.begin(), list.end());
    for (std::size_t i = 0; i < list.size(); ++i) {
      double gap = i + 1 < list.size() ? list[i + 1] - list[i] : list.front() + 2 * std::numbers::pi - list.back();
      best = std::min(best, gap * 180.0 / std::numbers::pi);
    }
  }
  return std::clamp(best, 0.0, 180.0);
}

double edge_length_cv(const Drawing& d) {
  const auto& edges = d.graph.edges();
  if (edges.empty()) return 0;
  double sum = 0;
  std::vector<double> len;
  for (const Edge& e : edges) {
    len.push_back(norm(d.positions[e.u] - d.positions[e.v]));
    sum += len.back();
  }
  const double mean = sum / double(len.size());
  if (mean == 0) return 0;
  double var = 0;
  for (double l : len) var += (l - mean) * (l - mean);
  return std::sqrt(var / double(len.size())) / mean;
}

namespace {

void fill_common(MetricsRecord& r, const Drawing& d, bool tree_mode) {
  if (!d.positions.empty()) {
    const auto b = bounding_box<double>(d.positions);
    r.width = b.width();
    r.height = b.height();
    r.area = r.width * r.height;
  }
  r.min_angle_deg = min_incident_angle_deg(d);
  r.edge_length_cv = edge_length_cv(d);
  if (tree_mode) r.lower_bound = odd_degree_bound(d.graph);
}

}  // namespace

MetricsRecord evaluate(const GridDrawing& d, bool tree_mode) {
  MetricsRecord r;
  r.segments = count_segments(d).count;
  r.crossings = count_crossings(d);
  fill_common(r, to_real(d), tree_mode);
  return r;
}

MetricsRecord evaluate(const Drawing& d, bool tree_mode) {
  MetricsRecord r;
  r.segments = count_segments(d).count;
  r.crossings = count_crossings(d);
  fill_common(r, d, tree_mode);
  return r;
}

std::vector<ReportRow> batch_report(const std::vector<CorpusItem>& corpus, const std::vector<std::string>& layouts,
                                    const LayoutOptions& options) {
  std::vector<ReportRow> rows;
  for (const CorpusItem& item : corpus) {
    for (const std::string& name : layouts) {
      ReportRow row{item.id, name, std::nullopt, std::nullopt, {}};
      try {
        const LayoutResult res = run_layout(name, item.graph, item.root, options);
        const bool tree_mode = item.graph.is_tree();
        row.metrics = res.grid ? evaluate(*res.grid, tree_mode) : evaluate(res.drawing, tree_mode);
      } catch (const std::exception& e) {
        row.error = e.what();
      }
      rows.push_back(std::move(row));
    }
  }
  if (corpus.empty()) return rows;

  for (const std::string& name : layouts) rows.push_back(mean_row(rows, name));
  return rows;
}

ReportRow mean_row(const std::vector<ReportRow>& rows, const std::string& layout) {
  ReportRow row{"mean", layout, std::nullopt, std::nullopt, {}};
  MetricsMeans m;
  double lb = 0;
  int count = 0, lb_count = 0;
  for (const ReportRow& r : rows) {
    if (r.layout != layout || !r.metrics) continue;
    const MetricsRecord& x = *r.metrics;
    ++count;
    m.segments += double(x.segments);
    m.crossings += double(x.crossings);
    if (x.lower_bound) {
      lb += *x.lower_bound;
      ++lb_count;
    }
    m.width += x.width;
    m.height += x.height;
    m.area += x.area;
    m.min_angle_deg += x.min_angle_deg;
    m.edge_length_cv += x.edge_length_cv;
  }
  if (count == 0) {
    row.error = "no successful rows";
    return row;
  }
  for (double* f : {&m.segments, &m.crossings, &m.width, &m.height, &m.area, &m.min_angle_deg, &m.edge_length_cv})
    *f /= count;
  if (lb_count) m.lower_bound = lb / lb_count;
  row.means = m;
  return row;
}

std::string format_number(double v) {
  if (v == 0) v = 0;  // no "-0"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string report_to_csv(const std::vector<ReportRow>& rows) {
  std::string out = std::string(kReportHeader) + "\n";
  for (const ReportRow& r : rows) {
    out += csv_field(r.instance_id) + "," + csv_field(r.layout) + ",";
    if (!r.metrics && !r.means) {
      out += csv_field("error: " + r.error) + ",,,,,,,\n";
      continue;
    }
    if (r.means) {
      const MetricsMeans& m = *r.means;
      out += format_number(m.segments) + "," + (m.lower_bound ? format_number(*m.lower_bound) : "") + "," +
             format_number(m.crossings) + "," + format_number(m.width) + "," + format_number(m.height) + "," +
             format_number(m.area) + "," + format_number(m.min_angle_deg) + "," + format_number(m.edge_length_cv) +
             "\n";
      continue;
    }
    const MetricsRecord& m = *r.metrics;
    out += std::to_string(m.segments) + "," + (m.lower_bound ? std::to_string(*m.lower_bound) : "") + "," +
           std::to_string(m.crossings) + "," + format_number(m.width) + "," + format_number(m.height) + "," +
           format_number(m.area) + "," + format_number(m.min_angle_deg) + "," + format_number(m.edge_length_cv) +
           "\n";
  }
  return out;
}

}  // namespace fewseg
