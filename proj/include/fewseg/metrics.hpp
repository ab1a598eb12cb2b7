#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fewseg/graph.hpp"
#include "fewseg/layouts.hpp"

namespace fewseg {

struct MetricsRecord {
  std::size_t segments = 0;
  std::optional<int> lower_bound;  // trees only
  std::size_t crossings = 0;
  double width = 0;
  double height = 0;
  double area = 0;
  double min_angle_deg = 180;  // 180 when no vertex has two incident edges
  double edge_length_cv = 0;   // population std / mean of edge lengths
};

/// Segments and crossings on grid drawings use exact arithmetic.
MetricsRecord evaluate(const GridDrawing& d, bool tree_mode);
MetricsRecord evaluate(const Drawing& d, bool tree_mode);

/// Smallest angle between consecutive edges around any vertex, in degrees.
double min_incident_angle_deg(const Drawing& d);
double edge_length_cv(const Drawing& d);

struct CorpusItem {
  std::string id;
  Graph graph;
  std::optional<Vertex> root;
};

/// Column means over the successful rows of one layout.
struct MetricsMeans {
  double segments = 0;
  std::optional<double> lower_bound;
  double crossings = 0;
  double width = 0;
  double height = 0;
  double area = 0;
  double min_angle_deg = 0;
  double edge_length_cv = 0;
};

struct ReportRow {
  std::string instance_id;  // "mean" for aggregate rows
  std::string layout;
  std::optional<MetricsRecord> metrics;
  std::optional<MetricsMeans> means;
  std::string error;  // set when neither is present
};

inline const char* kReportHeader =
    "instance_id,layout,segments,lower_bound,crossings,width,height,area,min_angle_deg,edge_length_cv";

/// One row per (instance, layout) in corpus order, then one "mean" row per
/// layout. Failures become error rows; the run continues.
std::vector<ReportRow> batch_report(const std::vector<CorpusItem>& corpus, const std::vector<std::string>& layouts,
                                    const LayoutOptions& options);

/// Aggregate "mean" row over the successful rows of `layout`.
ReportRow mean_row(const std::vector<ReportRow>& rows, const std::string& layout);

std::string format_number(double v);
std::string csv_field(const std::string& s);
std::string report_to_csv(const std::vector<ReportRow>& rows);

}  // namespace fewseg
