#pragma once

#include <iosfwd>
#include <string>

#include "coarselab/graph.hpp"
#include "coarselab/metric_space.hpp"

namespace coarselab {

/// Graph text format: a header line "V E" followed by E lines "u v" with
/// 0-based vertex ids. Blank lines and lines starting with '#' are ignored.
GeodesicGraph read_graph(std::istream& in, int vertex_cap = kDefaultVertexCap);
GeodesicGraph read_graph_file(const std::string& path, int vertex_cap = kDefaultVertexCap);
void write_graph(std::ostream& out, const GeodesicGraph& graph);

/// Metric CSV: a header row of point labels followed by one row of
/// distances per point, in header order.
FiniteMetricSpace read_metric_csv(std::istream& in);
FiniteMetricSpace read_metric_csv_file(const std::string& path);
void write_metric_csv(std::ostream& out, const FiniteMetricSpace& space);

/// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

/// Whole file as a string; throws ParseError when unreadable.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace coarselab
