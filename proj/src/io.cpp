#include "coarselab/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "coarselab/error.hpp"

namespace coarselab {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool skip_line(const std::string& line) {
    const std::string t = trim(line);
    return t.empty() || t.front() == '#';
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) cells.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

double parse_number(const std::string& text, std::size_t row) {
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
        throw ParseError("metric CSV row " + std::to_string(row) + ": '" + text + "' is not a number");
    }
    return value;
}

}  // namespace

GeodesicGraph read_graph(std::istream& in, int vertex_cap) {
    std::string line;
    int line_no = 0;
    long vertices = -1;
    long edge_count = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (skip_line(line)) continue;
        std::istringstream fields(line);
        long a = 0;
        long b = 0;
        std::string extra;
        if (!(fields >> a >> b) || (fields >> extra)) {
            throw ParseError("graph line " + std::to_string(line_no) + ": expected two integers");
        }
        if (vertices < 0) {
            if (a < 1 || b < 0) throw ParseError("graph header must be 'V E' with V >= 1, E >= 0");
            if (a > vertex_cap) {
                throw CapExceeded("graph has " + std::to_string(a) + " vertices, cap is " +
                                  std::to_string(vertex_cap));
            }
            vertices = a;
            edge_count = b;
            edges.reserve(static_cast<std::size_t>(b));
            continue;
        }
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    if (vertices < 0) throw ParseError("graph input is empty");
    if (static_cast<long>(edges.size()) != edge_count) {
        throw ParseError("graph header declares " + std::to_string(edge_count) + " edges, found " +
                         std::to_string(edges.size()));
    }
    return GeodesicGraph(static_cast<int>(vertices), std::move(edges), vertex_cap);
}

GeodesicGraph read_graph_file(const std::string& path, int vertex_cap) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file '" + path + "'");
    return read_graph(in, vertex_cap);
}

void write_graph(std::ostream& out, const GeodesicGraph& graph) {
    out << graph.size() << ' ' << graph.edges().size() << '\n';
    for (const auto& [a, b] : graph.edges()) out << a << ' ' << b << '\n';
}

FiniteMetricSpace read_metric_csv(std::istream& in) {
    std::string line;
    std::vector<std::string> labels;
    std::vector<double> values;
    std::size_t row = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (skip_line(line)) continue;
        auto cells = split_csv(line);
        if (!have_header) {
            labels = std::move(cells);
            have_header = true;
            continue;
        }
        ++row;
        if (cells.size() != labels.size()) {
            throw ParseError("metric CSV row " + std::to_string(row) + " has " + std::to_string(cells.size()) +
                             " cells, expected " + std::to_string(labels.size()));
        }
        for (const auto& cell : cells) values.push_back(parse_number(cell, row));
    }
    if (!have_header) throw ParseError("metric CSV is empty");
    if (row != labels.size()) {
        throw ParseError("metric CSV has " + std::to_string(row) + " rows for " + std::to_string(labels.size()) +
                         " labels");
    }
    return FiniteMetricSpace(std::move(labels), std::move(values));
}

FiniteMetricSpace read_metric_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open metric file '" + path + "'");
    return read_metric_csv(in);
}

void write_metric_csv(std::ostream& out, const FiniteMetricSpace& space) {
    const std::size_t n = space.size();
    for (std::size_t i = 0; i < n; ++i) out << (i ? "," : "") << space.label(i);
    out << '\n';
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out << (j ? "," : "") << format_double(space.dist(i, j));
        out << '\n';
    }
}

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc()) throw InvalidArgument("cannot format number");
    return std::string(buf, ptr);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidArgument("cannot write '" + path + "'");
    out << text;
    if (!out) throw InvalidArgument("failed writing '" + path + "'");
}

}  // namespace coarselab
