#include "coarselab/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "coarselab/boundary.hpp"
#include "coarselab/centroids.hpp"
#include "coarselab/error.hpp"
#include "coarselab/filling.hpp"
#include "coarselab/generators.hpp"
#include "coarselab/hyperbolicity.hpp"
#include "coarselab/io.hpp"
#include "coarselab/report.hpp"
#include "coarselab/rich.hpp"
#include "coarselab/rigidity.hpp"

namespace coarselab {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InvalidArgument("'" + item + "' is not an integer");
        }
    }
    return out;
}

// Root and boundary of a graph read from disk: the sidecar's when present,
// otherwise vertex 0 and the degree-1 vertices.
struct GraphInput {
    GeodesicGraph graph;
    Vertex root = 0;
    std::vector<Vertex> boundary;
};

GraphInput load_graph(const std::string& path, std::string sidecar, int vertex_cap) {
    GraphInput in;
    in.graph = read_graph_file(path, vertex_cap);
    if (sidecar.empty() && std::filesystem::exists(path + ".json")) sidecar = path + ".json";
    if (!sidecar.empty()) {
        Json meta;
        try {
            meta = Json::parse(read_text_file(sidecar));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError("sidecar '" + sidecar + "': " + e.what());
        }
        in.root = meta.value("root", 0);
        in.boundary = meta.value("boundary", std::vector<Vertex>{});
    } else {
        for (Vertex v = 0; v < in.graph.size(); ++v)
            if (in.graph.degree(v) == 1 && v != in.root) in.boundary.push_back(v);
    }
    if (in.root < 0 || in.root >= in.graph.size()) throw InvalidArgument("root is not a vertex of the graph");
    for (Vertex b : in.boundary)
        if (b < 0 || b >= in.graph.size()) throw InvalidArgument("boundary vertex " + std::to_string(b) + " out of range");
    return in;
}

void merge_into(Json& dst, const Json& src) {
    for (auto it = src.begin(); it != src.end(); ++it) dst[it.key()] = it.value();
}

Json boundary_sidecar(Vertex root, const std::vector<Vertex>& boundary) {
    Json j = report_root();
    j["root"] = root;
    j["boundary"] = boundary;
    return j;
}

std::string csv_matrix(const SquareMatrix& m, const std::vector<Vertex>& ids) {
    std::ostringstream out;
    out << "vertex";
    for (Vertex v : ids) out << ',' << v;
    out << '\n';
    for (std::size_t i = 0; i < m.n; ++i) {
        out << ids[i];
        for (std::size_t j = 0; j < m.n; ++j) out << ',' << format_double(m(i, j));
        out << '\n';
    }
    return out.str();
}

struct Options {
    std::string report;
    int vertex_cap = kDefaultVertexCap;

    // gen
    std::string kind;
    int depth = 1;
    double ratio = 1.0 / 3.0;
    int n_min = 0;
    int n_max = 3;
    int valence = 3;
    int tree_depth = 3;
    std::string teeth;

    // files
    std::string in;
    std::string out;
    std::string graph;
    std::string sidecar;
    std::string csv;

    // fill
    double r = 0.5;
    int levels = 5;
    double ball_factor = 2.0;

    // sampling
    int triangles = 2000;
    std::uint64_t seed = 1;
    int exhaustive_cap = 60;
    std::size_t budget = 2000;
    std::size_t pair_cap = 2000000;
    std::size_t sample = 200000;

    // boundary / perfectness / centroids
    std::optional<int> basepoint;
    std::optional<double> epsilon;
    double r0 = 0.0;
    std::optional<double> rho;

    // rigidity
    std::string space = "cantor";
    int cantor_depth = 5;
    std::optional<double> D;
    std::size_t count = 4;

    // rich
    double rich_r0 = 0.0;
    double rich_r1 = 1.0;
    double rich_r2 = 1.0;
};

void emit(const Options& opt, const Json& report, std::ostream& out) {
    if (opt.report.empty()) {
        out << dump(report);
    } else {
        write_text_file(opt.report, dump(report));
    }
}

void run_gen(const Options& opt, std::ostream& out) {
    if (opt.out.empty()) throw InvalidArgument("gen needs --out");
    Json report = report_root();
    report["command"] = "gen";
    report["kind"] = opt.kind;
    if (opt.kind == "cantor" || opt.kind == "lacunary") {
        const FiniteMetricSpace space = opt.kind == "cantor" ? gen_cantor({opt.depth, opt.ratio})
                                                             : gen_lacunary({opt.n_min, opt.n_max});
        std::ostringstream csv;
        write_metric_csv(csv, space);
        write_text_file(opt.out, csv.str());
        report["points"] = space.size();
        report["labels"] = space.labels();
        report["diameter"] = space.diameter();
    } else {
        GeodesicGraph graph;
        std::vector<Vertex> boundary;
        if (opt.kind == "tree") {
            graph = gen_tree(opt.valence, opt.tree_depth, opt.vertex_cap);
            boundary = tree_leaves(opt.valence, opt.tree_depth);
        } else {
            CombGraph comb = gen_comb({opt.valence, opt.tree_depth, parse_int_list(opt.teeth)}, opt.vertex_cap);
            graph = std::move(comb.graph);
            boundary = comb.tree_leaves;
            report["attach"] = comb.attach;
            report["tree_size"] = comb.tree_size;
        }
        std::ostringstream text;
        write_graph(text, graph);
        write_text_file(opt.out, text.str());
        write_text_file(opt.out + ".json", dump(boundary_sidecar(0, boundary)));
        report["vertices"] = graph.size();
        report["edges"] = graph.edges().size();
        report["root"] = 0;
        report["boundary"] = boundary;
    }
    emit(opt, report, out);
}

void run_fill(const Options& opt, std::ostream& out) {
    if (opt.in.empty() || opt.out.empty()) throw InvalidArgument("fill needs --in and --out");
    const FiniteMetricSpace space = read_metric_csv_file(opt.in);
    const FillingGraph filling = build_filling(space, {opt.r, opt.levels, opt.ball_factor}, opt.vertex_cap);
    std::ostringstream text;
    write_graph(text, filling.graph);
    write_text_file(opt.out, text.str());
    write_text_file(opt.out + ".json", dump(filling_sidecar(filling)));

    Json report = report_root();
    report["command"] = "fill";
    report["r"] = opt.r;
    report["max_level"] = opt.levels;
    report["ball_factor"] = opt.ball_factor;
    report["vertices"] = filling.graph.size();
    report["edges"] = filling.graph.edges().size();
    report["leaves"] = filling.leaves.size();
    report["delta_four_point"] = four_point_delta(filling.graph);
    report["pole_radius"] = pole_radius(filling.graph, filling.root, filling.leaves);
    emit(opt, report, out);
}

void run_analyze(const Options& opt, std::ostream& out) {
    const GeodesicGraph graph = read_graph_file(opt.graph, opt.vertex_cap);
    const SampleSpec spec{opt.triangles, opt.seed, opt.exhaustive_cap};
    Json report = report_root();
    report["command"] = "analyze";
    report["vertices"] = graph.size();
    report["edges"] = graph.edges().size();
    merge_into(report, to_json(analyze_hyperbolicity(graph, spec)));
    emit(opt, report, out);
}

void run_boundary(const Options& opt, std::ostream& out) {
    const GraphInput in = load_graph(opt.graph, opt.sidecar, opt.vertex_cap);
    if (in.boundary.size() < 2) throw InvalidArgument("boundary needs at least 2 representatives");
    const double delta = four_point_delta(in.graph);
    const VisualMetricParams params{opt.basepoint.value_or(in.root), opt.epsilon.value_or(default_epsilon(delta))};
    const auto table = boundary_products(in.graph, in.boundary, params.w);
    const auto rho = rho_matrix(table, params, delta);
    const auto visual = visual_metric(rho);
    const auto profile = perfectness_profile(visual, radius_grid(visual, opt.r0));

    std::vector<std::string> labels;
    for (Vertex v : in.boundary) labels.push_back(std::to_string(v));
    Json report = report_root();
    report["command"] = "boundary";
    report["basepoint"] = params.w;
    report["delta_four_point"] = delta;
    report["epsilon"] = params.epsilon;
    report["epsilon_bound"] = epsilon_bound(delta);
    report["boundary"] = in.boundary;
    report["products"] = matrix_json(table.values);
    report["products_diagonal"] = "d(rep, basepoint)";
    report["rho"] = matrix_json(rho);
    report["visual"] = matrix_json(visual);
    report["sandwich_violations"] = count_sandwich_violations(rho, visual);
    report["profile"] = to_json(profile, labels);
    if (!opt.csv.empty()) {
        std::filesystem::create_directories(opt.csv);
        const std::filesystem::path dir(opt.csv);
        write_text_file((dir / "products.csv").string(), csv_matrix(table.values, in.boundary));
        write_text_file((dir / "rho.csv").string(), csv_matrix(rho, in.boundary));
        write_text_file((dir / "visual.csv").string(), csv_matrix(visual, in.boundary));
    }
    emit(opt, report, out);
}

void run_perfectness(const Options& opt, std::ostream& out) {
    const FiniteMetricSpace space = read_metric_csv_file(opt.in);
    const auto profile = perfectness_profile(space, radius_grid(space, opt.r0));
    Json report = report_root();
    report["command"] = "perfectness";
    report["r0"] = opt.r0;
    report["profile"] = to_json(profile, space.labels());
    emit(opt, report, out);
}

void run_coverage(const Options& opt, std::ostream& out) {
    const GraphInput in = load_graph(opt.graph, opt.sidecar, opt.vertex_cap);
    const double delta = four_point_delta(in.graph);
    const CentroidParams params{1.0, 0.0, opt.rho.value_or(3.0 * delta)};
    Json report = report_root();
    report["command"] = "centroid-coverage";
    report["delta_four_point"] = delta;
    merge_into(report, to_json(centroid_coverage(in.graph, in.boundary, params, {opt.budget, opt.seed})));
    emit(opt, report, out);
}

void run_rigidity(const Options& opt, std::ostream& out) {
    FiniteMetricSpace space;
    if (opt.space == "cantor") {
        space = gen_cantor({opt.cantor_depth, opt.ratio});
    } else if (opt.space == "lacunary") {
        space = gen_lacunary({opt.n_min, opt.n_max});
    } else {
        throw InvalidArgument("--space must be cantor or lacunary");
    }
    const FillingGraph filling = build_filling(space, {opt.r, opt.levels, opt.ball_factor}, opt.vertex_cap);
    const BoundaryApprox boundary = leaf_boundary(filling);
    const double delta = four_point_delta(filling.graph);
    const int L = pole_radius(filling.graph, filling.root, filling.leaves);
    double D0 = 0.0;
    if (!opt.D && boundary.reps.size() >= 3) {
        D0 = centroid_coverage(filling.graph, boundary.reps, {1.0, 0.0, 10.0 * delta}, {opt.budget, opt.seed})
                 .max_diameter;
    }
    const double D = opt.D.value_or(default_D(D0, delta));
    const auto schedule = find_segments(filling.graph, filling.root, boundary.reps, L, delta, D, opt.count);
    if (const auto bad = schedule_violations(filling.graph, schedule, filling.root, boundary.reps); !bad.empty())
        throw InvariantViolation("segment schedule: " + bad.front());
    const auto result = analyze_rigidity(filling.graph, schedule, {opt.pair_cap, opt.seed});

    Json report = report_root();
    report["command"] = "rigidity";
    report["space"] = opt.space;
    report["max_level"] = opt.levels;
    report["vertices"] = filling.graph.size();
    report["leaves"] = filling.leaves.size();
    report["seed"] = opt.seed;
    report["pair_cap"] = opt.pair_cap;
    report["D_source"] = opt.D ? "flag" : "max(D0, 10 delta)";
    merge_into(report, to_json(result));
    if (!opt.csv.empty()) {
        std::ostringstream csv;
        csv << "l,chart_length,displacement,K,C\n";
        for (const auto& s : result.per_segment) {
            csv << s.length << ',' << s.chart_length << ',' << s.displacement << ',' << format_double(s.fit.K) << ','
                << format_double(s.fit.C) << '\n';
        }
        write_text_file(opt.csv, csv.str());
    }
    emit(opt, report, out);
}

void run_rich(const Options& opt, std::ostream& out) {
    const GraphInput in = load_graph(opt.graph, opt.sidecar, opt.vertex_cap);
    const double delta = four_point_delta(in.graph);
    const auto geodesics = boundary_geodesics(in.graph, in.boundary);
    const RichSample sample{opt.sample, opt.seed};
    const auto constants = derive_constants(opt.rich_r0, opt.rich_r1, opt.rich_r2, delta);
    Json report = report_root();
    report["command"] = "rich";
    report["constants"] = to_json(constants);
    report["pole_from_rich"] = pole_from_rich(opt.rich_r0, opt.rich_r1, delta);
    report["geodesics"] = geodesics.paths.size();
    report["condition1"] = to_json(check_condition1(in.graph, geodesics, opt.rich_r0, opt.rich_r1, opt.rich_r2, sample));
    report["condition2"] = to_json(check_condition2(in.graph, geodesics, constants, sample));
    emit(opt, report, out);
}

void error_json(std::ostream& err, const std::string& kind, const std::string& message) {
    Json j;
    j["error"] = Json{{"kind", kind}, {"message", message}};
    err << j.dump() << '\n';
}

}  // namespace

std::map<std::string, std::string> parse_config(const std::string& text) {
    std::map<std::string, std::string> config;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) throw ParseError("config line " + std::to_string(line_no) + ": expected key=value");
        std::string key = trim(t.substr(0, eq));
        while (!key.empty() && key.front() == '-') key.erase(key.begin());
        if (key.empty()) throw ParseError("config line " + std::to_string(line_no) + ": empty key");
        config[key] = trim(t.substr(eq + 1));
    }
    return config;
}

std::vector<std::string> merge_config(const std::vector<std::string>& args,
                                      const std::map<std::string, std::string>& config) {
    std::vector<std::string> merged = args;
    for (const auto& [key, value] : config) {
        if (key == "config") continue;
        const std::string flag = "--" + key;
        const bool present = std::any_of(args.begin(), args.end(), [&](const std::string& a) {
            return a == flag || a.rfind(flag + "=", 0) == 0;
        });
        if (!present) {
            merged.push_back(flag);
            merged.push_back(value);
        }
    }
    return merged;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"coarselab: coarse-geometry experiments on finite graphs and metric spaces", "coarselab"};
    app.require_subcommand(1);
    std::string config_path;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "key=value file mirroring the flags (flags win)");
        sub->add_option("--report", opt.report, "write the JSON report here instead of stdout");
        sub->add_option("--vertex-cap", opt.vertex_cap, "largest graph accepted")->check(CLI::PositiveNumber);
    };

    auto* gen = app.add_subcommand("gen", "generate a space or graph");
    common(gen);
    gen->add_option("--kind", opt.kind, "cantor | lacunary | tree | comb")
        ->required()
        ->check(CLI::IsMember({"cantor", "lacunary", "tree", "comb"}));
    gen->add_option("--depth", opt.depth, "Cantor construction depth");
    gen->add_option("--ratio", opt.ratio, "Cantor ratio in (0, 1/2)");
    gen->add_option("--n-min", opt.n_min, "lacunary smallest exponent index");
    gen->add_option("--n-max", opt.n_max, "lacunary largest exponent index");
    gen->add_option("--valence", opt.valence, "tree valence");
    gen->add_option("--tree-depth", opt.tree_depth, "tree depth");
    gen->add_option("--teeth", opt.teeth, "comma-separated tooth lengths");
    gen->add_option("--out", opt.out, "output metric CSV or graph file")->required();

    auto* fill = app.add_subcommand("fill", "hyperbolic filling of a metric CSV");
    common(fill);
    fill->add_option("--in", opt.in, "metric CSV")->required();
    fill->add_option("--out", opt.out, "output graph file (sidecar at <out>.json)")->required();
    fill->add_option("--r", opt.r, "scale ratio in (0, 1/2]");
    fill->add_option("--levels", opt.levels, "deepest level");
    fill->add_option("--ball-factor", opt.ball_factor, "ball radius factor (>= 1)");

    auto* analyze = app.add_subcommand("analyze", "hyperbolicity constants of a graph");
    common(analyze);
    analyze->add_option("--graph", opt.graph, "graph file")->required();
    analyze->add_option("--triangles", opt.triangles, "sampled triangles above the exhaustive cap");
    analyze->add_option("--seed", opt.seed, "sampling seed");
    analyze->add_option("--exhaustive-cap", opt.exhaustive_cap, "scan all triples up to this many vertices");

    auto* boundary = app.add_subcommand("boundary", "Gromov products, visual metric and profile of the boundary");
    common(boundary);
    boundary->add_option("--graph", opt.graph, "graph file")->required();
    boundary->add_option("--sidecar", opt.sidecar, "JSON with root and boundary (default <graph>.json)");
    boundary->add_option("--basepoint", opt.basepoint, "basepoint vertex (default root)");
    boundary->add_option("--epsilon", opt.epsilon, "visual parameter (default half the admissible bound)");
    boundary->add_option("--r0", opt.r0, "largest profile radius (0: diameter)");
    boundary->add_option("--csv", opt.csv, "directory for products/rho/visual CSV matrices");

    auto* perfect = app.add_subcommand("perfectness", "uniform-perfectness profile of a metric CSV");
    common(perfect);
    perfect->add_option("--in", opt.in, "metric CSV")->required();
    perfect->add_option("--r0", opt.r0, "largest radius (0: diameter)");

    auto* coverage = app.add_subcommand("centroid-coverage", "rough fullness of quasi-centroid sets");
    common(coverage);
    coverage->add_option("--graph", opt.graph, "graph file")->required();
    coverage->add_option("--sidecar", opt.sidecar, "JSON with root and boundary (default <graph>.json)");
    coverage->add_option("--rho", opt.rho, "centroid radius (default 3 delta)");
    coverage->add_option("--budget", opt.budget, "triples scanned exhaustively up to this count");
    coverage->add_option("--seed", opt.seed, "sampling seed");

    auto* rigidity = app.add_subcommand("rigidity", "segment schedule and displacement of the Phi maps");
    common(rigidity);
    rigidity->add_option("--space", opt.space, "cantor | lacunary")->check(CLI::IsMember({"cantor", "lacunary"}));
    rigidity->add_option("--depth", opt.levels, "filling depth (max level)");
    rigidity->add_option("--cantor-depth", opt.cantor_depth, "Cantor construction depth");
    rigidity->add_option("--ratio", opt.ratio, "Cantor ratio");
    rigidity->add_option("--n-min", opt.n_min, "lacunary smallest exponent index");
    rigidity->add_option("--n-max", opt.n_max, "lacunary largest exponent index");
    rigidity->add_option("--r", opt.r, "filling scale ratio");
    rigidity->add_option("--ball-factor", opt.ball_factor, "filling ball factor");
    rigidity->add_option("--D", opt.D, "segment constant D (default max(D0, 10 delta))");
    rigidity->add_option("--count", opt.count, "segments wanted");
    rigidity->add_option("--seed", opt.seed, "sampling seed");
    rigidity->add_option("--budget", opt.budget, "triples for the D0 estimate");
    rigidity->add_option("--pair-cap", opt.pair_cap, "pairs for (K, C) fitting");
    rigidity->add_option("--csv", opt.csv, "CSV of displacement against segment length");

    auto* rich = app.add_subcommand("rich", "geodesic richness conditions");
    common(rich);
    rich->add_option("--graph", opt.graph, "graph file")->required();
    rich->add_option("--sidecar", opt.sidecar, "JSON with root and boundary (default <graph>.json)");
    rich->add_option("--r0", opt.rich_r0, "pair distance threshold");
    rich->add_option("--r1", opt.rich_r1, "closeness to the geodesic");
    rich->add_option("--r2", opt.rich_r2, "distance defect along the geodesic");
    rich->add_option("--sample", opt.sample, "cases checked exhaustively up to this count");
    rich->add_option("--seed", opt.seed, "sampling seed");

    try {
        std::vector<std::string> args = raw_args;
        for (std::size_t i = 0; i + 1 < args.size(); ++i) {
            if (args[i] == "--config") {
                args = merge_config(args, parse_config(read_text_file(args[i + 1])));
                break;
            }
            if (args[i].rfind("--config=", 0) == 0) {
                args = merge_config(args, parse_config(read_text_file(args[i].substr(9))));
                break;
            }
        }
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        error_json(err, "usage", e.what());
        return kExitUsage;
    } catch (const Error& e) {
        error_json(err, e.kind(), e.what());
        return kExitUsage;
    }

    try {
        if (*gen) run_gen(opt, out);
        else if (*fill) run_fill(opt, out);
        else if (*analyze) run_analyze(opt, out);
        else if (*boundary) run_boundary(opt, out);
        else if (*perfect) run_perfectness(opt, out);
        else if (*coverage) run_coverage(opt, out);
        else if (*rigidity) run_rigidity(opt, out);
        else if (*rich) run_rich(opt, out);
    } catch (const InvariantViolation& e) {
        error_json(err, e.kind(), e.what());
        return kExitInvariant;
    } catch (const Error& e) {
        error_json(err, e.kind(), e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        error_json(err, "internal", e.what());
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace coarselab
