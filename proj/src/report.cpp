#include "coarselab/report.hpp"

#include <cmath>

namespace coarselab {

Json report_root() {
    Json j = Json::object();
    j["schema"] = kSchemaVersion;
    return j;
}

Json real_json(double value) {
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    return value;
}

Json matrix_json(const SquareMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.n; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.n; ++j) row.push_back(real_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const SampleSpec& spec) {
    return Json{{"triangles", spec.triangles}, {"seed", spec.seed}, {"exhaustive_cap", spec.exhaustive_cap}};
}

Json to_json(const HyperbolicityReport& report) {
    return Json{{"delta_four_point", report.delta_four_point},
                {"delta_rips", report.delta_rips},
                {"delta_thin", report.delta_thin},
                {"sample_spec", to_json(report.sample_spec)},
                {"exhaustive", report.exhaustive}};
}

Json filling_sidecar(const FillingGraph& filling) {
    Json j = report_root();
    j["r"] = filling.params.r;
    j["max_level"] = filling.params.max_level;
    j["ball_factor"] = filling.params.ball_factor;
    j["root"] = filling.root;
    j["boundary"] = filling.leaves;
    Json vertices = Json::array();
    for (std::size_t v = 0; v < filling.meta.size(); ++v) {
        const auto& m = filling.meta[v];
        vertices.push_back(Json{{"vertex", v},
                                {"level", m.level},
                                {"center", filling.space.label(m.center)},
                                {"radius", m.radius}});
    }
    j["vertices"] = std::move(vertices);
    return j;
}

Json to_json(const PerfectnessProfile& profile, const std::vector<std::string>& labels) {
    Json radii = Json::array();
    const std::size_t n = profile.radii.empty() ? 0 : profile.records.size() / profile.radii.size();
    for (std::size_t k = 0; k < profile.radii.size(); ++k) {
        Json ratios = Json::array();
        for (std::size_t x = 0; x < n; ++x) ratios.push_back(real_json(profile.records[k * n + x].best_gap_ratio));
        radii.push_back(Json{{"r", profile.radii[k]},
                             {"S_estimate", real_json(profile.s_estimate[k])},
                             {"best_gap_ratio", std::move(ratios)}});
    }
    return Json{{"points", labels}, {"all_finite", profile.all_finite()}, {"radii", std::move(radii)}};
}

Json to_json(const CoverageReport& report) {
    return Json{{"K", report.params.K},
                {"C", report.params.C},
                {"rho", report.params.rho},
                {"inner_approximation", report.inner_approximation},
                {"budget", report.sample.budget},
                {"seed", report.sample.seed},
                {"exhaustive", report.exhaustive},
                {"triples", report.triples},
                {"empty_sets", report.empty_sets},
                {"side_misses", report.side_misses},
                {"max_diameter", report.max_diameter},
                {"M", report.M},
                {"argmax", report.argmax}};
}

Json to_json(const QiFit& fit) {
    return Json{{"K", fit.K}, {"C", fit.C}, {"pairs", fit.pairs}, {"exhaustive", fit.exhaustive}};
}

Json to_json(const SegmentSchedule& schedule) {
    Json segments = Json::array();
    for (const Path& s : schedule.segments) {
        segments.push_back(Json{{"y", s.front()}, {"z", s.back()}, {"length", s.length()}, {"path", s.vertices}});
    }
    return Json{{"L", schedule.L},
                {"delta", schedule.delta},
                {"D", schedule.D},
                {"separation", schedule.separation()},
                {"min_length", schedule.min_length()},
                {"count_target", schedule.count_target},
                {"exhausted", schedule.exhausted},
                {"segments", std::move(segments)}};
}

Json to_json(const RigidityReport& report) {
    Json per = Json::array();
    for (const auto& s : report.per_segment) {
        per.push_back(Json{{"l", s.length},
                           {"chart_length", s.chart_length},
                           {"displacement", s.displacement},
                           {"K", s.fit.K},
                           {"C", s.fit.C},
                           {"pairs", s.fit.pairs},
                           {"exhaustive", s.fit.exhaustive}});
    }
    return Json{{"schedule", to_json(report.schedule)},
                {"per_segment", std::move(per)},
                {"composite",
                 Json{{"displacement", report.composite_displacement},
                      {"K", report.composite_fit.K},
                      {"C", report.composite_fit.C},
                      {"pairs", report.composite_fit.pairs},
                      {"exhaustive", report.composite_fit.exhaustive}}},
                {"far_vertex_fixing", report.far_vertex_fixing},
                {"boundary_moved", report.boundary_moved}};
}

Json to_json(const RichConstants& c) {
    return Json{{"r0", c.r0}, {"r1", c.r1}, {"r2", c.r2}, {"r3", c.r3}, {"r4", c.r4}, {"delta", c.delta}};
}

Json to_json(const RichWitnessReport& report, std::size_t failure_limit) {
    Json failures = Json::array();
    for (std::size_t i = 0; i < report.failures.size() && i < failure_limit; ++i) {
        const auto& f = report.failures[i];
        Json item{{"p", f.p}};
        item[report.condition == 1 ? "q" : "geodesic"] = f.q;
        item["shortfall"] = real_json(f.shortfall);
        failures.push_back(std::move(item));
    }
    return Json{{"condition", report.condition},
                {"holds", report.holds()},
                {"cases", report.cases},
                {"skipped", report.skipped},
                {"witnessed", report.witnesses},
                {"exhaustive", report.exhaustive},
                {"cap", report.sample.cap},
                {"seed", report.sample.seed},
                {"failure_count", report.failures.size()},
                {"failing_points", report.failing_points},
                {"failures", std::move(failures)}};
}

std::string dump(const Json& json) { return json.dump(2) + "\n"; }

}  // namespace coarselab
