#include "coarselab/rigidity.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "coarselab/error.hpp"
#include "coarselab/parallel.hpp"
#include "coarselab/sampling.hpp"

namespace coarselab {

namespace {

constexpr int kGridSteps = 29;  // K = 1, 1.25, ..., 8

double grid_K(int k) { return 1.0 + 0.25 * k; }

}  // namespace

double phi_l(double t, double l) {
    if (!(l > 0.0)) throw InvalidArgument("phi_l needs a positive length");
    if (!(t >= 0.0 && t <= l)) throw InvalidArgument("phi_l argument must lie in [0, l]");
    if (t <= l / 3.0) return 2.0 * t;
    return 2.0 * l / 3.0 + 0.5 * (t - l / 3.0);
}

VertexMap identity_map(const GeodesicGraph& graph) {
    VertexMap map;
    map.image.resize(graph.size());
    for (Vertex v = 0; v < graph.size(); ++v) map.image[v] = v;
    map.support.assign(graph.size(), 0);
    return map;
}

int displacement(const GeodesicGraph& graph, const std::vector<Vertex>& image) {
    int best = 0;
    for (Vertex v = 0; v < graph.size(); ++v) best = std::max(best, graph.dist(v, image[v]));
    return best;
}

NearSets near_sets(const GeodesicGraph& graph, const Path& segment, double R) {
    if (!is_geodesic(graph, segment)) throw InvalidArgument("near sets need a geodesic segment");
    const int len = segment.length();
    NearSets out;
    for (Vertex x = 0; x < graph.size(); ++x) {
        const auto proj = projection_indices(graph, segment, x);
        if (proj.back() <= R) out.near_y.push_back(x);
        if (len - proj.front() <= R) out.near_z.push_back(x);
    }
    return out;
}

SegmentSchedule find_segments(const GeodesicGraph& graph, Vertex root, const std::vector<Vertex>& boundary, int L,
                              double delta, double D, std::size_t count_target) {
    if (!(D > 0.0)) throw InvalidArgument("D must be positive");
    SegmentSchedule schedule;
    schedule.L = L;
    schedule.delta = delta;
    schedule.D = D;
    schedule.count_target = count_target;
    const double sep = schedule.separation();
    const double min_len = schedule.min_length();

    std::vector<int> far(graph.size(), graph.size() + 1);
    for (Vertex leaf : boundary) {
        if (schedule.segments.size() >= count_target) break;
        const Path ray = shortest_geodesic(graph, root, leaf);
        std::vector<int> hits{0, ray.length()};
        for (Vertex b : boundary) {
            for (int i : projection_indices(graph, ray, b)) hits.push_back(i);
        }
        std::sort(hits.begin(), hits.end());
        hits.erase(std::unique(hits.begin(), hits.end()), hits.end());

        for (std::size_t h = 0; h + 1 < hits.size() && schedule.segments.size() < count_target; ++h) {
            const int end = hits[h + 1];
            if (end - hits[h] < min_len) continue;
            // Smallest start whose suffix up to `end` keeps the separation.
            int start = end + 1;
            for (int i = end; i >= hits[h]; --i) {
                if (far[ray[i]] < sep) break;
                start = i;
            }
            if (start > end || end - start < min_len) continue;
            Path seg{{ray.vertices.begin() + start, ray.vertices.begin() + end + 1}};
            bool ok = true;
            for (Vertex b : boundary) {
                for (int i : projection_indices(graph, seg, b)) {
                    if (i > D && seg.length() - i > D) ok = false;
                }
                if (!ok) break;
            }
            if (!ok) continue;
            schedule.segments.push_back(seg);
            const auto d = multi_source_distances(graph, seg.vertices);
            for (Vertex v = 0; v < graph.size(); ++v) far[v] = std::min(far[v], d[v]);
        }
    }
    std::stable_sort(schedule.segments.begin(), schedule.segments.end(),
                     [](const Path& a, const Path& b) { return a.length() < b.length(); });
    schedule.segments.erase(std::unique(schedule.segments.begin(), schedule.segments.end(),
                                        [](const Path& a, const Path& b) { return a.length() == b.length(); }),
                            schedule.segments.end());
    schedule.exhausted = schedule.segments.size() < count_target;
    return schedule;
}

std::vector<std::string> schedule_violations(const GeodesicGraph& graph, const SegmentSchedule& schedule,
                                             Vertex root, const std::vector<Vertex>& boundary) {
    std::vector<std::string> out;
    const auto& segs = schedule.segments;
    for (std::size_t i = 0; i < segs.size(); ++i) {
        const Path& s = segs[i];
        const std::string tag = "segment " + std::to_string(i) + ": ";
        if (!is_geodesic(graph, s)) out.push_back(tag + "not a geodesic");
        if (s.length() < schedule.min_length()) out.push_back(tag + "shorter than 100D");
        if (i > 0 && !(s.length() > segs[i - 1].length())) out.push_back(tag + "length not strictly increasing");
        const bool on_ray = std::any_of(boundary.begin(), boundary.end(), [&](Vertex leaf) {
            return graph.dist(root, s.front()) + s.length() + graph.dist(s.back(), leaf) == graph.dist(root, leaf);
        });
        if (!on_ray) out.push_back(tag + "not on a geodesic from the root to a boundary point");
        for (Vertex b : boundary) {
            for (int k : projection_indices(graph, s, b)) {
                if (k > schedule.D && s.length() - k > schedule.D) {
                    out.push_back(tag + "boundary vertex " + std::to_string(b) + " projects away from the ends");
                }
            }
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (set_distance(graph, s.vertices, segs[j].vertices) < schedule.separation()) {
                out.push_back(tag + "closer than 10L + 10 delta + 1 to segment " + std::to_string(j));
            }
        }
    }
    return out;
}

PhiChart phi_chart(const Path& segment, double D) {
    const int len = segment.length();
    if (len < 100.0 * D) {
        throw InvalidArgument("segment of length " + std::to_string(len) + " is shorter than the 100D threshold (" +
                              std::to_string(100.0 * D) + ")");
    }
    const int reach = static_cast<int>(std::floor(3.0 * D));
    PhiChart chart{reach + 1, len - reach - 1};
    if (chart.length() <= 0) throw InvalidArgument("segment leaves no room outside the 3D-neighbourhoods");
    return chart;
}

VertexMap build_phi_segment(const GeodesicGraph& graph, const Path& segment, double D) {
    const PhiChart chart = phi_chart(segment, D);
    if (!is_geodesic(graph, segment)) throw InvalidArgument("build_phi_segment needs a geodesic segment");
    const double R = 3.0 * D;
    const int len = segment.length();
    const double l = chart.length();
    VertexMap map = identity_map(graph);
    for (Vertex x = 0; x < graph.size(); ++x) {
        const auto proj = projection_indices(graph, segment, x);
        if (proj.back() <= R || len - proj.front() <= R) continue;
        int pick = -1;
        for (int i : proj) {
            if (i < chart.y_index || i > chart.z_index) continue;
            if (pick < 0 || segment[i] < segment[pick]) pick = i;
        }
        if (pick < 0) {
            throw InvariantViolation("vertex " + std::to_string(x) +
                                     " has no projection outside the 3D-neighbourhoods of the segment ends");
        }
        const double t = phi_l(pick - chart.y_index, l);
        const int k = static_cast<int>(std::ceil(t - 0.5));
        map.image[x] = segment[chart.y_index + k];
        map.support[x] = 1;
    }
    map.displacement = displacement(graph, map.image);
    return map;
}

VertexMap compose_maps(const GeodesicGraph& graph, const std::vector<VertexMap>& factors) {
    VertexMap out = identity_map(graph);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        for (Vertex v = 0; v < graph.size(); ++v) {
            if (!factors[i].support[v]) continue;
            if (out.support[v]) {
                throw InvariantViolation("vertex " + std::to_string(v) + " is moved by two schedule factors (second is " +
                                         std::to_string(i) + ")");
            }
            out.support[v] = 1;
        }
    }
    // Phi_1 o Phi_2 o ... : the last factor acts first.
    for (Vertex v = 0; v < graph.size(); ++v) {
        Vertex x = v;
        for (auto it = factors.rbegin(); it != factors.rend(); ++it) x = it->image[x];
        out.image[v] = x;
    }
    out.displacement = displacement(graph, out.image);
    return out;
}

VertexMap compose_schedule(const GeodesicGraph& graph, const SegmentSchedule& schedule) {
    std::vector<VertexMap> factors;
    for (const Path& s : schedule.segments) factors.push_back(build_phi_segment(graph, s, schedule.D));
    return compose_maps(graph, factors);
}

QiFit fit_qi_constants(const GeodesicGraph& graph, const std::vector<Vertex>& image, const PairSample& sample) {
    const auto n = static_cast<std::size_t>(graph.size());
    std::vector<Vertex> moved;
    std::vector<char> is_moved(n, 0);
    for (Vertex v = 0; v < graph.size(); ++v) {
        if (image[v] != v) {
            moved.push_back(v);
            is_moved[v] = 1;
        }
    }
    QiFit fit;
    if (moved.empty()) return fit;

    const std::size_t m = moved.size();
    const std::size_t total = m * (n - 1) - m * (m - 1) / 2;
    fit.exhaustive = total <= sample.cap;

    auto score = [&](Vertex a, Vertex b, double* worst) {
        const double d = graph.dist(a, b);
        const double e = graph.dist(image[a], image[b]);
        for (int k = 0; k < kGridSteps; ++k) {
            const double K = grid_K(k);
            worst[k] = std::max(worst[k], std::max(d / K - e, e - K * d));
        }
    };

    std::vector<std::array<double, kGridSteps>> partial;
    if (fit.exhaustive) {
        fit.pairs = total;
        partial.assign(chunk_count(m), {});
        parallel_chunks(m, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
            auto& worst = partial[chunk];
            worst.fill(0.0);
            for (std::size_t i = begin; i < end; ++i) {
                const Vertex a = moved[i];
                for (Vertex b = 0; b < graph.size(); ++b) {
                    if (b == a || (is_moved[b] && b < a)) continue;
                    score(a, b, worst.data());
                }
            }
        });
    } else {
        std::vector<std::pair<Vertex, Vertex>> pairs;
        pairs.reserve(sample.cap);
        SeededSampler sampler(sample.seed);
        while (pairs.size() < sample.cap) {
            const Vertex a = moved[sampler.index(m)];
            const auto b = static_cast<Vertex>(sampler.index(n));
            if (a != b) pairs.emplace_back(a, b);
        }
        fit.pairs = pairs.size();
        partial.assign(chunk_count(pairs.size()), {});
        parallel_chunks(pairs.size(), [&](std::size_t begin, std::size_t end, std::size_t chunk) {
            auto& worst = partial[chunk];
            worst.fill(0.0);
            for (std::size_t i = begin; i < end; ++i) score(pairs[i].first, pairs[i].second, worst.data());
        });
    }
    std::array<double, kGridSteps> worst{};
    for (const auto& p : partial)
        for (int k = 0; k < kGridSteps; ++k) worst[k] = std::max(worst[k], p[k]);
    int best = 0;
    for (int k = 1; k < kGridSteps; ++k)
        if (worst[k] < worst[best]) best = k;
    fit.K = grid_K(best);
    fit.C = worst[best];
    return fit;
}

int far_vertex_displacement(const GeodesicGraph& graph, const std::vector<Vertex>& image,
                            const std::vector<Path>& segments, double threshold) {
    std::vector<Vertex> sources;
    for (const Path& s : segments) sources.insert(sources.end(), s.vertices.begin(), s.vertices.end());
    if (sources.empty()) return displacement(graph, image);
    const auto d = multi_source_distances(graph, sources);
    int worst = 0;
    for (Vertex v = 0; v < graph.size(); ++v)
        if (d[v] > threshold) worst = std::max(worst, graph.dist(v, image[v]));
    return worst;
}

int image_covering_radius(const GeodesicGraph& graph, const std::vector<Vertex>& image) {
    std::vector<Vertex> targets(image.begin(), image.end());
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    const auto d = multi_source_distances(graph, targets);
    return *std::max_element(d.begin(), d.end());
}

GapThreshold lacunary_gap_threshold(double K, double C, const LacunarySpec& spec) {
    if (!(K >= 1.0)) throw InvalidArgument("K must be at least 1");
    if (!(C >= 0.0)) throw InvalidArgument("C must be nonnegative");
    if (spec.n_max < spec.n_min) throw InvalidArgument("lacunary range is empty (n_max < n_min)");
    std::vector<double> gaps;
    for (int n = spec.n_min; n < spec.n_max; ++n) gaps.push_back(lacunary_value(n + 1) - lacunary_value(n));
    for (std::size_t n0 = 0; n0 + 1 < gaps.size(); ++n0) {
        bool holds = true;
        for (std::size_t n = n0; n < gaps.size() && holds; ++n)
            for (std::size_t m = n + 1; m < gaps.size() && holds; ++m) holds = gaps[m] > K * gaps[n] + C;
        if (holds) return {true, spec.n_min + static_cast<int>(n0)};
    }
    return {false, 0};
}

VertexMap comb_stretch_map(const CombGraph& comb, const std::map<std::size_t, int>& plan) {
    VertexMap map = identity_map(comb.graph);
    for (const auto& [tooth, target] : plan) {
        if (tooth >= comb.teeth.size()) {
            throw InvalidArgument("stretch plan names tooth " + std::to_string(tooth) + " but the comb has " +
                                  std::to_string(comb.teeth.size()));
        }
        if (target < 0) throw InvalidArgument("stretch targets must be nonnegative");
        const Path& path = comb.teeth[tooth];
        const int len = path.length();
        for (int k = 1; k <= len; ++k) {
            const long j = std::lround(static_cast<double>(k) * target / len);
            map.image[path[k]] = path[std::min<long>(j, len)];
            map.support[path[k]] = 1;
        }
    }
    map.displacement = displacement(comb.graph, map.image);
    return map;
}

double default_D(double D0, double delta) { return std::max(D0, 10.0 * delta); }

RigidityReport analyze_rigidity(const GeodesicGraph& graph, const SegmentSchedule& schedule, const PairSample& sample) {
    RigidityReport report;
    report.schedule = schedule;
    std::vector<VertexMap> factors;
    for (const Path& s : schedule.segments) {
        factors.push_back(build_phi_segment(graph, s, schedule.D));
        SegmentReport seg;
        seg.length = s.length();
        seg.chart_length = phi_chart(s, schedule.D).length();
        seg.displacement = factors.back().displacement;
        seg.fit = fit_qi_constants(graph, factors.back().image, sample);
        report.per_segment.push_back(seg);
    }
    const VertexMap composite = compose_maps(graph, factors);
    report.composite_displacement = composite.displacement;
    report.composite_fit = fit_qi_constants(graph, composite.image, sample);
    report.boundary_moved = far_vertex_displacement(graph, composite.image, schedule.segments,
                                                    schedule.L + 3.0 * schedule.delta);
    report.far_vertex_fixing = report.boundary_moved == 0;
    return report;
}

}  // namespace coarselab
