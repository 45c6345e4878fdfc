#pragma once

// Slow, direct implementations used to cross-check the library. They share
// no code with it beyond the plain data types.

#include <algorithm>
#include <climits>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "coarselab/graph.hpp"

namespace oracle {

using coarselab::Edge;
using coarselab::Vertex;
using Matrix = std::vector<std::vector<int>>;

inline Matrix floyd_warshall(int n, const std::vector<Edge>& edges) {
    const int inf = INT_MAX / 4;
    Matrix d(n, std::vector<int>(n, inf));
    for (int i = 0; i < n; ++i) d[i][i] = 0;
    for (auto [a, b] : edges) d[a][b] = d[b][a] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

inline std::vector<Edge> cycle_edges(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return e;
}

inline std::vector<Edge> path_edges(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return e;
}

template <typename Dist>
double product(const Dist& d, int w, int x, int y) {
    return 0.5 * (d(x, w) + d(y, w) - d(x, y));
}

// Smallest delta with (x|y)_w >= min((x|z)_w, (z|y)_w) - delta over all
// ordered quadruples.
template <typename Dist>
double four_point(int n, const Dist& d) {
    double best = 0.0;
    for (int w = 0; w < n; ++w)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    best = std::max(best, std::min(product(d, w, x, z), product(d, w, z, y)) - product(d, w, x, y));
    return best;
}

// Every geodesic from x to y, in lexicographic order of vertex sequences.
inline std::vector<std::vector<Vertex>> all_geodesics(const Matrix& d, const std::vector<std::vector<Vertex>>& adj,
                                                      Vertex x, Vertex y) {
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> cur{x};
    std::function<void()> rec = [&] {
        const Vertex v = cur.back();
        if (v == y) {
            out.push_back(cur);
            return;
        }
        std::vector<Vertex> next = adj[v];
        std::sort(next.begin(), next.end());
        for (Vertex w : next) {
            if (d[w][y] == d[v][y] - 1) {
                cur.push_back(w);
                rec();
                cur.pop_back();
            }
        }
    };
    rec();
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::vector<Vertex>> adjacency(int n, const std::vector<Edge>& edges) {
    std::vector<std::vector<Vertex>> adj(n);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

inline int dist_to(const Matrix& d, Vertex p, const std::vector<Vertex>& set) {
    int best = INT_MAX;
    for (Vertex s : set) best = std::min(best, d[p][s]);
    return best;
}

// Rips width of the lexicographic triangle on (x, y, z).
inline int rips_width(const Matrix& d, const std::vector<std::vector<Vertex>>& adj, Vertex x, Vertex y, Vertex z) {
    const auto xy = all_geodesics(d, adj, x, y).front();
    const auto yz = all_geodesics(d, adj, y, z).front();
    const auto xz = all_geodesics(d, adj, x, z).front();
    const std::vector<Vertex>* sides[3] = {&xy, &yz, &xz};
    int w = 0;
    for (int s = 0; s < 3; ++s) {
        std::vector<Vertex> rest = *sides[(s + 1) % 3];
        rest.insert(rest.end(), sides[(s + 2) % 3]->begin(), sides[(s + 2) % 3]->end());
        for (Vertex p : *sides[s]) w = std::max(w, dist_to(d, p, rest));
    }
    return w;
}

// Thin width: send each side vertex to its point on the comparison tripod,
// group by tripod point, take the largest group diameter.
inline int thin_width(const Matrix& d, const std::vector<std::vector<Vertex>>& adj, Vertex x, Vertex y, Vertex z) {
    const double a = product([&](int i, int j) { return d[i][j]; }, x, y, z);
    const double b = product([&](int i, int j) { return d[i][j]; }, y, x, z);
    const double c = product([&](int i, int j) { return d[i][j]; }, z, x, y);
    const double legs[3] = {a, b, c};
    // Tripod point as (leg, distance from that leg's end); the center is leg -1.
    std::map<std::pair<int, double>, std::vector<Vertex>> fibers;
    auto place = [&](int leg, double s, Vertex v) {
        if (s == legs[leg]) fibers[{-1, 0.0}].push_back(v);
        else fibers[{leg, s}].push_back(v);
    };
    auto side = [&](Vertex from, Vertex to, int leg_from, int leg_to) {
        const auto path = all_geodesics(d, adj, from, to).front();
        const int len = static_cast<int>(path.size()) - 1;
        for (int s = 0; s <= len; ++s) {
            if (s <= legs[leg_from]) place(leg_from, s, path[s]);
            else place(leg_to, len - s, path[s]);
        }
    };
    side(x, y, 0, 1);
    side(y, z, 1, 2);
    side(x, z, 0, 2);
    int w = 0;
    for (const auto& [key, members] : fibers)
        for (Vertex p : members)
            for (Vertex q : members) w = std::max(w, d[p][q]);
    return w;
}

// Chain infimum by trying every chain of distinct points (small n only).
inline std::vector<std::vector<double>> chain_infimum(const std::vector<std::vector<double>>& rho) {
    const int n = static_cast<int>(rho.size());
    std::vector<std::vector<double>> best(n, std::vector<double>(n, 0.0));
    for (int s = 0; s < n; ++s) {
        for (int t = 0; t < n; ++t) {
            if (s == t) continue;
            double value = rho[s][t];
            std::vector<int> used(n, 0);
            used[s] = 1;
            std::function<void(int, double)> rec = [&](int at, double acc) {
                if (acc >= value) return;
                if (at == t) {
                    value = acc;
                    return;
                }
                for (int nx = 0; nx < n; ++nx) {
                    if (used[nx]) continue;
                    used[nx] = 1;
                    rec(nx, acc + rho[at][nx]);
                    used[nx] = 0;
                }
            };
            rec(s, 0.0);
            best[s][t] = value;
        }
    }
    return best;
}

// True when every x and grid radius r has some y with r/S < d(x,y) <= r.
inline bool uniformly_perfect(const std::vector<std::vector<double>>& d, const std::vector<double>& radii, double S) {
    const std::size_t n = d.size();
    for (std::size_t x = 0; x < n; ++x) {
        for (double r : radii) {
            bool found = false;
            for (std::size_t y = 0; y < n && !found; ++y) {
                if (y != x && d[x][y] > r / S && d[x][y] <= r * (1 + 1e-9)) found = true;
            }
            if (!found) return false;
        }
    }
    return true;
}

// Projection indices of p onto a path, by scanning.
inline std::vector<int> projection(const Matrix& d, const std::vector<Vertex>& path, Vertex p) {
    int best = INT_MAX;
    for (Vertex v : path) best = std::min(best, d[p][v]);
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(path.size()); ++i)
        if (d[p][path[i]] == best) out.push_back(i);
    return out;
}

// Worst C for each K of the grid, over every vertex pair.
inline std::pair<double, double> qi_fit(const Matrix& d, const std::vector<Vertex>& f) {
    const int n = static_cast<int>(f.size());
    double bestK = 1.0;
    double bestC = INFINITY;
    for (int k = 0; k <= 28; ++k) {
        const double K = 1.0 + 0.25 * k;
        double C = 0.0;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                const double x = d[a][b];
                const double y = d[f[a]][f[b]];
                C = std::max({C, x / K - y, y - K * x});
            }
        if (C < bestC) {
            bestC = C;
            bestK = K;
        }
    }
    return {bestK, bestC};
}

}  // namespace oracle
