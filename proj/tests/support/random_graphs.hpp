#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "gcut/graph.hpp"

namespace gcut::testing {

struct RandomGraphOptions {
    std::size_t min_order = 6;
    std::size_t max_order = 12;
    bool allow_loops = true;
    bool allow_parallel = false;
};

// Connected random graph: a random spanning tree plus G(n, p) extra edges,
// with p drawn per graph so densities range from tree-like to nearly complete.
// Some graphs receive loops (and, if allowed, parallel edges).
inline Graph random_connected_graph(std::uint64_t seed, const RandomGraphOptions& opt = {}) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> order_dist(opt.min_order, opt.max_order);
    const std::size_t n = order_dist(rng);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double p = 0.05 + 0.8 * unit(rng);

    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 1; v < n; ++v) {
        std::uniform_int_distribution<Vertex> parent(0, v - 1);
        edges.emplace_back(parent(rng), v);
    }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (unit(rng) < p) edges.emplace_back(u, v);
    std::vector<std::pair<Vertex, Vertex>> simple;
    for (auto e : edges) {
        bool dup = false;
        for (auto s : simple) dup = dup || (s == e || s == std::pair(e.second, e.first));
        if (!dup || opt.allow_parallel) simple.push_back(e);
    }
    if (opt.allow_loops && unit(rng) < 0.3) {
        std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
        const int loops = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < loops; ++i) {
            Vertex v = pick(rng);
            simple.emplace_back(v, v);
        }
    }
    return Graph(n, simple);
}

}  // namespace gcut::testing
