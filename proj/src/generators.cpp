#include "gcut/generators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gcut/errors.hpp"

namespace gcut {

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

void require(bool ok, const std::string& what) {
    if (!ok) throw InvalidArgument(what);
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = (std::numeric_limits<std::uint64_t>::max() / bound) * bound;
    std::uint64_t r = rng();
    while (r >= limit) r = rng();
    return r % bound;
}

}  // namespace

Family parse_family(std::string_view tag) {
    if (tag == "path") return Family::path;
    if (tag == "cycle") return Family::cycle;
    if (tag == "complete") return Family::complete;
    if (tag == "total") return Family::total;
    if (tag == "biclique") return Family::complete_bipartite;
    if (tag == "star") return Family::star;
    if (tag == "petersen") return Family::petersen;
    if (tag == "random-regular") return Family::random_regular;
    throw InvalidArgument("unknown family '" + std::string(tag) + "'");
}

std::string_view family_tag(Family f) {
    switch (f) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::complete: return "complete";
        case Family::total: return "total";
        case Family::complete_bipartite: return "biclique";
        case Family::star: return "star";
        case Family::petersen: return "petersen";
        case Family::random_regular: return "random-regular";
    }
    return "unknown";
}

Graph path_graph(std::size_t n) {
    require(n >= 1, "path needs n >= 1");
    EdgeList edges;
    for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
    require(n >= 3, "cycle needs n >= 3");
    EdgeList edges;
    for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
    return Graph(n, edges);
}

Graph complete_graph(std::size_t n) {
    require(n >= 1, "complete graph needs n >= 1");
    EdgeList edges;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph total_graph(std::size_t n) {
    require(n >= 1, "total graph needs n >= 1");
    EdgeList edges;
    for (Vertex i = 0; i < n; ++i) {
        edges.emplace_back(i, i);
        for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    }
    return Graph(n, edges);
}

Graph complete_bipartite_graph(std::size_t s, std::size_t t) {
    require(s >= 1 && t >= 1, "complete bipartite graph needs s >= 1 and t >= 1");
    EdgeList edges;
    for (Vertex i = 0; i < s; ++i)
        for (Vertex j = 0; j < t; ++j) edges.emplace_back(i, static_cast<Vertex>(s + j));
    return Graph(s + t, edges);
}

Graph star_graph(std::size_t leaves) {
    require(leaves >= 1, "star needs at least one leaf");
    return complete_bipartite_graph(1, leaves);
}

Graph petersen_graph() {
    EdgeList edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, edges);
}

Graph random_regular(std::size_t n, std::size_t k, std::uint64_t seed, std::size_t max_attempts) {
    require((n * k) % 2 == 0, "random regular graph needs n*k even");
    require(k < n, "random regular graph needs k < n");
    if (k == 0) return Graph(n, EdgeList{});

    std::mt19937_64 rng(seed);
    std::vector<std::size_t> points(n * k);
    std::iota(points.begin(), points.end(), std::size_t{0});
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        for (std::size_t i = points.size() - 1; i > 0; --i) {
            std::swap(points[i], points[uniform_below(rng, i + 1)]);
        }
        EdgeList edges;
        std::set<std::pair<Vertex, Vertex>> seen;
        bool simple = true;
        for (std::size_t j = 0; j < points.size() && simple; j += 2) {
            auto a = static_cast<Vertex>(points[j] / k);
            auto b = static_cast<Vertex>(points[j + 1] / k);
            if (a > b) std::swap(a, b);
            simple = a != b && seen.emplace(a, b).second;
            edges.emplace_back(a, b);
        }
        if (simple) return Graph(n, edges);
    }
    throw InvalidArgument("no simple " + std::to_string(k) + "-regular pairing on " + std::to_string(n) +
                          " vertices found in " + std::to_string(max_attempts) + " attempts");
}

Graph generate(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::path: return path_graph(spec.n);
        case Family::cycle: return cycle_graph(spec.n);
        case Family::complete: return complete_graph(spec.n);
        case Family::total: return total_graph(spec.n);
        case Family::complete_bipartite: return complete_bipartite_graph(spec.s, spec.t);
        case Family::star: return star_graph(spec.n);
        case Family::petersen: return petersen_graph();
        case Family::random_regular: return random_regular(spec.n, spec.k, spec.seed);
    }
    throw InvalidArgument("unknown family");
}

}  // namespace gcut
