#include "gcut/connectivity.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "flow_network.hpp"
#include "gcut/errors.hpp"

namespace gcut {

namespace {

void check_k(int k) {
    if (k < 1 || k > 3) throw InvalidArgument("k must be 1, 2 or 3, got " + std::to_string(k));
}

// Component of G[allowed] containing `start`.
std::vector<bool> component_within(const Graph& g, const std::vector<bool>& allowed, Vertex start) {
    std::vector<bool> comp(g.order(), false);
    std::vector<Vertex> stack{start};
    comp[start] = true;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (const Neighbor& nb : g.neighbors(u)) {
            if (allowed[nb.vertex] && !comp[nb.vertex]) {
                comp[nb.vertex] = true;
                stack.push_back(nb.vertex);
            }
        }
    }
    return comp;
}

// Turns the source side of an (A, B) minimum cut of a connected graph into a
// k-restricted bipartition of no larger boundary: keep the component K_A of
// the source side that holds A, then take the side of B to be the component
// of V \ K_A holding B. Both resulting sides are connected.
VertexSet normalize_cut(const Graph& g, const std::vector<bool>& source_side, Vertex a, Vertex b) {
    std::vector<bool> keep = component_within(g, source_side, a);
    std::vector<bool> rest(g.order());
    for (std::size_t u = 0; u < g.order(); ++u) rest[u] = !keep[u];
    std::vector<bool> sink_part = component_within(g, rest, b);
    VertexSet side;
    for (Vertex u = 0; u < g.order(); ++u) {
        if (!sink_part[u]) side.push_back(u);
    }
    return side;
}

bool disjoint(const VertexSet& a, const VertexSet& b) {
    for (Vertex x : a)
        for (Vertex y : b)
            if (x == y) return false;
    return true;
}

CutResult cut_from_side(const Graph& g, VertexSet side) {
    CutResult r;
    r.crossing_edges = boundary(g, side);
    std::uint64_t total = 0;
    for (const Edge& e : r.crossing_edges) total += e.multiplicity;
    r.value = ExtendedCount(total);
    r.witness_side = std::move(side);
    return r;
}

}  // namespace

bool is_k_restricted_side(const Graph& g, const VertexSet& side, int k) {
    validate_vertex_set(g, side);
    if (side.empty() || side.size() == g.order()) return false;
    const VertexSet other = complement(g, side);
    for (const VertexSet* part : {&side, &other}) {
        for (const VertexSet& comp : components(induced_subgraph(g, *part))) {
            if (comp.size() < static_cast<std::size_t>(k)) return false;
        }
    }
    return true;
}

std::vector<VertexSet> connected_subsets(const Graph& g, int k) {
    check_k(k);
    std::vector<VertexSet> result;
    if (k == 1) {
        for (Vertex u = 0; u < g.order(); ++u) result.push_back({u});
        return result;
    }
    if (k == 2) {
        for (const Edge& e : g.edges()) {
            if (!e.is_loop()) result.push_back({e.u, e.v});
        }
        return result;
    }
    for (Vertex c = 0; c < g.order(); ++c) {
        auto nbrs = g.neighbors(c);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            if (nbrs[i].vertex == c) continue;
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                if (nbrs[j].vertex == c) continue;
                VertexSet t{c, nbrs[i].vertex, nbrs[j].vertex};
                std::sort(t.begin(), t.end());
                result.push_back(std::move(t));
            }
        }
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

CutResult max_flow_min_cut(const Graph& g, const VertexSet& sources, const VertexSet& sinks) {
    validate_vertex_set(g, sources);
    validate_vertex_set(g, sinks);
    if (sources.empty() || sinks.empty()) throw InvalidArgument("terminal sets must be nonempty");
    if (!disjoint(sources, sinks)) throw InvalidArgument("source and sink sets overlap");

    detail::FlowNetwork net(g);
    const std::uint64_t flow = net.run(sources, sinks);
    const std::vector<bool> reach = net.source_side();
    CutResult r;
    for (Vertex u = 0; u < g.order(); ++u) {
        if (reach[u]) r.witness_side.push_back(u);
    }
    r.crossing_edges = boundary(g, r.witness_side);
    r.value = ExtendedCount(flow);
    return r;
}

CutResult lambda_k(const Graph& g, int k) {
    check_k(k);
    if (g.order() < 2) return CutResult{};

    const auto comps = components(g);
    if (comps.size() > 1) {
        for (const auto& c : comps) {
            if (c.size() < static_cast<std::size_t>(k)) return CutResult{};
        }
        CutResult r;
        r.value = ExtendedCount(0);
        r.witness_side = comps.front();
        return r;
    }

    const std::vector<VertexSet> all = connected_subsets(g, k);
    std::vector<VertexSet> anchored;
    for (const auto& s : all) {
        if (s.front() == 0) anchored.push_back(s);
    }

    detail::FlowNetwork net(g);
    bool found = false;
    std::uint64_t best = 0;
    VertexSet best_side;
    for (const VertexSet& a : anchored) {
        for (const VertexSet& b : all) {
            if (!disjoint(a, b)) continue;
            // Ties must still be explored in full, so abort only above `best`.
            const std::uint64_t limit = found ? best + 1 : UINT64_MAX;
            const std::uint64_t flow = net.run(a, b, limit);
            if (flow >= limit) continue;
            VertexSet side = normalize_cut(g, net.source_side(), a.front(), b.front());
            if (!found || flow < best || side < best_side) {
                found = true;
                best = flow;
                best_side = std::move(side);
            }
        }
    }
    if (!found) return CutResult{};
    CutResult r = cut_from_side(g, std::move(best_side));
    if (r.value != ExtendedCount(best)) throw std::logic_error("normalized cut differs from the flow value");
    return r;
}

ExtendedCount xi(const Graph& g) {
    ExtendedCount best = ExtendedCount::infinity();
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) continue;
        best = std::min(best, ExtendedCount(g.degree(e.u) + g.degree(e.v) - 2));
    }
    return best;
}

ExtendedCount min_edge_degree_sum(const Graph& g) {
    ExtendedCount best = ExtendedCount::infinity();
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) continue;
        best = std::min(best, ExtendedCount(g.degree(e.u) + g.degree(e.v)));
    }
    return best;
}

ExtendedCount xi3(const Graph& g) {
    ExtendedCount best = ExtendedCount::infinity();
    for (const VertexSet& t : connected_subsets(g, 3)) {
        std::uint64_t total = g.cut_degree(t[0]) + g.cut_degree(t[1]) + g.cut_degree(t[2]);
        total -= 2ULL * (g.multiplicity(t[0], t[1]) + g.multiplicity(t[0], t[2]) + g.multiplicity(t[1], t[2]));
        best = std::min(best, ExtendedCount(total));
    }
    return best;
}

bool has_lambda3_cut(const Graph& g) {
    // A second P3 avoiding the triple t exists iff some vertex outside t has
    // two distinct non-loop neighbors outside t.
    std::vector<bool> blocked(g.order(), false);
    for (const VertexSet& t : connected_subsets(g, 3)) {
        for (Vertex u : t) blocked[u] = true;
        for (Vertex v = 0; v < g.order(); ++v) {
            if (blocked[v]) continue;
            int free_neighbors = 0;
            for (const Neighbor& nb : g.neighbors(v)) {
                if (nb.vertex != v && !blocked[nb.vertex]) ++free_neighbors;
            }
            if (free_neighbors >= 2) return true;
        }
        for (Vertex u : t) blocked[u] = false;
    }
    return false;
}

}  // namespace gcut
