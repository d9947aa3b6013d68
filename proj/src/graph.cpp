#include "gcut/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "gcut/errors.hpp"

namespace gcut {

namespace {

std::string pair_text(Vertex u, Vertex v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph::Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edge_list) : order_(n) {
    edges_.reserve(edge_list.size());
    for (auto [a, b] : edge_list) {
        if (a >= n || b >= n) {
            throw InvalidArgument("edge " + pair_text(a, b) + " has an endpoint outside 0.." +
                                  (n == 0 ? std::string("(empty)") : std::to_string(n - 1)));
        }
        edges_.push_back(Edge{std::min(a, b), std::max(a, b), 1});
    }
    index();
}

Graph::Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edge_list)
    : Graph(n, std::span<const std::pair<Vertex, Vertex>>(edge_list.begin(), edge_list.size())) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g;
    g.order_ = n;
    g.edges_.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.u >= n || e.v >= n) {
            throw InvalidArgument("edge " + pair_text(e.u, e.v) + " has an endpoint outside the graph");
        }
        if (e.multiplicity == 0) throw InvalidArgument("edge " + pair_text(e.u, e.v) + " has multiplicity 0");
        g.edges_.push_back(Edge{std::min(e.u, e.v), std::max(e.u, e.v), e.multiplicity});
    }
    g.index();
    return g;
}

// Sorts and merges edges_, then rebuilds the CSR adjacency and degrees.
void Graph::index() {
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    std::vector<Edge> merged;
    merged.reserve(edges_.size());
    for (const Edge& e : edges_) {
        if (!merged.empty() && merged.back().u == e.u && merged.back().v == e.v) {
            merged.back().multiplicity += e.multiplicity;
        } else {
            merged.push_back(e);
        }
    }
    edges_ = std::move(merged);

    edge_count_ = 0;
    loop_count_ = 0;
    degree_.assign(order_, 0);
    std::vector<std::size_t> count(order_ + 1, 0);
    for (const Edge& e : edges_) {
        edge_count_ += e.multiplicity;
        if (e.is_loop()) {
            loop_count_ += e.multiplicity;
            degree_[e.u] += 2ULL * e.multiplicity;
            ++count[e.u];
        } else {
            degree_[e.u] += e.multiplicity;
            degree_[e.v] += e.multiplicity;
            ++count[e.u];
            ++count[e.v];
        }
    }
    offsets_.assign(order_ + 1, 0);
    for (std::size_t u = 0; u < order_; ++u) offsets_[u + 1] = offsets_[u] + count[u];
    adjacency_.assign(offsets_[order_], Neighbor{});
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const Edge& e : edges_) {
        adjacency_[fill[e.u]++] = Neighbor{e.v, e.multiplicity};
        if (!e.is_loop()) adjacency_[fill[e.v]++] = Neighbor{e.u, e.multiplicity};
    }
    for (std::size_t u = 0; u < order_; ++u) {
        std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[u]),
                  adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[u + 1]),
                  [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
    }
}

std::span<const Neighbor> Graph::neighbors(Vertex u) const {
    if (u >= order_) throw InvalidArgument("vertex " + std::to_string(u) + " out of range");
    return std::span<const Neighbor>(adjacency_).subspan(offsets_[u], offsets_[u + 1] - offsets_[u]);
}

std::uint64_t Graph::cut_degree(Vertex u) const {
    std::uint64_t d = 0;
    for (const Neighbor& nb : neighbors(u)) {
        if (nb.vertex != u) d += nb.multiplicity;
    }
    return d;
}

std::uint32_t Graph::multiplicity(Vertex u, Vertex v) const {
    auto nbrs = neighbors(u);
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v,
                               [](const Neighbor& nb, Vertex x) { return nb.vertex < x; });
    return (it != nbrs.end() && it->vertex == v) ? it->multiplicity : 0;
}

bool Graph::is_simple() const {
    return loop_count_ == 0 &&
           std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.multiplicity == 1; });
}

Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edge_list) {
    return Graph(n, edge_list);
}

DegreeStats degree_stats(const Graph& g) {
    if (g.order() == 0) throw InvalidArgument("degree statistics of the empty graph are undefined");
    DegreeStats s;
    s.min_degree = g.degree(0);
    s.max_degree = g.degree(0);
    for (Vertex u = 1; u < g.order(); ++u) {
        s.min_degree = std::min(s.min_degree, g.degree(u));
        s.max_degree = std::max(s.max_degree, g.degree(u));
    }
    s.regular = s.min_degree == s.max_degree;
    if (s.regular) s.regularity = s.min_degree;
    return s;
}

void validate_vertex_set(const Graph& g, const VertexSet& x) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] >= g.order()) {
            throw InvalidArgument("vertex " + std::to_string(x[i]) + " out of range for a graph of order " +
                                  std::to_string(g.order()));
        }
        if (i > 0 && x[i - 1] >= x[i]) throw InvalidArgument("vertex set must be strictly ascending");
    }
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> result;
    std::vector<bool> seen(g.order(), false);
    std::deque<Vertex> queue;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        VertexSet comp;
        seen[s] = true;
        queue.push_back(s);
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            comp.push_back(u);
            for (const Neighbor& nb : g.neighbors(u)) {
                if (!seen[nb.vertex]) {
                    seen[nb.vertex] = true;
                    queue.push_back(nb.vertex);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        result.push_back(std::move(comp));
    }
    return result;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

Graph induced_subgraph(const Graph& g, const VertexSet& x) {
    validate_vertex_set(g, x);
    std::vector<std::int64_t> relabel(g.order(), -1);
    for (std::size_t i = 0; i < x.size(); ++i) relabel[x[i]] = static_cast<std::int64_t>(i);
    std::vector<Edge> kept;
    for (const Edge& e : g.edges()) {
        if (relabel[e.u] >= 0 && relabel[e.v] >= 0) {
            kept.push_back(Edge{static_cast<Vertex>(relabel[e.u]), static_cast<Vertex>(relabel[e.v]),
                                e.multiplicity});
        }
    }
    return Graph::from_edges(x.size(), kept);
}

std::vector<Edge> boundary(const Graph& g, const VertexSet& x) {
    validate_vertex_set(g, x);
    if (x.empty() || x.size() == g.order()) {
        throw InvalidArgument("boundary needs a nonempty proper vertex subset");
    }
    std::vector<bool> inside(g.order(), false);
    for (Vertex u : x) inside[u] = true;
    std::vector<Edge> result;
    for (const Edge& e : g.edges()) {
        if (inside[e.u] != inside[e.v]) result.push_back(e);
    }
    return result;
}

std::uint64_t boundary_size(const Graph& g, const VertexSet& x) {
    std::uint64_t total = 0;
    for (const Edge& e : boundary(g, x)) total += e.multiplicity;
    return total;
}

ExtendedCount girth(const Graph& g) {
    // BFS from every vertex over the simple skeleton; a non-tree edge closing
    // at depths d(u), d(w) witnesses a closed walk of length d(u)+d(w)+1, and
    // the minimum over all roots is the girth.
    const std::size_t n = g.order();
    std::size_t best = SIZE_MAX;
    std::vector<std::size_t> dist(n);
    std::vector<std::int64_t> parent(n);
    std::deque<Vertex> queue;
    for (Vertex root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), SIZE_MAX);
        std::fill(parent.begin(), parent.end(), -1);
        dist[root] = 0;
        queue.assign(1, root);
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            if (2 * dist[u] + 1 >= best) break;
            for (const Neighbor& nb : g.neighbors(u)) {
                Vertex w = nb.vertex;
                if (w == u) continue;
                if (dist[w] == SIZE_MAX) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (parent[u] != static_cast<std::int64_t>(w)) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    return best == SIZE_MAX ? ExtendedCount::infinity() : ExtendedCount(best);
}

bool is_bipartite(const Graph& g) {
    if (g.has_loops()) return false;
    std::vector<int> color(g.order(), -1);
    std::deque<Vertex> queue;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        queue.assign(1, s);
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            for (const Neighbor& nb : g.neighbors(u)) {
                if (color[nb.vertex] < 0) {
                    color[nb.vertex] = 1 - color[u];
                    queue.push_back(nb.vertex);
                } else if (color[nb.vertex] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

VertexSet complement(const Graph& g, const VertexSet& x) {
    validate_vertex_set(g, x);
    VertexSet result;
    result.reserve(g.order() - x.size());
    std::size_t i = 0;
    for (Vertex u = 0; u < g.order(); ++u) {
        if (i < x.size() && x[i] == u) {
            ++i;
        } else {
            result.push_back(u);
        }
    }
    return result;
}

}  // namespace gcut
