#include "gcut/product.hpp"

#include <string>
#include <vector>

#include "gcut/errors.hpp"

namespace gcut {

ProductGraph::ProductGraph(Graph graph, std::size_t left_order, std::size_t right_order)
    : graph_(std::move(graph)), left_order_(left_order), right_order_(right_order) {
    if (graph_.order() != left_order_ * right_order_) {
        throw InvalidArgument("product graph order does not match its factor sizes");
    }
}

Vertex ProductGraph::flat(Vertex u, Vertex v) const {
    if (u >= left_order_ || v >= right_order_) throw InvalidArgument("product coordinates out of range");
    return static_cast<Vertex>(u * right_order_ + v);
}

std::pair<Vertex, Vertex> ProductGraph::coordinates(Vertex x) const {
    if (x >= graph_.order()) throw InvalidArgument("product vertex out of range");
    return {static_cast<Vertex>(x / right_order_), static_cast<Vertex>(x % right_order_)};
}

VertexSet ProductGraph::layer(Vertex u) const {
    if (u >= left_order_) {
        throw InvalidArgument("layer vertex " + std::to_string(u) + " out of range");
    }
    VertexSet result(right_order_);
    for (Vertex v = 0; v < right_order_; ++v) result[v] = flat(u, v);
    return result;
}

ProductGraph direct_product(const Graph& g, const Graph& h) {
    if (g.order() == 0 || h.order() == 0) throw InvalidArgument("product factors must be nonempty");
    if (!g.is_simple()) throw InvalidArgument("first product factor must be simple");

    const auto width = h.order();
    auto flat = [width](Vertex u, Vertex v) { return static_cast<Vertex>(u * width + v); };
    std::vector<Edge> edges;
    edges.reserve(g.edges().size() * h.edges().size() * 2);
    for (const Edge& ge : g.edges()) {
        for (const Edge& he : h.edges()) {
            if (he.is_loop()) {
                edges.push_back(Edge{flat(ge.u, he.u), flat(ge.v, he.u), he.multiplicity});
            } else {
                edges.push_back(Edge{flat(ge.u, he.u), flat(ge.v, he.v), he.multiplicity});
                edges.push_back(Edge{flat(ge.u, he.v), flat(ge.v, he.u), he.multiplicity});
            }
        }
    }
    return ProductGraph(Graph::from_edges(g.order() * h.order(), edges), g.order(), h.order());
}

std::uint64_t inter_layer_multiplicity(const Graph& h) {
    std::uint64_t m = 0;
    for (const Edge& e : h.edges()) m += e.is_loop() ? e.multiplicity : 2ULL * e.multiplicity;
    return m;
}

bool weichsel_predicts_connected(const Graph& g, const Graph& h) {
    return is_connected(g) && is_connected(h) && (!is_bipartite(g) || !is_bipartite(h));
}

}  // namespace gcut
