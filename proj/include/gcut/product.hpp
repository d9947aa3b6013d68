#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>

#include "gcut/graph.hpp"

namespace gcut {

/// G x H with the flat index flat(u, v) = u * |V(H)| + v (row-major, H fastest).
class ProductGraph {
public:
    ProductGraph(Graph graph, std::size_t left_order, std::size_t right_order);

    const Graph& graph() const { return graph_; }
    std::size_t left_order() const { return left_order_; }
    std::size_t right_order() const { return right_order_; }

    Vertex flat(Vertex u, Vertex v) const;
    std::pair<Vertex, Vertex> coordinates(Vertex x) const;

    /// The H-layer {u} x V(H). Independent in the product.
    VertexSet layer(Vertex u) const;

private:
    Graph graph_;
    std::size_t left_order_;
    std::size_t right_order_;
};

/// Direct (Kronecker) product. (u1,v1) ~ (u2,v2) iff u1u2 in E(G) and v1v2 in
/// E(H); a loop at v in H makes v adjacent to itself, so each G-edge u1u2 and
/// loop at v yield the single product edge (u1,v)--(u2,v). Each G-edge and
/// H-edge v1v2 (v1 != v2) yield (u1,v1)--(u2,v2) and (u1,v2)--(u2,v1).
///
/// G must be simple and both factors nonempty; throws InvalidArgument otherwise.
ProductGraph direct_product(const Graph& g, const Graph& h);

/// Number of product edges between the layers of two adjacent G-vertices:
/// 2 * (non-loop edges of H) + (loops of H), multiplicities included.
std::uint64_t inter_layer_multiplicity(const Graph& h);

/// Weichsel's criterion: the product of two graphs with at least one edge
/// each is connected iff both are connected and one is non-bipartite.
bool weichsel_predicts_connected(const Graph& g, const Graph& h);

}  // namespace gcut
