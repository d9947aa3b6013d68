#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gcut/extended_count.hpp"

namespace gcut {

using Vertex = std::uint32_t;

/// Ascending, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// An undirected edge {u, v} with u <= v; u == v is a loop.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    std::uint32_t multiplicity = 1;

    bool is_loop() const { return u == v; }
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Neighbor {
    Vertex vertex = 0;
    std::uint32_t multiplicity = 1;
};

/// Undirected multigraph with loops on vertices 0..n-1. Immutable after
/// construction; repeated pairs accumulate into one edge with a multiplicity.
///
/// A loop contributes 2 to the degree of its vertex and appears once in that
/// vertex's neighbor list.
class Graph {
public:
    Graph() = default;

    /// Throws InvalidArgument naming the first pair with an endpoint >= n.
    Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edge_list);
    Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edge_list);

    /// Edges given with explicit multiplicities; duplicates are merged.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);

    std::size_t order() const { return order_; }

    /// Distinct edges sorted by (u, v).
    std::span<const Edge> edges() const { return edges_; }

    /// Sum of multiplicities; a loop counts once.
    std::uint64_t edge_count() const { return edge_count_; }

    std::span<const Neighbor> neighbors(Vertex u) const;
    std::uint64_t degree(Vertex u) const { return degree_.at(u); }

    /// Degree without loop contributions, i.e. the number of edge ends that
    /// can cross a bipartition.
    std::uint64_t cut_degree(Vertex u) const;

    std::uint32_t multiplicity(Vertex u, Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const { return multiplicity(u, v) > 0; }

    bool has_loops() const { return loop_count_ > 0; }
    std::uint64_t loop_count() const { return loop_count_; }

    /// No loops and no parallel edges.
    bool is_simple() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.order_ == b.order_ && a.edges_ == b.edges_;
    }

private:
    void index();

    std::size_t order_ = 0;
    std::vector<Edge> edges_;
    std::uint64_t edge_count_ = 0;
    std::uint64_t loop_count_ = 0;
    std::vector<std::size_t> offsets_;
    std::vector<Neighbor> adjacency_;
    std::vector<std::uint64_t> degree_;
};

/// Builds a graph from an edge list; see Graph's constructor.
Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edge_list);

struct DegreeStats {
    std::uint64_t min_degree = 0;
    std::uint64_t max_degree = 0;
    bool regular = false;
    std::optional<std::uint64_t> regularity;  // set iff regular
};

/// Throws InvalidArgument for the empty graph.
DegreeStats degree_stats(const Graph& g);

/// Throws InvalidArgument if `x` is unsorted, has duplicates or ids >= n.
void validate_vertex_set(const Graph& g, const VertexSet& x);

/// Connected components ordered by their smallest vertex.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

/// Vertices relabelled 0..|x|-1 in ascending order of their original ids.
Graph induced_subgraph(const Graph& g, const VertexSet& x);

/// Edges with exactly one end in `x`, with multiplicities. Loops never cross.
/// Throws InvalidArgument if `x` is empty or all of V(G).
std::vector<Edge> boundary(const Graph& g, const VertexSet& x);

/// Total multiplicity of boundary(g, x).
std::uint64_t boundary_size(const Graph& g, const VertexSet& x);

/// Shortest cycle of length >= 3 in the simple skeleton (loops and parallel
/// edges ignored); infinity when the skeleton is a forest.
ExtendedCount girth(const Graph& g);

/// False whenever a loop is present.
bool is_bipartite(const Graph& g);

/// Complement of `x` within 0..n-1.
VertexSet complement(const Graph& g, const VertexSet& x);

}  // namespace gcut
