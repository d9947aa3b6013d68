#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gcut/graph.hpp"

namespace gcut::detail {

// Residual network of an undirected multigraph: every non-loop edge of
// multiplicity m becomes a pair of opposite arcs of capacity m that serve as
// each other's reverse. Terminal sets are contracted implicitly: all sources
// start at BFS level 0 with unlimited supply and every sink absorbs flow.
//
// One network is built per graph and reused across terminal pairs.
class FlowNetwork {
public:
    explicit FlowNetwork(const Graph& g);

    // Maximum flow from `sources` to `sinks` (disjoint, nonempty). Stops as
    // soon as the flow reaches `limit` and returns a value >= limit.
    std::uint64_t run(std::span<const Vertex> sources, std::span<const Vertex> sinks,
                      std::uint64_t limit = UINT64_MAX);

    // Vertices reachable from the sources in the residual network of the last
    // completed run; a minimum cut's source side.
    std::vector<bool> source_side() const;

private:
    enum Role : std::uint8_t { kNone = 0, kSource = 1, kSink = 2 };

    struct Arc {
        Vertex to;
        std::uint32_t reverse;
    };

    bool build_levels();
    std::uint64_t push(Vertex u, std::uint64_t limit);

    std::size_t order_;
    std::vector<std::uint32_t> offsets_;
    std::vector<Arc> arcs_;
    std::vector<std::uint64_t> base_capacity_;
    std::vector<std::uint64_t> capacity_;
    std::vector<Role> role_;
    std::vector<std::int32_t> level_;
    std::vector<std::uint32_t> next_arc_;
    std::vector<Vertex> queue_;
    std::vector<Vertex> sources_;
};

}  // namespace gcut::detail
