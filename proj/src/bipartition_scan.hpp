#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "gcut/graph.hpp"

namespace gcut::detail {

using Mask = std::uint64_t;

// Bitmask view of a graph with at most 63 vertices.
class MaskGraph {
public:
    explicit MaskGraph(const Graph& g);

    std::size_t order() const { return order_; }
    Mask full() const { return full_; }

    // Every component of G[side] has at least k vertices (k <= 3).
    bool components_at_least(Mask side, int k) const;

    // Enumerates each bipartition (X, V \ X) with vertex 0 in X exactly once,
    // in Gray-code order, calling visit(X, |boundary(X)|).
    template <class Visit>
    void scan(Visit&& visit) const;

private:
    std::uint64_t weight_into(Vertex v, Mask side) const;

    std::size_t order_;
    Mask full_;
    bool unit_multiplicity_ = true;
    std::vector<Mask> neighbors_;  // loops excluded
    std::vector<std::vector<Neighbor>> weighted_;
    std::vector<std::uint64_t> cut_degree_;
};

inline std::uint64_t MaskGraph::weight_into(Vertex v, Mask side) const {
    if (unit_multiplicity_) return static_cast<std::uint64_t>(std::popcount(neighbors_[v] & side));
    std::uint64_t w = 0;
    for (const Neighbor& nb : weighted_[v]) {
        if ((side >> nb.vertex) & 1U) w += nb.multiplicity;
    }
    return w;
}

template <class Visit>
void MaskGraph::scan(Visit&& visit) const {
    if (order_ < 2) return;
    Mask side = 1;
    std::uint64_t cut = cut_degree_[0];
    visit(side, cut);
    const std::uint64_t steps = std::uint64_t{1} << (order_ - 1);
    for (std::uint64_t i = 1; i < steps; ++i) {
        const auto v = static_cast<Vertex>(std::countr_zero(i) + 1);
        const std::uint64_t inside = weight_into(v, side);
        const std::uint64_t outside = cut_degree_[v] - inside;
        const Mask bit = Mask{1} << v;
        if (side & bit) {
            cut = cut - outside + inside;
        } else {
            cut = cut + outside - inside;
        }
        side ^= bit;
        if (side != full_) visit(side, cut);
    }
}

// Lexicographic order of the ascending vertex lists encoded by two masks.
bool mask_lex_less(Mask a, Mask b);

VertexSet mask_to_set(Mask m);

}  // namespace gcut::detail
