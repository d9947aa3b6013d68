#pragma once

// Test-only reference implementations. Deliberately naive and independent of
// the library's bitmask scan and flow code: every bipartition is materialized
// as a membership vector, boundaries are summed straight off the edge list and
// component orders come from a union-find over the induced edges.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "gcut/graph.hpp"

namespace gcut::testing {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
    }
    std::size_t size_of(std::size_t x) { return size_[find(x)]; }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

inline std::uint64_t naive_boundary(const Graph& g, const std::vector<bool>& in_x) {
    std::uint64_t total = 0;
    for (const Edge& e : g.edges()) {
        if (in_x[e.u] != in_x[e.v]) total += e.multiplicity;
    }
    return total;
}

// Smallest component order over both sides of the bipartition.
inline std::size_t naive_smallest_part(const Graph& g, const std::vector<bool>& in_x) {
    UnionFind uf(g.order());
    for (const Edge& e : g.edges()) {
        if (in_x[e.u] == in_x[e.v]) uf.unite(e.u, e.v);
    }
    std::size_t smallest = g.order();
    for (std::size_t u = 0; u < g.order(); ++u) smallest = std::min(smallest, uf.size_of(u));
    return smallest;
}

struct NaiveCut {
    std::uint64_t value;
    std::vector<VertexSet> sides;  // every minimizing side containing vertex 0
};

// Minimum k-restricted bipartition boundary, or nullopt when none exists.
inline std::optional<NaiveCut> naive_lambda_k(const Graph& g, int k) {
    const std::size_t n = g.order();
    if (n < 2) return std::nullopt;
    std::optional<NaiveCut> best;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n - 1)); ++bits) {
        std::vector<bool> in_x(n, false);
        in_x[0] = true;
        for (std::size_t i = 1; i < n; ++i) in_x[i] = (bits >> (i - 1)) & 1U;
        if (std::all_of(in_x.begin(), in_x.end(), [](bool b) { return b; })) continue;
        if (naive_smallest_part(g, in_x) < static_cast<std::size_t>(k)) continue;
        const std::uint64_t value = naive_boundary(g, in_x);
        VertexSet side;
        for (Vertex u = 0; u < n; ++u)
            if (in_x[u]) side.push_back(u);
        if (!best || value < best->value) {
            best = NaiveCut{value, {side}};
        } else if (value == best->value) {
            best->sides.push_back(side);
        }
    }
    if (best) std::sort(best->sides.begin(), best->sides.end());
    return best;
}

// Minimum boundary over sets whose size lies in [lo, hi], reported by the side
// containing vertex 0.
inline NaiveCut naive_min_boundary(const Graph& g, std::size_t lo, std::size_t hi) {
    const std::size_t n = g.order();
    NaiveCut best{UINT64_MAX, {}};
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n - 1)); ++bits) {
        std::vector<bool> in_x(n, false);
        in_x[0] = true;
        std::size_t size = 1;
        for (std::size_t i = 1; i < n; ++i) {
            in_x[i] = (bits >> (i - 1)) & 1U;
            size += in_x[i] ? 1 : 0;
        }
        if (size == n) continue;
        const bool fits = (lo <= size && size <= hi) || (lo <= n - size && n - size <= hi);
        if (!fits) continue;
        const std::uint64_t value = naive_boundary(g, in_x);
        VertexSet side;
        for (Vertex u = 0; u < n; ++u)
            if (in_x[u]) side.push_back(u);
        if (value < best.value) {
            best = NaiveCut{value, {side}};
        } else if (value == best.value) {
            best.sides.push_back(side);
        }
    }
    std::sort(best.sides.begin(), best.sides.end());
    return best;
}

// Minimum over connected 3-subsets by direct triple enumeration.
inline std::optional<std::uint64_t> naive_xi3(const Graph& g) {
    const std::size_t n = g.order();
    std::optional<std::uint64_t> best;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c) {
                int internal = (g.adjacent(a, b) ? 1 : 0) + (g.adjacent(a, c) ? 1 : 0) + (g.adjacent(b, c) ? 1 : 0);
                if (internal < 2) continue;
                std::vector<bool> in_x(n, false);
                in_x[a] = in_x[b] = in_x[c] = true;
                const std::uint64_t value = naive_boundary(g, in_x);
                if (!best || value < *best) best = value;
            }
    return best;
}

// Number of edges of G[x], ignoring loops, with multiplicity.
inline std::uint64_t induced_edge_count(const Graph& g, const VertexSet& x) {
    std::vector<bool> in_x(g.order(), false);
    for (Vertex u : x) in_x[u] = true;
    std::uint64_t count = 0;
    for (const Edge& e : g.edges()) {
        if (!e.is_loop() && in_x[e.u] && in_x[e.v]) count += e.multiplicity;
    }
    return count;
}

}  // namespace gcut::testing
