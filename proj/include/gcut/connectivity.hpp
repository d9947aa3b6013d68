#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gcut/extended_count.hpp"
#include "gcut/graph.hpp"

namespace gcut {

inline constexpr std::size_t kDefaultBruteForceCeiling = 22;

/// Largest order the bitmask enumeration can represent.
inline constexpr std::size_t kMaxBruteForceOrder = 63;

/// A connectivity value with one witness bipartition.
///
/// For lambda-k results `witness_side` is the side containing vertex 0 and
/// `crossing_edges` equals boundary(witness_side). Infinite results carry an
/// empty witness. For max_flow_min_cut the witness is the source side.
struct CutResult {
    ExtendedCount value = ExtendedCount::infinity();
    VertexSet witness_side;
    std::vector<Edge> crossing_edges;
};

/// True iff `side` is a nonempty proper subset and every component of both
/// G[side] and G[V \ side] has at least k vertices.
bool is_k_restricted_side(const Graph& g, const VertexSet& side, int k);

/// All vertex sets of size k (1..3) that induce a connected subgraph, sorted
/// lexicographically.
std::vector<VertexSet> connected_subsets(const Graph& g, int k);

/// Minimum number of edges (with multiplicity, loops ignored) separating all
/// sources from all sinks. Sources and sinks are each contracted to a single
/// terminal; the witness is the set reachable from the sources in the final
/// residual network. Throws InvalidArgument on empty or overlapping terminals.
CutResult max_flow_min_cut(const Graph& g, const VertexSet& sources, const VertexSet& sinks);

/// Exhaustive k-restricted edge-connectivity (k in 1..3): the minimum
/// |boundary(X)| over all X containing vertex 0 such that every component of
/// G[X] and G[V \ X] has at least k vertices. Ties go to the
/// lexicographically smallest X. Throws CeilingExceeded above `ceiling`.
CutResult lambda_k_bruteforce(const Graph& g, int k, std::size_t ceiling = kDefaultBruteForceCeiling);

/// k-restricted edge-connectivity by minimum cuts between terminal pairs.
///
/// For connected G: the minimum over connected k-sets A containing vertex 0
/// and disjoint connected k-sets B of the (A, B) minimum cut, each cut
/// normalized into a k-restricted bipartition of the same size. Disconnected
/// G gives 0 (witness: the component of vertex 0) when every component has
/// at least k vertices, and infinity otherwise.
CutResult lambda_k(const Graph& g, int k);

/// Minimum edge-degree d(u) + d(v) - 2 over non-loop edges; infinity if none.
ExtendedCount xi(const Graph& g);

/// Minimum boundary over connected 3-vertex sets; infinity if none.
ExtendedCount xi3(const Graph& g);

/// Sum d(x) + d(y) minimized over non-loop edges xy; infinity if none.
ExtendedCount min_edge_degree_sum(const Graph& g);

/// Whether G has two vertex-disjoint paths on three vertices.
bool has_lambda3_cut(const Graph& g);

struct BoundaryMinimum {
    std::uint64_t value = 0;
    /// Achieving sets, one per complementary pair (the side containing
    /// vertex 0), in lexicographic order.
    std::vector<VertexSet> achievers;
};

/// Minimum |boundary(A)| over all A with lo <= |A| <= hi, no connectivity
/// requirement. Throws InvalidArgument unless 1 <= lo <= hi <= n-1, and
/// CeilingExceeded above `ceiling`.
BoundaryMinimum min_boundary_over_sizes(const Graph& g, std::size_t lo, std::size_t hi,
                                        std::size_t ceiling = kDefaultBruteForceCeiling);

/// Every bipartition achieving lambda_k, canonicalized by vertex 0 and sorted
/// by witness. Empty when lambda_k is infinite.
std::vector<CutResult> enumerate_min_k_cuts(const Graph& g, int k,
                                            std::size_t ceiling = kDefaultBruteForceCeiling);

enum class Verdict { yes, no, not_applicable };

struct ClassificationFlag {
    Verdict verdict = Verdict::not_applicable;
    std::string reason;  // set when not_applicable
};

struct ClassificationReport {
    ClassificationFlag maximally_edge_connected;    // lambda = delta
    ClassificationFlag super_edge_connected;        // every min cut isolates a vertex
    ClassificationFlag maximally_restricted;        // lambda_2 = xi
    ClassificationFlag super_restricted;            // every min restricted cut isolates an edge
    ClassificationFlag maximally_3_restricted;      // lambda_3 = xi_3
    ClassificationFlag super_3_restricted;          // every min 3-restricted cut isolates an order-3 part
};

/// Maximality flags use the flow method; super flags enumerate minimum cuts
/// and are not_applicable above `ceiling`.
ClassificationReport classify(const Graph& g, std::size_t ceiling = kDefaultBruteForceCeiling);

std::string_view to_string(Verdict v);

}  // namespace gcut
