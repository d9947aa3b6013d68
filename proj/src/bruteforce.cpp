#include <algorithm>
#include <string>

#include "bipartition_scan.hpp"
#include "gcut/connectivity.hpp"
#include "gcut/errors.hpp"

namespace gcut {

namespace detail {

MaskGraph::MaskGraph(const Graph& g)
    : order_(g.order()),
      full_(g.order() >= 64 ? ~Mask{0} : (Mask{1} << g.order()) - 1),
      neighbors_(g.order(), 0),
      weighted_(g.order()),
      cut_degree_(g.order(), 0) {
    for (Vertex u = 0; u < order_; ++u) {
        for (const Neighbor& nb : g.neighbors(u)) {
            if (nb.vertex == u) continue;
            neighbors_[u] |= Mask{1} << nb.vertex;
            weighted_[u].push_back(nb);
            cut_degree_[u] += nb.multiplicity;
            if (nb.multiplicity != 1) unit_multiplicity_ = false;
        }
    }
}

// Components of order 1 are vertices with no neighbor in the side; components
// of order 2 are adjacent pairs with no other neighbor in the side.
bool MaskGraph::components_at_least(Mask side, int k) const {
    if (k <= 1) return true;
    for (Mask rest = side; rest != 0; rest &= rest - 1) {
        const auto v = static_cast<Vertex>(std::countr_zero(rest));
        const Mask around = neighbors_[v] & side;
        if (around == 0) return false;
        if (k >= 3 && std::popcount(around) == 1) {
            const auto w = static_cast<Vertex>(std::countr_zero(around));
            if ((neighbors_[w] & side & ~(Mask{1} << v)) == 0) return false;
        }
    }
    return true;
}

bool mask_lex_less(Mask a, Mask b) {
    if (a == b) return false;
    const Mask diff = a ^ b;
    const int first = std::countr_zero(diff);
    const Mask above = first >= 63 ? 0 : ~((Mask{2} << first) - 1);
    // The lists agree below `first`. The one containing `first` continues with
    // it; the other continues with something larger, or ends and is a prefix.
    if ((a >> first) & 1U) return (b & above) != 0;
    return (a & above) == 0;
}

VertexSet mask_to_set(Mask m) {
    VertexSet s;
    for (; m != 0; m &= m - 1) s.push_back(static_cast<Vertex>(std::countr_zero(m)));
    return s;
}

}  // namespace detail

namespace {

void check_order(const Graph& g, int k, std::size_t ceiling) {
    if (k < 1 || k > 3) throw InvalidArgument("k must be 1, 2 or 3");
    const std::size_t limit = std::min(ceiling, kMaxBruteForceOrder);
    if (g.order() > limit) throw CeilingExceeded(g.order(), limit);
}

CutResult make_result(const Graph& g, std::uint64_t value, detail::Mask side) {
    CutResult r;
    r.value = ExtendedCount(value);
    r.witness_side = detail::mask_to_set(side);
    r.crossing_edges = boundary(g, r.witness_side);
    return r;
}

}  // namespace

CutResult lambda_k_bruteforce(const Graph& g, int k, std::size_t ceiling) {
    check_order(g, k, ceiling);
    const detail::MaskGraph mg(g);
    const detail::Mask full = mg.full();
    bool found = false;
    std::uint64_t best = 0;
    detail::Mask best_side = 0;
    mg.scan([&](detail::Mask side, std::uint64_t cut) {
        if (found && cut > best) return;
        if (found && cut == best && !detail::mask_lex_less(side, best_side)) return;
        if (!mg.components_at_least(side, k) || !mg.components_at_least(full & ~side, k)) return;
        found = true;
        best = cut;
        best_side = side;
    });
    if (!found) return CutResult{};
    return make_result(g, best, best_side);
}

std::vector<CutResult> enumerate_min_k_cuts(const Graph& g, int k, std::size_t ceiling) {
    check_order(g, k, ceiling);
    const detail::MaskGraph mg(g);
    const detail::Mask full = mg.full();
    bool found = false;
    std::uint64_t best = 0;
    std::vector<detail::Mask> sides;
    mg.scan([&](detail::Mask side, std::uint64_t cut) {
        if (found && cut > best) return;
        if (!mg.components_at_least(side, k) || !mg.components_at_least(full & ~side, k)) return;
        if (!found || cut < best) {
            sides.clear();
            found = true;
            best = cut;
        }
        sides.push_back(side);
    });
    std::sort(sides.begin(), sides.end(), detail::mask_lex_less);
    std::vector<CutResult> result;
    result.reserve(sides.size());
    for (detail::Mask side : sides) result.push_back(make_result(g, best, side));
    return result;
}

BoundaryMinimum min_boundary_over_sizes(const Graph& g, std::size_t lo, std::size_t hi, std::size_t ceiling) {
    const std::size_t n = g.order();
    if (lo < 1 || lo > hi || n == 0 || hi > n - 1) {
        throw InvalidArgument("size window [" + std::to_string(lo) + ", " + std::to_string(hi) +
                              "] must satisfy 1 <= lo <= hi <= n - 1");
    }
    check_order(g, 1, ceiling);
    const detail::MaskGraph mg(g);
    bool found = false;
    BoundaryMinimum result;
    std::vector<detail::Mask> sides;
    mg.scan([&](detail::Mask side, std::uint64_t cut) {
        if (found && cut > result.value) return;
        const auto size = static_cast<std::size_t>(std::popcount(side));
        const bool fits = (lo <= size && size <= hi) || (lo <= n - size && n - size <= hi);
        if (!fits) return;
        if (!found || cut < result.value) {
            sides.clear();
            found = true;
            result.value = cut;
        }
        sides.push_back(side);
    });
    std::sort(sides.begin(), sides.end(), detail::mask_lex_less);
    for (detail::Mask side : sides) result.achievers.push_back(detail::mask_to_set(side));
    return result;
}

}  // namespace gcut
