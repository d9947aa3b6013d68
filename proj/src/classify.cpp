#include <algorithm>

#include "gcut/connectivity.hpp"

namespace gcut {

namespace {

ClassificationFlag not_applicable(std::string reason) {
    return ClassificationFlag{Verdict::not_applicable, std::move(reason)};
}

ClassificationFlag compare(ExtendedCount lambda, ExtendedCount bound, const char* lambda_name,
                           const char* bound_name) {
    if (lambda.is_infinite()) return not_applicable(std::string(lambda_name) + " is infinite");
    if (bound.is_infinite()) return not_applicable(std::string(bound_name) + " is infinite");
    return ClassificationFlag{lambda == bound ? Verdict::yes : Verdict::no, {}};
}

// Every minimum cut has a side of exactly k vertices. Valid k-restricted
// sides of order k are connected, so this is "isolates a vertex / an edge /
// an order-3 component".
ClassificationFlag isolates(const Graph& g, int k, ExtendedCount lambda, std::size_t ceiling) {
    if (lambda.is_infinite()) return not_applicable("lambda_" + std::to_string(k) + " is infinite");
    if (g.order() > std::min(ceiling, kMaxBruteForceOrder)) {
        return not_applicable("order " + std::to_string(g.order()) + " exceeds the brute-force ceiling");
    }
    const auto kk = static_cast<std::size_t>(k);
    for (const CutResult& cut : enumerate_min_k_cuts(g, k, ceiling)) {
        const std::size_t side = cut.witness_side.size();
        if (side != kk && g.order() - side != kk) return ClassificationFlag{Verdict::no, {}};
    }
    return ClassificationFlag{Verdict::yes, {}};
}

}  // namespace

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        case Verdict::not_applicable: return "n/a";
    }
    return "n/a";
}

ClassificationReport classify(const Graph& g, std::size_t ceiling) {
    ClassificationReport r;
    if (g.order() < 2) {
        auto na = not_applicable("graph has fewer than two vertices");
        return ClassificationReport{na, na, na, na, na, na};
    }
    const ExtendedCount lambda1 = lambda_k(g, 1).value;
    const ExtendedCount lambda2 = lambda_k(g, 2).value;
    const ExtendedCount lambda3 = lambda_k(g, 3).value;

    r.maximally_edge_connected = compare(lambda1, ExtendedCount(degree_stats(g).min_degree), "lambda", "delta");
    r.maximally_restricted = compare(lambda2, xi(g), "lambda_2", "xi");
    r.maximally_3_restricted = compare(lambda3, xi3(g), "lambda_3", "xi_3");
    r.super_edge_connected = isolates(g, 1, lambda1, ceiling);
    r.super_restricted = isolates(g, 2, lambda2, ceiling);
    r.super_3_restricted = isolates(g, 3, lambda3, ceiling);
    return r;
}

}  // namespace gcut
