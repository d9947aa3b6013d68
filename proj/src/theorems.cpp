#include "gcut/theorems.hpp"

#include <algorithm>
#include <chrono>

#include "gcut/errors.hpp"
#include "gcut/generators.hpp"
#include "gcut/product.hpp"

namespace gcut {

namespace {

using Clock = std::chrono::steady_clock;

std::string num(std::uint64_t v) { return std::to_string(v); }

void require_family_range(const PredictionInput& p, std::size_t complete_min, std::vector<std::string>& failed) {
    switch (p.family) {
        case ProductFamily::cycle:
            if (p.n < 3 || p.n % 2 == 0) failed.push_back("cycle length n = " + num(p.n) + " must be odd and >= 3");
            break;
        case ProductFamily::complete:
            if (p.n < complete_min) {
                failed.push_back("complete graph order n = " + num(p.n) + " must be >= " + num(complete_min));
            }
            break;
        case ProductFamily::total:
            if (p.n < 3) failed.push_back("total graph order n = " + num(p.n) + " must be >= 3");
            break;
    }
}

// Hypotheses shared by the lambda_3 and xi_3 closed forms.
std::vector<std::string> lambda3_preconditions(const PredictionInput& p) {
    std::vector<std::string> failed;
    if (!p.connected) failed.push_back("G must be connected");
    if (!p.regularity) {
        failed.push_back("G must be regular");
    } else if (*p.regularity < 2) {
        failed.push_back("G must be k-regular with k >= 2 (k = " + num(*p.regularity) + ")");
    }
    if (p.order < 4) failed.push_back("G must have at least 4 vertices (has " + num(p.order) + ")");
    require_family_range(p, 5, failed);
    return failed;
}

// Local term of the lambda_3 formulas; requires lambda3_preconditions.
std::uint64_t lambda3_local_term(const PredictionInput& p) {
    const std::uint64_t k = *p.regularity;
    const std::uint64_t n = p.n;
    const std::uint64_t correction = p.girth_class == GirthClass::triangle ? 6 : 4;
    switch (p.family) {
        case ProductFamily::cycle: return 6 * k - correction;
        case ProductFamily::complete: return 3 * k * (n - 1) - correction;
        case ProductFamily::total: return 3 * n * k - correction;
    }
    return 0;
}

std::uint64_t family_layer_multiplicity(ProductFamily family, std::uint64_t n) {
    switch (family) {
        case ProductFamily::cycle: return 2 * n;
        case ProductFamily::complete: return n * (n - 1);
        case ProductFamily::total: return n * n;
    }
    return 0;
}

bool is_k2(const Graph& g) { return g.order() == 2 && g.is_simple() && g.edge_count() == 1; }

int level_k(Level which) { return which == Level::lambda2 ? 2 : 3; }

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

ProductFamily parse_product_family(std::string_view tag) {
    if (tag == "cycle") return ProductFamily::cycle;
    if (tag == "complete") return ProductFamily::complete;
    if (tag == "total") return ProductFamily::total;
    throw InvalidArgument("product family must be cycle, complete or total, got '" + std::string(tag) + "'");
}

std::string_view to_string(ProductFamily f) {
    switch (f) {
        case ProductFamily::cycle: return "cycle";
        case ProductFamily::complete: return "complete";
        case ProductFamily::total: return "total";
    }
    return "?";
}

std::string_view to_string(GirthClass g) { return g == GirthClass::triangle ? "g=3" : "g>=4"; }

std::string_view to_string(Level l) { return l == Level::lambda2 ? "lambda2" : "lambda3"; }

std::string_view to_string(Method m) {
    switch (m) {
        case Method::flow: return "flow";
        case Method::brute: return "brute";
        case Method::both: return "both";
    }
    return "?";
}

Level parse_level(std::string_view tag) {
    if (tag == "lambda2") return Level::lambda2;
    if (tag == "lambda3") return Level::lambda3;
    throw InvalidArgument("level must be lambda2 or lambda3, got '" + std::string(tag) + "'");
}

Method parse_method(std::string_view tag) {
    if (tag == "flow") return Method::flow;
    if (tag == "brute") return Method::brute;
    if (tag == "both") return Method::both;
    throw InvalidArgument("method must be flow, brute or both, got '" + std::string(tag) + "'");
}

Graph family_graph(ProductFamily family, std::size_t n) {
    switch (family) {
        case ProductFamily::cycle: return cycle_graph(n);
        case ProductFamily::complete: return complete_graph(n);
        case ProductFamily::total: return total_graph(n);
    }
    throw InvalidArgument("unknown product family");
}

PredictionInput make_prediction_input(const Graph& g, ProductFamily family, std::size_t n) {
    PredictionInput p;
    p.family = family;
    p.n = n;
    p.order = g.order();
    p.connected = g.order() > 0 && is_connected(g);
    if (g.order() > 0) {
        const DegreeStats stats = degree_stats(g);
        p.regularity = stats.regularity;
        p.max_degree = stats.max_degree;
    }
    p.girth = girth(g);
    p.girth_class = p.girth == ExtendedCount(3) ? GirthClass::triangle : GirthClass::at_least_four;
    p.lambda2 = lambda_k(g, 2).value;
    p.xi = xi(g);
    p.min_edge_degree_sum = min_edge_degree_sum(g);
    return p;
}

Prediction predict_lambda2_product(const PredictionInput& p) {
    Prediction r;
    if (!p.connected || p.order < 2) r.failed_preconditions.push_back("G must be connected and nontrivial");
    const std::uint64_t n = p.n;
    switch (p.family) {
        case ProductFamily::complete:
        case ProductFamily::total:
            if (n < 3) r.failed_preconditions.push_back("n = " + num(n) + " must be >= 3");
            break;
        case ProductFamily::cycle:
            if (n < 3 || n % 2 == 0) r.failed_preconditions.push_back("cycle length n = " + num(n) + " must be odd and >= 3");
            if (!(p.order <= n || p.max_degree + 1 <= n)) {
                r.failed_preconditions.push_back("needs |V(G)| <= n or Delta(G) <= n - 1");
            }
            break;
    }
    if (!r.applicable()) return r;

    r.layer_term = p.lambda2 * family_layer_multiplicity(p.family, n);
    switch (p.family) {
        case ProductFamily::complete: r.local_term = p.xi * (n - 1) + ExtendedCount(2 * (n - 2)); break;
        case ProductFamily::total: r.local_term = p.xi * n + ExtendedCount(2 * (n - 1)); break;
        case ProductFamily::cycle:
            r.local_term = p.min_edge_degree_sum.is_finite()
                               ? ExtendedCount(2 * p.min_edge_degree_sum.value() - 2)
                               : ExtendedCount::infinity();
            break;
    }
    r.value = std::min(r.layer_term, r.local_term);
    return r;
}

Prediction predict_lambda3_product(const PredictionInput& p) {
    Prediction r;
    r.failed_preconditions = lambda3_preconditions(p);
    if (!r.applicable()) return r;
    r.layer_term = p.lambda2 * family_layer_multiplicity(p.family, p.n);
    r.local_term = ExtendedCount(lambda3_local_term(p));
    r.value = std::min(r.layer_term, r.local_term);
    return r;
}

Prediction predict_xi3_product(const PredictionInput& p) {
    Prediction r;
    r.failed_preconditions = lambda3_preconditions(p);
    if (!r.applicable()) return r;
    r.local_term = ExtendedCount(lambda3_local_term(p));
    r.value = r.local_term;
    return r;
}

ExtendedCount layer_separation_bound(const Graph& g, const Graph& h) {
    return lambda_k(g, 2).value * inter_layer_multiplicity(h);
}

std::optional<ExtendedCount> k2_product_value(ProductFamily family, std::size_t n, int k) {
    if (k < 1 || k > 3) return std::nullopt;
    const std::uint64_t kk = static_cast<std::uint64_t>(k);
    switch (family) {
        case ProductFamily::cycle:
            if (n < 3 || n % 2 == 0) return std::nullopt;
            return ExtendedCount(2);
        case ProductFamily::complete:
            if (n < 5) return std::nullopt;
            return ExtendedCount(kk * n - (kk == 1 ? 1 : kk == 2 ? 4 : 7));
        case ProductFamily::total:
            if (n < 5) return std::nullopt;
            return ExtendedCount(kk * n - (kk == 1 ? 0 : kk == 2 ? 2 : 4));
    }
    return std::nullopt;
}

TheoremVerdict verify(const Graph& g, ProductFamily family, std::size_t n, Level which, Method method,
                      const VerifyOptions& options) {
    const auto start = Clock::now();
    TheoremVerdict v;
    v.graph_name = options.graph_name;
    v.family = family;
    v.n = n;
    v.which = which;
    v.method = method;
    v.input = make_prediction_input(g, family, n);
    v.prediction = which == Level::lambda2 ? predict_lambda2_product(v.input) : predict_lambda3_product(v.input);

    const ProductGraph product = direct_product(g, family_graph(family, n));
    const Graph& pg = product.graph();
    const int k = level_k(which);
    if (method != Method::flow) {
        const std::size_t limit = std::min(options.ceiling, kMaxBruteForceOrder);
        if (pg.order() > limit) throw CeilingExceeded(pg.order(), limit);
    }
    if (method != Method::brute) {
        CutResult flow = lambda_k(pg, k);
        v.flow_value = flow.value;
        v.witness = std::move(flow);
    }
    if (method != Method::flow) {
        CutResult brute = lambda_k_bruteforce(pg, k, options.ceiling);
        v.brute_value = brute.value;
        v.witness = std::move(brute);
    }
    v.computed = v.flow_value ? *v.flow_value : *v.brute_value;
    v.methods_agree = !(v.flow_value && v.brute_value) || *v.flow_value == *v.brute_value;
    if (which == Level::lambda3) v.product_xi3 = xi3(pg);
    if (is_k2(g)) v.reference = k2_product_value(family, n, k);
    v.match = v.preconditions_met() && v.methods_agree && v.prediction.value == v.computed;
    v.runtime_ms = elapsed_ms(start);
    return v;
}

TheoremVerdict check_corollary_maximality(const Graph& g, ProductFamily family, std::size_t n, Method method,
                                          const VerifyOptions& options) {
    const auto start = Clock::now();
    TheoremVerdict v = verify(g, family, n, Level::lambda3, method, options);
    if (v.input.lambda2 != v.input.xi) {
        v.prediction.failed_preconditions.push_back("G must be maximally restricted edge-connected (lambda_2 = " +
                                                    v.input.lambda2.to_string() +
                                                    ", xi = " + v.input.xi.to_string() + ")");
    }
    v.prediction.value = *v.product_xi3;
    v.match = v.preconditions_met() && v.methods_agree && v.computed == *v.product_xi3;
    v.runtime_ms = elapsed_ms(start);
    return v;
}

}  // namespace gcut
