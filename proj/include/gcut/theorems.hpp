#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gcut/connectivity.hpp"
#include "gcut/extended_count.hpp"
#include "gcut/graph.hpp"

namespace gcut {

/// Second factor families with closed-form connectivity results.
enum class ProductFamily { cycle, complete, total };

/// Whether the first factor contains a triangle (g = 3) or not (g >= 4,
/// including forests).
enum class GirthClass { triangle, at_least_four };

enum class Level { lambda2, lambda3 };

enum class Method { flow, brute, both };

ProductFamily parse_product_family(std::string_view tag);
std::string_view to_string(ProductFamily f);
std::string_view to_string(GirthClass g);
std::string_view to_string(Level l);
std::string_view to_string(Method m);
Level parse_level(std::string_view tag);
Method parse_method(std::string_view tag);

/// The second factor: C_n, K_n or T_n.
Graph family_graph(ProductFamily family, std::size_t n);

/// Everything the closed forms read off the first factor G. Always derived
/// from a Graph; the girth class in particular is computed, never supplied.
struct PredictionInput {
    ProductFamily family = ProductFamily::cycle;
    std::size_t n = 0;

    std::size_t order = 0;
    bool connected = false;
    std::optional<std::uint64_t> regularity;  // k, when G is regular
    std::uint64_t max_degree = 0;
    ExtendedCount girth = ExtendedCount::infinity();
    GirthClass girth_class = GirthClass::at_least_four;
    ExtendedCount lambda2 = ExtendedCount::infinity();
    ExtendedCount xi = ExtendedCount::infinity();
    ExtendedCount min_edge_degree_sum = ExtendedCount::infinity();
};

/// lambda_2(G) is computed with the flow method.
PredictionInput make_prediction_input(const Graph& g, ProductFamily family, std::size_t n);

/// A closed-form value, or the list of hypotheses that fail. `layer_term` is
/// the m(H) * lambda_2(G) argument of the minimum and `local_term` the other
/// one; value = min(layer_term, local_term).
struct Prediction {
    ExtendedCount value = ExtendedCount::infinity();
    ExtendedCount layer_term = ExtendedCount::infinity();
    ExtendedCount local_term = ExtendedCount::infinity();
    std::vector<std::string> failed_preconditions;

    bool applicable() const { return failed_preconditions.empty(); }
};

/// lambda_2(G x H):
///   K_n: min{(n-1) xi(G) + 2(n-2), n(n-1) lambda_2(G)}, n >= 3
///   T_n: min{n xi(G) + 2(n-1), n^2 lambda_2(G)}, n >= 3
///   C_n: min{2n lambda_2(G), min_{xy} 2(d(x)+d(y)) - 2}, n odd >= 3 and
///        (|V(G)| <= n or Delta(G) <= n-1)
/// G must be connected with at least two vertices.
Prediction predict_lambda2_product(const PredictionInput& p);

/// lambda_3(G x H) for k-regular connected G, k >= 2, |V(G)| >= 4:
///   C_n (n odd >= 3): min{2n lambda_2(G), 6k - 6 | 6k - 4}
///   K_n (n >= 5):     min{n(n-1) lambda_2(G), 3k(n-1) - 6 | 3k(n-1) - 4}
///   T_n (n >= 3):     min{n^2 lambda_2(G), 3nk - 6 | 3nk - 4}
/// choosing -6 when G has a triangle and -4 otherwise.
Prediction predict_lambda3_product(const PredictionInput& p);

/// The local (second) term of predict_lambda3_product alone, under the same
/// hypotheses.
Prediction predict_xi3_product(const PredictionInput& p);

/// inter_layer_multiplicity(H) * lambda_2(G): the lower bound on a minimum
/// 3-restricted cut of G x H that leaves the layers over two non-adjacent
/// G-edges on opposite sides. Infinite when lambda_2(G) is.
ExtendedCount layer_separation_bound(const Graph& g, const Graph& h);

/// Known values for K_2 x H: lambda, lambda_2, lambda_3 of K_2 x C_n (n odd
/// >= 3) are 2, 2, 2; of K_2 x K_n (n >= 5) n-1, 2n-4, 3n-7; of K_2 x T_n
/// (n >= 5) n, 2n-2, 3n-4. Empty outside those ranges. k in 1..3.
std::optional<ExtendedCount> k2_product_value(ProductFamily family, std::size_t n, int k);

struct VerifyOptions {
    std::string graph_name = "G";
    std::size_t ceiling = kDefaultBruteForceCeiling;
};

/// A computed connectivity next to its closed-form prediction. `match` is only
/// ever true when every precondition holds.
struct TheoremVerdict {
    std::string graph_name;
    ProductFamily family = ProductFamily::cycle;
    std::size_t n = 0;
    Level which = Level::lambda3;
    Method method = Method::flow;

    PredictionInput input;
    Prediction prediction;

    ExtendedCount computed = ExtendedCount::infinity();
    std::optional<ExtendedCount> flow_value;
    std::optional<ExtendedCount> brute_value;
    bool methods_agree = true;

    /// xi_3 of the product, computed (lambda_3 verdicts only).
    std::optional<ExtendedCount> product_xi3;
    /// The K_2 x H value, when G is K_2 and it is defined.
    std::optional<ExtendedCount> reference;

    CutResult witness;
    bool match = false;
    double runtime_ms = 0.0;

    bool preconditions_met() const { return prediction.applicable(); }
};

/// Builds G x H, computes lambda_2 or lambda_3 with the requested method(s),
/// evaluates the prediction and compares. Throws CeilingExceeded when a
/// brute-force run is requested on a product above the ceiling.
TheoremVerdict verify(const Graph& g, ProductFamily family, std::size_t n, Level which, Method method,
                      const VerifyOptions& options = {});

/// For maximally restricted edge-connected k-regular G (k >= 2, |V(G)| >= 4)
/// and admissible n: computes lambda_3 and xi_3 of G x H and compares them.
/// The verdict's prediction.value holds the computed xi_3.
TheoremVerdict check_corollary_maximality(const Graph& g, ProductFamily family, std::size_t n, Method method,
                                          const VerifyOptions& options = {});

}  // namespace gcut
