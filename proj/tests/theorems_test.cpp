#include <gtest/gtest.h>

#include "gcut/errors.hpp"
#include "gcut/generators.hpp"
#include "gcut/product.hpp"
#include "gcut/theorems.hpp"
#include "support/naive_oracle.hpp"

namespace gcut {
namespace {

PredictionInput input(const Graph& g, ProductFamily f, std::size_t n) { return make_prediction_input(g, f, n); }

TEST(PredictionInput, DerivedFromGraph) {
    auto p = input(complete_graph(4), ProductFamily::complete, 5);
    EXPECT_EQ(p.order, 4u);
    EXPECT_TRUE(p.connected);
    EXPECT_EQ(p.regularity, std::optional<std::uint64_t>(3));
    EXPECT_EQ(p.girth_class, GirthClass::triangle);
    EXPECT_EQ(p.lambda2, ExtendedCount(4));
    EXPECT_EQ(p.xi, ExtendedCount(4));
    EXPECT_EQ(p.min_edge_degree_sum, ExtendedCount(6));

    auto q = input(petersen_graph(), ProductFamily::cycle, 3);
    EXPECT_EQ(q.girth, ExtendedCount(5));
    EXPECT_EQ(q.girth_class, GirthClass::at_least_four);
    // Trees have infinite girth and sit in the triangle-free class.
    EXPECT_EQ(input(path_graph(5), ProductFamily::cycle, 3).girth_class, GirthClass::at_least_four);
}

TEST(PredictLambda2, Examples) {
    auto a = predict_lambda2_product(input(complete_graph(4), ProductFamily::complete, 3));
    ASSERT_TRUE(a.applicable());
    EXPECT_EQ(a.value, ExtendedCount(10));
    EXPECT_EQ(a.layer_term, ExtendedCount(24));

    auto b = predict_lambda2_product(input(cycle_graph(4), ProductFamily::total, 3));
    ASSERT_TRUE(b.applicable());
    EXPECT_EQ(b.value, ExtendedCount(10));
    EXPECT_EQ(b.layer_term, ExtendedCount(18));

    auto c = predict_lambda2_product(input(complete_graph(4), ProductFamily::cycle, 5));
    ASSERT_TRUE(c.applicable());
    EXPECT_EQ(c.value, ExtendedCount(10));
    EXPECT_EQ(c.layer_term, ExtendedCount(40));
}

TEST(PredictLambda2, CycleWindowAndParity) {
    // Petersen has 10 vertices and degree 3, so n = 3 misses both clauses.
    auto out = predict_lambda2_product(input(petersen_graph(), ProductFamily::cycle, 3));
    EXPECT_FALSE(out.applicable());
    EXPECT_TRUE(predict_lambda2_product(input(petersen_graph(), ProductFamily::cycle, 5)).applicable());
    EXPECT_FALSE(predict_lambda2_product(input(complete_graph(4), ProductFamily::cycle, 4)).applicable());
    EXPECT_FALSE(predict_lambda2_product(input(complete_graph(4), ProductFamily::complete, 2)).applicable());
}

TEST(PredictLambda2, InfiniteLambda2DropsLayerTerm) {
    // A star has no restricted cut; the minimum falls back to the local term.
    auto p = predict_lambda2_product(input(star_graph(3), ProductFamily::complete, 4));
    ASSERT_TRUE(p.applicable());
    EXPECT_TRUE(p.layer_term.is_infinite());
    EXPECT_EQ(p.value, p.local_term);
}

TEST(PredictLambda3, Examples) {
    auto a = predict_lambda3_product(input(complete_graph(4), ProductFamily::complete, 5));
    ASSERT_TRUE(a.applicable());
    EXPECT_EQ(a.layer_term, ExtendedCount(80));
    EXPECT_EQ(a.value, ExtendedCount(30));

    auto b = predict_lambda3_product(input(cycle_graph(4), ProductFamily::cycle, 3));
    ASSERT_TRUE(b.applicable());
    EXPECT_EQ(b.layer_term, ExtendedCount(12));
    EXPECT_EQ(b.value, ExtendedCount(8));

    auto c = predict_lambda3_product(input(cycle_graph(4), ProductFamily::total, 3));
    ASSERT_TRUE(c.applicable());
    EXPECT_EQ(c.layer_term, ExtendedCount(18));
    EXPECT_EQ(c.value, ExtendedCount(14));
}

TEST(PredictLambda3, ItemizedFailures) {
    auto k2 = predict_lambda3_product(input(complete_graph(2), ProductFamily::complete, 5));
    EXPECT_FALSE(k2.applicable());
    EXPECT_EQ(k2.failed_preconditions.size(), 2u);  // k = 1 and |V| = 2

    auto even = predict_lambda3_product(input(cycle_graph(4), ProductFamily::cycle, 4));
    ASSERT_EQ(even.failed_preconditions.size(), 1u);
    EXPECT_NE(even.failed_preconditions[0].find("odd"), std::string::npos);

    EXPECT_FALSE(predict_lambda3_product(input(complete_graph(4), ProductFamily::complete, 4)).applicable());
    EXPECT_FALSE(predict_lambda3_product(input(path_graph(5), ProductFamily::total, 3)).applicable());
}

TEST(PredictXi3, Examples) {
    for (std::size_t n : {3, 5, 7, 9}) {
        auto p = predict_xi3_product(input(complete_graph(4), ProductFamily::cycle, n));
        ASSERT_TRUE(p.applicable());
        EXPECT_EQ(p.value, ExtendedCount(12));
    }
    EXPECT_EQ(predict_xi3_product(input(cycle_graph(4), ProductFamily::complete, 5)).value, ExtendedCount(20));
    EXPECT_EQ(predict_xi3_product(input(petersen_graph(), ProductFamily::cycle, 3)).value, ExtendedCount(14));
}

TEST(LayerSeparationBound, Examples) {
    EXPECT_EQ(layer_separation_bound(complete_graph(4), cycle_graph(5)), ExtendedCount(40));
    EXPECT_EQ(layer_separation_bound(cycle_graph(4), complete_graph(5)), ExtendedCount(40));
    EXPECT_EQ(layer_separation_bound(cycle_graph(4), total_graph(3)), ExtendedCount(18));
    EXPECT_TRUE(layer_separation_bound(star_graph(4), cycle_graph(3)).is_infinite());
}

TEST(K2Reference, Table) {
    EXPECT_EQ(k2_product_value(ProductFamily::complete, 5, 3), ExtendedCount(8));
    EXPECT_EQ(k2_product_value(ProductFamily::complete, 6, 2), ExtendedCount(8));
    EXPECT_EQ(k2_product_value(ProductFamily::total, 5, 2), ExtendedCount(8));
    EXPECT_EQ(k2_product_value(ProductFamily::cycle, 7, 3), ExtendedCount(2));
    EXPECT_FALSE(k2_product_value(ProductFamily::total, 4, 3).has_value());
    EXPECT_FALSE(k2_product_value(ProductFamily::cycle, 4, 1).has_value());
}

// The T_n row below n = 5 is only reported; the values come from the oracle.
TEST(K2Reference, SmallTotalGraphsReported) {
    for (std::size_t n : {3, 4}) {
        Graph g = direct_product(complete_graph(2), total_graph(n)).graph();
        auto l2 = testing::naive_lambda_k(g, 2);
        ASSERT_TRUE(l2.has_value());
        EXPECT_EQ(lambda_k(g, 2).value, ExtendedCount(l2->value));
        auto l3 = testing::naive_lambda_k(g, 3);
        EXPECT_EQ(lambda_k(g, 3).value, l3 ? ExtendedCount(l3->value) : ExtendedCount::infinity());
    }
}

TEST(Verify, CompleteFiveBothMethods) {
    auto v = verify(complete_graph(4), ProductFamily::complete, 5, Level::lambda3, Method::both);
    EXPECT_TRUE(v.preconditions_met());
    EXPECT_EQ(v.computed, ExtendedCount(30));
    EXPECT_EQ(v.prediction.value, ExtendedCount(30));
    EXPECT_TRUE(v.methods_agree);
    EXPECT_TRUE(v.match);
    EXPECT_EQ(v.product_xi3, ExtendedCount(30));
    EXPECT_EQ(boundary_size(direct_product(complete_graph(4), complete_graph(5)).graph(), v.witness.witness_side),
              30u);
}

TEST(Verify, FrozenCycleValueMatchesOracle) {
    Graph product = direct_product(cycle_graph(4), cycle_graph(3)).graph();
    auto naive = testing::naive_lambda_k(product, 3);
    ASSERT_TRUE(naive.has_value());
    EXPECT_EQ(naive->value, 8u);

    auto v = verify(cycle_graph(4), ProductFamily::cycle, 3, Level::lambda3, Method::both);
    EXPECT_EQ(v.computed, ExtendedCount(8));
    EXPECT_EQ(v.prediction.value, ExtendedCount(8));
    EXPECT_TRUE(v.match);
}

TEST(Verify, K2ReportsReferenceWithoutMatch) {
    auto v = verify(complete_graph(2), ProductFamily::complete, 5, Level::lambda3, Method::brute);
    EXPECT_FALSE(v.preconditions_met());
    EXPECT_FALSE(v.match);
    EXPECT_EQ(v.computed, ExtendedCount(8));
    EXPECT_EQ(v.reference, ExtendedCount(8));
}

TEST(Verify, Lambda2Level) {
    auto v = verify(cycle_graph(4), ProductFamily::total, 3, Level::lambda2, Method::both);
    EXPECT_EQ(v.computed, ExtendedCount(10));
    EXPECT_TRUE(v.match);
    EXPECT_FALSE(v.product_xi3.has_value());
}

TEST(Verify, BruteRefusedAboveCeiling) {
    EXPECT_THROW(verify(petersen_graph(), ProductFamily::cycle, 3, Level::lambda3, Method::brute), CeilingExceeded);
    VerifyOptions small;
    small.ceiling = 10;
    EXPECT_THROW(verify(cycle_graph(4), ProductFamily::cycle, 3, Level::lambda3, Method::both, small),
                 CeilingExceeded);
}

TEST(Corollary, Examples) {
    auto a = check_corollary_maximality(cycle_graph(4), ProductFamily::cycle, 3, Method::both);
    EXPECT_TRUE(a.preconditions_met());
    EXPECT_EQ(a.computed, ExtendedCount(8));
    EXPECT_EQ(a.prediction.value, ExtendedCount(8));
    EXPECT_TRUE(a.match);

    auto b = check_corollary_maximality(complete_graph(4), ProductFamily::total, 3, Method::both);
    EXPECT_EQ(b.computed, ExtendedCount(21));
    EXPECT_EQ(b.product_xi3, ExtendedCount(21));
    EXPECT_TRUE(b.match);

    auto c = check_corollary_maximality(complete_graph(4), ProductFamily::complete, 5, Method::flow);
    EXPECT_EQ(c.computed, ExtendedCount(30));
    EXPECT_TRUE(c.match);
}

TEST(Corollary, RequiresMaximallyRestrictedFactor) {
    // Irregular first factor.
    auto v = check_corollary_maximality(complete_bipartite_graph(1, 3), ProductFamily::cycle, 3, Method::flow);
    EXPECT_FALSE(v.preconditions_met());
    EXPECT_FALSE(v.match);
}

struct Case {
    const char* name;
    Graph g;
    ProductFamily family;
    std::size_t n;
};

std::vector<Case> acceptance_products() {
    return {{"K4", complete_graph(4), ProductFamily::cycle, 3},   {"C4", cycle_graph(4), ProductFamily::cycle, 3},
            {"C5", cycle_graph(5), ProductFamily::cycle, 3},      {"K4", complete_graph(4), ProductFamily::cycle, 5},
            {"K4", complete_graph(4), ProductFamily::complete, 5}, {"C4", cycle_graph(4), ProductFamily::complete, 5},
            {"K4", complete_graph(4), ProductFamily::total, 3},   {"C4", cycle_graph(4), ProductFamily::total, 3},
            {"C5", cycle_graph(5), ProductFamily::total, 3}};
}

TEST(Laws, PredictionIsMinimumOfItsArguments) {
    for (const auto& c : acceptance_products()) {
        auto p = predict_lambda3_product(input(c.g, c.family, c.n));
        auto x = predict_xi3_product(input(c.g, c.family, c.n));
        ASSERT_TRUE(p.applicable()) << c.name;
        EXPECT_LE(p.value, p.layer_term);
        EXPECT_LE(p.value, p.local_term);
        EXPECT_EQ(p.local_term, x.value);
        if (x.value <= p.layer_term) EXPECT_EQ(p.value, x.value);
    }
}

TEST(Laws, ComputedLambda3BoundedByXi3AndLayerTerm) {
    for (const auto& c : acceptance_products()) {
        auto v = verify(c.g, c.family, c.n, Level::lambda3, Method::flow);
        ASSERT_TRUE(v.product_xi3.has_value());
        EXPECT_LE(v.computed, *v.product_xi3) << c.name;
        EXPECT_LE(v.computed, v.prediction.layer_term) << c.name;
    }
}

// Computed xi_3 of the product against the closed form. K4 x C5 is the one
// acceptance product where they differ: for n >= 5 the product has no
// triangle even though K4 does, and its xi_3 is 14 rather than 6k - 6 = 12.
TEST(Laws, Xi3OfProductAgainstClosedForm) {
    for (const auto& c : acceptance_products()) {
        auto v = verify(c.g, c.family, c.n, Level::lambda3, Method::flow);
        auto x = predict_xi3_product(input(c.g, c.family, c.n));
        const bool k4_c5 = std::string(c.name) == "K4" && c.family == ProductFamily::cycle && c.n == 5;
        if (k4_c5) {
            EXPECT_EQ(*v.product_xi3, ExtendedCount(14));
            EXPECT_EQ(x.value, ExtendedCount(12));
        } else {
            EXPECT_EQ(*v.product_xi3, x.value) << c.name << " n=" << c.n;
        }
    }
}

TEST(Parsing, Tags) {
    EXPECT_EQ(parse_product_family("total"), ProductFamily::total);
    EXPECT_EQ(parse_level("lambda2"), Level::lambda2);
    EXPECT_EQ(parse_method("both"), Method::both);
    EXPECT_THROW(parse_product_family("wheel"), InvalidArgument);
    EXPECT_THROW(parse_level("lambda4"), InvalidArgument);
    EXPECT_EQ(to_string(GirthClass::triangle), "g=3");
    EXPECT_EQ(to_string(GirthClass::at_least_four), "g>=4");
}

}  // namespace
}  // namespace gcut
