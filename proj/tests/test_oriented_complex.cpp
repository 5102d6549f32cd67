#include <cmath>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "varchenko/oriented_complex.hpp"

using namespace varchenko;

namespace {

SignVector sv(const char* s) { return SignVector::parse(s); }

}  // namespace

TEST(SignVector, ParseAndPrint) {
    EXPECT_EQ(sv("+-0").str(), "+-0");
    EXPECT_EQ(sv("+-0")[1], Sign::minus);
    EXPECT_THROW(SignVector::parse("+x"), std::invalid_argument);
    EXPECT_EQ((-sv("+-0")).str(), "-+0");
    EXPECT_TRUE(sv("+-").zero_free());
    EXPECT_FALSE(sv("+0").zero_free());
}

TEST(SignVector, Composition) {
    EXPECT_EQ(compose(sv("0+-0"), sv("+-+-")).str(), "++--");
    EXPECT_EQ(compose(sv("+0"), sv("00")).str(), "+0");
    EXPECT_THROW(compose(sv("+"), sv("+-")), std::invalid_argument);
}

TEST(SignVector, SeparatorZeroSetSupport) {
    EXPECT_EQ(separator_sv(sv("+-0+"), sv("-+0+")), (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(zero_set(sv("0+0-")), (std::vector<std::size_t>{0, 2}));
    EXPECT_EQ(support(sv("0+0-")), (std::vector<std::size_t>{1, 3}));
}

TEST(CovectorSet, DeduplicatesAndValidatesLengths) {
    CovectorSet l(2, {sv("+-"), sv("+-"), sv("00")});
    EXPECT_EQ(l.vectors().size(), 2u);
    EXPECT_TRUE(l.contains(sv("+-")));
    EXPECT_THROW(CovectorSet(2, {sv("+")}), std::invalid_argument);
}

TEST(Axioms, TwoPointsFailStrongElimination) {
    CovectorSet l(1, {sv("+"), sv("-")});
    const auto v = check_axioms(l);
    EXPECT_EQ(v.kind, AxiomVerdict::Kind::strong_elimination_violation);
    EXPECT_EQ(v.x.str(), "+");
    EXPECT_EQ(v.y.str(), "-");
    EXPECT_EQ(v.element, 0u);
    EXPECT_EQ(to_string(v), "SE-violation(+,-,0)");
}

TEST(Axioms, FaceSymmetryViolation) {
    const auto v = check_axioms(CovectorSet(2, {sv("0+"), sv("++")}));
    EXPECT_EQ(v.kind, AxiomVerdict::Kind::face_symmetry_violation);
}

TEST(Axioms, FullSignCubeIsASimpleCom) {
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto l = CovectorSet::full(n);
        EXPECT_EQ(l.vectors().size(), static_cast<std::size_t>(std::pow(3, n)));
        EXPECT_TRUE(check_axioms(l).is_com());
        EXPECT_TRUE(is_simple(l));
        EXPECT_EQ(topes(l).size(), std::size_t{1} << n);
        EXPECT_TRUE(is_isomorphic(tope_graph(l), hypercube(n)));
    }
}

TEST(Axioms, NonSimpleSets) {
    EXPECT_FALSE(is_simple(CovectorSet(1, {sv("+"), sv("0")})));
    // Two parallel elements: X_0 X_1 never takes the value -.
    EXPECT_FALSE(is_simple(CovectorSet(2, {sv("++"), sv("00"), sv("--")})));
}

TEST(Axioms, FourLineArrangement) {
    const auto l = testing_support::covectors_from_topes(testing_support::four_line_topes());
    EXPECT_EQ(l.vectors().size(), 25u);
    EXPECT_TRUE(check_axioms(l).is_com()) << to_string(check_axioms(l));
    EXPECT_TRUE(is_simple(l));
    EXPECT_EQ(topes(l).size(), 9u);
    for (const char* vertex : {"00++", "0-0+", "0--0", "--00"}) EXPECT_TRUE(l.contains(sv(vertex))) << vertex;
    const Graph g = tope_graph(l);
    EXPECT_EQ(g.n_edges(), 12u);
    EXPECT_TRUE(is_partial_cube(g));
}

TEST(Axioms, TreeCovectorSets) {
    for (const auto& t : testing_support::trees_up_to(6)) {
        const auto s = require_partial_cube(t);
        const auto l = testing_support::covectors_from_topes(testing_support::topes_of(s));
        EXPECT_TRUE(check_axioms(l).is_com());
        EXPECT_TRUE(is_simple(l));
        EXPECT_TRUE(is_isomorphic(tope_graph(l), t));
    }
}

TEST(Axioms, TopesAreInclusionMaximal) {
    // A single edge of the square together with its endpoints.
    const auto l = CovectorSet(2, {sv("+0"), sv("++"), sv("+-")});
    EXPECT_TRUE(check_axioms(l).is_com());
    EXPECT_EQ(topes(l).size(), 2u);
}
