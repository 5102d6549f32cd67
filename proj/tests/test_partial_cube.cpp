#include <gtest/gtest.h>

#include "test_support.hpp"
#include "varchenko/partial_cube.hpp"

using namespace varchenko;

namespace {

RecognitionFailure::Reason failure_reason(const Graph& g) {
    auto r = build_structure(g);
    EXPECT_TRUE(std::holds_alternative<RecognitionFailure>(r));
    return std::get<RecognitionFailure>(r).reason;
}

}  // namespace

TEST(PartialCube, HypercubeHasOneClassPerCoordinate) {
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto s = require_partial_cube(hypercube(n));
        EXPECT_EQ(s.n_classes(), n);
        for (ClassIndex c = 0; c < n; ++c) {
            EXPECT_EQ(s.class_edges(c).size(), std::size_t{1} << (n - 1));
            EXPECT_EQ(s.minus_side(c).size(), s.plus_side(c).size());
        }
    }
}

TEST(PartialCube, TreesHaveOneClassPerEdge) {
    for (const auto& t : testing_support::trees_up_to(6)) {
        const auto s = require_partial_cube(t);
        EXPECT_EQ(s.n_classes(), t.n_edges());
    }
}

TEST(PartialCube, EvenCycleClasses) {
    const auto s = require_partial_cube(cycle_graph(6));
    EXPECT_EQ(s.n_classes(), 3u);
    for (ClassIndex c = 0; c < 3; ++c) EXPECT_EQ(s.class_edges(c).size(), 2u);
}

TEST(PartialCube, ClassesAreNumberedBySmallestEdge) {
    const auto s = require_partial_cube(forbidden_minor(ForbiddenKind::minus_minus, 4, 2));
    for (ClassIndex c = 1; c < s.n_classes(); ++c) EXPECT_LT(s.class_edges(c - 1).front(), s.class_edges(c).front());
}

TEST(PartialCube, MinusSideHoldsVertexZero) {
    const auto s = require_partial_cube(forbidden_minor(ForbiddenKind::minus_star, 4));
    for (ClassIndex c = 0; c < s.n_classes(); ++c) {
        EXPECT_EQ(s.minus_side(c).front(), 0u);
        EXPECT_EQ(s.minus_side(c).size() + s.plus_side(c).size(), s.n_vertices());
        EXPECT_FALSE(s.bit(0, c));
    }
}

TEST(PartialCube, LabelsAreIsometric) {
    const Graph g = forbidden_minor(ForbiddenKind::minus_minus, 4, 3);
    const auto s = require_partial_cube(g);
    const auto d = distances(g);
    for (Vertex u = 0; u < g.n_vertices(); ++u)
        for (Vertex v = 0; v < g.n_vertices(); ++v) EXPECT_EQ(s.separator(u, v).size(), d(u, v));
}

TEST(PartialCube, SeparatorOfAnEdgeIsItsClass) {
    const auto s = require_partial_cube(hypercube(3));
    for (auto [u, v] : s.graph().edges()) {
        ASSERT_EQ(separator(s, u, v).size(), 1u);
        EXPECT_EQ(separator(s, u, v).front(), s.class_of(u, v));
    }
    EXPECT_TRUE(separator(s, 5, 5).empty());
    EXPECT_EQ(separator(s, 0, 7), (Separator{0, 1, 2}));
}

TEST(PartialCube, DwClassesPartitionEdges) {
    const Graph g = forbidden_minor(ForbiddenKind::minus_minus, 4, 1);
    std::size_t total = 0;
    for (const auto& cls : dw_classes(g)) total += cls.size();
    EXPECT_EQ(total, g.n_edges());
    EXPECT_EQ(dw_classes(g).size(), 4u);
}

TEST(PartialCube, DwClassesRejectOddCycles) { EXPECT_THROW(dw_classes(cycle_graph(5)), std::invalid_argument); }

TEST(PartialCube, FailureReasons) {
    using Reason = RecognitionFailure::Reason;
    EXPECT_EQ(failure_reason(Graph()), Reason::empty);
    EXPECT_EQ(failure_reason(Graph(3, {{0, 1}})), Reason::not_connected);
    EXPECT_EQ(failure_reason(cycle_graph(3)), Reason::not_bipartite);
    // K_{2,3} is bipartite but theta is not transitive.
    EXPECT_EQ(failure_reason(Graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}})), Reason::theta_not_transitive);
    EXPECT_EQ(to_string(Reason::not_bipartite), "not bipartite");
}

TEST(PartialCube, RequireThrowsStructuredFailure) {
    try {
        require_partial_cube(cycle_graph(5));
        FAIL() << "expected NotAPartialCube";
    } catch (const NotAPartialCube& e) {
        EXPECT_EQ(e.failure().reason, RecognitionFailure::Reason::not_bipartite);
    }
    EXPECT_FALSE(is_partial_cube(Graph(4, {{0, 1}, {2, 3}})));
    EXPECT_TRUE(is_partial_cube(Graph(1, {})));
}

TEST(PartialCube, ForbiddenMinorsArePartialCubes) {
    for (const auto& [id, g] : forbidden_family(5)) {
        const auto s = require_partial_cube(g);
        EXPECT_EQ(s.n_classes(), id.n) << to_string(id);
    }
}
