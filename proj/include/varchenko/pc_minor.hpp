#pragma once

// pc-minors: halfspace restriction, colour-class contraction, closure
// enumeration, and COM tope-graph recognition by forbidden-minor search.

#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "varchenko/graph.hpp"
#include "varchenko/partial_cube.hpp"

namespace varchenko {

enum class Side { minus, plus };

struct MinorOp {
    enum class Kind { restrict_plus, restrict_minus, contract };
    Kind kind;
    ClassIndex class_index;

    friend bool operator==(const MinorOp&, const MinorOp&) = default;
};

inline std::string to_string(const MinorOp& op) {
    switch (op.kind) {
        case MinorOp::Kind::restrict_plus: return "restrict+(" + std::to_string(op.class_index) + ")";
        case MinorOp::Kind::restrict_minus: return "restrict-(" + std::to_string(op.class_index) + ")";
        case MinorOp::Kind::contract: return "contract(" + std::to_string(op.class_index) + ")";
    }
    return "?";
}

// A minor together with where each original vertex went (SIZE_MAX if deleted).
struct MinorGraph {
    Graph graph;
    std::vector<Vertex> vertex_map;
};

inline MinorGraph restrict_mapped(const PartialCubeStructure& s, ClassIndex c, Side side) {
    if (c >= s.n_classes()) throw std::out_of_range("class index out of range");
    const auto& keep = side == Side::plus ? s.plus_side(c) : s.minus_side(c);
    MinorGraph out{s.graph().induced(keep), std::vector<Vertex>(s.n_vertices(), SIZE_MAX)};
    for (std::size_t i = 0; i < keep.size(); ++i) out.vertex_map[keep[i]] = i;
    return out;
}

inline Graph restrict(const PartialCubeStructure& s, ClassIndex c, Side side) { return restrict_mapped(s, c, side).graph; }

// Identifies the endpoints of every class-c edge. Quotient vertices are
// numbered in order of their smallest original vertex.
inline MinorGraph contract_mapped(const PartialCubeStructure& s, ClassIndex c) {
    if (c >= s.n_classes()) throw std::out_of_range("class index out of range");
    const std::size_t n = s.n_vertices();
    std::vector<Vertex> rep(n);
    std::iota(rep.begin(), rep.end(), 0);
    // Class edges form a matching, so one hop reaches the representative.
    for (auto [u, v] : s.class_edges(c)) rep[v] = rep[u] = std::min(u, v);
    std::vector<Vertex> index(n, SIZE_MAX);
    std::size_t next = 0;
    for (Vertex v = 0; v < n; ++v)
        if (rep[v] == v) index[v] = next++;
    MinorGraph out{Graph(), std::vector<Vertex>(n)};
    for (Vertex v = 0; v < n; ++v) out.vertex_map[v] = index[rep[v]];
    std::vector<Edge> es;
    for (auto [u, v] : s.graph().edges()) {
        Vertex a = out.vertex_map[u], b = out.vertex_map[v];
        if (a != b) es.emplace_back(a, b);
    }
    out.graph = Graph(next, es);
    return out;
}

inline Graph contract(const PartialCubeStructure& s, ClassIndex c) { return contract_mapped(s, c).graph; }

inline MinorGraph apply_mapped(const PartialCubeStructure& s, const MinorOp& op) {
    switch (op.kind) {
        case MinorOp::Kind::restrict_plus: return restrict_mapped(s, op.class_index, Side::plus);
        case MinorOp::Kind::restrict_minus: return restrict_mapped(s, op.class_index, Side::minus);
        case MinorOp::Kind::contract: return contract_mapped(s, op.class_index);
    }
    throw std::logic_error("unknown minor op");
}

inline Graph apply(const PartialCubeStructure& s, const MinorOp& op) { return apply_mapped(s, op).graph; }

// One isomorphism class in a minor closure, with a shortest derivation from the root.
struct MinorClass {
    PartialCubeStructure structure;
    std::vector<MinorOp> derivation;
};

namespace detail {

// Breadth-first closure under MinorOps, deduplicated up to isomorphism.
// `visit` is called on each new class in discovery order; returning true stops.
template <typename Visit>
std::vector<MinorClass> minor_closure(const PartialCubeStructure& root, Visit&& visit) {
    std::vector<MinorClass> found;
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> buckets;
    auto admit = [&](PartialCubeStructure s, std::vector<MinorOp> path) -> bool {
        auto& bucket = buckets[graph_invariant(s.graph())];
        for (auto idx : bucket)
            if (is_isomorphic(found[idx].structure.graph(), s.graph())) return false;
        bucket.push_back(found.size());
        found.push_back({std::move(s), std::move(path)});
        return true;
    };
    admit(root, {});
    if (visit(found.back())) return found;
    for (std::size_t head = 0; head < found.size(); ++head) {
        const std::size_t k = found[head].structure.n_classes();
        for (ClassIndex c = 0; c < k; ++c) {
            for (auto kind : {MinorOp::Kind::restrict_plus, MinorOp::Kind::restrict_minus, MinorOp::Kind::contract}) {
                MinorOp op{kind, c};
                Graph g = apply(found[head].structure, op);
                auto path = found[head].derivation;
                path.push_back(op);
                if (!admit(require_partial_cube(g), std::move(path))) continue;
                if (visit(found.back())) return found;
            }
        }
    }
    return found;
}

}  // namespace detail

// All pc-minors of s (including s itself) up to isomorphism.
inline std::vector<MinorClass> pc_minors(const PartialCubeStructure& s) {
    return detail::minor_closure(s, [](const MinorClass&) { return false; });
}

struct ForbiddenMinorId {
    ForbiddenKind kind;
    std::size_t n;
    std::size_t m;  // 0 for minus_star
};

inline std::string to_string(const ForbiddenMinorId& id) {
    if (id.kind == ForbiddenKind::minus_star) return "Q" + std::to_string(id.n) + "^{-*}";
    return "Q" + std::to_string(id.n) + "^{--}(" + std::to_string(id.m) + ")";
}

// Members of the forbidden family with 4 <= n <= max_n.
inline std::vector<std::pair<ForbiddenMinorId, Graph>> forbidden_family(std::size_t max_n) {
    std::vector<std::pair<ForbiddenMinorId, Graph>> out;
    for (std::size_t n = 4; n <= max_n; ++n) {
        out.push_back({{ForbiddenKind::minus_star, n, 0}, forbidden_minor(ForbiddenKind::minus_star, n)});
        for (std::size_t m = 1; m <= n; ++m)
            out.push_back({{ForbiddenKind::minus_minus, n, m}, forbidden_minor(ForbiddenKind::minus_minus, n, m)});
    }
    return out;
}

struct ComCheck {
    bool is_com = true;
    // When not a COM: the forbidden minor found and how to reach it.
    std::optional<ForbiddenMinorId> witness;
    std::vector<MinorOp> derivation;
};

inline ComCheck is_com_tope_graph(const PartialCubeStructure& s) {
    ComCheck result;
    const auto family = forbidden_family(s.n_classes());
    if (family.empty()) return result;
    detail::minor_closure(s, [&](const MinorClass& mc) {
        const Graph& g = mc.structure.graph();
        for (const auto& [id, h] : family) {
            if (h.n_vertices() != g.n_vertices() || h.n_edges() != g.n_edges()) continue;
            if (is_isomorphic(g, h)) {
                result.is_com = false;
                result.witness = id;
                result.derivation = mc.derivation;
                return true;
            }
        }
        return false;
    });
    return result;
}

}  // namespace varchenko
