#pragma once

// Djokovic-Winkler relation, colour classes, halfspaces and hypercube
// labelings of partial cubes.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "varchenko/graph.hpp"

namespace varchenko {

using ClassIndex = std::size_t;
using Separator = std::vector<ClassIndex>;  // sorted class indices

struct RecognitionFailure {
    enum class Reason { empty, not_connected, not_bipartite, theta_not_transitive, halfspace_inconsistent, isometry_violated };

    Reason reason;
    std::string message;
    // Offending vertex pair (isometry) or edge indices (theta), when applicable.
    std::pair<std::size_t, std::size_t> witness{0, 0};
};

inline std::string to_string(RecognitionFailure::Reason r) {
    switch (r) {
        case RecognitionFailure::Reason::empty: return "empty graph";
        case RecognitionFailure::Reason::not_connected: return "not connected";
        case RecognitionFailure::Reason::not_bipartite: return "not bipartite";
        case RecognitionFailure::Reason::theta_not_transitive: return "theta not transitive";
        case RecognitionFailure::Reason::halfspace_inconsistent: return "halfspace inconsistent";
        case RecognitionFailure::Reason::isometry_violated: return "isometry violated";
    }
    return "unknown";
}

class NotAPartialCube : public std::runtime_error {
public:
    explicit NotAPartialCube(RecognitionFailure f) : std::runtime_error(f.message), failure_(std::move(f)) {}
    const RecognitionFailure& failure() const { return failure_; }

private:
    RecognitionFailure failure_;
};

namespace detail {

// side[e][x] is true iff d(x, u) < d(x, v) for edge e = (u, v).
inline std::vector<std::vector<bool>> edge_sides(const Graph& g, const DistanceTable& d) {
    std::vector<std::vector<bool>> sides;
    sides.reserve(g.n_edges());
    for (auto [u, v] : g.edges()) {
        std::vector<bool> s(g.n_vertices());
        for (Vertex x = 0; x < g.n_vertices(); ++x) s[x] = d(x, u) < d(x, v);
        sides.push_back(std::move(s));
    }
    return sides;
}

inline bool theta(const std::vector<bool>& side_e, const Edge& f) { return side_e[f.first] != side_e[f.second]; }

struct ThetaClasses {
    std::vector<std::vector<std::size_t>> classes;  // edge indices
    std::vector<std::size_t> class_of_edge;
};

// Transitive closure of theta; classes numbered by their smallest edge.
inline ThetaClasses theta_closure(const Graph& g, const std::vector<std::vector<bool>>& sides) {
    const std::size_t m = g.n_edges();
    std::vector<std::size_t> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t e = 0; e < m; ++e)
        for (std::size_t f = e + 1; f < m; ++f)
            if (theta(sides[e], g.edges()[f])) parent[find(e)] = find(f);
    ThetaClasses out;
    out.class_of_edge.assign(m, SIZE_MAX);
    std::vector<std::size_t> id_of_root(m, SIZE_MAX);
    for (std::size_t e = 0; e < m; ++e) {
        std::size_t r = find(e);
        if (id_of_root[r] == SIZE_MAX) {
            id_of_root[r] = out.classes.size();
            out.classes.emplace_back();
        }
        out.class_of_edge[e] = id_of_root[r];
        out.classes[id_of_root[r]].push_back(e);
    }
    return out;
}

}  // namespace detail

// Edge partition induced by theta. Requires a connected bipartite graph.
inline std::vector<std::vector<Edge>> dw_classes(const Graph& g) {
    if (g.n_vertices() == 0) throw std::invalid_argument("empty graph");
    DistanceTable d(g);
    if (!d.connected()) throw std::invalid_argument("graph is not connected");
    if (!is_bipartite(g)) throw std::invalid_argument("graph is not bipartite");
    auto closure = detail::theta_closure(g, detail::edge_sides(g, d));
    std::vector<std::vector<Edge>> out;
    for (const auto& cls : closure.classes) {
        std::vector<Edge> es;
        for (auto e : cls) es.push_back(g.edges()[e]);
        out.push_back(std::move(es));
    }
    return out;
}

class PartialCubeStructure {
public:
    const Graph& graph() const { return graph_; }
    std::size_t n_vertices() const { return graph_.n_vertices(); }
    std::size_t n_classes() const { return class_edges_.size(); }

    const std::vector<Edge>& class_edges(ClassIndex c) const { return class_edges_.at(c); }
    // E_c^-: contains vertex 0.
    const std::vector<Vertex>& minus_side(ClassIndex c) const { return minus_.at(c); }
    const std::vector<Vertex>& plus_side(ClassIndex c) const { return plus_.at(c); }

    bool bit(Vertex v, ClassIndex c) const { return labels_[v * words_ + c / 64] >> (c % 64) & 1; }

    std::string label(Vertex v) const {
        std::string s(n_classes(), '0');
        for (ClassIndex c = 0; c < n_classes(); ++c)
            if (bit(v, c)) s[c] = '1';
        return s;
    }

    ClassIndex class_of(Vertex u, Vertex v) const {
        if (!graph_.has_edge(u, v)) throw std::invalid_argument("not an edge");
        Separator s = separator(u, v);
        return s.front();
    }

    std::size_t separator_size(Vertex u, Vertex v) const {
        std::size_t count = 0;
        for (std::size_t w = 0; w < words_; ++w)
            count += static_cast<std::size_t>(std::popcount(labels_[u * words_ + w] ^ labels_[v * words_ + w]));
        return count;
    }

    // Classes whose halfspaces separate u and v.
    Separator separator(Vertex u, Vertex v) const {
        if (u >= n_vertices() || v >= n_vertices()) throw std::out_of_range("vertex out of range");
        Separator s;
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t x = labels_[u * words_ + w] ^ labels_[v * words_ + w];
            while (x) {
                s.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(x)));
                x &= x - 1;
            }
        }
        return s;
    }

    // Bitmask form of the separator; only meaningful for fewer than 64 classes.
    std::uint64_t separator_mask(Vertex u, Vertex v) const { return labels_[u * words_] ^ labels_[v * words_]; }

private:
    friend std::variant<PartialCubeStructure, RecognitionFailure> build_structure(const Graph& g);

    Graph graph_;
    std::vector<std::vector<Edge>> class_edges_;
    std::vector<std::vector<Vertex>> minus_, plus_;
    std::size_t words_ = 1;
    std::vector<std::uint64_t> labels_;
};

// Either the partial-cube structure of g, or the first violated condition.
inline std::variant<PartialCubeStructure, RecognitionFailure> build_structure(const Graph& g) {
    using Reason = RecognitionFailure::Reason;
    const std::size_t n = g.n_vertices();
    if (n == 0) return RecognitionFailure{Reason::empty, "graph has no vertices"};
    DistanceTable d(g);
    if (!d.connected()) return RecognitionFailure{Reason::not_connected, "graph is not connected"};
    if (!is_bipartite(g)) return RecognitionFailure{Reason::not_bipartite, "graph is not bipartite"};

    const auto sides = detail::edge_sides(g, d);
    const auto closure = detail::theta_closure(g, sides);
    for (const auto& cls : closure.classes)
        for (std::size_t i = 0; i < cls.size(); ++i)
            for (std::size_t j = i + 1; j < cls.size(); ++j)
                if (!detail::theta(sides[cls[i]], g.edges()[cls[j]]))
                    return RecognitionFailure{Reason::theta_not_transitive,
                                              "theta is not transitive: edges " + std::to_string(cls[i]) + " and " +
                                                  std::to_string(cls[j]) + " share a class but are unrelated",
                                              {cls[i], cls[j]}};

    PartialCubeStructure s;
    s.graph_ = g;
    const std::size_t k = closure.classes.size();
    s.words_ = k == 0 ? 1 : (k + 63) / 64;
    s.labels_.assign(n * s.words_, 0);
    for (ClassIndex c = 0; c < k; ++c) {
        const auto& cls = closure.classes[c];
        std::vector<Edge> es;
        for (auto e : cls) es.push_back(g.edges()[e]);
        // W(u,v) for the representative edge; E_c^- is whichever side holds vertex 0.
        const auto& side = sides[cls.front()];
        const bool zero_in_w = side[0];
        std::vector<Vertex> minus, plus;
        for (Vertex x = 0; x < n; ++x) {
            if (side[x] == zero_in_w) {
                minus.push_back(x);
            } else {
                plus.push_back(x);
                s.labels_[x * s.words_ + c / 64] |= std::uint64_t{1} << (c % 64);
            }
        }
        for (auto [u, v] : es)
            if (side[u] == side[v])
                return RecognitionFailure{Reason::halfspace_inconsistent,
                                          "an edge of class " + std::to_string(c) + " does not cross its halfspaces",
                                          {u, v}};
        s.class_edges_.push_back(std::move(es));
        s.minus_.push_back(std::move(minus));
        s.plus_.push_back(std::move(plus));
    }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (s.separator_size(u, v) != d(u, v))
                return RecognitionFailure{Reason::isometry_violated,
                                          "isometry violated at vertices " + std::to_string(u) + " and " +
                                              std::to_string(v) + ": distance " + std::to_string(d(u, v)) +
                                              ", label distance " + std::to_string(s.separator_size(u, v)),
                                          {u, v}};
    return s;
}

// Throws NotAPartialCube on failure.
inline PartialCubeStructure require_partial_cube(const Graph& g) {
    auto r = build_structure(g);
    if (auto* f = std::get_if<RecognitionFailure>(&r)) throw NotAPartialCube(*f);
    return std::get<PartialCubeStructure>(std::move(r));
}

inline bool is_partial_cube(const Graph& g) { return std::holds_alternative<PartialCubeStructure>(build_structure(g)); }

inline Separator separator(const PartialCubeStructure& s, Vertex u, Vertex v) { return s.separator(u, v); }

}  // namespace varchenko
