#pragma once

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "varchenko/graph.hpp"
#include "varchenko/io.hpp"
#include "varchenko/oriented_complex.hpp"
#include "varchenko/partial_cube.hpp"
#include "varchenko/pc_minor.hpp"
#include "varchenko/polynomial.hpp"
#include "varchenko/varchenko.hpp"

namespace testing_support {

using namespace varchenko;

inline std::string fixture_path(const std::string& name) { return std::string(VARCHENKO_FIXTURE_DIR) + "/" + name; }

// Matrix fixture: one row per line, entries separated by "; ".
inline std::vector<std::vector<std::string>> read_matrix_fixture(const std::string& name) {
    std::ifstream in(fixture_path(name));
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> row;
        for (auto& cell : io::split(line, ';')) row.push_back(io::strip_comment(cell));
        rows.push_back(row);
    }
    return rows;
}

// Graph whose edges are the fixture entries that are a single variable.
inline Graph graph_of_matrix_fixture(const std::vector<std::vector<std::string>>& rows) {
    std::vector<Edge> es;
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i + 1; j < rows.size(); ++j)
            if (rows[i][j].find('*') == std::string::npos && rows[i][j] != "1") es.emplace_back(i, j);
    return Graph(rows.size(), es);
}

// Topes of the four-line arrangement with nine cells, one sign vector per
// cell; "-" on e means the cell lies across line e from the first cell.
inline std::vector<SignVector> four_line_topes() {
    std::vector<SignVector> ts;
    for (const char* s : {"++++", "+-++", "+--+", "+---", "-+++", "--++", "---+", "----", "--+-"})
        ts.push_back(SignVector::parse(s));
    return ts;
}

// X is a covector iff the topes agreeing with X on its support realize every
// sign pattern on its zero set. Sound for the small configurations used here
// (cubes, trees, arrangements where at most two lines meet); the result is
// always checked against the axioms by the caller.
inline CovectorSet covectors_from_topes(const std::vector<SignVector>& ts) {
    const std::size_t n = ts.front().size();
    std::vector<SignVector> out;
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
        std::string s(n, '0');
        std::size_t c = code;
        for (std::size_t i = 0; i < n; ++i, c /= 3) s[i] = "0+-"[c % 3];
        const auto x = SignVector::parse(s);
        const auto zs = zero_set(x);
        std::vector<bool> seen(std::size_t{1} << zs.size(), false);
        for (const auto& t : ts) {
            bool agrees = true;
            for (std::size_t i = 0; i < n; ++i)
                if (x[i] != Sign::zero && x[i] != t[i]) agrees = false;
            if (!agrees) continue;
            std::size_t pattern = 0;
            for (std::size_t k = 0; k < zs.size(); ++k)
                if (t[zs[k]] == Sign::minus) pattern |= std::size_t{1} << k;
            seen[pattern] = true;
        }
        if (std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) out.push_back(x);
    }
    return CovectorSet(n, out);
}

// Sign vectors of the vertex labels of a partial cube.
inline std::vector<SignVector> topes_of(const PartialCubeStructure& s) {
    std::vector<SignVector> ts;
    for (Vertex v = 0; v < s.n_vertices(); ++v) {
        std::string str = s.label(v);
        for (auto& ch : str) ch = ch == '1' ? '-' : '+';
        ts.push_back(SignVector::parse(str));
    }
    return ts;
}

// All trees on 2..max_n vertices, one per isomorphism class (Pruefer codes).
inline std::vector<Graph> trees_up_to(std::size_t max_n) {
    std::vector<Graph> out;
    for (std::size_t n = 2; n <= max_n; ++n) {
        std::vector<std::size_t> code(n - 2, 0);
        while (true) {
            std::vector<std::size_t> degree(n, 1);
            for (auto v : code) ++degree[v];
            std::vector<Edge> es;
            for (auto v : code) {
                std::size_t leaf = 0;
                while (degree[leaf] != 1) ++leaf;
                es.emplace_back(leaf, v);
                --degree[leaf];
                --degree[v];
            }
            std::vector<std::size_t> rest;
            for (std::size_t v = 0; v < n; ++v)
                if (degree[v] == 1) rest.push_back(v);
            es.emplace_back(rest[0], rest[1]);
            Graph g(n, es);
            if (std::none_of(out.begin(), out.end(), [&](const Graph& h) { return is_isomorphic(g, h); }))
                out.push_back(g);
            std::size_t i = 0;
            while (i < code.size() && ++code[i] == n) code[i++] = 0;
            if (i == code.size()) break;
        }
    }
    return out;
}

// Partial cubes with at most 7 vertices used by the property suites.
inline std::vector<std::pair<std::string, Graph>> small_corpus() {
    std::vector<std::pair<std::string, Graph>> out;
    for (std::size_t n = 1; n <= 7; ++n) out.emplace_back("path" + std::to_string(n), path_graph(n));
    const auto trees = trees_up_to(6);
    for (std::size_t i = 0; i < trees.size(); ++i) out.emplace_back("tree" + std::to_string(i), trees[i]);
    out.emplace_back("C4", cycle_graph(4));
    out.emplace_back("C6", cycle_graph(6));
    const Graph q3 = hypercube(3);
    out.emplace_back("Q3-minus-vertex", q3.induced({1, 2, 3, 4, 5, 6, 7}));
    out.emplace_back("Q3-minus-edge", q3.induced({2, 3, 4, 5, 6, 7}));
    out.emplace_back("Q3-halfspace", restrict(require_partial_cube(q3), 0, Side::plus));
    out.emplace_back("Q2", hypercube(2));
    return out;
}

// Vertex order and class naming under which the matrix of g reproduces a
// matrix fixture, recovered through an isomorphism onto the fixture graph.
struct FixtureWitness {
    std::vector<Vertex> order;
    std::vector<std::size_t> names;
};

inline std::optional<FixtureWitness> fixture_witness(const PartialCubeStructure& s,
                                                     const std::vector<std::vector<std::string>>& rows) {
    const auto phi = find_isomorphism(s.graph(), graph_of_matrix_fixture(rows));
    if (!phi) return std::nullopt;
    FixtureWitness w{std::vector<Vertex>(s.n_vertices()), std::vector<std::size_t>(s.n_classes())};
    for (Vertex v = 0; v < s.n_vertices(); ++v) w.order[(*phi)[v]] = v;
    for (ClassIndex c = 0; c < s.n_classes(); ++c) {
        auto [u, v] = s.class_edges(c).front();
        w.names[c] = io::parse_count(rows[(*phi)[u]][(*phi)[v]].substr(1)) - 1;
    }
    return w;
}

inline bool matrix_equals_fixture(const VarchenkoMatrix& m, const std::vector<std::vector<std::string>>& rows) {
    if (m.size() != rows.size()) return false;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            if (!(m(i, j) == parse_polynomial(rows[i][j], m.n_vars()))) return false;
    return true;
}

// det(G)|_{x_c=0} = det(G|E_c^-) * det(G|E_c^+), halfspace classes renamed to
// their parent classes.
inline bool block_identity_holds(const PartialCubeStructure& s, ClassIndex c) {
    const auto d = determinant(build_matrix(s));
    Polynomial product = Polynomial::one(s.n_classes());
    for (auto side : {Side::minus, Side::plus}) {
        const auto mg = restrict_mapped(s, c, side);
        const auto sub = require_partial_cube(mg.graph);
        std::vector<Vertex> back(sub.n_vertices());
        for (Vertex v = 0; v < s.n_vertices(); ++v)
            if (mg.vertex_map[v] != SIZE_MAX) back[mg.vertex_map[v]] = v;
        std::vector<std::size_t> to_parent(sub.n_classes());
        for (ClassIndex k = 0; k < sub.n_classes(); ++k) {
            auto [u, v] = sub.class_edges(k).front();
            to_parent[k] = s.class_of(back[u], back[v]);
        }
        product *= rename_variables(determinant(build_matrix(sub)), to_parent, s.n_classes());
    }
    return substitute(d, c, 0) == product;
}

inline std::vector<Vertex> random_permutation(std::size_t n, std::mt19937& rng) {
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace testing_support
