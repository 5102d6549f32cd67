#pragma once

// Simple undirected graphs with dense vertex indices, BFS distances, the
// hypercube and forbidden pc-minor generators, and a small-graph
// isomorphism test (colour refinement plus backtracking).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace varchenko {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

class Graph {
public:
    Graph() = default;

    // Normalizes pairs to (min, max) and drops duplicates.
    Graph(std::size_t n_vertices, const std::vector<Edge>& edges) : n_(n_vertices), adj_(n_vertices) {
        for (auto [u, v] : edges) {
            if (u >= n_ || v >= n_)
                throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                            ") has an endpoint out of range");
            if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
            edges_.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
        for (auto [u, v] : edges_) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& a : adj_) std::sort(a.begin(), a.end());
    }

    std::size_t n_vertices() const { return n_; }
    std::size_t n_edges() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    std::size_t degree(Vertex v) const { return adj_[v].size(); }

    bool has_edge(Vertex u, Vertex v) const {
        if (u >= n_ || v >= n_) return false;
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    // Induced subgraph on `keep` (in the given order); vertex i of the result is keep[i].
    Graph induced(const std::vector<Vertex>& keep) const {
        std::vector<std::size_t> index(n_, SIZE_MAX);
        for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = i;
        std::vector<Edge> es;
        for (auto [u, v] : edges_)
            if (index[u] != SIZE_MAX && index[v] != SIZE_MAX) es.emplace_back(index[u], index[v]);
        return Graph(keep.size(), es);
    }

    // Vertex v of this graph becomes perm[v].
    Graph relabeled(const std::vector<Vertex>& perm) const {
        if (perm.size() != n_) throw std::invalid_argument("permutation has wrong length");
        std::vector<Edge> es;
        es.reserve(edges_.size());
        for (auto [u, v] : edges_) es.emplace_back(perm.at(u), perm.at(v));
        return Graph(n_, es);
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

inline Graph make_graph(std::size_t n_vertices, const std::vector<Edge>& edges) { return Graph(n_vertices, edges); }

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

class DistanceTable {
public:
    explicit DistanceTable(const Graph& g) : n_(g.n_vertices()), d_(n_ * n_, kUnreachable) {
        std::vector<Vertex> queue;
        queue.reserve(n_);
        for (Vertex s = 0; s < n_; ++s) {
            std::size_t* row = &d_[s * n_];
            row[s] = 0;
            queue.assign(1, s);
            for (std::size_t head = 0; head < queue.size(); ++head) {
                Vertex u = queue[head];
                for (Vertex w : g.neighbors(u)) {
                    if (row[w] == kUnreachable) {
                        row[w] = row[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
    }

    std::size_t size() const { return n_; }
    std::size_t operator()(Vertex u, Vertex v) const { return d_[u * n_ + v]; }

    bool connected() const {
        return std::none_of(d_.begin(), d_.end(), [](std::size_t x) { return x == kUnreachable; });
    }

    std::size_t diameter() const {
        std::size_t best = 0;
        for (auto x : d_)
            if (x != kUnreachable) best = std::max(best, x);
        return best;
    }

private:
    std::size_t n_;
    std::vector<std::size_t> d_;
};

inline DistanceTable distances(const Graph& g) { return DistanceTable(g); }

inline bool is_bipartite(const Graph& g) {
    std::vector<int> side(g.n_vertices(), -1);
    for (Vertex s = 0; s < g.n_vertices(); ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::vector<Vertex> stack{s};
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(u)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[u];
                    stack.push_back(w);
                } else if (side[w] == side[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Vertex i is the n-bit string with bit c = (i >> c) & 1.
inline Graph hypercube(std::size_t n) {
    if (n >= 8 * sizeof(std::size_t) - 1) throw std::invalid_argument("hypercube dimension too large");
    const std::size_t count = std::size_t{1} << n;
    std::vector<Edge> es;
    for (std::size_t v = 0; v < count; ++v)
        for (std::size_t c = 0; c < n; ++c)
            if (!(v >> c & 1)) es.emplace_back(v, v | (std::size_t{1} << c));
    return Graph(count, es);
}

inline Graph path_graph(std::size_t n) {
    if (n == 0) throw std::invalid_argument("path needs at least one vertex");
    std::vector<Edge> es;
    for (std::size_t i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph(n, es);
}

inline Graph cycle_graph(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
    std::vector<Edge> es;
    for (std::size_t i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph(n, es);
}

enum class ForbiddenKind { minus_star, minus_minus };

inline std::string to_string(ForbiddenKind kind) { return kind == ForbiddenKind::minus_star ? "minus_star" : "minus_minus"; }

// Q_n with v = 0...0 and its antipode removed, plus either one neighbour of v
// (minus_star) or v itself and m neighbours (minus_minus). Deleted neighbours
// are the unit vectors of the lowest coordinates. Surviving vertices keep
// their relative order from the hypercube numbering.
inline Graph forbidden_minor(ForbiddenKind kind, std::size_t n, std::size_t m = 0) {
    if (n < 4) throw std::invalid_argument("forbidden pc-minors need n >= 4");
    if (n > 20) throw std::invalid_argument("forbidden pc-minor dimension too large");
    if (kind == ForbiddenKind::minus_minus && (m == 0 || m > n))
        throw std::invalid_argument("minus_minus needs 0 < m <= n");
    if (kind == ForbiddenKind::minus_star && m != 0) throw std::invalid_argument("minus_star takes no m");
    const std::size_t count = std::size_t{1} << n;
    const std::size_t antipode = count - 1;
    std::vector<bool> removed(count, false);
    removed[antipode] = true;
    if (kind == ForbiddenKind::minus_star) {
        removed[1] = true;
    } else {
        removed[0] = true;
        for (std::size_t c = 0; c < m; ++c) removed[std::size_t{1} << c] = true;
    }
    std::vector<Vertex> keep;
    for (std::size_t v = 0; v < count; ++v)
        if (!removed[v]) keep.push_back(v);
    return hypercube(n).induced(keep);
}

namespace detail {

// Stable colour refinement. Colours are ranks of (old colour, sorted
// neighbour colours) signatures, so equal multisets give equal colourings.
// `trace` accumulates the per-round class histograms.
inline std::vector<std::size_t> refine_colors(const Graph& g, std::vector<std::size_t> colors,
                                              std::vector<std::size_t>* trace = nullptr) {
    const std::size_t n = g.n_vertices();
    std::size_t n_colors = 0;
    for (auto c : colors) n_colors = std::max(n_colors, c + 1);
    while (true) {
        std::vector<std::vector<std::size_t>> sig(n);
        for (Vertex v = 0; v < n; ++v) {
            sig[v].push_back(colors[v]);
            std::vector<std::size_t> nb;
            for (Vertex w : g.neighbors(v)) nb.push_back(colors[w]);
            std::sort(nb.begin(), nb.end());
            sig[v].insert(sig[v].end(), nb.begin(), nb.end());
        }
        std::map<std::vector<std::size_t>, std::size_t> rank;
        for (const auto& s : sig) rank.emplace(s, 0);
        std::size_t r = 0;
        for (auto& [s, id] : rank) id = r++;
        std::vector<std::size_t> next(n);
        for (Vertex v = 0; v < n; ++v) next[v] = rank[sig[v]];
        if (trace) {
            trace->push_back(rank.size());
            for (const auto& [s, id] : rank) {
                trace->push_back(std::count(next.begin(), next.end(), id));
                trace->insert(trace->end(), s.begin(), s.end());
            }
        }
        colors = std::move(next);
        if (rank.size() == n_colors) return colors;
        n_colors = rank.size();
    }
}

}  // namespace detail

// Isomorphism invariant: equal for isomorphic graphs. Used to bucket graphs
// before the exact test.
inline std::vector<std::size_t> graph_invariant(const Graph& g) {
    std::vector<std::size_t> trace{g.n_vertices(), g.n_edges()};
    detail::refine_colors(g, std::vector<std::size_t>(g.n_vertices(), 0), &trace);
    return trace;
}

// Returns a bijection phi with (u,v) in G iff (phi[u],phi[v]) in H, if one exists.
inline std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h) {
    const std::size_t n = g.n_vertices();
    if (n != h.n_vertices() || g.n_edges() != h.n_edges()) return std::nullopt;
    if (n == 0) return std::vector<Vertex>{};

    // Refine on the disjoint union so colours are comparable across graphs.
    std::vector<Edge> es = g.edges();
    for (auto [u, v] : h.edges()) es.emplace_back(u + n, v + n);
    Graph both(2 * n, es);
    auto colors = detail::refine_colors(both, std::vector<std::size_t>(2 * n, 0));
    std::vector<std::size_t> cg(colors.begin(), colors.begin() + n), ch(colors.begin() + n, colors.end());
    {
        auto sg = cg, sh = ch;
        std::sort(sg.begin(), sg.end());
        std::sort(sh.begin(), sh.end());
        if (sg != sh) return std::nullopt;
    }

    // Match G's vertices in BFS order so each new vertex has mapped neighbours.
    std::vector<Vertex> order;
    std::vector<bool> seen(n, false);
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) continue;
        seen[s] = true;
        order.push_back(s);
        for (std::size_t head = order.size() - 1; head < order.size(); ++head)
            for (Vertex w : g.neighbors(order[head]))
                if (!seen[w]) {
                    seen[w] = true;
                    order.push_back(w);
                }
    }

    std::vector<Vertex> phi(n, SIZE_MAX);
    std::vector<bool> used(n, false);
    auto consistent = [&](Vertex u, Vertex x) {
        if (cg[u] != ch[x] || g.degree(u) != h.degree(x)) return false;
        for (std::size_t i = 0; i < n; ++i) {
            if (phi[i] == SIZE_MAX) continue;
            if (g.has_edge(u, i) != h.has_edge(x, phi[i])) return false;
        }
        return true;
    };
    auto search = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == n) return true;
        Vertex u = order[depth];
        for (Vertex x = 0; x < n; ++x) {
            if (used[x] || !consistent(u, x)) continue;
            phi[u] = x;
            used[x] = true;
            if (self(self, depth + 1)) return true;
            phi[u] = SIZE_MAX;
            used[x] = false;
        }
        return false;
    };
    if (!search(search, 0)) return std::nullopt;
    return phi;
}

inline bool is_isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

}  // namespace varchenko
