#pragma once

// Varchenko matrices of partial cubes, exact determinants, and extraction of
// factors of the shape (1 - (prod_{i in S} x_i)^2)^b.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "varchenko/graph.hpp"
#include "varchenko/modular.hpp"
#include "varchenko/oriented_complex.hpp"
#include "varchenko/partial_cube.hpp"
#include "varchenko/polynomial.hpp"

namespace varchenko {

inline std::vector<std::size_t> identity_permutation(std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

inline void check_permutation(const std::vector<std::size_t>& p, std::size_t n, const char* what) {
    if (p.size() != n) throw std::invalid_argument(std::string(what) + " has length " + std::to_string(p.size()) +
                                                   ", expected " + std::to_string(n));
    std::vector<bool> seen(n, false);
    for (auto x : p) {
        if (x >= n || seen[x]) throw std::invalid_argument(std::string(what) + " is not a permutation");
        seen[x] = true;
    }
}

class VarchenkoMatrix {
public:
    // Row i is vertex vertex_order[i]; colour class c is variable x_{class_names[c] + 1}.
    VarchenkoMatrix(PartialCubeStructure structure, std::vector<Vertex> vertex_order,
                    std::vector<std::size_t> class_names)
        : structure_(std::move(structure)), order_(std::move(vertex_order)), names_(std::move(class_names)) {
        check_permutation(order_, structure_.n_vertices(), "vertex order");
        check_permutation(names_, structure_.n_classes(), "class naming");
        const std::size_t n = order_.size(), k = names_.size();
        entries_.reserve(n * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Monomial m(k);
                for (auto c : structure_.separator(order_[i], order_[j])) m.set(names_[c], 1);
                entries_.push_back(Polynomial::monomial(std::move(m), 1));
            }
        }
    }

    std::size_t size() const { return order_.size(); }
    std::size_t n_vars() const { return names_.size(); }
    const Polynomial& operator()(std::size_t i, std::size_t j) const { return entries_[i * size() + j]; }
    const std::vector<Polynomial>& entries() const { return entries_; }
    const PartialCubeStructure& structure() const { return structure_; }
    const std::vector<Vertex>& vertex_order() const { return order_; }
    const std::vector<std::size_t>& class_names() const { return names_; }

    // Squarefree entries as variable bitmasks; requires fewer than 64 variables.
    modular::MonomialMatrix monomial_masks() const {
        if (n_vars() >= 64) throw std::length_error("too many variables for mask form");
        modular::MonomialMatrix mm{size(), n_vars(), {}};
        mm.masks.reserve(size() * size());
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = 0; j < size(); ++j) {
                std::uint64_t mask = 0;
                for (auto c : structure_.separator(order_[i], order_[j])) mask |= std::uint64_t{1} << names_[c];
                mm.masks.push_back(mask);
            }
        return mm;
    }

private:
    PartialCubeStructure structure_;
    std::vector<Vertex> order_;
    std::vector<std::size_t> names_;
    std::vector<Polynomial> entries_;
};

inline VarchenkoMatrix build_matrix(const PartialCubeStructure& s) {
    return VarchenkoMatrix(s, identity_permutation(s.n_vertices()), identity_permutation(s.n_classes()));
}

inline VarchenkoMatrix build_matrix(const PartialCubeStructure& s, std::vector<Vertex> vertex_order,
                                    std::vector<std::size_t> class_names) {
    return VarchenkoMatrix(s, std::move(vertex_order), std::move(class_names));
}

// Fraction-free elimination over Z[x]. `entries` is row-major n x n.
// Every division is exact by Sylvester's identity; a failure means a bug.
inline Polynomial bareiss_determinant(std::vector<Polynomial> a, std::size_t n, std::size_t n_vars) {
    if (a.size() != n * n) throw std::invalid_argument("matrix entry count does not match dimension");
    if (n == 0) return Polynomial::one(n_vars);
    bool negate = false;
    Polynomial previous = Polynomial::one(n_vars);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t best = n;
        for (std::size_t r = k; r < n; ++r) {
            const auto& cand = a[r * n + k];
            if (!cand.is_zero() && (best == n || cand.size() < a[best * n + k].size())) best = r;
        }
        if (best == n) return Polynomial(n_vars);
        if (best != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a[best * n + j], a[k * n + j]);
            negate = !negate;
        }
        const Polynomial& pivot = a[k * n + k];
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial num = pivot * a[i * n + j] - a[i * n + k] * a[k * n + j];
                auto q = exact_div(num, previous);
                if (!q) throw std::logic_error("Bareiss elimination hit an inexact division");
                a[i * n + j] = std::move(*q);
            }
            a[i * n + k] = Polynomial(n_vars);
        }
        previous = pivot;
    }
    Polynomial det = a[n * n - 1];
    return negate ? -det : det;
}

inline Polynomial bareiss_determinant(const VarchenkoMatrix& m) {
    return bareiss_determinant(m.entries(), m.size(), m.n_vars());
}

// Laplace expansion along rows, memoized on the set of remaining columns.
inline Polynomial cofactor_determinant_oracle(const std::vector<Polynomial>& a, std::size_t n, std::size_t n_vars,
                                              std::size_t max_size = 8) {
    if (n > max_size) throw std::invalid_argument("cofactor oracle limited to " + std::to_string(max_size) + " rows");
    if (a.size() != n * n) throw std::invalid_argument("matrix entry count does not match dimension");
    std::vector<std::optional<Polynomial>> memo(std::size_t{1} << n);
    auto minor = [&](auto&& self, std::uint32_t cols) -> const Polynomial& {
        auto& slot = memo[cols];
        if (slot) return *slot;
        const std::size_t row = n - static_cast<std::size_t>(std::popcount(cols));
        if (cols == 0) {
            slot = Polynomial::one(n_vars);
            return *slot;
        }
        Polynomial sum(n_vars);
        int sign = 1;
        for (std::size_t c = 0; c < n; ++c) {
            if (!(cols >> c & 1)) continue;
            Polynomial t = a[row * n + c] * self(self, cols & ~(std::uint32_t{1} << c));
            sum = sign > 0 ? sum + t : sum - t;
            sign = -sign;
        }
        slot = std::move(sum);
        return *slot;
    };
    return minor(minor, static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1));
}

inline Polynomial cofactor_determinant_oracle(const VarchenkoMatrix& m) {
    return cofactor_determinant_oracle(m.entries(), m.size(), m.n_vars());
}

enum class DeterminantMethod { automatic, bareiss, interpolation };

// Substituting -x_c conjugates the matrix by a diagonal sign matrix, so the
// determinant is even in x_c. A permutation uses equally many c-crossing
// entries in both directions, so deg_{x_c} <= 2 * min(|E_c^-|, |E_c^+|).
inline std::vector<std::size_t> square_degree_bounds(const VarchenkoMatrix& m) {
    std::vector<std::size_t> bounds(m.n_vars());
    const auto& s = m.structure();
    for (ClassIndex c = 0; c < s.n_classes(); ++c)
        bounds[m.class_names()[c]] = std::min(s.minus_side(c).size(), s.plus_side(c).size());
    return bounds;
}

inline std::optional<Polynomial> interpolation_determinant(const VarchenkoMatrix& m) {
    if (m.n_vars() >= 64) return std::nullopt;
    auto bounds = square_degree_bounds(m);
    return modular::even_determinant(m.monomial_masks(), bounds);
}

inline Polynomial determinant(const VarchenkoMatrix& m, DeterminantMethod method = DeterminantMethod::automatic) {
    if (method == DeterminantMethod::bareiss) return bareiss_determinant(m);
    if (method == DeterminantMethod::interpolation) {
        auto d = interpolation_determinant(m);
        if (!d) throw std::length_error("matrix too large for the interpolation determinant");
        return *d;
    }
    // Interpolation wins once the sparse Z[x] entries start to swell; many
    // classes with tiny halfspaces make the grid explode, where elimination is cheap.
    if (m.n_vars() < 64 && m.size() > 6) {
        const auto bounds = square_degree_bounds(m);
        const double points = static_cast<double>(modular::grid_points(bounds));
        const double n = static_cast<double>(m.size());
        if (points * n * n * n < 2e11)
            if (auto d = interpolation_determinant(m)) return *d;
    }
    return bareiss_determinant(m);
}

struct Factor {
    std::vector<std::size_t> classes;  // variable indices, sorted
    unsigned exponent = 0;

    friend bool operator==(const Factor&, const Factor&) = default;
};

struct FactorizationReport {
    std::vector<Factor> factors;
    Polynomial residual;
    bool clean = false;
};

// 1 - (prod_{i in S} x_i)^2
inline Polynomial factor_polynomial(const std::vector<std::size_t>& classes, std::size_t n_vars) {
    Monomial m(n_vars);
    for (auto c : classes) {
        if (c >= n_vars) throw std::out_of_range("factor variable out of range");
        m.set(c, 2);
    }
    return Polynomial::one(n_vars) - Polynomial::monomial(std::move(m), 1);
}

namespace detail {

// Evaluates f mod p at the point with x_i = 1 on `ones` and fixed pseudo-random
// values elsewhere. A nonzero result proves f(x_S = 1) != 0.
inline std::uint64_t evaluate_with_ones(const Polynomial& f, const std::vector<std::size_t>& ones) {
    constexpr std::uint64_t p = 2147483629u;
    std::vector<std::uint64_t> point(f.n_vars());
    std::mt19937_64 rng(0x5eed);
    for (auto& v : point) v = rng() % (p - 2) + 2;
    for (auto i : ones) point[i] = 1;
    std::uint64_t acc = 0;
    for (const auto& t : f.terms()) {
        std::uint64_t v = mpz_fdiv_ui(t.coefficient.get_mpz_t(), p);
        for (std::size_t i = 0; i < f.n_vars(); ++i)
            for (std::uint32_t e = 0; e < t.monomial[i]; ++e) v = v * point[i] % p;
        acc = (acc + v) % p;
    }
    return acc;
}

// Calls visit on non-empty subsets of {0..k-1} by increasing size, then
// lexicographically; visit returns false to stop.
template <typename Visit>
void for_each_subset(std::size_t k, Visit&& visit) {
    for (std::size_t size = 1; size <= k; ++size) {
        std::vector<std::size_t> idx(size);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            if (!visit(idx)) return;
            std::size_t i = size;
            while (i > 0 && idx[i - 1] == k - size + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
}

}  // namespace detail

// Divides out (1 - (prod_S x)^2) as often as possible for each candidate S
// (default: all non-empty subsets of the variables). The result is checked
// by multiplying back.
inline FactorizationReport factorize(const Polynomial& det, std::optional<std::vector<std::vector<std::size_t>>> candidates = std::nullopt) {
    if (det.is_zero()) throw std::invalid_argument("cannot factorize the zero polynomial");
    const std::size_t k = det.n_vars();
    FactorizationReport report;
    report.residual = det;

    auto try_candidate = [&](std::vector<std::size_t> s) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (s.empty()) return;
        if (report.residual.is_constant()) return;
        if (detail::evaluate_with_ones(report.residual, s) != 0) return;
        const Polynomial g = factor_polynomial(s, k);
        unsigned b = 0;
        while (auto q = exact_div(report.residual, g)) {
            report.residual = std::move(*q);
            ++b;
        }
        if (b > 0) report.factors.push_back({s, b});
    };

    if (candidates) {
        std::vector<std::vector<std::size_t>> sets;
        for (auto s : *candidates) {
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
            if (!s.empty() && s.back() >= k) throw std::out_of_range("candidate variable out of range");
            sets.push_back(std::move(s));
        }
        auto sorted = sets;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("duplicate candidate index set");
        for (const auto& s : sets) try_candidate(s);
    } else {
        detail::for_each_subset(k, [&](const std::vector<std::size_t>& s) {
            try_candidate(s);
            return !report.residual.is_constant();
        });
    }

    std::sort(report.factors.begin(), report.factors.end(), [](const Factor& a, const Factor& b) {
        if (a.classes.size() != b.classes.size()) return a.classes.size() < b.classes.size();
        return a.classes < b.classes;
    });

    Polynomial check = report.residual;
    for (const auto& f : report.factors) check *= pow(factor_polynomial(f.classes, k), f.exponent);
    if (!(check == det)) throw std::logic_error("factorization does not multiply back to the determinant");

    report.clean = report.residual == Polynomial::one(k);
    return report;
}

// "(1-x1^2)^6*(1-x2^2)^5*(1-(x2*x3*x4)^2)", with a non-trivial residual appended.
inline std::string to_factored_string(const FactorizationReport& r) {
    std::string out;
    for (const auto& f : r.factors) {
        if (!out.empty()) out += '*';
        std::string mono;
        for (auto c : f.classes) mono += (mono.empty() ? "x" : "*x") + std::to_string(c + 1);
        out += f.classes.size() == 1 ? "(1-" + mono + "^2)" : "(1-(" + mono + ")^2)";
        if (f.exponent > 1) out += '^' + std::to_string(f.exponent);
    }
    if (!(r.residual == Polynomial::one(r.residual.n_vars()))) {
        if (!out.empty()) out += '*';
        out += '(' + to_canonical_string(r.residual) + ')';
    }
    return out.empty() ? "1" : out;
}

// Renames variable i to mapping[i] in factors and residual.
inline FactorizationReport rename_report(const FactorizationReport& r, const std::vector<std::size_t>& mapping) {
    check_permutation(mapping, r.residual.n_vars(), "class permutation");
    FactorizationReport out;
    out.residual = rename_variables(r.residual, mapping, mapping.size());
    out.clean = r.clean;
    for (const auto& f : r.factors) {
        Factor g{{}, f.exponent};
        for (auto c : f.classes) g.classes.push_back(mapping[c]);
        std::sort(g.classes.begin(), g.classes.end());
        out.factors.push_back(std::move(g));
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const Factor& a, const Factor& b) {
        if (a.classes.size() != b.classes.size()) return a.classes.size() < b.classes.size();
        return a.classes < b.classes;
    });
    return out;
}

struct ComFactorizationVerdict {
    bool holds = false;
    FactorizationReport report;
    Polynomial determinant;
    // Tope-graph colour class -> ground-set element.
    std::vector<std::size_t> class_to_element;
    std::string reason;
};

// Checks that the Varchenko determinant of a simple COM's tope graph is a
// clean product of factors indexed by covector zero sets.
inline ComFactorizationVerdict verify_com_factorization(const CovectorSet& l) {
    const auto axioms = check_axioms(l);
    if (!axioms.is_com()) throw std::invalid_argument("covector set is not a COM: " + to_string(axioms));
    if (!is_simple(l)) throw std::invalid_argument("covector set is not simple");

    const auto ts = topes(l);
    const auto structure = require_partial_cube(tope_graph(ts));
    ComFactorizationVerdict v;
    v.class_to_element.assign(structure.n_classes(), SIZE_MAX);
    for (ClassIndex c = 0; c < structure.n_classes(); ++c) {
        auto [a, b] = structure.class_edges(c).front();
        v.class_to_element[c] = separator_sv(ts[a], ts[b]).front();
    }
    // Name each class by its ground element so factor index sets read as element sets.
    const auto matrix = build_matrix(structure, identity_permutation(structure.n_vertices()), v.class_to_element);
    v.determinant = determinant(matrix);
    v.report = factorize(v.determinant);
    if (!v.report.clean) {
        v.reason = "residual " + to_canonical_string(v.report.residual) + " is not 1";
        return v;
    }
    std::vector<std::vector<std::size_t>> zero_sets;
    for (const auto& y : l.vectors()) zero_sets.push_back(zero_set(y));
    for (const auto& f : v.report.factors) {
        if (std::find(zero_sets.begin(), zero_sets.end(), f.classes) == zero_sets.end()) {
            std::string s;
            for (auto e : f.classes) s += (s.empty() ? "" : ",") + std::to_string(e);
            v.reason = "factor index set {" + s + "} is not the zero set of a covector";
            return v;
        }
    }
    v.holds = true;
    return v;
}

}  // namespace varchenko
