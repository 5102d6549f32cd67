#pragma once

// Published determinants of the forbidden pc-minors for n = 4 and n = 5,
// and the comparisons used to check computed factorizations against them.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "varchenko/graph.hpp"
#include "varchenko/io.hpp"
#include "varchenko/varchenko.hpp"

namespace varchenko {

// Parses the output format of to_factored_string.
inline FactorizationReport parse_factored_string(std::string_view text, std::size_t n_vars) {
    FactorizationReport r;
    r.residual = Polynomial::one(n_vars);
    std::size_t pos = 0;
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("cannot parse factored form at offset " + std::to_string(pos) + ": " + what);
    };
    auto is_ws = [](char c) { return c == ' ' || c == '\t'; };
    while (pos < text.size()) {
        while (pos < text.size() && is_ws(text[pos])) ++pos;
        if (pos < text.size() && text[pos] == '*') {
            ++pos;
            continue;
        }
        if (pos == text.size()) break;
        if (text[pos] != '(') fail("expected '('");
        int depth = 0;
        std::size_t start = pos;
        for (; pos < text.size(); ++pos) {
            if (text[pos] == '(') ++depth;
            if (text[pos] == ')' && --depth == 0) break;
        }
        if (depth != 0) fail("unbalanced parentheses");
        std::string inner(text.substr(start + 1, pos - start - 1));
        ++pos;
        unsigned exponent = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            std::size_t s = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            exponent = static_cast<unsigned>(io::parse_count(std::string(text.substr(s, pos - s))));
        }
        // "1-x3^2" or "1-(x1*x2)^2" is a factor; anything else is residual.
        inner.erase(std::remove_if(inner.begin(), inner.end(), [&](char c) { return is_ws(c); }), inner.end());
        std::optional<std::vector<std::size_t>> classes;
        if (inner.starts_with("1-") && inner.ends_with("^2")) {
            std::string body = inner.substr(2, inner.size() - 4);
            if (body.size() > 2 && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
            std::vector<std::size_t> cs;
            bool ok = !body.empty();
            for (const auto& v : io::split(body, '*')) {
                if (v.size() < 2 || v[0] != 'x' || !std::all_of(v.begin() + 1, v.end(), ::isdigit)) {
                    ok = false;
                    break;
                }
                std::size_t idx = io::parse_count(v.substr(1));
                if (idx == 0 || idx > n_vars) fail("variable out of range");
                cs.push_back(idx - 1);
            }
            if (ok) classes = cs;
        }
        if (classes) {
            std::sort(classes->begin(), classes->end());
            r.factors.push_back({*classes, exponent});
        } else {
            r.residual = r.residual * pow(parse_polynomial(inner, n_vars), exponent);
        }
    }
    std::sort(r.factors.begin(), r.factors.end(), [](const Factor& a, const Factor& b) {
        if (a.classes.size() != b.classes.size()) return a.classes.size() < b.classes.size();
        return a.classes < b.classes;
    });
    r.clean = r.residual == Polynomial::one(n_vars);
    return r;
}

inline bool same_factors(const FactorizationReport& a, const FactorizationReport& b) {
    return a.factors == b.factors && a.residual == b.residual;
}

// Multiset of (|S|, b) over the factors.
inline std::vector<std::pair<std::size_t, unsigned>> factor_shape(const FactorizationReport& r) {
    std::vector<std::pair<std::size_t, unsigned>> shape;
    for (const auto& f : r.factors) shape.emplace_back(f.classes.size(), f.exponent);
    std::sort(shape.begin(), shape.end());
    return shape;
}

inline std::vector<std::vector<std::size_t>> all_permutations(std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    auto p = identity_permutation(k);
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Some renaming of the variables maps a's residual onto b's.
inline bool residual_equal_up_to_permutation(const Polynomial& a, const Polynomial& b) {
    if (a.n_vars() != b.n_vars() || a.size() != b.size()) return false;
    for (const auto& p : all_permutations(a.n_vars()))
        if (rename_variables(a, p, p.size()) == b) return true;
    return false;
}

// First variable renaming (lexicographic) under which `computed` equals `expected` exactly.
inline std::optional<std::vector<std::size_t>> matching_permutation(const FactorizationReport& computed,
                                                                   const FactorizationReport& expected) {
    for (const auto& p : all_permutations(computed.residual.n_vars()))
        if (same_factors(rename_report(computed, p), expected)) return p;
    return std::nullopt;
}

struct AppendixCase {
    std::string name;
    ForbiddenKind kind;
    std::size_t n;
    std::size_t m;
    std::string published;  // transcribed determinant, factored form
    // Colour class c of our structure is x_{perm[c]+1} in the published line.
    std::vector<std::size_t> class_permutation;

    Graph graph() const { return forbidden_minor(kind, n, m); }
};

inline const std::vector<AppendixCase>& appendix_cases_n4() {
    static const std::vector<AppendixCase> cases = {
        {"Q4^{-*}", ForbiddenKind::minus_star, 4, 0,
         "(1-x1^2)^6*(1-x2^2)^6*(1-x3^2)^6*(1-x4^2)^6*(1-(x1*x3*x4)^2)", {0, 2, 3, 1}},
        {"Q4^{--}(1)", ForbiddenKind::minus_minus, 4, 1,
         "(1-x1^2)^6*(1-x2^2)^5*(1-x3^2)^5*(1-x4^2)^5*(1-(x2*x3*x4)^2)", {0, 1, 2, 3}},
        {"Q4^{--}(2)", ForbiddenKind::minus_minus, 4, 2,
         "(1-x1^2)^5*(1-x2^2)^5*(1-x3^2)^4*(1-x4^2)^4*"
         "(x1^2*x2^2*x3^2*x4^2 - x1^2*x3^2*x4^2 - x2^2*x3^2*x4^2 + 1)",
         {2, 3, 0, 1}},
        {"Q4^{--}(3)", ForbiddenKind::minus_minus, 4, 3,
         "(1-x1^2)^4*(1-x2^2)^4*(1-x3^2)^4*(1-x4^2)^3*"
         "(2*x1^2*x2^2*x3^2*x4^2 - x1^2*x2^2*x4^2 - x1^2*x3^2*x4^2 - x2^2*x3^2*x4^2 + 1)",
         {0, 3, 1, 2}},
        {"Q4^{--}(4)", ForbiddenKind::minus_minus, 4, 4,
         "(1-x1^2)^3*(1-x2^2)^3*(1-x3^2)^3*(1-x4^2)^3*"
         "(3*x1^2*x2^2*x3^2*x4^2 - x1^2*x2^2*x3^2 - x1^2*x2^2*x4^2 - x1^2*x3^2*x4^2 - x2^2*x3^2*x4^2 + 1)",
         {0, 1, 2, 3}},
    };
    return cases;
}

inline const std::vector<AppendixCase>& appendix_cases_n5() {
    static const std::vector<AppendixCase> cases = {
        {"Q5^{-*}", ForbiddenKind::minus_star, 5, 0,
         "(1-x1^2)^14*(1-x2^2)^14*(1-x3^2)^14*(1-x4^2)^14*(1-x5^2)^14*(1-(x2*x3*x4*x5)^2)", {1, 2, 3, 4, 0}},
        {"Q5^{--}(1)", ForbiddenKind::minus_minus, 5, 1,
         "(1-x1^2)^13*(1-x2^2)^13*(1-x3^2)^14*(1-x4^2)^13*(1-x5^2)^13*(1-(x1*x2*x4*x5)^2)", {2, 0, 1, 3, 4}},
        {"Q5^{--}(2)", ForbiddenKind::minus_minus, 5, 2,
         "(1-x1^2)^13*(1-x2^2)^12*(1-x3^2)^13*(1-x4^2)^12*(1-x5^2)^12*"
         "(x1^2*x2^2*x3^2*x4^2*x5^2 - x1^2*x2^2*x4^2*x5^2 - x2^2*x3^2*x4^2*x5^2 + 1)",
         {1, 3, 4, 0, 2}},
        {"Q5^{--}(3)", ForbiddenKind::minus_minus, 5, 3,
         "(1-x1^2)^12*(1-x2^2)^12*(1-x3^2)^12*(1-x4^2)^11*(1-x5^2)^11*"
         "(2*x1^2*x2^2*x3^2*x4^2*x5^2 - x1^2*x2^2*x4^2*x5^2 - x1^2*x3^2*x4^2*x5^2 - x2^2*x3^2*x4^2*x5^2 + 1)",
         {0, 3, 4, 1, 2}},
        {"Q5^{--}(4)", ForbiddenKind::minus_minus, 5, 4,
         "(1-x1^2)^11*(1-x2^2)^11*(1-x3^2)^11*(1-x4^2)^11*(1-x5^2)^10*"
         "(3*x1^2*x2^2*x3^2*x4^2*x5^2 - x1^2*x2^2*x3^2*x5^2 - x1^2*x2^2*x4^2*x5^2 - x1^2*x3^2*x4^2*x5^2 - "
         "x2^2*x3^2*x4^2*x5^2 + 1)",
         {0, 1, 4, 2, 3}},
        {"Q5^{--}(5)", ForbiddenKind::minus_minus, 5, 5,
         "(1-x1^2)^10*(1-x2^2)^10*(1-x3^2)^10*(1-x4^2)^10*(1-x5^2)^10*"
         "(4*x1^2*x2^2*x3^2*x4^2*x5^2 - x1^2*x2^2*x3^2*x4^2 - x1^2*x2^2*x3^2*x5^2 - x1^2*x2^2*x4^2*x5^2 - "
         "x1^2*x3^2*x4^2*x5^2 - x2^2*x3^2*x4^2*x5^2 + 1)",
         {0, 1, 2, 3, 4}},
    };
    return cases;
}

struct AppendixOutcome {
    FactorizationReport computed;
    FactorizationReport published;
    bool shape_matches = false;     // (|S|, b) multisets agree
    bool residual_matches = false;  // residuals agree up to renaming variables
    std::optional<std::vector<std::size_t>> consistent_permutation;
    bool exact_matches = false;  // exact string under the stored permutation
    std::string computed_string;

    bool passed(bool exact) const { return shape_matches && residual_matches && (!exact || exact_matches); }
};

inline AppendixOutcome run_appendix_case(const AppendixCase& c) {
    AppendixOutcome out;
    const auto structure = require_partial_cube(c.graph());
    out.computed = factorize(determinant(build_matrix(structure)));
    out.published = parse_factored_string(c.published, structure.n_classes());
    out.shape_matches = factor_shape(out.computed) == factor_shape(out.published);
    out.residual_matches = residual_equal_up_to_permutation(out.computed.residual, out.published.residual);
    out.consistent_permutation = matching_permutation(out.computed, out.published);
    const auto renamed = rename_report(out.computed, c.class_permutation);
    out.computed_string = to_factored_string(renamed);
    out.exact_matches = out.computed_string == c.published;
    return out;
}

}  // namespace varchenko
