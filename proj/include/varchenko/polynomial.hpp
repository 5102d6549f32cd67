#pragma once

// Sparse multivariate polynomials over Z with arbitrary-precision coefficients.
//
// Terms are kept in a vector sorted descending in graded-lexicographic order
// (x1 > x2 > ... within a degree). The representation is canonical: no zero
// coefficients, no repeated monomials, so structural equality is polynomial
// equality.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace varchenko {

using Integer = mpz_class;

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t n_vars) : exponents_(n_vars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exponents) : exponents_(std::move(exponents)) {
        for (auto e : exponents_) degree_ += e;
    }

    std::size_t n_vars() const { return exponents_.size(); }
    std::uint64_t degree() const { return degree_; }
    std::uint32_t operator[](std::size_t i) const { return exponents_[i]; }
    std::span<const std::uint32_t> exponents() const { return exponents_; }

    void set(std::size_t i, std::uint32_t e) {
        degree_ = degree_ - exponents_[i] + e;
        exponents_[i] = e;
    }

    bool is_one() const { return degree_ == 0; }

    bool divides(const Monomial& other) const {
        for (std::size_t i = 0; i < exponents_.size(); ++i)
            if (exponents_[i] > other.exponents_[i]) return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < r.exponents_.size(); ++i) r.exponents_[i] += b.exponents_[i];
        r.degree_ += b.degree_;
        return r;
    }

    // Requires b.divides(a).
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < r.exponents_.size(); ++i) r.exponents_[i] -= b.exponents_[i];
        r.degree_ -= b.degree_;
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exponents_ == b.exponents_; }

    // Graded lexicographic comparison: negative if a < b.
    friend int compare(const Monomial& a, const Monomial& b) {
        if (a.degree_ != b.degree_) return a.degree_ < b.degree_ ? -1 : 1;
        for (std::size_t i = 0; i < a.exponents_.size(); ++i)
            if (a.exponents_[i] != b.exponents_[i]) return a.exponents_[i] < b.exponents_[i] ? -1 : 1;
        return 0;
    }

private:
    std::vector<std::uint32_t> exponents_;
    std::uint64_t degree_ = 0;
};

struct GradedLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
};

struct Term {
    Monomial monomial;
    Integer coefficient;
};

class Polynomial {
public:
    explicit Polynomial(std::size_t n_vars = 0) : n_vars_(n_vars) {}

    static Polynomial constant(std::size_t n_vars, const Integer& c) {
        Polynomial p(n_vars);
        if (c != 0) p.terms_.push_back({Monomial(n_vars), c});
        return p;
    }

    static Polynomial one(std::size_t n_vars) { return constant(n_vars, 1); }

    static Polynomial variable(std::size_t n_vars, std::size_t index) {
        if (index >= n_vars) throw std::out_of_range("variable index out of range");
        Monomial m(n_vars);
        m.set(index, 1);
        return monomial(std::move(m), 1);
    }

    static Polynomial monomial(Monomial m, const Integer& c) {
        Polynomial p(m.n_vars());
        if (c != 0) p.terms_.push_back({std::move(m), c});
        return p;
    }

    // Sorts, merges equal monomials and drops zero coefficients.
    static Polynomial from_terms(std::size_t n_vars, std::vector<Term> terms) {
        for (const auto& t : terms)
            if (t.monomial.n_vars() != n_vars) throw std::invalid_argument("monomial arity mismatch");
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return compare(a.monomial, b.monomial) > 0; });
        Polynomial p(n_vars);
        for (auto& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
                p.terms_.back().coefficient += t.coefficient;
                if (p.terms_.back().coefficient == 0) p.terms_.pop_back();
            } else if (t.coefficient != 0) {
                p.terms_.push_back(std::move(t));
            }
        }
        return p;
    }

    // Caller guarantees terms are already strictly descending with nonzero coefficients.
    static Polynomial from_sorted_terms(std::size_t n_vars, std::vector<Term> terms) {
        Polynomial p(n_vars);
        p.terms_ = std::move(terms);
        return p;
    }

    std::size_t n_vars() const { return n_vars_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
    const Term& leading_term() const { return terms_.front(); }

    Integer constant_term() const {
        if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coefficient;
        return 0;
    }

    std::uint64_t total_degree() const { return terms_.empty() ? 0 : terms_.front().monomial.degree(); }

    std::uint32_t degree_in(std::size_t var) const {
        std::uint32_t d = 0;
        for (const auto& t : terms_) d = std::max(d, t.monomial[var]);
        return d;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.n_vars_ != b.n_vars_ || a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].coefficient != b.terms_[i].coefficient || !(a.terms_[i].monomial == b.terms_[i].monomial))
                return false;
        return true;
    }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& t : r.terms_) t.coefficient = -t.coefficient;
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, 1); }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, -1); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        check_arity(a, b);
        if (a.is_zero() || b.is_zero()) return Polynomial(a.n_vars_);
        const Polynomial& small = a.size() <= b.size() ? a : b;
        const Polynomial& large = a.size() <= b.size() ? b : a;
        // Each row small[i] * large is already sorted; combine rows with a
        // binary-counter merge so every term takes part in O(log) merges.
        std::vector<std::optional<Polynomial>> levels;
        for (const auto& t : small.terms_) {
            Polynomial row = large.scaled(t.monomial, t.coefficient);
            std::size_t level = 0;
            while (level < levels.size() && levels[level]) {
                row = merge(*levels[level], row, 1);
                levels[level].reset();
                ++level;
            }
            if (level == levels.size()) levels.emplace_back();
            levels[level] = std::move(row);
        }
        Polynomial result(a.n_vars_);
        for (auto& l : levels)
            if (l) result = merge(result, *l, 1);
        return result;
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    // m * c * this
    Polynomial scaled(const Monomial& m, const Integer& c) const {
        Polynomial r(n_vars_);
        if (c == 0) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, t.coefficient * c});
        return r;
    }

private:
    static void check_arity(const Polynomial& a, const Polynomial& b) {
        if (a.n_vars_ != b.n_vars_) throw std::invalid_argument("polynomial variable-count mismatch");
    }

    static Polynomial merge(const Polynomial& a, const Polynomial& b, int sign_b) {
        check_arity(a, b);
        Polynomial r(a.n_vars_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            int cmp;
            if (i == a.terms_.size()) cmp = -1;
            else if (j == b.terms_.size()) cmp = 1;
            else cmp = compare(a.terms_[i].monomial, b.terms_[j].monomial);
            if (cmp > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (cmp < 0) {
                r.terms_.push_back(b.terms_[j]);
                if (sign_b < 0) r.terms_.back().coefficient = -r.terms_.back().coefficient;
                ++j;
            } else {
                Integer c = sign_b > 0 ? Integer(a.terms_[i].coefficient + b.terms_[j].coefficient)
                                       : Integer(a.terms_[i].coefficient - b.terms_[j].coefficient);
                if (c != 0) r.terms_.push_back({a.terms_[i].monomial, std::move(c)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    std::size_t n_vars_;
    std::vector<Term> terms_;
};

namespace detail {

// Division by g = a + b*M with a, b in {1, -1} and M a non-trivial monomial.
// Terms of f split into chains beta + j*M; along a chain the quotient obeys
// q_j = a * (f_j - b * q_{j-1}), and exactness means the chain closes at its top.
inline std::optional<Polynomial> divide_by_unit_binomial(const Polynomial& f, const Monomial& m, int a, int b) {
    const std::size_t n = f.n_vars();
    struct Entry {
        Monomial base;
        std::uint32_t step;
        const Integer* coefficient;
    };
    std::vector<Entry> entries;
    entries.reserve(f.size());
    for (const auto& t : f.terms()) {
        std::uint32_t j = UINT32_MAX;
        for (std::size_t i = 0; i < n; ++i)
            if (m[i] > 0) j = std::min(j, t.monomial[i] / m[i]);
        Monomial base(t.monomial);
        for (std::size_t i = 0; i < n; ++i)
            if (m[i] > 0) base.set(i, t.monomial[i] - j * m[i]);
        entries.push_back({std::move(base), j, &t.coefficient});
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
        int c = compare(x.base, y.base);
        return c != 0 ? c < 0 : x.step < y.step;
    });

    std::vector<Term> quotient;
    std::size_t i = 0;
    while (i < entries.size()) {
        std::size_t end = i;
        while (end < entries.size() && entries[end].base == entries[i].base) ++end;
        const Monomial& base = entries[i].base;
        Integer q = 0;
        std::uint32_t j = entries[i].step;
        std::size_t k = i;
        Monomial power(n);  // M^j, built incrementally
        for (std::size_t v = 0; v < n; ++v) power.set(v, m[v] * j);
        for (;; ++j) {
            Integer fj = 0;
            if (k < end && entries[k].step == j) fj = *entries[k++].coefficient;
            q = a * (fj - b * q);
            if (k == end) {
                if (q != 0) return std::nullopt;
                break;
            }
            if (q != 0) quotient.push_back({base * power, q});
            power = power * m;
        }
        i = end;
    }
    return Polynomial::from_terms(n, std::move(quotient));
}

inline std::optional<Polynomial> divide_general(const Polynomial& f, const Polynomial& g) {
    const Term& lead = g.leading_term();
    std::map<Monomial, Integer, GradedLexGreater> rem;
    for (const auto& t : f.terms()) rem.emplace(t.monomial, t.coefficient);
    std::vector<Term> quotient;
    while (!rem.empty()) {
        auto top = rem.begin();
        if (!lead.monomial.divides(top->first)) return std::nullopt;
        if (!mpz_divisible_p(top->second.get_mpz_t(), lead.coefficient.get_mpz_t())) return std::nullopt;
        Monomial qm = top->first / lead.monomial;
        Integer qc = top->second / lead.coefficient;
        for (const auto& t : g.terms()) {
            Monomial prod = t.monomial * qm;
            auto it = rem.find(prod);
            if (it == rem.end()) {
                rem.emplace(std::move(prod), -qc * t.coefficient);
            } else {
                it->second -= qc * t.coefficient;
                if (it->second == 0) rem.erase(it);
            }
        }
        quotient.push_back({std::move(qm), std::move(qc)});
    }
    return Polynomial::from_sorted_terms(f.n_vars(), std::move(quotient));
}

}  // namespace detail

// Exact quotient f / g, or nullopt when g does not divide f.
inline std::optional<Polynomial> exact_div(const Polynomial& f, const Polynomial& g) {
    if (f.n_vars() != g.n_vars()) throw std::invalid_argument("polynomial variable-count mismatch");
    if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (f.is_zero()) return Polynomial(f.n_vars());
    if (g.size() == 1) {
        const Term& d = g.leading_term();
        std::vector<Term> q;
        q.reserve(f.size());
        for (const auto& t : f.terms()) {
            if (!d.monomial.divides(t.monomial)) return std::nullopt;
            if (!mpz_divisible_p(t.coefficient.get_mpz_t(), d.coefficient.get_mpz_t())) return std::nullopt;
            q.push_back({t.monomial / d.monomial, t.coefficient / d.coefficient});
        }
        return Polynomial::from_sorted_terms(f.n_vars(), std::move(q));
    }
    if (g.size() == 2 && g.terms()[1].monomial.is_one()) {
        const Integer& b = g.terms()[0].coefficient;
        const Integer& a = g.terms()[1].coefficient;
        if (abs(a) == 1 && abs(b) == 1)
            return detail::divide_by_unit_binomial(f, g.terms()[0].monomial, a.get_si(), b.get_si());
    }
    return detail::divide_general(f, g);
}

// Sets variable `var` to an integer value; the variable no longer occurs.
inline Polynomial substitute(const Polynomial& f, std::size_t var, long value) {
    if (var >= f.n_vars()) throw std::out_of_range("variable index out of range");
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
        Integer c = t.coefficient;
        if (t.monomial[var] > 0) {
            if (value == 0) continue;
            Integer p;
            mpz_pow_ui(p.get_mpz_t(), Integer(value).get_mpz_t(), t.monomial[var]);
            c *= p;
        }
        Monomial m(t.monomial);
        m.set(var, 0);
        out.push_back({std::move(m), std::move(c)});
    }
    return Polynomial::from_terms(f.n_vars(), std::move(out));
}

// Moves variable i to mapping[i] in a ring with n_vars variables.
inline Polynomial rename_variables(const Polynomial& f, std::span<const std::size_t> mapping, std::size_t n_vars) {
    if (mapping.size() != f.n_vars()) throw std::invalid_argument("variable mapping has wrong length");
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
        std::vector<std::uint32_t> e(n_vars, 0);
        for (std::size_t i = 0; i < mapping.size(); ++i) {
            if (t.monomial[i] == 0) continue;
            if (mapping[i] >= n_vars) throw std::out_of_range("variable mapping target out of range");
            e[mapping[i]] += t.monomial[i];
        }
        out.push_back({Monomial(std::move(e)), t.coefficient});
    }
    return Polynomial::from_terms(n_vars, std::move(out));
}

inline Polynomial pow(const Polynomial& base, unsigned exponent) {
    Polynomial result = Polynomial::one(base.n_vars());
    Polynomial b = base;
    while (exponent > 0) {
        if (exponent & 1u) result *= b;
        exponent >>= 1;
        if (exponent > 0) b *= b;
    }
    return result;
}

inline std::string to_string(const Monomial& m) {
    std::string out;
    for (std::size_t i = 0; i < m.n_vars(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += 'x' + std::to_string(i + 1);
        if (m[i] > 1) out += '^' + std::to_string(m[i]);
    }
    return out;
}

// Canonical text form, e.g. "x1^2*x2^2 - x1^2 - x2^2 + 1".
inline std::string to_canonical_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : f.terms()) {
        Integer c = t.coefficient;
        if (first) {
            if (c < 0) out += '-';
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (c < 0) c = -c;
        const bool unit = t.monomial.is_one();
        if (unit) {
            out += c.get_str();
        } else {
            if (c != 1) out += c.get_str() + '*';
            out += to_string(t.monomial);
        }
        first = false;
    }
    return out;
}

// Parses sums of terms like "3*x1^2*x2 - x3 + 1". Variables are x1..x{n_vars}.
inline Polynomial parse_polynomial(std::string_view text, std::size_t n_vars) {
    std::size_t pos = 0;
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("cannot parse polynomial at offset " + std::to_string(pos) + ": " + what);
    };
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_uint = [&]() -> std::string {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) fail("expected digits");
        return std::string(text.substr(start, pos - start));
    };

    std::vector<Term> terms;
    skip_ws();
    if (pos == text.size()) fail("empty input");
    bool first = true;
    while (true) {
        skip_ws();
        if (pos == text.size()) break;
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip_ws();
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;
        Integer coefficient = sign;
        std::vector<std::uint32_t> exps(n_vars, 0);
        bool need_factor = true;
        while (need_factor) {
            skip_ws();
            if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                coefficient *= Integer(read_uint());
            } else if (pos < text.size() && text[pos] == 'x') {
                ++pos;
                unsigned long idx = std::stoul(read_uint());
                if (idx == 0 || idx > n_vars) fail("variable x" + std::to_string(idx) + " out of range");
                std::uint32_t e = 1;
                skip_ws();
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    skip_ws();
                    e = static_cast<std::uint32_t>(std::stoul(read_uint()));
                }
                exps[idx - 1] += e;
            } else {
                fail("expected coefficient or variable");
            }
            skip_ws();
            need_factor = pos < text.size() && text[pos] == '*';
            if (need_factor) ++pos;
        }
        terms.push_back({Monomial(std::move(exps)), std::move(coefficient)});
    }
    return Polynomial::from_terms(n_vars, std::move(terms));
}

}  // namespace varchenko
