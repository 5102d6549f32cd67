#pragma once

// Sign vectors over a finite ground set and the COM axioms: face symmetry
// and strong elimination. Also simplicity, topes and tope graphs.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "varchenko/graph.hpp"

namespace varchenko {

// Enumerator order is the storage order of covector sets: 0 < + < -.
enum class Sign : std::int8_t { zero = 0, plus = 1, minus = 2 };

inline Sign negate(Sign s) { return s == Sign::plus ? Sign::minus : s == Sign::minus ? Sign::plus : Sign::zero; }

inline char to_char(Sign s) { return s == Sign::plus ? '+' : s == Sign::minus ? '-' : '0'; }

class SignVector {
public:
    SignVector() = default;
    explicit SignVector(std::vector<Sign> entries) : entries_(std::move(entries)) {}

    static SignVector parse(std::string_view text) {
        std::vector<Sign> e;
        for (char ch : text) {
            switch (ch) {
                case '0': e.push_back(Sign::zero); break;
                case '+': e.push_back(Sign::plus); break;
                case '-': e.push_back(Sign::minus); break;
                default: throw std::invalid_argument(std::string("invalid sign character '") + ch + "'");
            }
        }
        return SignVector(std::move(e));
    }

    std::size_t size() const { return entries_.size(); }
    Sign operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<Sign>& entries() const { return entries_; }

    SignVector operator-() const {
        SignVector r(*this);
        for (auto& s : r.entries_) s = negate(s);
        return r;
    }

    bool zero_free() const {
        return std::none_of(entries_.begin(), entries_.end(), [](Sign s) { return s == Sign::zero; });
    }

    std::string str() const {
        std::string s;
        for (auto e : entries_) s += to_char(e);
        return s;
    }

    friend auto operator<=>(const SignVector&, const SignVector&) = default;
    friend bool operator==(const SignVector&, const SignVector&) = default;

private:
    std::vector<Sign> entries_;
};

inline void check_lengths(const SignVector& x, const SignVector& y) {
    if (x.size() != y.size()) throw std::invalid_argument("sign vectors have different lengths");
}

inline SignVector compose(const SignVector& x, const SignVector& y) {
    check_lengths(x, y);
    std::vector<Sign> e(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) e[i] = x[i] != Sign::zero ? x[i] : y[i];
    return SignVector(std::move(e));
}

inline std::vector<std::size_t> separator_sv(const SignVector& x, const SignVector& y) {
    check_lengths(x, y);
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != Sign::zero && y[i] == negate(x[i])) s.push_back(i);
    return s;
}

inline std::vector<std::size_t> zero_set(const SignVector& x) {
    std::vector<std::size_t> z;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] == Sign::zero) z.push_back(i);
    return z;
}

inline std::vector<std::size_t> support(const SignVector& x) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != Sign::zero) s.push_back(i);
    return s;
}

class CovectorSet {
public:
    CovectorSet() = default;

    // Sorts and deduplicates; all vectors must have length ground_size.
    CovectorSet(std::size_t ground_size, std::vector<SignVector> vectors)
        : ground_size_(ground_size), vectors_(std::move(vectors)) {
        for (const auto& v : vectors_)
            if (v.size() != ground_size_) throw std::invalid_argument("covector length differs from ground set size");
        std::sort(vectors_.begin(), vectors_.end());
        vectors_.erase(std::unique(vectors_.begin(), vectors_.end()), vectors_.end());
    }

    // All of {0,+,-}^n.
    static CovectorSet full(std::size_t n) {
        std::vector<SignVector> vs;
        std::size_t total = 1;
        for (std::size_t i = 0; i < n; ++i) total *= 3;
        for (std::size_t code = 0; code < total; ++code) {
            std::vector<Sign> e(n);
            std::size_t c = code;
            for (std::size_t i = 0; i < n; ++i, c /= 3) e[i] = static_cast<Sign>(c % 3);
            vs.emplace_back(std::move(e));
        }
        return CovectorSet(n, std::move(vs));
    }

    std::size_t ground_size() const { return ground_size_; }
    std::size_t size() const { return vectors_.size(); }
    const std::vector<SignVector>& vectors() const { return vectors_; }
    bool contains(const SignVector& x) const { return std::binary_search(vectors_.begin(), vectors_.end(), x); }

private:
    std::size_t ground_size_ = 0;
    std::vector<SignVector> vectors_;
};

struct AxiomVerdict {
    enum class Kind { com, face_symmetry_violation, strong_elimination_violation };
    Kind kind = Kind::com;
    SignVector x, y;
    std::size_t element = 0;  // e for strong elimination

    bool is_com() const { return kind == Kind::com; }
};

inline std::string to_string(const AxiomVerdict& v) {
    switch (v.kind) {
        case AxiomVerdict::Kind::com: return "COM";
        case AxiomVerdict::Kind::face_symmetry_violation: return "FS-violation(" + v.x.str() + "," + v.y.str() + ")";
        case AxiomVerdict::Kind::strong_elimination_violation:
            return "SE-violation(" + v.x.str() + "," + v.y.str() + "," + std::to_string(v.element) + ")";
    }
    return "?";
}

// Checks face symmetry, then strong elimination, over ordered pairs in
// storage order; the first failure is returned.
inline AxiomVerdict check_axioms(const CovectorSet& l) {
    const auto& vs = l.vectors();
    for (const auto& x : vs)
        for (const auto& y : vs)
            if (!l.contains(compose(x, -y)))
                return {AxiomVerdict::Kind::face_symmetry_violation, x, y, 0};
    for (const auto& x : vs) {
        for (const auto& y : vs) {
            const auto sep = separator_sv(x, y);
            if (sep.empty()) continue;
            const SignVector xy = compose(x, y);
            std::vector<bool> in_sep(l.ground_size(), false);
            for (auto e : sep) in_sep[e] = true;
            for (auto e : sep) {
                bool found = std::any_of(vs.begin(), vs.end(), [&](const SignVector& z) {
                    if (z[e] != Sign::zero) return false;
                    for (std::size_t f = 0; f < l.ground_size(); ++f)
                        if (!in_sep[f] && z[f] != xy[f]) return false;
                    return true;
                });
                if (!found) return {AxiomVerdict::Kind::strong_elimination_violation, x, y, e};
            }
        }
    }
    return {};
}

inline bool is_simple(const CovectorSet& l) {
    const std::size_t n = l.ground_size();
    auto product = [](Sign a, Sign b) {
        if (a == Sign::zero || b == Sign::zero) return Sign::zero;
        return a == b ? Sign::plus : Sign::minus;
    };
    for (std::size_t e = 0; e < n; ++e) {
        bool seen[3] = {false, false, false};
        for (const auto& x : l.vectors()) seen[static_cast<int>(x[e])] = true;
        if (!(seen[0] && seen[1] && seen[2])) return false;
        for (std::size_t f = e + 1; f < n; ++f) {
            bool prod[3] = {false, false, false};
            for (const auto& x : l.vectors()) prod[static_cast<int>(product(x[e], x[f]))] = true;
            if (!(prod[0] && prod[1] && prod[2])) return false;
        }
    }
    return true;
}

// Covectors whose support is inclusion-maximal, in storage order.
inline std::vector<SignVector> topes(const CovectorSet& l) {
    std::vector<std::vector<bool>> supp;
    for (const auto& x : l.vectors()) {
        std::vector<bool> s(l.ground_size());
        for (std::size_t i = 0; i < s.size(); ++i) s[i] = x[i] != Sign::zero;
        supp.push_back(std::move(s));
    }
    auto strictly_inside = [](const std::vector<bool>& a, const std::vector<bool>& b) {
        bool proper = false;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] && !b[i]) return false;
            if (!a[i] && b[i]) proper = true;
        }
        return proper;
    };
    std::vector<SignVector> out;
    for (std::size_t i = 0; i < supp.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < supp.size() && maximal; ++j)
            if (strictly_inside(supp[i], supp[j])) maximal = false;
        if (maximal) out.push_back(l.vectors()[i]);
    }
    return out;
}

// Graph on the given topes, adjacent when exactly one element separates them.
inline Graph tope_graph(const std::vector<SignVector>& ts) {
    std::vector<Edge> es;
    for (std::size_t i = 0; i < ts.size(); ++i)
        for (std::size_t j = i + 1; j < ts.size(); ++j)
            if (separator_sv(ts[i], ts[j]).size() == 1) es.emplace_back(i, j);
    return Graph(ts.size(), es);
}

inline Graph tope_graph(const CovectorSet& l) { return tope_graph(topes(l)); }

}  // namespace varchenko
