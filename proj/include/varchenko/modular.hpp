#pragma once

// Determinants of matrices whose entries are squarefree monomials, by
// evaluation at grid points modulo several word-size primes, tensor-product
// interpolation and Chinese remaindering.
//
// The caller supplies, per variable, a bound on the degree of the
// determinant in x^2 and guarantees the determinant is even in every
// variable. Coefficients are bounded in absolute value by n! (the sum of
// |coefficients| is at most the permanent of the all-ones matrix), which
// fixes how many primes are needed.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "varchenko/polynomial.hpp"

namespace varchenko::modular {

inline constexpr std::array<std::uint32_t, 16> kPrimes = {
    2147483647u, 2147483629u, 2147483587u, 2147483579u, 2147483563u, 2147483549u, 2147483543u, 2147483497u,
    2147483489u, 2147483477u, 2147483423u, 2147483399u, 2147483353u, 2147483323u, 2147483269u, 2147483249u};

// Grids larger than this are refused; callers fall back to elimination over Z[x].
inline constexpr std::uint64_t kMaxGridPoints = 40'000'000;

template <std::uint32_t P>
std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    b %= P;
    while (e) {
        if (e & 1) r = r * b % P;
        b = b * b % P;
        e >>= 1;
    }
    return r;
}

// Destroys `a` (row-major n x n, entries < P).
template <std::uint32_t P>
std::uint32_t det_mod(std::uint32_t* a, std::size_t n) {
    std::uint64_t det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t r = k;
        while (r < n && a[r * n + k] == 0) ++r;
        if (r == n) return 0;
        if (r != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(a[r * n + j], a[k * n + j]);
            det = det == 0 ? 0 : P - det;
        }
        std::uint32_t* pivot = a + k * n;
        det = det * pivot[k] % P;
        const std::uint64_t inv = pow_mod<P>(pivot[k], P - 2);
        for (std::size_t j = k + 1; j < n; ++j) pivot[j] = static_cast<std::uint32_t>(pivot[j] * inv % P);
        for (std::size_t i = k + 1; i < n; ++i) {
            std::uint32_t* row = a + i * n;
            const std::uint64_t f = row[k];
            if (f == 0) continue;
            const std::uint64_t nf = P - f;
            for (std::size_t j = k + 1; j < n; ++j) row[j] = static_cast<std::uint32_t>((row[j] + nf * pivot[j]) % P);
        }
    }
    return static_cast<std::uint32_t>(det);
}

// Inverse of the Vandermonde matrix on nodes y_j = j^2, row-major, so that
// coefficients = inverse * values.
template <std::uint32_t P>
std::vector<std::uint64_t> inverse_square_vandermonde(std::size_t size) {
    std::vector<std::uint64_t> m(size * 2 * size, 0);
    const std::size_t w = 2 * size;
    for (std::size_t j = 0; j < size; ++j) {
        std::uint64_t y = static_cast<std::uint64_t>(j) * j % P, p = 1;
        for (std::size_t e = 0; e < size; ++e) {
            m[j * w + e] = p;
            p = p * y % P;
        }
        m[j * w + size + j] = 1;
    }
    for (std::size_t c = 0; c < size; ++c) {
        std::size_t r = c;
        while (m[r * w + c] == 0) ++r;  // nodes are distinct, so a pivot exists
        for (std::size_t j = 0; j < w; ++j) std::swap(m[r * w + j], m[c * w + j]);
        const std::uint64_t inv = pow_mod<P>(m[c * w + c], P - 2);
        for (std::size_t j = 0; j < w; ++j) m[c * w + j] = m[c * w + j] * inv % P;
        for (std::size_t i = 0; i < size; ++i) {
            if (i == c || m[i * w + c] == 0) continue;
            const std::uint64_t f = P - m[i * w + c];
            for (std::size_t j = 0; j < w; ++j) m[i * w + j] = (m[i * w + j] + f * m[c * w + j]) % P;
        }
    }
    std::vector<std::uint64_t> inv(size * size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) inv[i * size + j] = m[i * w + size + j];
    return inv;
}

struct MonomialMatrix {
    std::size_t n = 0;                 // matrix dimension
    std::size_t n_vars = 0;            // < 64
    std::vector<std::uint64_t> masks;  // row-major; entry = prod of x_c over set bits
};

// Determinant coefficients modulo P on the y-exponent grid, last variable fastest.
template <std::uint32_t P>
std::vector<std::uint32_t> determinant_grid_mod(const MonomialMatrix& mm, std::span<const std::size_t> bounds) {
    const std::size_t n = mm.n, k = mm.n_vars;
    std::vector<std::size_t> dims(k);
    std::size_t total = 1;
    for (std::size_t c = 0; c < k; ++c) {
        dims[c] = bounds[c] + 1;
        total *= dims[c];
    }

    // Distinct masks, so each point evaluates every monomial once.
    std::vector<std::uint64_t> distinct(mm.masks);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<std::uint32_t> slot(mm.masks.size());
    for (std::size_t i = 0; i < mm.masks.size(); ++i)
        slot[i] = static_cast<std::uint32_t>(std::lower_bound(distinct.begin(), distinct.end(), mm.masks[i]) - distinct.begin());

    std::vector<std::uint32_t> values(total);
    std::vector<std::uint32_t> work(n * n), mono(distinct.size());
    std::vector<std::size_t> idx(k, 0);
    for (std::size_t point = 0; point < total; ++point) {
        for (std::size_t d = 0; d < distinct.size(); ++d) {
            std::uint64_t v = 1, mask = distinct[d];
            while (mask) {
                v = v * idx[static_cast<std::size_t>(std::countr_zero(mask))] % P;
                mask &= mask - 1;
            }
            mono[d] = static_cast<std::uint32_t>(v);
        }
        for (std::size_t i = 0; i < n * n; ++i) work[i] = mono[slot[i]];
        values[point] = det_mod<P>(work.data(), n);
        for (std::size_t c = k; c-- > 0;) {
            if (++idx[c] < dims[c]) break;
            idx[c] = 0;
        }
    }

    // Values at x_c = j (y_c = j^2) to coefficients in y, one axis at a time.
    std::size_t stride = 1;
    std::vector<std::uint64_t> line;
    for (std::size_t c = k; c-- > 0;) {
        const std::size_t d = dims[c];
        const auto inv = inverse_square_vandermonde<P>(d);
        line.resize(d);
        const std::size_t block = stride * d;
        for (std::size_t base = 0; base < total; base += block) {
            for (std::size_t off = 0; off < stride; ++off) {
                for (std::size_t j = 0; j < d; ++j) line[j] = values[base + off + j * stride];
                for (std::size_t e = 0; e < d; ++e) {
                    std::uint64_t acc = 0;
                    for (std::size_t j = 0; j < d; ++j) acc = (acc + inv[e * d + j] * line[j]) % P;
                    values[base + off + e * stride] = static_cast<std::uint32_t>(acc);
                }
            }
        }
        stride = block;
    }
    return values;
}

namespace detail {

template <std::size_t... I>
constexpr auto make_grid_table(std::index_sequence<I...>) {
    using Fn = std::vector<std::uint32_t> (*)(const MonomialMatrix&, std::span<const std::size_t>);
    return std::array<Fn, sizeof...(I)>{&determinant_grid_mod<kPrimes[I]>...};
}

inline constexpr auto kGridTable = make_grid_table(std::make_index_sequence<kPrimes.size()>{});

}  // namespace detail

inline std::uint64_t grid_points(std::span<const std::size_t> bounds) {
    std::uint64_t total = 1;
    for (auto b : bounds) {
        total *= b + 1;
        if (total > kMaxGridPoints) return UINT64_MAX;
    }
    return total;
}

// Number of primes whose product exceeds 2 * n!.
inline std::optional<std::size_t> primes_needed(std::size_t n) {
    mpz_class bound;
    mpz_fac_ui(bound.get_mpz_t(), n);
    bound *= 2;
    mpz_class prod = 1;
    for (std::size_t r = 0; r < kPrimes.size(); ++r) {
        prod *= kPrimes[r];
        if (prod > bound) return r + 1;
    }
    return std::nullopt;
}

// Exact determinant, or nullopt when the problem exceeds the grid or prime budget.
// bounds[c] bounds the degree of the determinant in x_c^2.
inline std::optional<Polynomial> even_determinant(const MonomialMatrix& mm, std::span<const std::size_t> bounds) {
    if (mm.n_vars >= 64 || bounds.size() != mm.n_vars || mm.masks.size() != mm.n * mm.n)
        throw std::invalid_argument("malformed monomial matrix");
    if (mm.n == 0) return Polynomial::one(mm.n_vars);
    const std::uint64_t total = grid_points(bounds);
    if (total > kMaxGridPoints) return std::nullopt;
    const auto n_primes = primes_needed(mm.n);
    if (!n_primes) return std::nullopt;

    std::vector<std::vector<std::uint32_t>> residues;
    for (std::size_t r = 0; r < *n_primes; ++r) residues.push_back(detail::kGridTable[r](mm, bounds));

    // Garner reconstruction into the symmetric range.
    std::vector<mpz_class> moduli_prefix(*n_primes);
    std::vector<std::uint64_t> prefix_inverse(*n_primes);
    mpz_class modulus = 1;
    for (std::size_t r = 0; r < *n_primes; ++r) {
        moduli_prefix[r] = modulus;
        const std::uint64_t p = kPrimes[r];
        const std::uint64_t mod_p = mpz_fdiv_ui(modulus.get_mpz_t(), p);
        mpz_class inv, base = static_cast<unsigned long>(mod_p), pm = static_cast<unsigned long>(p);
        if (r > 0) mpz_invert(inv.get_mpz_t(), base.get_mpz_t(), pm.get_mpz_t());
        prefix_inverse[r] = r > 0 ? inv.get_ui() : 1;
        modulus *= static_cast<unsigned long>(p);
    }
    const mpz_class half = modulus / 2;

    const std::size_t k = mm.n_vars;
    std::vector<Term> terms;
    std::vector<std::size_t> idx(k, 0);
    mpz_class x;
    for (std::uint64_t point = 0; point < total; ++point) {
        bool all_zero = true;
        for (std::size_t r = 0; r < *n_primes && all_zero; ++r) all_zero = residues[r][point] == 0;
        if (!all_zero) {
            x = residues[0][point];
            for (std::size_t r = 1; r < *n_primes; ++r) {
                const std::uint64_t p = kPrimes[r];
                const std::uint64_t xr = mpz_fdiv_ui(x.get_mpz_t(), p);
                const std::uint64_t t = (residues[r][point] + p - xr) % p * prefix_inverse[r] % p;
                x += moduli_prefix[r] * static_cast<unsigned long>(t);
            }
            if (x > half) x -= modulus;
            if (x != 0) {
                std::vector<std::uint32_t> e(k);
                for (std::size_t c = 0; c < k; ++c) e[c] = static_cast<std::uint32_t>(2 * idx[c]);
                terms.push_back({Monomial(std::move(e)), x});
            }
        }
        for (std::size_t c = k; c-- > 0;) {
            if (++idx[c] <= bounds[c]) break;
            idx[c] = 0;
        }
    }
    return Polynomial::from_terms(k, std::move(terms));
}

}  // namespace varchenko::modular
