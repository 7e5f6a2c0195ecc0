#pragma once

/// @file estimate.hpp
/// @brief Lower bound on the share of k-dimensional codes in F_q^n generated by
/// their maximal codewords, and a seeded Monte Carlo estimate of that share.

#include "modsupp/core/error.hpp"
#include "modsupp/core/limits.hpp"
#include "modsupp/core/parallel.hpp"
#include "modsupp/ring/ring.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace modsupp {

struct MaximalEstimate {
    mpz_class numerator;    ///< (q-1)^n (q^k-1) - (q^n-1) q^(k-1), unreduced
    mpz_class denominator;  ///< (q^n-1)(q^k-q^(k-1)-1), unreduced
    mpq_class value;        ///< the reduced fraction
};

namespace detail {

inline void check_field_parameters(std::uint64_t q, std::uint64_t n, std::uint64_t k) {
    if (q < 2 || prime_power(q).first == 0) throw ValidationError("q = " + std::to_string(q) + " is not a prime power");
    if (k < 1 || k > n) throw ValidationError("need 1 <= k <= n, got k = " + std::to_string(k) + ", n = " + std::to_string(n));
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Uniform value below bound by rejection, independent of the standard library's distributions.
inline std::uint32_t uniform_below(std::mt19937_64& rng, std::uint32_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x = rng();
    while (x >= limit) x = rng();
    return static_cast<std::uint32_t>(x % bound);
}

/// Row-reduces rows over a field in place and returns the rank.
inline std::size_t field_rank(const Ring& F, std::vector<std::vector<RingElem>> rows) {
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == F.zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[rank]);
        const RingElem inv = F.inverse(rows[rank][c]);
        for (auto& x : rows[rank]) x = F.mul(x, inv);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == F.zero()) continue;
            const RingElem factor = rows[r][c];
            for (std::size_t j = 0; j < cols; ++j) rows[r][j] = F.sub(rows[r][j], F.mul(factor, rows[rank][j]));
        }
        ++rank;
    }
    return rank;
}

}  // namespace detail

inline MaximalEstimate estimate_maximal(std::uint64_t q, std::uint64_t n, std::uint64_t k) {
    detail::check_field_parameters(q, n, k);
    if (q == 2 && k == 1) throw ValidationError("the estimate is undefined for q = 2, k = 1 (zero denominator)");
    mpz_class qz(static_cast<unsigned long>(q));
    mpz_class qn, qk, qk1, qm1n;
    mpz_pow_ui(qn.get_mpz_t(), qz.get_mpz_t(), n);
    mpz_pow_ui(qk.get_mpz_t(), qz.get_mpz_t(), k);
    mpz_pow_ui(qk1.get_mpz_t(), qz.get_mpz_t(), k - 1);
    mpz_class qm1 = qz - 1;
    mpz_pow_ui(qm1n.get_mpz_t(), qm1.get_mpz_t(), n);
    MaximalEstimate out;
    out.numerator = qm1n * (qk - 1) - (qn - 1) * qk1;
    out.denominator = (qn - 1) * (qk - qk1 - 1);
    out.value = mpq_class(out.numerator, out.denominator);
    out.value.canonicalize();
    return out;
}

struct MonteCarloResult {
    std::uint64_t samples = 0;
    std::uint64_t generated = 0;

    double proportion() const { return samples == 0 ? 0.0 : static_cast<double>(generated) / static_cast<double>(samples); }
    double standard_error() const {
        if (samples == 0) return 0.0;
        const double p = proportion();
        return std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
    }
};

/// Samples uniform k-dimensional codes as row spaces of random rank-k matrices and
/// counts those generated by their maximal codewords. Sample i uses its own
/// generator seeded from (seed, i), so the result is independent of threading.
inline MonteCarloResult monte_carlo_maximal(std::uint64_t q, std::uint64_t n, std::uint64_t k, std::uint64_t samples, std::uint64_t seed,
                                            const Limits& limits = Limits::from_environment()) {
    detail::check_field_parameters(q, n, k);
    if (n > 63) throw CapExceeded("monte_carlo_maximal needs n <= 63");
    if (q > kRingSizeCap) throw CapExceeded("field too large");
    const Ring F = Ring::field(static_cast<std::uint32_t>(q));
    long double words = std::pow(static_cast<long double>(q), static_cast<long double>(k));
    if (words * static_cast<long double>(n) > static_cast<long double>(limits.enumeration)) {
        throw CapExceeded("q^k * n exceeds the 'enumeration' cap");
    }
    const std::uint64_t count = static_cast<std::uint64_t>(words);

    std::vector<char> hit(samples, 0);
    detail::parallel_for(samples, limits.worker_count(), [&](std::size_t index) {
        std::mt19937_64 rng(detail::splitmix64(seed ^ detail::splitmix64(index)));
        std::vector<std::vector<RingElem>> G(k, std::vector<RingElem>(n));
        do {
            for (auto& row : G) {
                for (auto& x : row) x = RingElem{detail::uniform_below(rng, static_cast<std::uint32_t>(q))};
            }
        } while (detail::field_rank(F, G) != k);

        std::vector<std::vector<RingElem>> code(count, std::vector<RingElem>(n, F.zero()));
        std::vector<std::uint64_t> mask(count, 0);
        std::vector<std::uint32_t> coeff(k, 0);
        for (std::uint64_t c = 0; c < count; ++c) {
            std::uint64_t rest = c;
            for (std::size_t r = 0; r < k; ++r) {
                coeff[r] = static_cast<std::uint32_t>(rest % q);
                rest /= q;
            }
            for (std::size_t r = 0; r < k; ++r) {
                if (coeff[r] == 0) continue;
                for (std::size_t j = 0; j < n; ++j) code[c][j] = F.add(code[c][j], F.mul(RingElem{coeff[r]}, G[r][j]));
            }
            for (std::size_t j = 0; j < n; ++j) {
                if (code[c][j] != F.zero()) mask[c] |= std::uint64_t{1} << j;
            }
        }
        std::vector<std::uint64_t> distinct(mask.begin(), mask.end());
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        std::vector<std::uint64_t> maximal;
        for (const std::uint64_t m : distinct) {
            if (m == 0) continue;
            const bool dominated = std::any_of(distinct.begin(), distinct.end(), [&](std::uint64_t o) { return o != m && (m & o) == m; });
            if (!dominated) maximal.push_back(m);
        }
        std::vector<std::vector<RingElem>> rows;
        for (std::uint64_t c = 0; c < count; ++c) {
            if (std::binary_search(maximal.begin(), maximal.end(), mask[c])) rows.push_back(code[c]);
        }
        hit[index] = detail::field_rank(F, std::move(rows)) == k;
    });
    MonteCarloResult out;
    out.samples = samples;
    for (const char h : hit) out.generated += h;
    return out;
}

}  // namespace modsupp
