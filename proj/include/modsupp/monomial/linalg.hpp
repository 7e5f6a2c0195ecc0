#pragma once

/// @file linalg.hpp
/// @brief Exact rank of small integer matrices over Q or F_p.

#include "modsupp/core/error.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace modsupp {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

namespace detail {

/// Fraction-free elimination; every intermediate entry is a minor of the input,
/// so the divisions are exact. Returns nullopt if an int64 product overflows.
inline std::optional<std::size_t> bareiss_rank_int64(IntMatrix m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m.front().size();
    std::int64_t prev = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        const std::int64_t p = m[rank][c];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const std::int64_t f = m[i][c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                std::int64_t a = 0, b = 0, d = 0;
                if (__builtin_mul_overflow(p, m[i][j], &a) || __builtin_mul_overflow(f, m[rank][j], &b) || __builtin_sub_overflow(a, b, &d)) {
                    return std::nullopt;
                }
                m[i][j] = d / prev;
            }
            m[i][c] = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

inline std::size_t bareiss_rank_mpz(const IntMatrix& input) {
    const std::size_t rows = input.size();
    const std::size_t cols = rows == 0 ? 0 : input.front().size();
    std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = static_cast<long>(input[i][j]);
    }
    mpz_class prev = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                m[i][j] = m[rank][c] * m[i][j] - m[i][c] * m[rank][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[rank][c];
        ++rank;
    }
    return rank;
}

inline std::size_t rank_mod_p(IntMatrix m, std::uint64_t p) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m.front().size();
    const auto P = static_cast<std::int64_t>(p);
    for (auto& row : m) {
        for (auto& x : row) x = ((x % P) + P) % P;
    }
    auto power = [&](std::int64_t base, std::uint64_t exp) {
        std::int64_t result = 1;
        base %= P;
        while (exp > 0) {
            if (exp & 1) result = static_cast<std::int64_t>((static_cast<__int128>(result) * base) % P);
            base = static_cast<std::int64_t>((static_cast<__int128>(base) * base) % P);
            exp >>= 1;
        }
        return result;
    };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        const std::int64_t inv = power(m[rank][c], p - 2);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            const std::int64_t f = static_cast<std::int64_t>((static_cast<__int128>(m[i][c]) * inv) % P);
            for (std::size_t j = c; j < cols; ++j) {
                const std::int64_t sub = static_cast<std::int64_t>((static_cast<__int128>(f) * m[rank][j]) % P);
                m[i][j] = (m[i][j] - sub + P) % P;
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace detail

/// Rank over Q when characteristic is 0, otherwise over F_p (p prime).
inline std::size_t matrix_rank(const IntMatrix& m, std::uint64_t characteristic) {
    if (characteristic != 0) return detail::rank_mod_p(m, characteristic);
    if (const auto r = detail::bareiss_rank_int64(m)) return *r;
    return detail::bareiss_rank_mpz(m);
}

}  // namespace modsupp
