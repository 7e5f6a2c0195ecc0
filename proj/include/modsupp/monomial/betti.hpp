#pragma once

/// @file betti.hpp
/// @brief Multigraded Betti numbers of S/I for a monomial ideal I, from the
/// multidegree strands of its Taylor complex.
///
/// The Taylor complex has a basis element F_A for each nonempty subset A of the
/// generators, in multidegree lcm(A). It is a free resolution of S/I, though in
/// general not a minimal one. Tensoring with the residue field kills every
/// differential term that changes the lcm, so the complex splits into one finite
/// complex of vector spaces per lcm value a, and beta_{r,a} is the homology of
/// that strand in homological degree r.

#include "modsupp/core/error.hpp"
#include "modsupp/core/limits.hpp"
#include "modsupp/core/parallel.hpp"
#include "modsupp/monomial/ideal.hpp"
#include "modsupp/monomial/linalg.hpp"
#include "modsupp/ring/chain_factor.hpp"

#include <bit>
#include <map>
#include <unordered_map>
#include <vector>

namespace modsupp {

/// One multidegree a at homological degree r of the Taylor complex.
struct StrandEntry {
    std::size_t r = 0;
    Monomial degree;
    std::uint64_t taylor_rank = 0;  ///< number of r-subsets with lcm = degree
    std::uint64_t betti = 0;        ///< beta_{r,degree}
    std::vector<std::size_t> first_subset;  ///< lexicographically least r-subset with lcm = degree
};

struct BettiTable {
    std::uint64_t characteristic = 0;
    std::size_t u = 0;
    std::size_t generators = 0;
    /// Every (r, a) with a nonzero Taylor rank, by r, then total degree, then a.
    std::vector<StrandEntry> strands;
    /// coarse[r][d] = sum of beta_{r,a} over |a| = d; zero entries omitted.
    std::map<std::size_t, std::map<std::uint64_t, std::uint64_t>> coarse;
    /// Same grading for the ranks of the Taylor complex.
    std::map<std::size_t, std::map<std::uint64_t, std::uint64_t>> taylor_coarse;
    std::size_t projective_dimension = 0;
    /// min_shifts[r-1] = least |a| with beta_{r,a} != 0, for r = 1..pd.
    std::vector<std::uint64_t> min_shifts;

    std::uint64_t betti(std::size_t r, std::uint64_t total_degree) const {
        const auto row = coarse.find(r);
        if (row == coarse.end()) return 0;
        const auto cell = row->second.find(total_degree);
        return cell == row->second.end() ? 0 : cell->second;
    }

    /// The nonzero multigraded entry of least total degree (then least a) at r.
    const StrandEntry* least_shift(std::size_t r) const {
        for (const StrandEntry& e : strands) {
            if (e.r == r && e.betti != 0) return &e;
        }
        return nullptr;
    }
};

namespace detail {

inline constexpr std::size_t kTaylorHardCap = 28;

/// lcm of each generator subset, interned by value; subsets are bit masks.
struct LcmLattice {
    std::vector<Monomial> values;
    std::vector<std::uint32_t> id_of_mask;

    explicit LcmLattice(const MonomialIdeal& I) {
        const std::size_t t = I.size();
        const auto& gens = I.generators();
        std::map<Monomial, std::uint32_t> intern;
        auto id_for = [&](Monomial m) {
            const auto [it, fresh] = intern.emplace(std::move(m), static_cast<std::uint32_t>(values.size()));
            if (fresh) values.push_back(it->first);
            return it->second;
        };
        id_of_mask.assign(std::size_t{1} << t, 0);
        id_of_mask[0] = id_for(Monomial(I.u(), 0));
        std::unordered_map<std::uint64_t, std::uint32_t> step;
        for (std::uint64_t mask = 1; mask < id_of_mask.size(); ++mask) {
            const std::uint64_t rest = mask & (mask - 1);
            const auto g = static_cast<std::uint64_t>(std::countr_zero(mask));
            const std::uint64_t key = std::uint64_t{id_of_mask[rest]} * t + g;
            auto it = step.find(key);
            if (it == step.end()) it = step.emplace(key, id_for(lcm(values[id_of_mask[rest]], gens[g]))).first;
            id_of_mask[mask] = it->second;
        }
    }
};

inline std::vector<std::size_t> mask_indices(std::uint64_t mask) {
    std::vector<std::size_t> out;
    while (mask) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
    return out;
}

/// Lexicographic order on the sorted index lists of two masks.
inline bool subset_lex_less(std::uint64_t a, std::uint64_t b) {
    return mask_indices(a) < mask_indices(b);
}

}  // namespace detail

/// beta_{r,a}(S/I) for r >= 1 over a field of the given characteristic (0 or prime).
inline BettiTable betti_numbers(const MonomialIdeal& I, std::uint64_t characteristic = 0, const Limits& limits = Limits::from_environment()) {
    if (characteristic != 0 && !is_prime(characteristic)) {
        throw ValidationError("characteristic must be 0 or a prime, got " + std::to_string(characteristic));
    }
    const std::size_t t = I.size();
    if (t > limits.taylor_generators || t > detail::kTaylorHardCap) {
        throw CapExceeded("ideal has " + std::to_string(t) + " minimal generators; the Taylor kernel is capped at " +
                          std::to_string(std::min<std::uint64_t>(limits.taylor_generators, detail::kTaylorHardCap)) + " (cap 'taylor')");
    }
    BettiTable out;
    out.characteristic = characteristic;
    out.u = I.u();
    out.generators = t;
    if (t == 0) return out;

    const detail::LcmLattice lattice(I);
    const std::size_t ids = lattice.values.size();
    // by_id[a][r] lists the r-subsets with lcm a, masks ascending.
    std::vector<std::vector<std::vector<std::uint64_t>>> by_id(ids);
    for (std::uint64_t mask = 1; mask < lattice.id_of_mask.size(); ++mask) {
        auto& levels = by_id[lattice.id_of_mask[mask]];
        const auto r = static_cast<std::size_t>(std::popcount(mask));
        if (levels.size() <= r) levels.resize(r + 1);
        levels[r].push_back(mask);
    }
    std::vector<std::uint32_t> position(lattice.id_of_mask.size(), 0);
    for (auto& levels : by_id) {
        for (auto& masks : levels) {
            for (std::size_t k = 0; k < masks.size(); ++k) position[masks[k]] = static_cast<std::uint32_t>(k);
        }
    }

    // ranks[a][r] = rank of the strand differential F_r -> F_{r-1} in degree a.
    std::vector<std::vector<std::size_t>> ranks(ids);
    std::vector<std::string> failures(ids);
    detail::parallel_for(ids, limits.worker_count(), [&](std::size_t a) {
        const auto& levels = by_id[a];
        ranks[a].assign(levels.size() + 1, 0);
        for (std::size_t r = 2; r < levels.size(); ++r) {
            const auto& cols = levels[r];
            const auto& rows = levels[r - 1];
            if (cols.empty() || rows.empty()) continue;
            if (static_cast<long double>(rows.size()) * static_cast<long double>(cols.size()) > static_cast<long double>(limits.strand_entries)) {
                throw CapExceeded("Taylor strand differential of size " + std::to_string(rows.size()) + "x" + std::to_string(cols.size()) +
                                  " exceeds the 'strand' cap");
            }
            IntMatrix m(rows.size(), std::vector<std::int64_t>(cols.size(), 0));
            for (std::size_t c = 0; c < cols.size(); ++c) {
                std::uint64_t rest = cols[c];
                std::int64_t sign = 1;  // (-1)^(k+1) for the k-th element, k from 1
                while (rest) {
                    const std::uint64_t bit = rest & (~rest + 1);
                    rest ^= bit;
                    const std::uint64_t face = cols[c] ^ bit;
                    if (lattice.id_of_mask[face] == a) m[position[face]][c] = sign;
                    sign = -sign;
                }
            }
            ranks[a][r] = matrix_rank(m, characteristic);
        }
    });

    for (std::size_t a = 0; a < ids; ++a) {
        const auto& levels = by_id[a];
        std::int64_t euler_taylor = 0, euler_betti = 0;
        for (std::size_t r = 1; r < levels.size(); ++r) {
            if (levels[r].empty()) continue;
            StrandEntry e;
            e.r = r;
            e.degree = lattice.values[a];
            e.taylor_rank = levels[r].size();
            e.betti = levels[r].size() - ranks[a][r] - ranks[a][r + 1];
            std::uint64_t least = levels[r].front();
            for (const std::uint64_t mask : levels[r]) {
                if (detail::subset_lex_less(mask, least)) least = mask;
            }
            e.first_subset = detail::mask_indices(least);
            const std::int64_t sign = (r % 2 == 0) ? 1 : -1;
            euler_taylor += sign * static_cast<std::int64_t>(e.taylor_rank);
            euler_betti += sign * static_cast<std::int64_t>(e.betti);
            out.strands.push_back(std::move(e));
        }
        if (euler_taylor != euler_betti) throw InternalError("Euler characteristic of a Taylor strand disagrees with its homology");
    }
    std::sort(out.strands.begin(), out.strands.end(), [](const StrandEntry& x, const StrandEntry& y) {
        if (x.r != y.r) return x.r < y.r;
        const auto dx = degree(x.degree), dy = degree(y.degree);
        if (dx != dy) return dx < dy;
        return x.degree < y.degree;
    });
    for (const StrandEntry& e : out.strands) {
        out.taylor_coarse[e.r][degree(e.degree)] += e.taylor_rank;
        if (e.betti == 0) continue;
        out.coarse[e.r][degree(e.degree)] += e.betti;
        out.projective_dimension = std::max(out.projective_dimension, e.r);
    }
    for (std::size_t r = 1; r <= out.projective_dimension; ++r) {
        const StrandEntry* e = out.least_shift(r);
        if (e == nullptr) throw InternalError("resolution has a gap at homological degree " + std::to_string(r));
        out.min_shifts.push_back(degree(e->degree));
    }
    return out;
}

}  // namespace modsupp
