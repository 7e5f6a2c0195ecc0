#pragma once

/// @file invariants.hpp
/// @brief Idempotent decomposition, socle, and the mu / M invariants of a code.

#include "modsupp/core/error.hpp"
#include "modsupp/module/code.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace modsupp {

/// The per-factor codes C_i = pi_i(C) over the factor rings R_i.
inline std::vector<Code> decompose(const Code& C) {
    const Ring& R = C.ring();
    std::vector<Code> parts;
    for (std::size_t i = 0; i < R.factor_count(); ++i) {
        const Ring Ri = R.factor_ring(i);
        std::vector<Vector> gens;
        for (const Vector& g : C.generators()) {
            Vector gi(C.n());
            for (std::size_t k = 0; k < C.n(); ++k) gi[k] = RingElem{R.residue(g[k], i)};
            gens.push_back(std::move(gi));
        }
        parts.emplace_back(Ri, C.n(), gens, C.limits());
    }
    return parts;
}

/// Codewords of C_1 x ... x C_l mapped back into R^n, sorted.
inline std::vector<std::uint64_t> reconstruct(const Ring& R, std::size_t n, const std::vector<Code>& parts) {
    if (parts.size() != R.factor_count()) throw ValidationError("one part per ring factor is required");
    std::vector<std::uint64_t> acc{0};
    const Ambient amb(R, n);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        std::vector<std::uint64_t> next;
        for (const std::uint64_t w : parts[i].codewords()) {
            const Vector wi = parts[i].ambient().decode(w);
            Vector lifted(n);
            for (std::size_t k = 0; k < n; ++k) lifted[k] = R.embed(i, wi[k].code);
            const std::uint64_t lc = amb.encode(lifted);
            for (const std::uint64_t a : acc) next.push_back(amb.add(a, lc));
        }
        acc = std::move(next);
    }
    std::sort(acc.begin(), acc.end());
    return acc;
}

/// Greedy generating set of the listed vectors' span: scans in order and keeps
/// each vector not yet in the span of the kept ones.
inline std::vector<Vector> greedy_generators(const Ring& R, std::size_t n, const std::vector<Vector>& candidates, const Limits& limits) {
    std::vector<Vector> kept;
    Code span(R, n, {}, limits);
    for (const Vector& v : candidates) {
        if (Ambient::is_zero(v) || span.contains(v)) continue;
        kept.push_back(v);
        span = Code(R, n, kept, limits);
    }
    return kept;
}

/// 0 :_C J with a generating set drawn from its codewords.
inline Code socle(const Code& C) {
    std::vector<Vector> members;
    for (const std::uint64_t w : C.codewords()) {
        Vector v = C.ambient().decode(w);
        if (C.ambient().in_socle(v)) members.push_back(std::move(v));
    }
    return Code(C.ring(), C.n(), greedy_generators(C.ring(), C.n(), members, C.limits()), C.limits());
}

/// Generators of 0 :_{R^n} J: alpha_i^(eps_i - 1) e_i placed at each coordinate.
inline std::vector<Vector> ambient_socle_generators(const Ring& R, std::size_t n) {
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < R.factor_count(); ++i) {
        const ChainFactor& f = R.factor(i);
        std::uint32_t s = 1 % f.size();
        for (std::uint32_t j = 0; j + 1 < f.chain_length(); ++j) s = f.mul(s, f.alpha());
        for (std::size_t k = 0; k < n; ++k) {
            Vector v(n, R.zero());
            v[k] = R.embed(i, s);
            gens.push_back(std::move(v));
        }
    }
    return gens;
}

namespace detail {

inline std::uint32_t exact_log(std::uint64_t value, std::uint64_t base) {
    std::uint32_t k = 0;
    while (value > 1) {
        if (value % base != 0) throw InternalError("module quotient size is not a power of the residue field size");
        value /= base;
        ++k;
    }
    return k;
}

/// log_{q_i} |e_i S| / |alpha_i e_i S| for a set S of codes closed under the module operations.
template <class Words>
std::uint32_t mu_factor_of_words(const Ambient& amb, const Words& words, std::size_t i) {
    const Ring& R = amb.ring();
    const RingElem ei = R.idempotent(i);
    const RingElem ai = R.radical_generator(i);
    std::set<std::uint64_t> part, radical;
    for (const std::uint64_t w : words) {
        const std::uint64_t p = amb.scale(ei, w);
        part.insert(p);
        radical.insert(amb.scale(ai, p));
    }
    return exact_log(part.size() / radical.size(), R.factor(i).residue_field_size());
}

}  // namespace detail

/// mu(C_i) for every factor i, via mu = dim C_i / M_i C_i.
inline std::vector<std::uint32_t> mu_components(const Code& C) {
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < C.ring().factor_count(); ++i) out.push_back(detail::mu_factor_of_words(C.ambient(), C.codewords(), i));
    return out;
}

/// mu of a code over a chain ring.
inline std::uint32_t mu_local(const Code& C) {
    if (!C.ring().is_local()) throw ValidationError("mu_local needs a code over a single chain ring, got " + C.ring().name());
    return mu_components(C).front();
}

/// M(C) = mu(C_1) + ... + mu(C_l).
inline std::uint32_t big_M(const Code& C) {
    std::uint32_t total = 0;
    for (const std::uint32_t m : mu_components(C)) total += m;
    return total;
}

}  // namespace modsupp
