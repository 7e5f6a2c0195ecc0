#pragma once

/// @file structure.hpp
/// @brief Structural results on modular supports as checkable procedures:
/// echelon-shaped generating sets of socle codes, circuits of {0,1}-valued
/// supports, and the matroid of a code over a field.

#include "modsupp/core/error.hpp"
#include "modsupp/module/invariants.hpp"
#include "modsupp/support/check.hpp"
#include "modsupp/weights/minimal.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace modsupp {

struct SpecialGenset {
    std::vector<Vector> generators;
    std::vector<std::size_t> private_coordinates;  ///< k_i: only generator i has a nonzero entry there
};

namespace detail {

/// Least-code r with sigma(w - r*pivot)_k = 0, which modularity guarantees.
inline Vector clear_coordinate(const Support& sigma, const Vector& w, const Vector& pivot, std::size_t k) {
    const Ring& R = sigma.ring();
    const Ambient amb(R, w.size());
    for (std::uint32_t r = 0; r < R.size(); ++r) {
        Vector candidate = amb.sub(w, amb.scale(RingElem{r}, pivot));
        if (sigma.evaluate(candidate)[k] == 0) return candidate;
    }
    throw InternalError("no multiple clears coordinate " + std::to_string(k) + "; the support is not modular");
}

inline std::size_t first_nonzero(const SupportValue& s) {
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] != 0) return k;
    }
    throw InternalError("nonzero vector with zero support");
}

inline SpecialGenset eliminate(const Support& sigma, std::vector<Vector> w) {
    SpecialGenset out;
    if (w.empty()) return out;
    const std::size_t k1 = first_nonzero(sigma.evaluate(w.front()));
    std::vector<Vector> rest;
    for (std::size_t i = 1; i < w.size(); ++i) rest.push_back(clear_coordinate(sigma, w[i], w.front(), k1));
    const SpecialGenset inner = eliminate(sigma, std::move(rest));
    const Ambient amb(sigma.ring(), w.front().size());
    Vector v1 = w.front();
    for (std::size_t i = 0; i < inner.generators.size(); ++i) {
        const Vector cleared = clear_coordinate(sigma, w.front(), inner.generators[i], inner.private_coordinates[i]);
        v1 = amb.sub(v1, amb.sub(w.front(), cleared));  // subtract r'_i * v_i
    }
    out.generators.push_back(std::move(v1));
    out.private_coordinates.push_back(k1);
    out.generators.insert(out.generators.end(), inner.generators.begin(), inner.generators.end());
    out.private_coordinates.insert(out.private_coordinates.end(), inner.private_coordinates.begin(), inner.private_coordinates.end());
    return out;
}

}  // namespace detail

/// True iff each generator has a coordinate where it alone has nonzero support.
inline bool has_private_coordinates(const Support& sigma, const SpecialGenset& g) {
    if (g.generators.size() != g.private_coordinates.size()) return false;
    for (std::size_t i = 0; i < g.generators.size(); ++i) {
        for (std::size_t h = 0; h < g.generators.size(); ++h) {
            const bool nonzero = sigma.evaluate(g.generators[h])[g.private_coordinates[i]] != 0;
            if (nonzero != (h == i)) return false;
        }
    }
    return true;
}

/// A minimal generating set of a socle code D in which every generator owns a
/// private support coordinate, built by successive elimination.
inline SpecialGenset special_genset(const Code& D, const Support& sigma) {
    check_compatible(sigma, D);
    const Limits& limits = D.limits();
    for (const Vector& g : D.generators()) {
        if (!D.ambient().in_socle(g)) throw HypothesisError("special_genset needs a code inside the socle of R^n");
    }
    require_modular(sigma, limits);
    const Ring& R = D.ring();
    std::vector<Vector> split;
    for (const Vector& g : D.generators()) {
        for (const RingElem e : R.idempotents()) split.push_back(D.ambient().scale(e, g));
    }
    const std::vector<Vector> start = greedy_generators(R, D.n(), split, limits);
    if (start.size() != big_M(D)) throw InternalError("greedy generating set of a socle code is not of size M(D)");
    SpecialGenset out = detail::eliminate(sigma, start);
    if (!has_private_coordinates(sigma, out)) throw InternalError("elimination did not produce private coordinates");
    if (!Code(R, D.n(), out.generators, limits).same_set(D)) throw InternalError("elimination changed the generated code");
    return out;
}

using IndexSet = std::vector<std::size_t>;

/// Minimal supports of a {0,1}-valued modular support, which form the circuits of a
/// matroid on [u]. The circuit axioms are verified before returning.
inline std::vector<IndexSet> circuits(const Code& C, const Support& sigma) {
    check_compatible(sigma, C);
    detail::require_nonzero(C, "circuits");
    require_modular(sigma, C.limits());
    const auto groups = detail::words_by_support(C, sigma);
    for (const auto& [s, words] : groups) {
        for (const std::uint32_t x : s) {
            if (x > 1) throw ValidationError("circuits need a {0,1}-valued support, found value " + std::to_string(x));
        }
    }
    std::vector<IndexSet> out;
    for (const auto& cls : min_codewords(C, sigma).classes) {
        IndexSet set;
        for (std::size_t k = 0; k < cls.support.size(); ++k) {
            if (cls.support[k] != 0) set.push_back(k);
        }
        out.push_back(std::move(set));
    }
    std::sort(out.begin(), out.end());

    auto subset = [](const IndexSet& a, const IndexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); };
    for (std::size_t a = 0; a < out.size(); ++a) {
        if (out[a].empty()) throw InternalError("circuit axiom C1 fails: empty circuit");
        for (std::size_t b = 0; b < out.size(); ++b) {
            if (a == b) continue;
            if (subset(out[a], out[b])) throw InternalError("circuit axiom C2 fails: nested circuits");
            if (b < a) continue;
            IndexSet both;
            std::set_union(out[a].begin(), out[a].end(), out[b].begin(), out[b].end(), std::back_inserter(both));
            IndexSet common;
            std::set_intersection(out[a].begin(), out[a].end(), out[b].begin(), out[b].end(), std::back_inserter(common));
            for (const std::size_t e : common) {
                IndexSet without;
                for (const std::size_t x : both) {
                    if (x != e) without.push_back(x);
                }
                const bool found = std::any_of(out.begin(), out.end(), [&](const IndexSet& c) { return subset(c, without); });
                if (!found) throw InternalError("circuit axiom C3 fails on a pair of circuits");
            }
        }
    }
    return out;
}

/// Independent sets of the matroid of a code over a field with the Hamming support:
/// A is independent iff no nonzero codeword is supported inside A. Ordered by size,
/// then lexicographically.
inline std::vector<IndexSet> matroid_independent_sets(const Code& C) {
    const Ring& R = C.ring();
    if (!R.is_field()) throw HypothesisError("matroid_independent_sets needs a field");
    const std::size_t n = C.n();
    if (n > kMatroidLengthCap) throw CapExceeded("matroid_independent_sets needs n <= " + std::to_string(kMatroidLengthCap));
    const std::size_t full = std::size_t{1} << n;
    std::vector<char> dependent(full, 0);
    Vector v(n);
    for (const std::uint64_t w : C.codewords()) {
        if (w == 0) continue;
        C.ambient().decode_into(w, v);
        std::size_t mask = 0;
        for (std::size_t k = 0; k < n; ++k) {
            if (v[k] != R.zero()) mask |= std::size_t{1} << k;
        }
        dependent[mask] = 1;
    }
    for (std::size_t bit = 0; bit < n; ++bit) {
        for (std::size_t mask = 0; mask < full; ++mask) {
            if (mask & (std::size_t{1} << bit)) dependent[mask] |= dependent[mask ^ (std::size_t{1} << bit)];
        }
    }
    std::vector<IndexSet> out;
    for (std::size_t mask = 0; mask < full; ++mask) {
        if (dependent[mask]) continue;
        IndexSet set;
        for (std::size_t k = 0; k < n; ++k) {
            if (mask & (std::size_t{1} << k)) set.push_back(k);
        }
        out.push_back(std::move(set));
    }
    std::sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });

    if (!C.is_zero()) {
        const std::vector<IndexSet> circ = circuits(C, Support::hamming(R, n));
        std::size_t independent_by_circuits = 0;
        for (std::size_t mask = 0; mask < full; ++mask) {
            bool contains_circuit = false;
            for (const IndexSet& c : circ) {
                std::size_t cm = 0;
                for (const std::size_t k : c) cm |= std::size_t{1} << k;
                if ((cm & mask) == cm) {
                    contains_circuit = true;
                    break;
                }
            }
            if (contains_circuit == static_cast<bool>(dependent[mask])) {
                if (!contains_circuit) ++independent_by_circuits;
                continue;
            }
            throw InternalError("independent sets disagree with the circuits");
        }
        if (independent_by_circuits != out.size()) throw InternalError("independent set count disagrees with the circuits");
    }
    return out;
}

}  // namespace modsupp
