#pragma once

/// @file generalized.hpp
/// @brief Generalized weights d_1 < ... < d_M by two independent routes:
/// a search over subsets of minimal codewords (fast) and a scan over every
/// submodule (oracle).

#include "modsupp/core/error.hpp"
#include "modsupp/module/invariants.hpp"
#include "modsupp/module/submodules.hpp"
#include "modsupp/support/check.hpp"
#include "modsupp/weights/minimal.hpp"

#include <optional>
#include <string>
#include <vector>

namespace modsupp {

struct WeightProfile {
    std::string method;                          ///< "fast", "oracle" or "betti"
    std::uint32_t M = 0;
    std::vector<std::uint64_t> d;                ///< d[r-1] = d_r
    std::vector<std::vector<Vector>> witnesses;  ///< generators of a subcode attaining d_r
    std::string crosscheck;                      ///< oracle only: outcome of the S_j cross-check
};

namespace detail {

/// Coordinates of socle vectors of one ring factor over its residue field, with
/// incremental row reduction that can be undone in stack order.
class ResidueEchelon {
  public:
    ResidueEchelon(const Ring& R, std::size_t factor)
        : R_(R), factor_(factor), field_(residue_field(R.factor(factor))), shift_(socle_shift(R.factor(factor))) {}

    /// Residue-field coordinates of a socle vector supported on this factor.
    std::vector<std::uint32_t> coordinates(const Vector& v) const {
        std::vector<std::uint32_t> out(v.size());
        for (std::size_t k = 0; k < v.size(); ++k) {
            const std::uint32_t r = R_.residue(v[k], factor_);
            if (r % shift_ != 0) throw InternalError("vector is not in the socle of its ring factor");
            out[k] = r / shift_;
        }
        return out;
    }

    /// Adds a vector; returns false (and leaves the basis unchanged) if it is dependent.
    bool push(std::vector<std::uint32_t> x) {
        for (const auto& [pivot, row] : basis_) {
            const std::uint32_t c = x[pivot];
            if (c == 0) continue;
            for (std::size_t k = 0; k < x.size(); ++k) x[k] = field_.sub(x[k], field_.mul(c, row[k]));
        }
        std::size_t pivot = 0;
        while (pivot < x.size() && x[pivot] == 0) ++pivot;
        if (pivot == x.size()) return false;
        const std::uint32_t inv = field_.inverse(x[pivot]);
        for (auto& c : x) c = field_.mul(c, inv);
        basis_.emplace_back(pivot, std::move(x));
        return true;
    }

    void pop() { basis_.pop_back(); }
    std::size_t rank() const { return basis_.size(); }

  private:
    static ChainFactor residue_field(const ChainFactor& f) { return f.kind() == FactorKind::Zpe ? ChainFactor::zpe(f.p(), 1) : f; }

    static std::uint32_t socle_shift(const ChainFactor& f) {
        std::uint32_t s = 1;
        for (std::uint32_t j = 0; j + 1 < f.chain_length(); ++j) s *= f.p();
        return f.kind() == FactorKind::Zpe ? s : 1;
    }

    Ring R_;
    std::size_t factor_;
    ChainFactor field_;
    std::uint32_t shift_;
    std::vector<std::pair<std::size_t, std::vector<std::uint32_t>>> basis_;
};

}  // namespace detail

/// d_r(C) as the least |sigma(D)| over subcodes D minimally generated by r minimal
/// codewords, one per minimal support class. Requires a modular support and C != 0.
/// Ties keep the lexicographically least generator list.
inline WeightProfile gen_weights_fast(const Code& C, const Support& sigma) {
    check_compatible(sigma, C);
    detail::require_nonzero(C, "gen_weights_fast");
    const Limits& limits = C.limits();
    require_modular(sigma, limits);
    const Ring& R = C.ring();
    const MinimalCodewordSet mins = min_codewords(C, sigma);

    struct Rep {
        std::size_t factor;
        std::vector<std::uint32_t> coords;
        const SupportValue* support;
        const Vector* vector;
    };
    std::vector<detail::ResidueEchelon> echelons;
    for (std::size_t i = 0; i < R.factor_count(); ++i) echelons.emplace_back(R, i);
    std::vector<Rep> reps;
    for (const auto& cls : mins.classes) {
        if (!C.ambient().in_socle(cls.representative)) throw InternalError("minimal codeword outside the socle");
        const int f = C.ambient().single_factor(cls.representative);
        if (f < 0) throw InternalError("minimal codeword supported on several ring factors");
        reps.push_back({static_cast<std::size_t>(f), echelons[f].coordinates(cls.representative), &cls.support, &cls.representative});
    }

    WeightProfile out;
    out.method = "fast";
    out.M = big_M(C);
    std::uint64_t nodes = 0;
    for (std::uint32_t r = 1; r <= out.M; ++r) {
        std::optional<std::uint64_t> best;
        std::vector<std::size_t> chosen, best_set;
        std::vector<SupportValue> joins{SupportValue(sigma.u(), 0)};
        auto dfs = [&](auto&& self, std::size_t start) -> void {
            if (++nodes > limits.subset_search) throw CapExceeded("minimal-codeword subset search exceeded the 'search' cap");
            if (chosen.size() == r) {
                const std::uint64_t w = weight(joins.back());
                if (!best || w < *best) {
                    best = w;
                    best_set = chosen;
                }
                return;
            }
            for (std::size_t k = start; k + (r - chosen.size()) <= reps.size(); ++k) {
                SupportValue joined = joins.back();
                join_into(joined, *reps[k].support);
                if (best && weight(joined) >= *best) continue;
                if (!echelons[reps[k].factor].push(reps[k].coords)) continue;
                chosen.push_back(k);
                joins.push_back(std::move(joined));
                self(self, k + 1);
                joins.pop_back();
                chosen.pop_back();
                echelons[reps[k].factor].pop();
            }
        };
        dfs(dfs, 0);
        if (!best) throw InternalError("no minimal generating set of " + std::to_string(r) + " minimal codewords");
        std::vector<Vector> gens;
        for (const std::size_t k : best_set) gens.push_back(*reps[k].vector);
        const Code D(R, C.n(), gens, limits);
        if (big_M(D) != r) throw InternalError("witness subcode for d_" + std::to_string(r) + " has M(D) != r");
        if (weight(code_support(sigma, D)) != *best) throw InternalError("witness subcode support disagrees with the search");
        out.d.push_back(*best);
        out.witnesses.push_back(std::move(gens));
    }
    return out;
}

/// d_r(C) = min{|sigma(D)| : D subcode of C, M(D) >= r} over every submodule,
/// with sigma(D) the join over all codewords of D. For |C| up to the
/// 'sj_crosscheck' cap the minimal-generating-set formulations are evaluated too
/// and must agree. unchecked admits pseudo-supports.
inline WeightProfile gen_weights_oracle(const Code& C, const Support& sigma, bool unchecked = false) {
    check_compatible(sigma, C);
    detail::require_nonzero(C, "gen_weights_oracle");
    const Limits& limits = C.limits();
    if (!unchecked) require_support(sigma, limits);
    const CodeIndex index(C);
    const std::vector<WordSet> subs = all_submodules(index, limits);

    std::vector<SupportValue> word_support(index.size());
    for (std::size_t i = 0; i < index.size(); ++i) word_support[i] = sigma.evaluate(index.vector(i));

    struct Entry {
        std::uint64_t weight;
        std::uint32_t M;
        const WordSet* set;
    };
    std::vector<Entry> entries;
    for (const WordSet& D : subs) {
        SupportValue acc(sigma.u(), 0);
        for (std::size_t i = 0; i < index.size(); ++i) {
            if (D.test(i)) join_into(acc, word_support[i]);
        }
        entries.push_back({weight(acc), index.big_M(D), &D});
    }

    WeightProfile out;
    out.method = "oracle";
    out.M = index.big_M(index.all());
    auto generators_of = [&](const WordSet& D) { return index.as_code(D).generators(); };
    auto codes_of = [&](const std::vector<Vector>& gens) {
        std::vector<std::uint64_t> codes;
        for (const auto& g : gens) codes.push_back(C.ambient().encode(g));
        return codes;
    };
    for (std::uint32_t r = 1; r <= out.M; ++r) {
        const Entry* best = nullptr;
        std::vector<std::uint64_t> best_key;
        for (const Entry& e : entries) {
            if (e.M < r) continue;
            if (best && e.weight > best->weight) continue;
            const auto key = codes_of(generators_of(*e.set));
            if (!best || e.weight < best->weight || key < best_key) {
                best = &e;
                best_key = key;
            }
        }
        if (!best) throw InternalError("no subcode with M(D) >= " + std::to_string(r));
        out.d.push_back(best->weight);
        out.witnesses.push_back(generators_of(*best->set));
    }

    if (index.size() > limits.sj_crosscheck) {
        out.crosscheck = "skipped: |C| = " + std::to_string(index.size()) + " exceeds the 'sj_crosscheck' cap of " + std::to_string(limits.sj_crosscheck);
        return out;
    }
    std::vector<std::optional<std::uint64_t>> via_at_least(out.M), via_exact(out.M);
    std::size_t largest_for_C = 0;
    for (const Entry& e : entries) {
        const GensetSearch sizes = minimal_generating_set_sizes(index, *e.set, limits);
        if (*e.set == index.all()) largest_for_C = sizes.sizes.back();
        for (std::uint32_t r = 1; r <= out.M; ++r) {
            auto improve = [&](std::optional<std::uint64_t>& slot) {
                if (!slot || e.weight < *slot) slot = e.weight;
            };
            if (sizes.sizes.back() >= r) improve(via_at_least[r - 1]);
            if (std::find(sizes.sizes.begin(), sizes.sizes.end(), r) != sizes.sizes.end()) improve(via_exact[r - 1]);
        }
    }
    if (largest_for_C != out.M) throw InternalError("largest minimal generating set of C differs from M(C)");
    for (std::uint32_t r = 1; r <= out.M; ++r) {
        if (via_at_least[r - 1] != out.d[r - 1] || via_exact[r - 1] != out.d[r - 1]) {
            throw InternalError("minimal-generating-set formulations disagree at d_" + std::to_string(r));
        }
    }
    out.crosscheck = "agreed";
    return out;
}

}  // namespace modsupp
