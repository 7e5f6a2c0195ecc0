#pragma once

/// @file check.hpp
/// @brief Exhaustive verification of the support axioms and of modularity,
/// decomposition of modular supports along ring factors, and code supports.

#include "modsupp/core/error.hpp"
#include "modsupp/core/limits.hpp"
#include "modsupp/core/parallel.hpp"
#include "modsupp/module/code.hpp"
#include "modsupp/support/support.hpp"

#include <optional>
#include <string>
#include <vector>

namespace modsupp {

/// sigma evaluated on every vector of R^n, rows indexed by Ambient code.
class SupportTable {
  public:
    SupportTable(const Support& sigma, std::uint64_t cap, unsigned workers) : amb_(sigma.ring(), sigma.n()), u_(sigma.u()) {
        if (amb_.size() > cap) {
            throw CapExceeded("exhaustive check over " + sigma.ring().name() + "^" + std::to_string(sigma.n()) + " (" +
                              std::to_string(amb_.size()) + " vectors) exceeds the 'exhaustive' cap of " + std::to_string(cap));
        }
        values_.resize(amb_.size() * u_);
        const std::uint64_t count = amb_.size();
        const std::uint64_t blocks = std::min<std::uint64_t>(count, 64);
        detail::parallel_for(blocks, workers, [&](std::size_t b) {
            Vector v(amb_.n());
            for (std::uint64_t code = b * count / blocks; code < (b + 1) * count / blocks; ++code) {
                amb_.decode_into(code, v);
                sigma.evaluate_into(v, std::span<std::uint32_t>(values_.data() + code * u_, u_));
            }
        });
    }

    const Ambient& ambient() const { return amb_; }
    std::uint64_t count() const { return amb_.size(); }
    std::size_t u() const { return u_; }
    std::span<const std::uint32_t> operator[](std::uint64_t code) const { return {values_.data() + code * u_, u_}; }

  private:
    Ambient amb_;
    std::size_t u_;
    std::vector<std::uint32_t> values_;
};

struct AxiomWitness {
    std::string axiom;  ///< "P1", "P2" or "P3"
    Vector v;
    Vector w;           ///< P3 only
    RingElem r{0};      ///< P2 only
};

struct SupportCheck {
    bool holds = true;
    std::optional<AxiomWitness> witness;
};

/// Exhaustive check of P1 over v, then P2 over (v, r), then P3 over (v, w); the
/// witness is the least failing tuple in that order.
inline SupportCheck is_support(const Support& sigma, const Limits& limits = Limits::from_environment()) {
    const SupportTable table(sigma, limits.exhaustive_vectors, limits.worker_count());
    const Ambient& amb = table.ambient();
    const std::uint64_t count = table.count();
    const std::uint32_t q = sigma.ring().size();
    const unsigned workers = limits.worker_count();
    SupportCheck out;

    for (std::uint64_t v = 0; v < count; ++v) {
        if ((weight(table[v]) == 0) != (v == 0)) {
            out.holds = false;
            out.witness = AxiomWitness{"P1", amb.decode(v), {}, RingElem{0}};
            return out;
        }
    }
    auto p2 = detail::find_first<std::pair<std::uint64_t, std::uint32_t>>(count, workers, [&](std::uint64_t begin, std::uint64_t end) {
        std::optional<std::pair<std::uint64_t, std::uint32_t>> hit;
        for (std::uint64_t v = begin; v < end && !hit; ++v) {
            for (std::uint32_t r = 0; r < q; ++r) {
                if (!leq(table[amb.scale(RingElem{r}, v)], table[v])) {
                    hit = std::pair{v, r};
                    break;
                }
            }
        }
        return hit;
    });
    if (p2) {
        out.holds = false;
        out.witness = AxiomWitness{"P2", amb.decode(p2->first), {}, RingElem{p2->second}};
        return out;
    }
    auto p3 = detail::find_first<std::pair<std::uint64_t, std::uint64_t>>(count, workers, [&](std::uint64_t begin, std::uint64_t end) {
        std::optional<std::pair<std::uint64_t, std::uint64_t>> hit;
        for (std::uint64_t v = begin; v < end && !hit; ++v) {
            const auto sv = table[v];
            for (std::uint64_t w = 0; w < count; ++w) {
                const auto sw = table[w];
                const auto s = table[amb.add(v, w)];
                bool ok = true;
                for (std::size_t i = 0; i < s.size() && ok; ++i) ok = s[i] <= std::max(sv[i], sw[i]);
                if (!ok) {
                    hit = std::pair{v, w};
                    break;
                }
            }
        }
        return hit;
    });
    if (p3) {
        out.holds = false;
        out.witness = AxiomWitness{"P3", amb.decode(p3->first), amb.decode(p3->second), RingElem{0}};
    }
    return out;
}

struct ModularWitness {
    Vector v;
    Vector w;
    std::size_t i = 0;
};

struct ModularCheck {
    bool holds = true;
    std::optional<ModularWitness> witness;
};

/// Exhaustive check of modularity: for all (v, w, i) with 0 != sigma(v)_i <= sigma(w)_i
/// some r gives sigma(v + r w)_i < sigma(v)_i. The witness is the least failing
/// (v, w, i). sigma must be a support.
inline ModularCheck check_modular_exhaustive(const Support& sigma, const Limits& limits = Limits::from_environment()) {
    const SupportTable table(sigma, limits.exhaustive_vectors, limits.worker_count());
    const Ambient& amb = table.ambient();
    const std::uint64_t count = table.count();
    const std::uint32_t q = sigma.ring().size();
    const std::size_t u = sigma.u();
    const long double work = static_cast<long double>(count) * count * q * std::max<std::size_t>(u, 1);
    if (work > static_cast<long double>(limits.modular_work)) {
        throw CapExceeded("modularity check needs |R|^(2n+1)*u = " + std::to_string(static_cast<std::uint64_t>(work)) +
                          " steps, above the 'modular' cap of " + std::to_string(limits.modular_work));
    }
    std::vector<std::uint64_t> multiples(static_cast<std::size_t>(count) * q);
    for (std::uint64_t w = 0; w < count; ++w) {
        for (std::uint32_t r = 0; r < q; ++r) multiples[w * q + r] = amb.scale(RingElem{r}, w);
    }
    using Hit = std::pair<std::pair<std::uint64_t, std::uint64_t>, std::size_t>;
    auto hit = detail::find_first<Hit>(count, limits.worker_count(), [&](std::uint64_t begin, std::uint64_t end) {
        std::optional<Hit> found;
        std::vector<std::uint32_t> best(u);
        for (std::uint64_t v = begin; v < end && !found; ++v) {
            const auto sv = table[v];
            if (weight(sv) == 0) continue;
            for (std::uint64_t w = 0; w < count && !found; ++w) {
                const auto sw = table[w];
                bool relevant = false;
                for (std::size_t i = 0; i < u; ++i) relevant = relevant || (sv[i] != 0 && sv[i] <= sw[i]);
                if (!relevant) continue;
                std::copy(sv.begin(), sv.end(), best.begin());
                for (std::uint32_t r = 1; r < q; ++r) {
                    const auto s = table[amb.add(v, multiples[w * q + r])];
                    for (std::size_t i = 0; i < u; ++i) best[i] = std::min(best[i], s[i]);
                }
                for (std::size_t i = 0; i < u; ++i) {
                    if (sv[i] != 0 && sv[i] <= sw[i] && best[i] >= sv[i]) {
                        found = Hit{{v, w}, i};
                        break;
                    }
                }
            }
        }
        return found;
    });
    ModularCheck out;
    if (hit) {
        out.holds = false;
        out.witness = ModularWitness{amb.decode(hit->first.first), amb.decode(hit->first.second), hit->second};
    }
    return out;
}

inline std::string describe(const AxiomWitness& w) {
    auto vec = [](const Vector& v) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i].code);
        return s + ")";
    };
    if (w.axiom == "P1") return "P1 fails at v=" + vec(w.v);
    if (w.axiom == "P2") return "P2 fails at v=" + vec(w.v) + ", r=" + std::to_string(w.r.code);
    return "P3 fails at v=" + vec(w.v) + ", w=" + vec(w.w);
}

/// Accepts a structural certificate or runs the exhaustive check; throws
/// HypothesisError when sigma is not a support.
inline void require_support(const Support& sigma, const Limits& limits = Limits::from_environment()) {
    if (sigma.certified_support()) return;
    const SupportCheck check = is_support(sigma, limits);
    if (!check.holds) throw HypothesisError("not a support: " + describe(*check.witness));
}

/// Modularity check that refuses non-supports.
inline ModularCheck is_modular(const Support& sigma, const Limits& limits = Limits::from_environment()) {
    require_support(sigma, limits);
    if (sigma.certified_modular()) return {};
    return check_modular_exhaustive(sigma, limits);
}

inline void require_modular(const Support& sigma, const Limits& limits = Limits::from_environment()) {
    const ModularCheck check = is_modular(sigma, limits);
    if (!check.holds) {
        throw HypothesisError("support is not modular (violating coordinate " + std::to_string(check.witness->i) + ")");
    }
}

struct ModularDecomposition {
    std::vector<std::size_t> coordinate_factor;     ///< owning ring factor of each output coordinate
    std::vector<std::vector<std::size_t>> blocks;   ///< coordinates owned by each factor, ascending
    std::vector<Support> factor_supports;           ///< table supports over factor_ring(i)
};

/// sigma = sigma_1 x ... x sigma_l up to a coordinate permutation, with
/// sigma_i(v_i) = sigma(e_i v). A coordinate goes to the first factor touching it;
/// untouched coordinates go to factor 0. Reconstruction is verified exhaustively.
inline ModularDecomposition decompose_modular(const Support& sigma, const Limits& limits = Limits::from_environment()) {
    require_modular(sigma, limits);
    const Ring& R = sigma.ring();
    const std::size_t l = R.factor_count(), u = sigma.u(), n = sigma.n();
    const SupportTable table(sigma, limits.exhaustive_vectors, limits.worker_count());
    const Ambient& amb = table.ambient();

    ModularDecomposition out;
    out.coordinate_factor.assign(u, l);
    for (std::size_t i = 0; i < l; ++i) {
        const RingElem ei = R.idempotent(i);
        for (std::uint64_t v = 0; v < table.count(); ++v) {
            const auto s = table[amb.scale(ei, v)];
            for (std::size_t x = 0; x < u; ++x) {
                if (s[x] != 0 && out.coordinate_factor[x] == l) out.coordinate_factor[x] = i;
            }
        }
    }
    for (auto& f : out.coordinate_factor) {
        if (f == l) f = 0;
    }
    out.blocks.assign(l, {});
    for (std::size_t x = 0; x < u; ++x) out.blocks[out.coordinate_factor[x]].push_back(x);

    std::vector<Ambient> factor_amb;
    for (std::size_t i = 0; i < l; ++i) {
        const Ring Ri = R.factor_ring(i);
        const Ambient ai(Ri, n);
        std::vector<SupportValue> rows(ai.size());
        Vector wi(n), lifted(n);
        for (std::uint64_t c = 0; c < ai.size(); ++c) {
            ai.decode_into(c, wi);
            for (std::size_t k = 0; k < n; ++k) lifted[k] = R.embed(i, wi[k].code);
            const auto s = table[amb.encode(lifted)];
            for (const std::size_t x : out.blocks[i]) rows[c].push_back(s[x]);
        }
        out.factor_supports.push_back(Support::table(Ri, n, rows));
        factor_amb.push_back(ai);
    }

    Vector v(n), vi(n);
    for (std::uint64_t c = 0; c < table.count(); ++c) {
        amb.decode_into(c, v);
        const auto s = table[c];
        for (std::size_t i = 0; i < l; ++i) {
            for (std::size_t k = 0; k < n; ++k) vi[k] = RingElem{R.residue(v[k], i)};
            const SupportValue si = out.factor_supports[i].evaluate(vi);
            for (std::size_t j = 0; j < out.blocks[i].size(); ++j) {
                if (si[j] != s[out.blocks[i][j]]) throw InternalError("modular decomposition does not reproduce sigma");
            }
        }
    }
    return out;
}

/// sigma(C) as the join over the generators; valid when sigma is a support.
inline SupportValue code_support(const Support& sigma, const Code& C) {
    SupportValue acc(sigma.u(), 0);
    for (const Vector& g : C.generators()) join_into(acc, sigma.evaluate(g));
    return acc;
}

/// sigma(C) as the join over all codewords (the definition; valid for any function).
inline SupportValue code_support_exact(const Support& sigma, const Code& C) {
    SupportValue acc(sigma.u(), 0);
    SupportValue s(sigma.u());
    Vector v(C.n());
    for (const std::uint64_t w : C.codewords()) {
        C.ambient().decode_into(w, v);
        sigma.evaluate_into(v, s);
        join_into(acc, s);
    }
    return acc;
}

inline void check_compatible(const Support& sigma, const Code& C) {
    if (!(sigma.ring() == C.ring())) throw ValidationError("support and code are defined over different rings");
    if (sigma.n() != C.n()) {
        throw ValidationError("support expects length " + std::to_string(sigma.n()) + " but the code has length " + std::to_string(C.n()));
    }
}

}  // namespace modsupp
