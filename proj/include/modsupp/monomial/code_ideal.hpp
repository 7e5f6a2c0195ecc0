#pragma once

/// @file code_ideal.hpp
/// @brief The monomial ideal I_C = (x^sigma(v) : v in C) of a code and the
/// generalized weights read off its graded Betti numbers.

#include "modsupp/core/error.hpp"
#include "modsupp/monomial/betti.hpp"
#include "modsupp/monomial/ideal.hpp"
#include "modsupp/support/check.hpp"
#include "modsupp/weights/generalized.hpp"
#include "modsupp/weights/minimal.hpp"

#include <algorithm>

namespace modsupp {

struct CodeIdeal {
    MonomialIdeal ideal;
    /// representatives[i] is a minimal codeword with x^sigma = ideal.generators()[i].
    std::vector<Vector> representatives;
};

/// I_C is generated by the supports of the minimal codewords.
inline CodeIdeal ideal_of_code(const Code& C, const Support& sigma) {
    const MinimalCodewordSet mins = min_codewords(C, sigma);
    std::vector<Monomial> gens;
    for (const auto& cls : mins.classes) gens.push_back(cls.support);
    CodeIdeal out{MonomialIdeal(sigma.u(), gens), {}};
    if (out.ideal.size() != mins.classes.size()) throw InternalError("minimal supports are not an antichain");
    for (const Monomial& g : out.ideal.generators()) {
        const auto it = std::find_if(mins.classes.begin(), mins.classes.end(), [&](const MinimalClass& c) { return c.support == g; });
        out.representatives.push_back(it->representative);
    }
    return out;
}

/// M(C) = pd(S/I_C) and d_r(C) = min{|a| : beta_{r,a} != 0} for a modular support.
/// unchecked skips the modularity requirement and reports whatever the
/// resolution gives; the result then carries no guarantee.
inline WeightProfile weights_from_betti(const Code& C, const Support& sigma, std::uint64_t characteristic = 0, bool unchecked = false) {
    check_compatible(sigma, C);
    detail::require_nonzero(C, "weights_from_betti");
    if (!unchecked) require_modular(sigma, C.limits());
    const CodeIdeal I = ideal_of_code(C, sigma);
    const BettiTable table = betti_numbers(I.ideal, characteristic, C.limits());
    WeightProfile out;
    out.method = "betti";
    out.M = static_cast<std::uint32_t>(table.projective_dimension);
    out.d = table.min_shifts;
    for (std::size_t r = 1; r <= table.projective_dimension; ++r) {
        std::vector<Vector> gens;
        for (const std::size_t g : table.least_shift(r)->first_subset) gens.push_back(I.representatives[g]);
        out.witnesses.push_back(std::move(gens));
    }
    return out;
}

}  // namespace modsupp
