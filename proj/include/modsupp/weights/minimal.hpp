#pragma once

/// @file minimal.hpp
/// @brief Codewords of minimal and maximal support.

#include "modsupp/core/error.hpp"
#include "modsupp/module/code.hpp"
#include "modsupp/support/check.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace modsupp {

struct MinimalClass {
    SupportValue support;
    Vector representative;         ///< least member in vector order
    std::vector<Vector> members;   ///< every codeword with this support, ascending
};

/// One class per distinct minimal support, ordered by representative.
struct MinimalCodewordSet {
    std::vector<MinimalClass> classes;

    std::size_t member_count() const {
        std::size_t total = 0;
        for (const auto& c : classes) total += c.members.size();
        return total;
    }
};

namespace detail {

/// Nonzero codewords grouped by support value; member codes ascending.
inline std::map<SupportValue, std::vector<std::uint64_t>> words_by_support(const Code& C, const Support& sigma) {
    std::map<SupportValue, std::vector<std::uint64_t>> groups;
    Vector v(C.n());
    SupportValue s(sigma.u());
    for (const std::uint64_t w : C.codewords()) {
        if (w == 0) continue;
        C.ambient().decode_into(w, v);
        sigma.evaluate_into(v, s);
        groups[s].push_back(w);
    }
    return groups;
}

inline void require_nonzero(const Code& C, const char* what) {
    if (C.is_zero()) throw HypothesisError(std::string(what) + " needs a nonzero code");
}

}  // namespace detail

/// Nonzero codewords whose support is minimal among supports of nonzero codewords.
inline MinimalCodewordSet min_codewords(const Code& C, const Support& sigma) {
    check_compatible(sigma, C);
    detail::require_nonzero(C, "min_codewords");
    const auto groups = detail::words_by_support(C, sigma);
    std::vector<const SupportValue*> supports;
    for (const auto& [s, words] : groups) supports.push_back(&s);
    std::sort(supports.begin(), supports.end(), [](const SupportValue* a, const SupportValue* b) { return weight(*a) < weight(*b); });

    MinimalCodewordSet out;
    std::vector<const SupportValue*> minimal;
    for (const SupportValue* s : supports) {
        bool dominated = false;
        for (const SupportValue* t : minimal) {
            if (leq(*t, *s)) {
                dominated = true;
                break;
            }
        }
        if (dominated) continue;
        minimal.push_back(s);
        MinimalClass cls;
        cls.support = *s;
        for (const std::uint64_t w : groups.at(*s)) cls.members.push_back(C.ambient().decode(w));
        cls.representative = cls.members.front();
        out.classes.push_back(std::move(cls));
    }
    std::sort(out.classes.begin(), out.classes.end(), [&](const MinimalClass& a, const MinimalClass& b) {
        return C.ambient().encode(a.representative) < C.ambient().encode(b.representative);
    });
    return out;
}

/// min wt(C) = least weight of a nonzero codeword.
inline std::uint64_t min_weight(const Code& C, const Support& sigma) {
    check_compatible(sigma, C);
    detail::require_nonzero(C, "min_weight");
    std::uint64_t best = ~std::uint64_t{0};
    for (const auto& [s, words] : detail::words_by_support(C, sigma)) best = std::min(best, weight(s));
    return best;
}

struct MaximalGeneration {
    bool generated = false;
    std::vector<Vector> maximal_words;   ///< codewords whose support is maximal, ascending
    std::vector<SupportValue> supports;  ///< the distinct maximal supports
};

/// Codewords of maximal support and whether they generate C.
inline MaximalGeneration maximal_generation(const Code& C, const Support& sigma) {
    check_compatible(sigma, C);
    detail::require_nonzero(C, "maximal_generation");
    const auto groups = detail::words_by_support(C, sigma);
    MaximalGeneration out;
    std::vector<std::uint64_t> words;
    for (const auto& [s, members] : groups) {
        bool dominated = false;
        for (const auto& [t, other] : groups) {
            if (t != s && leq(s, t)) {
                dominated = true;
                break;
            }
        }
        if (dominated) continue;
        out.supports.push_back(s);
        words.insert(words.end(), members.begin(), members.end());
    }
    std::sort(words.begin(), words.end());
    for (const std::uint64_t w : words) out.maximal_words.push_back(C.ambient().decode(w));
    out.generated = Code(C.ring(), C.n(), out.maximal_words, C.limits()).same_set(C);
    return out;
}

}  // namespace modsupp
