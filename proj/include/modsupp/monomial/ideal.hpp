#pragma once

/// @file ideal.hpp
/// @brief Monomial ideals in k[x_1..x_u], stored by their minimal generators.

#include "modsupp/core/error.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace modsupp {

/// Exponent vector of x_1^a_1 ... x_u^a_u.
using Monomial = std::vector<std::uint32_t>;

inline bool divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

inline std::uint64_t degree(const Monomial& m) {
    std::uint64_t d = 0;
    for (const std::uint32_t e : m) d += e;
    return d;
}

/// "x1^2*x3"; the unit monomial prints as "1". Variables are 1-based in text only.
inline std::string to_text(const Monomial& m) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += "x" + std::to_string(i + 1);
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

/// Parses "x1^2*x3" (or "1") into an exponent vector of length u.
inline Monomial parse_monomial(std::string_view text, std::size_t u) {
    Monomial m(u, 0);
    auto fail = [&](const std::string& why) { throw ValidationError("bad monomial '" + std::string(text) + "': " + why); };
    auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text == "1") return m;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t star = text.find('*', pos);
        if (star == std::string_view::npos) star = text.size();
        const std::string_view factor = trim(text.substr(pos, star - pos));
        pos = star + 1;
        if (factor.size() < 2 || factor.front() != 'x') fail("expected x<index>[^<exponent>]");
        const std::size_t caret = factor.find('^');
        const std::string index_text(factor.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1));
        const std::string exp_text = caret == std::string_view::npos ? "1" : std::string(factor.substr(caret + 1));
        std::size_t index = 0;
        std::uint32_t exponent = 0;
        try {
            index = std::stoul(index_text);
            exponent = static_cast<std::uint32_t>(std::stoul(exp_text));
        } catch (const std::exception&) {
            fail("non-numeric index or exponent");
        }
        if (index < 1 || index > u) fail("variable index out of range 1.." + std::to_string(u));
        m[index - 1] += exponent;
        if (star == text.size()) break;
    }
    return m;
}

class MonomialIdeal {
  public:
    /// Keeps the minimal generators, sorted lexicographically by exponent vector.
    MonomialIdeal(std::size_t u, std::vector<Monomial> generators) : u_(u) {
        for (const Monomial& g : generators) {
            if (g.size() != u) throw ValidationError("monomial has " + std::to_string(g.size()) + " exponents, expected " + std::to_string(u));
            if (degree(g) == 0) throw ValidationError("the unit ideal is not supported");
        }
        std::sort(generators.begin(), generators.end());
        generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
        for (std::size_t i = 0; i < generators.size(); ++i) {
            bool redundant = false;
            for (std::size_t j = 0; j < generators.size() && !redundant; ++j) {
                redundant = j != i && divides(generators[j], generators[i]);
            }
            if (!redundant) gens_.push_back(generators[i]);
        }
    }

    std::size_t u() const { return u_; }
    std::size_t size() const { return gens_.size(); }
    const std::vector<Monomial>& generators() const { return gens_; }

    bool contains(const Monomial& m) const {
        return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return divides(g, m); });
    }

    std::string to_text() const {
        std::string out;
        for (const Monomial& g : gens_) {
            if (!out.empty()) out += ", ";
            out += modsupp::to_text(g);
        }
        return out.empty() ? "0" : out;
    }

  private:
    std::size_t u_;
    std::vector<Monomial> gens_;
};

}  // namespace modsupp
