#pragma once

/// @file code.hpp
/// @brief Linear codes C in R^n with a lazily enumerated codeword cache.

#include "modsupp/core/error.hpp"
#include "modsupp/core/limits.hpp"
#include "modsupp/module/ambient.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <unordered_set>
#include <vector>

namespace modsupp {

class Code {
  public:
    /// Zero generators are dropped and duplicates removed; an empty list is the zero code.
    Code(Ring ring, std::size_t n, const std::vector<Vector>& generators, Limits limits = Limits::from_environment())
        : ambient_(std::move(ring), n), state_(std::make_shared<State>()) {
        state_->limits = limits;
        std::vector<std::uint64_t> seen;
        for (const Vector& g : generators) {
            const std::uint64_t code = ambient_.encode(g);
            if (code == 0 || std::find(seen.begin(), seen.end(), code) != seen.end()) continue;
            seen.push_back(code);
            generators_.push_back(g);
        }
    }

    /// The full space R^n, generated by the standard basis.
    static Code full_space(const Ring& ring, std::size_t n, Limits limits = Limits::from_environment()) {
        std::vector<Vector> basis;
        for (std::size_t i = 0; i < n; ++i) {
            Vector v(n, ring.zero());
            v[i] = ring.one();
            basis.push_back(std::move(v));
        }
        return Code(ring, n, basis, limits);
    }

    const Ambient& ambient() const { return ambient_; }
    const Ring& ring() const { return ambient_.ring(); }
    std::size_t n() const { return ambient_.n(); }
    const std::vector<Vector>& generators() const { return generators_; }
    const Limits& limits() const { return state_->limits; }
    bool is_zero() const { return generators_.empty(); }

    /// Sorted codes of all codewords; computed once and shared between copies.
    const std::vector<std::uint64_t>& codewords() const {
        std::call_once(state_->once, [this] { state_->words = enumerate(); });
        return state_->words;
    }

    std::size_t size() const { return codewords().size(); }

    bool contains(std::span<const RingElem> v) const { return contains_code(ambient_.encode(v)); }

    bool contains_code(std::uint64_t code) const {
        const auto& words = codewords();
        return std::binary_search(words.begin(), words.end(), code);
    }

    /// Position of a codeword in codewords(); throws if absent.
    std::size_t index_of(std::uint64_t code) const {
        const auto& words = codewords();
        const auto it = std::lower_bound(words.begin(), words.end(), code);
        if (it == words.end() || *it != code) throw InternalError("vector is not a codeword");
        return static_cast<std::size_t>(it - words.begin());
    }

    Vector word(std::size_t index) const { return ambient_.decode(codewords().at(index)); }

    std::vector<Vector> decoded_codewords() const {
        std::vector<Vector> out;
        out.reserve(size());
        for (const std::uint64_t c : codewords()) out.push_back(ambient_.decode(c));
        return out;
    }

    /// Same codeword set (independent of generators).
    bool same_set(const Code& other) const {
        return ring() == other.ring() && n() == other.n() && codewords() == other.codewords();
    }

    bool is_subcode_of(const Code& other) const {
        for (const Vector& g : generators_) {
            if (!other.contains(g)) return false;
        }
        return true;
    }

  private:
    struct State {
        Limits limits;
        std::once_flag once;
        std::vector<std::uint64_t> words;
    };

    std::vector<std::uint64_t> enumerate() const {
        const Ring& R = ring();
        const std::uint64_t q = R.size();
        std::vector<std::uint64_t> current{0};
        std::uint64_t work = 0;
        for (const Vector& g : generators_) {
            const std::uint64_t gc = ambient_.encode(g);
            std::vector<std::uint64_t> multiples;
            for (std::uint32_t r = 0; r < q; ++r) multiples.push_back(ambient_.scale(RingElem{r}, gc));
            std::sort(multiples.begin(), multiples.end());
            multiples.erase(std::unique(multiples.begin(), multiples.end()), multiples.end());
            work += current.size() * multiples.size();
            if (work > state_->limits.enumeration) {
                throw CapExceeded("enumerating the code needs more than " + std::to_string(state_->limits.enumeration) +
                                  " closure steps (cap 'enumeration')");
            }
            if (std::binary_search(current.begin(), current.end(), gc)) continue;
            std::unordered_set<std::uint64_t> next(current.begin(), current.end());
            next.reserve(current.size() * multiples.size());
            for (const std::uint64_t s : current) {
                for (const std::uint64_t m : multiples) next.insert(ambient_.add(s, m));
            }
            current.assign(next.begin(), next.end());
            std::sort(current.begin(), current.end());
        }
        if (ambient_.size() % current.size() != 0) throw InternalError("codeword count does not divide |R|^n");
        verify_closed(current);
        return current;
    }

    // Closure under c + r*g for every generator g and scalar r implies a submodule.
    void verify_closed(const std::vector<std::uint64_t>& words) const {
        const std::uint64_t q = ring().size();
        if (words.size() * generators_.size() * q > state_->limits.enumeration) return;
        for (const Vector& g : generators_) {
            const std::uint64_t gc = ambient_.encode(g);
            for (std::uint32_t r = 0; r < q; ++r) {
                const std::uint64_t m = ambient_.scale(RingElem{r}, gc);
                for (const std::uint64_t c : words) {
                    if (!std::binary_search(words.begin(), words.end(), ambient_.add(c, m))) {
                        throw InternalError("enumerated codeword set is not closed under the module operations");
                    }
                }
            }
        }
    }

    Ambient ambient_;
    std::vector<Vector> generators_;
    std::shared_ptr<State> state_;
};

}  // namespace modsupp
