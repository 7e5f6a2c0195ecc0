#pragma once

/// @file submodules.hpp
/// @brief Exhaustive submodule oracles for codes with at most 256 codewords.
///
/// Subsets of a small code are bitsets over codeword indices. These routines
/// do not use any structure theory; they exist to check the fast paths.

#include "modsupp/core/error.hpp"
#include "modsupp/core/limits.hpp"
#include "modsupp/module/code.hpp"
#include "modsupp/module/invariants.hpp"

#include <algorithm>
#include <bitset>
#include <memory>
#include <optional>
#include <unordered_set>
#include <vector>

namespace modsupp {

using WordSet = std::bitset<kSubmoduleCodeCap>;

/// Addition and scalar tables over the codewords of a code with |C| <= 256.
class CodeIndex {
  public:
    explicit CodeIndex(Code code) : code_(std::move(code)) {
        const auto& words = code_.codewords();
        size_ = words.size();
        if (size_ > kSubmoduleCodeCap) {
            throw CapExceeded("submodule oracles need |C| <= " + std::to_string(kSubmoduleCodeCap) + ", got " + std::to_string(size_));
        }
        const Ambient& amb = code_.ambient();
        add_.resize(size_ * size_);
        for (std::size_t a = 0; a < size_; ++a) {
            for (std::size_t b = a; b < size_; ++b) {
                const auto s = static_cast<std::uint8_t>(code_.index_of(amb.add(words[a], words[b])));
                add_[a * size_ + b] = add_[b * size_ + a] = s;
            }
        }
        const std::uint32_t q = code_.ring().size();
        cyclic_.resize(size_);
        for (std::size_t a = 0; a < size_; ++a) {
            for (std::uint32_t r = 0; r < q; ++r) cyclic_[a].set(code_.index_of(amb.scale(RingElem{r}, words[a])));
        }
        for (std::size_t a = 0; a < size_; ++a) {
            bool fresh = true;
            for (const std::size_t b : cyclic_reps_) {
                if (cyclic_[b] == cyclic_[a]) {
                    fresh = false;
                    break;
                }
            }
            if (fresh && a != 0) cyclic_reps_.push_back(a);
        }
    }

    const Code& code() const { return code_; }
    std::size_t size() const { return size_; }
    std::size_t add(std::size_t a, std::size_t b) const { return add_[a * size_ + b]; }

    /// R * word(a) as a set.
    const WordSet& cyclic(std::size_t a) const { return cyclic_[a]; }

    /// One index per distinct nonzero cyclic submodule, the least index generating it.
    const std::vector<std::size_t>& cyclic_representatives() const { return cyclic_reps_; }

    WordSet zero_set() const {
        WordSet s;
        s.set(0);
        return s;
    }

    WordSet all() const {
        WordSet s;
        for (std::size_t i = 0; i < size_; ++i) s.set(i);
        return s;
    }

    /// D + R * word(c) for a submodule D.
    WordSet extend(const WordSet& D, std::size_t c) const {
        if (D.test(c)) return D;
        WordSet out;
        for (std::size_t m = 0; m < size_; ++m) {
            if (!cyclic_[c].test(m)) continue;
            for (std::size_t d = 0; d < size_; ++d) {
                if (D.test(d)) out.set(add(d, m));
            }
        }
        return out;
    }

    WordSet span(const std::vector<std::size_t>& gens) const {
        WordSet s = zero_set();
        for (const std::size_t g : gens) s = extend(s, g);
        return s;
    }

    std::vector<std::size_t> members(const WordSet& D) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < size_; ++i) {
            if (D.test(i)) out.push_back(i);
        }
        return out;
    }

    Vector vector(std::size_t index) const { return code_.word(index); }

    /// The submodule as a Code with a greedy generating set in index order.
    Code as_code(const WordSet& D) const {
        WordSet s = zero_set();
        std::vector<Vector> gens;
        for (std::size_t i = 1; i < size_; ++i) {
            if (!D.test(i) || s.test(i)) continue;
            s = extend(s, i);
            gens.push_back(vector(i));
        }
        return Code(code_.ring(), code_.n(), gens, code_.limits());
    }

    /// M(D) from its codeword set.
    std::uint32_t big_M(const WordSet& D) const {
        std::vector<std::uint64_t> words;
        for (std::size_t i = 0; i < size_; ++i) {
            if (D.test(i)) words.push_back(code_.codewords()[i]);
        }
        std::uint32_t total = 0;
        for (std::size_t f = 0; f < code_.ring().factor_count(); ++f) total += detail::mu_factor_of_words(code_.ambient(), words, f);
        return total;
    }

  private:
    Code code_;
    std::size_t size_ = 0;
    std::vector<std::uint8_t> add_;
    std::vector<WordSet> cyclic_;
    std::vector<std::size_t> cyclic_reps_;
};

/// Every submodule of C, in breadth-first discovery order starting from {0}.
inline std::vector<WordSet> all_submodules(const CodeIndex& index, const Limits& limits) {
    std::vector<WordSet> found{index.zero_set()};
    std::unordered_set<WordSet> seen{found.front()};
    for (std::size_t head = 0; head < found.size(); ++head) {
        const WordSet D = found[head];
        for (const std::size_t c : index.cyclic_representatives()) {
            if (D.test(c)) continue;
            WordSet next = index.extend(D, c);
            if (seen.insert(next).second) {
                if (found.size() >= limits.submodule_count) {
                    throw CapExceeded("code has more than " + std::to_string(limits.submodule_count) + " submodules (cap 'submodules')");
                }
                found.push_back(next);
            }
        }
    }
    return found;
}

inline std::vector<Code> all_submodules(const Code& C) {
    const CodeIndex index(C);
    std::vector<Code> out;
    for (const WordSet& D : all_submodules(index, C.limits())) out.push_back(index.as_code(D));
    return out;
}

struct GensetSearch {
    std::vector<std::size_t> sizes;                 ///< sorted cardinalities of inclusion-minimal generating sets
    std::vector<std::vector<std::size_t>> witness;  ///< first witness per entry of sizes, as codeword indices
};

/// All cardinalities of inclusion-minimal generating sets of D (a submodule given
/// as a set of indices), by depth-first search over cyclic representatives.
/// Elements generating the same cyclic submodule are unit multiples, so one
/// representative per cyclic submodule loses no cardinality.
inline GensetSearch minimal_generating_set_sizes(const CodeIndex& index, const WordSet& D, const Limits& limits) {
    std::vector<std::size_t> reps;
    for (const std::size_t c : index.cyclic_representatives()) {
        if (D.test(c)) reps.push_back(c);
    }
    GensetSearch out;
    if (D == index.zero_set()) {
        out.sizes.push_back(0);
        out.witness.emplace_back();
        return out;
    }
    std::size_t cardinality = 0;
    for (std::size_t i = 0; i < index.size(); ++i) cardinality += D.test(i);
    std::size_t bound = 0;
    while ((std::size_t{2} << bound) <= cardinality) ++bound;  // a chain of j proper inclusions needs |D| >= 2^j

    std::uint64_t nodes = 0;
    std::vector<std::size_t> chosen;
    std::vector<WordSet> spans{index.zero_set()};
    auto is_minimal = [&] {
        for (std::size_t skip = 0; skip < chosen.size(); ++skip) {
            WordSet s = index.zero_set();
            for (std::size_t k = 0; k < chosen.size(); ++k) {
                if (k != skip) s = index.extend(s, chosen[k]);
            }
            if (s == D) return false;
        }
        return true;
    };
    auto record = [&] {
        const std::size_t size = chosen.size();
        if (std::find(out.sizes.begin(), out.sizes.end(), size) != out.sizes.end()) return;
        out.sizes.push_back(size);
        out.witness.emplace_back();
        for (const std::size_t c : chosen) out.witness.back().push_back(c);
    };
    auto dfs = [&](auto&& self, std::size_t start) -> void {
        if (++nodes > limits.subset_search) throw CapExceeded("generating-set search exceeded " + std::to_string(limits.subset_search) + " nodes (cap 'search')");
        if (spans.back() == D) {
            if (is_minimal()) record();
            return;
        }
        if (chosen.size() >= bound) return;
        for (std::size_t k = start; k < reps.size(); ++k) {
            if (spans.back().test(reps[k])) continue;
            chosen.push_back(reps[k]);
            spans.push_back(index.extend(spans.back(), reps[k]));
            self(self, k + 1);
            spans.pop_back();
            chosen.pop_back();
        }
    };
    dfs(dfs, 0);
    std::vector<std::size_t> order(out.sizes.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return out.sizes[a] < out.sizes[b]; });
    GensetSearch sorted;
    for (const std::size_t i : order) {
        sorted.sizes.push_back(out.sizes[i]);
        sorted.witness.push_back(out.witness[i]);
    }
    return sorted;
}

struct MaxMinGenset {
    std::size_t size = 0;
    std::vector<Vector> witness;
};

/// Largest cardinality of an inclusion-minimal generating set, by exhaustive search.
inline MaxMinGenset max_min_genset_size(const Code& C) {
    if (C.size() > kGensetCodeCap) {
        throw CapExceeded("generating-set search needs |C| <= " + std::to_string(kGensetCodeCap) + ", got " + std::to_string(C.size()));
    }
    const CodeIndex index(C);
    const GensetSearch search = minimal_generating_set_sizes(index, index.all(), C.limits());
    if (search.sizes.empty()) throw InternalError("no minimal generating set found");
    if (search.sizes.back() > kGensetSizeCap) throw CapExceeded("minimal generating sets exceed the subset size cap");
    MaxMinGenset out;
    out.size = search.sizes.back();
    for (const std::size_t i : search.witness.back()) out.witness.push_back(index.vector(i));
    return out;
}

}  // namespace modsupp
