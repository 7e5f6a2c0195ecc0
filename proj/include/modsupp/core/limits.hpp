#pragma once

/// @file limits.hpp
/// @brief Caps for the exhaustive kernels. Exceeding a cap is always an error.

#include "modsupp/core/error.hpp"

#include <cstdint>
#include <cstdlib>
#include <string>
#include <string_view>
#include <thread>

namespace modsupp {

/// Hard caps that are part of the oracle contracts and cannot be raised.
inline constexpr std::size_t kSubmoduleCodeCap = 256;
inline constexpr std::size_t kGensetCodeCap = 64;
inline constexpr std::size_t kGensetSizeCap = 6;
inline constexpr std::size_t kMatroidLengthCap = 16;
inline constexpr std::size_t kRingSizeCap = 65536;

struct Limits {
    /// Closure steps (partial span size times multiples) while enumerating a code.
    std::uint64_t enumeration = std::uint64_t{1} << 24;
    /// |R|^n for the exhaustive support-axiom checker.
    std::uint64_t exhaustive_vectors = std::uint64_t{1} << 16;
    /// |R|^(2n+1) * u for the modularity checker.
    std::uint64_t modular_work = std::uint64_t{1} << 31;
    /// Number of distinct submodules the lattice walk may produce.
    std::uint64_t submodule_count = std::uint64_t{1} << 17;
    /// |C| up to which the oracle also cross-evaluates the S_j formulation.
    std::uint64_t sj_crosscheck = 32;
    /// Minimal generators of a monomial ideal accepted by the Taylor kernel.
    std::uint64_t taylor_generators = 20;
    /// Entries of one dense Taylor strand differential.
    std::uint64_t strand_entries = std::uint64_t{1} << 24;
    /// Nodes visited by the minimal-codeword subset search.
    std::uint64_t subset_search = std::uint64_t{1} << 26;
    /// Worker threads; 0 means hardware concurrency.
    unsigned threads = 0;

    unsigned worker_count() const {
        if (threads != 0) return threads;
        const unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : hw;
    }

    /// Applies "key=value,key=value" overrides. Unknown keys are a validation error.
    void apply_overrides(std::string_view text) {
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t comma = text.find(',', pos);
            if (comma == std::string_view::npos) comma = text.size();
            const std::string_view item = text.substr(pos, comma - pos);
            pos = comma + 1;
            if (item.empty()) continue;
            const std::size_t eq = item.find('=');
            if (eq == std::string_view::npos) {
                throw ValidationError("cap override '" + std::string(item) + "' is not of the form key=value");
            }
            set(item.substr(0, eq), item.substr(eq + 1));
        }
    }

    void set(std::string_view key, std::string_view value) {
        std::uint64_t parsed = 0;
        try {
            std::size_t used = 0;
            parsed = std::stoull(std::string(value), &used);
            if (used != value.size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw ValidationError("cap '" + std::string(key) + "' has non-numeric value '" + std::string(value) + "'");
        }
        if (key == "enumeration") enumeration = parsed;
        else if (key == "exhaustive") exhaustive_vectors = parsed;
        else if (key == "modular") modular_work = parsed;
        else if (key == "submodules") submodule_count = parsed;
        else if (key == "sj_crosscheck") sj_crosscheck = parsed;
        else if (key == "taylor") taylor_generators = parsed;
        else if (key == "strand") strand_entries = parsed;
        else if (key == "search") subset_search = parsed;
        else if (key == "threads") threads = static_cast<unsigned>(parsed);
        else throw ValidationError("unknown cap '" + std::string(key) + "'");
    }

    /// Defaults overridden by the MODSUPP_CAPS environment variable, if set.
    static Limits from_environment() {
        Limits limits;
        if (const char* env = std::getenv("MODSUPP_CAPS")) limits.apply_overrides(env);
        return limits;
    }
};

}  // namespace modsupp
