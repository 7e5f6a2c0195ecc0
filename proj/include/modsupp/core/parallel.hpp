#pragma once

/// @file parallel.hpp
/// @brief Deterministic fork-join helpers for the exhaustive kernels.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace modsupp::detail {

/// Runs fn(i) for every i in [0, count). Work is claimed in index order; the
/// first exception raised by any task is rethrown after all workers stop.
template <class Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto body = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(count);
                return;
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers - 1);
        for (unsigned w = 1; w < workers; ++w) pool.emplace_back(body);
        body();
    }
    if (failure) std::rethrow_exception(failure);
}

/// Scans [0, count) in blocks and returns the hit with the smallest index.
/// scan(begin, end) must return the first hit inside its block, scanning in order,
/// so the overall answer matches a sequential scan regardless of worker count.
template <class Result, class Scan>
std::optional<Result> find_first(std::uint64_t count, unsigned workers, Scan&& scan) {
    if (count == 0) return std::nullopt;
    const std::uint64_t blocks = workers <= 1 ? 1 : std::min<std::uint64_t>(count, std::uint64_t{workers} * 16);
    const std::uint64_t block_size = (count + blocks - 1) / blocks;
    std::vector<std::optional<Result>> hits(blocks);
    std::atomic<std::uint64_t> best{blocks};
    parallel_for(blocks, workers, [&](std::size_t b) {
        if (b > best.load()) return;
        const std::uint64_t begin = b * block_size;
        const std::uint64_t end = std::min(count, begin + block_size);
        if (begin >= end) return;
        hits[b] = scan(begin, end);
        if (hits[b]) {
            std::uint64_t current = best.load();
            while (b < current && !best.compare_exchange_weak(current, b)) {
            }
        }
    });
    for (auto& hit : hits) {
        if (hit) return std::move(hit);
    }
    return std::nullopt;
}

}  // namespace modsupp::detail
