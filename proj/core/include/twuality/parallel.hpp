#pragma once

#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace twuality {

/// Worker threads to use for a requested job count (0 = hardware concurrency).
unsigned resolve_jobs(unsigned jobs);

/// Splits [0, count) into contiguous chunks, folds each chunk on its own
/// thread with `worker(lo, hi) -> Result`, and combines the chunk results in
/// chunk order with `combine(acc, part)`. Chunking is static, so the result
/// is identical for every job count whenever combine is associative over
/// ordered chunks (integer vector sums, first-hit selection by index).
template <class Result, class Worker, class Combine>
Result chunked_reduce(std::uint64_t count, unsigned jobs, Result identity,
                      Worker worker, Combine combine) {
    jobs = resolve_jobs(jobs);
    if (count == 0) return identity;
    if (jobs <= 1 || count == 1) {
        return combine(std::move(identity), worker(0, count));
    }
    const std::uint64_t chunks = jobs < count ? jobs : count;
    std::vector<Result> parts(static_cast<std::size_t>(chunks), identity);
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(chunks));
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(chunks));
    for (std::uint64_t c = 0; c < chunks; ++c) {
        const std::uint64_t lo = count * c / chunks;
        const std::uint64_t hi = count * (c + 1) / chunks;
        threads.emplace_back([&, c, lo, hi] {
            try {
                parts[static_cast<std::size_t>(c)] = worker(lo, hi);
            } catch (...) {
                errors[static_cast<std::size_t>(c)] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    Result acc = std::move(identity);
    for (auto& part : parts) acc = combine(std::move(acc), std::move(part));
    return acc;
}

}  // namespace twuality
