#pragma once

#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace distprod::detail {

/// Applies fn to every item, optionally on a small thread pool. Results are
/// assembled by item index and exceptions are rethrown in index order, so
/// the outcome does not depend on the schedule.
template <typename T, typename F>
auto parallel_map(const std::vector<T>& items, F&& fn, int workers)
    -> std::vector<decltype(fn(items[0]))> {
    using R = decltype(fn(items[0]));
    std::vector<R> out(items.size());

    if (workers <= 1 || items.size() <= 1) {
        for (size_t i = 0; i < items.size(); ++i) out[i] = fn(items[i]);
        return out;
    }

    std::vector<std::exception_ptr> errors(items.size());
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= items.size()) return;
            try {
                out[i] = fn(items[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    const size_t nthreads = std::min<size_t>(static_cast<size_t>(workers), items.size());
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (size_t i = 0; i < nthreads; ++i) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();

    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace distprod::detail
