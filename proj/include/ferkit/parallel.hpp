#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace ferkit {

namespace detail {
inline thread_local bool inside_parallel_region = false;
}

inline unsigned hardware_threads() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

// Runs fn(i) for i in [0, n). Work is distributed across threads; every index
// writes only its own outputs, so results are independent of scheduling.
// Nested calls degrade to serial execution rather than oversubscribing.
template <typename Fn>
void parallel_for(int64_t n, Fn&& fn) {
    if (n <= 0) return;
    unsigned workers = hardware_threads();
    if (detail::inside_parallel_region || workers <= 1 || n == 1) {
        for (int64_t i = 0; i < n; ++i) fn(i);
        return;
    }
    if (static_cast<int64_t>(workers) > n) workers = static_cast<unsigned>(n);

    std::atomic<int64_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto body = [&]() {
        detail::inside_parallel_region = true;
        for (;;) {
            int64_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= n) break;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                break;
            }
        }
        detail::inside_parallel_region = false;
    };

    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (unsigned t = 1; t < workers; ++t) pool.emplace_back(body);
    body();
    for (auto& th : pool) th.join();

    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace ferkit
