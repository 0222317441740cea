#pragma once

#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace polariton {

// Process-wide cap on worker threads; 0 restores the hardware default.
void set_thread_limit(unsigned n);
unsigned thread_limit();

// Calls f(i) for i in [0, n) using contiguous static blocks.
// The assignment of indices to results never depends on the thread count.
template <class F>
void parallel_for(std::size_t n, F&& f, unsigned threads = 0) {
    if (n == 0) return;
    unsigned t = threads ? threads : thread_limit();
    if (t > n) t = static_cast<unsigned>(n);
    if (t <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::exception_ptr err;
    std::mutex m;
    std::vector<std::thread> pool;
    pool.reserve(t);
    for (unsigned w = 0; w < t; ++w) {
        const std::size_t lo = n * w / t, hi = n * (w + 1) / t;
        pool.emplace_back([&, lo, hi] {
            try {
                for (std::size_t i = lo; i < hi; ++i) f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lk(m);
                if (!err) err = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace polariton
