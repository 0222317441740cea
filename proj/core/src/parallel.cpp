#include "polariton/parallel.hpp"

#include <atomic>

namespace polariton {

namespace {
std::atomic<unsigned> g_limit{0};
}

void set_thread_limit(unsigned n) { g_limit.store(n); }

unsigned thread_limit() {
    const unsigned n = g_limit.load();
    if (n) return n;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

}  // namespace polariton
