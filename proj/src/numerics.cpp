#include "relspin/numerics.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace relspin::numerics {

namespace {
std::atomic<int> g_threads{0}; // 0 = not yet initialized
}

int thread_count_from_env() {
    const char* raw = std::getenv("RELSPIN_THREADS");
    if (raw == nullptr || *raw == '\0') return 1;
    char* end = nullptr;
    const long v = std::strtol(raw, &end, 10);
    if (end == nullptr || *end != '\0' || v < 1 || v > 4096) {
        throw config_error("RELSPIN_THREADS must be a positive integer");
    }
    return static_cast<int>(v);
}

int thread_count() {
    int v = g_threads.load();
    if (v == 0) {
        v = thread_count_from_env();
        g_threads.store(v);
    }
    return v;
}

void set_thread_count(int n) {
    g_threads.store(n < 1 ? 1 : n);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    const int workers = thread_count();
    if (workers <= 1 || n < 256) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const std::size_t t = std::min<std::size_t>(workers, n);
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(t);
    pool.reserve(t);
    for (std::size_t w = 0; w < t; ++w) {
        const std::size_t lo = n * w / t;
        const std::size_t hi = n * (w + 1) / t;
        pool.emplace_back([lo, hi, &fn, &errors, w] {
            try {
                for (std::size_t i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    // Rethrow the error of the lowest-index chunk so failures are
    // deterministic too.
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

} // namespace relspin::numerics
