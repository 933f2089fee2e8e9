#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace qsc {

inline unsigned worker_count() {
    if (const char* env = std::getenv("QSC_WORKERS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

/// Runs body(i) for i in [0, count) on a bounded pool. The first exception is
/// rethrown on the caller after all workers finish.
template <typename F>
void parallel_for(size_t count, unsigned workers, F&& body) {
    if (count == 0) return;
    if (workers <= 1 || count == 1) {
        for (size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mu;
    auto run = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> threads;
    unsigned spawn = static_cast<unsigned>(std::min<size_t>(workers, count));
    threads.reserve(spawn);
    for (unsigned t = 0; t < spawn; ++t) threads.emplace_back(run);
    for (auto& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace qsc
