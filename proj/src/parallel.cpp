#include "coarselab/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace coarselab {

namespace {

std::atomic<int> g_override{0};

int default_threads() {
    if (const char* env = std::getenv("COARSELAB_THREADS")) {
        try {
            const int value = std::stoi(env);
            if (value > 0) return value;
        } catch (const std::exception&) {
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

int thread_count() {
    const int forced = g_override.load();
    return forced > 0 ? forced : default_threads();
}

void set_thread_count(int threads) { g_override.store(std::max(0, threads)); }

std::size_t chunk_count(std::size_t n) {
    if (n == 0) return 0;
    const auto workers = static_cast<std::size_t>(thread_count());
    // Tiny ranges are not worth a thread.
    return std::min(workers, std::max<std::size_t>(1, n / 16));
}

std::size_t parallel_chunks(std::size_t n,
                            const std::function<void(std::size_t, std::size_t, std::size_t)>& body) {
    const std::size_t chunks = chunk_count(n);
    if (chunks == 0) return 0;
    if (chunks == 1) {
        body(0, n, 0);
        return 1;
    }
    std::vector<std::thread> workers;
    workers.reserve(chunks);
    // One slot per chunk so the rethrown error does not depend on timing.
    std::vector<std::exception_ptr> failures(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
        const std::size_t begin = n * c / chunks;
        const std::size_t end = n * (c + 1) / chunks;
        workers.emplace_back([&, begin, end, c] {
            try {
                body(begin, end, c);
            } catch (...) {
                failures[c] = std::current_exception();
            }
        });
    }
    for (auto& w : workers) w.join();
    for (auto& failure : failures) {
        if (failure) std::rethrow_exception(failure);
    }
    return chunks;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    parallel_chunks(n, [&](std::size_t begin, std::size_t end, std::size_t) {
        for (std::size_t i = begin; i < end; ++i) body(i);
    });
}

}  // namespace coarselab
