#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "gausslab/precision.hpp"

namespace gausslab {

// Apply fn(i) for i in [0, n) on up to `jobs` worker threads. Results land in
// a pre-sized vector, so output order is independent of scheduling. Each
// worker inherits the caller's working precision (the precision setting is
// thread-local).
template <typename R, typename Fn>
std::vector<R> parallel_map(std::size_t n, unsigned jobs, Fn&& fn) {
    std::vector<R> out(n);
    if (n == 0) return out;
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, n));
    if (jobs == 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    unsigned bits = precision_bits();
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) {
        pool.emplace_back([&] {
            set_precision_bits(bits);
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    out[i] = fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(err_mu);
                    if (!err) err = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
    return out;
}

}  // namespace gausslab
