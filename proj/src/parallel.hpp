#ifndef RECIPMONO_PARALLEL_HPP
#define RECIPMONO_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace recipmono::detail {

inline unsigned resolve_jobs(unsigned jobs)
{
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    return jobs;
}

/// Calls body(i) for i in [0, n) on up to `jobs` threads.  The first
/// exception thrown by any body is rethrown on the caller's thread.
template <class Body>
void parallel_for(std::size_t n, unsigned jobs, Body body)
{
    jobs = static_cast<unsigned>(std::min<std::size_t>(resolve_jobs(jobs), n));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next = n;
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

} // namespace recipmono::detail

#endif
