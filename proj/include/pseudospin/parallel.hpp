#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace pseudospin
{
//! Run body(i) for i in [0, n) on the available hardware threads. Work is
//! handed out by index, so results written to slot i are independent of
//! scheduling. The first exception thrown by any worker is rethrown.
template<class Body>
void parallel_for(std::size_t n, Body&& body)
{
    std::size_t const hw = std::max(1u, std::thread::hardware_concurrency());
    std::size_t const workers = std::min(hw, n);
    if (workers <= 1)
    {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++)
        {
            try
            {
                body(i);
            }
            catch (...)
            {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers - 1);
        for (std::size_t t = 1; t < workers; ++t)
            pool.emplace_back(work);
        work();
    }
    if (failure)
        std::rethrow_exception(failure);
}
} // namespace pseudospin
