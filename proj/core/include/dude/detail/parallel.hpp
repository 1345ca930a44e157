// SPDX-License-Identifier: Apache-2.0
//
// dude: downlink/uplink decoupling analysis for LTE heterogeneous networks
// ------------------------------------------------------------------------

#ifndef DUDE_DETAIL_PARALLEL_HPP
#define DUDE_DETAIL_PARALLEL_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace dude::detail {

/// Runs fn(i) for i in [0, n) over a small thread pool. fn must only write
/// to slot i of its outputs; results are then independent of scheduling.
/// The first exception thrown by any task is rethrown on the caller.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn)
{
    const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t workers = std::min(hw, n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }

    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < n; i += workers) fn(i);
            } catch (...) {
                std::scoped_lock lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    pool.clear();
    if (error) std::rethrow_exception(error);
}

/// Neumaier-compensated sum in index order.
template <class Range>
double compensated_sum(const Range& values)
{
    double sum = 0.0;
    double c = 0.0;
    for (double v : values) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            c += (sum - t) + v;
        else
            c += (v - t) + sum;
        sum = t;
    }
    return sum + c;
}

}  // namespace dude::detail

#endif  // DUDE_DETAIL_PARALLEL_HPP
