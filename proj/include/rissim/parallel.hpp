// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <span>
#include <vector>

namespace rissim {

/// Worker-thread budget: hardware concurrency, capped by the
/// RIS_SIM_THREADS environment variable when set to a positive integer.
int thread_budget();

/// Run body(i) for i in [0, n).  Work is split into contiguous blocks, one
/// per worker; the caller must make iterations independent.  The first
/// exception thrown by any worker is rethrown after all workers joined.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

/// Pairwise summation; the result does not depend on how the caller
/// produced the values, only on their order in the span.
template <typename T>
T pairwise_sum(std::span<const T> values) {
    if (values.empty()) return T{};
    if (values.size() <= 16) {
        T acc = values[0];
        for (std::size_t i = 1; i < values.size(); ++i) acc += values[i];
        return acc;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

template <typename T>
T pairwise_mean(std::span<const T> values) {
    return pairwise_sum(values) * (1.0 / static_cast<double>(values.size()));
}

}  // namespace rissim
