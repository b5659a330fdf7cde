#pragma once

#include <chrono>
#include <mutex>
#include <optional>
#include <string>

#include "kacpal/hopf.hpp"
#include "kacpal/parallel.hpp"

namespace kacpal::detail {

using Clock = std::chrono::steady_clock;

// Runs test(i) for i < count; keeps the witness of the smallest failing index.
template <class Test>
CheckResult run_check(std::string name, std::string anchor, std::size_t count, Test&& test) {
    CheckResult res;
    res.name = std::move(name);
    res.anchor = std::move(anchor);
    res.checked = count;
    auto start = Clock::now();
    std::mutex mu;
    std::size_t first_fail = count;
    parallel_for(count, [&](std::size_t i) {
        {
            std::lock_guard<std::mutex> lock(mu);
            if (i > first_fail) return;
        }
        std::optional<std::string> w = test(i);
        if (w) {
            std::lock_guard<std::mutex> lock(mu);
            if (i < first_fail) {
                first_fail = i;
                res.witness = *w;
            }
        }
    });
    res.pass = first_fail == count;
    res.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return res;
}

}  // namespace kacpal::detail
