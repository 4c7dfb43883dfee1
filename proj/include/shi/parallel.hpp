#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

namespace shi {

/// Worker cap: SHI_THREADS if set to a positive integer, else the hardware
/// concurrency (at least 1).
inline int worker_count() {
    if (const char* env = std::getenv("SHI_THREADS")) {
        try {
            const int value = std::stoi(env);
            if (value > 0) {
                return value;
            }
        } catch (const std::exception&) {
        }
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

/// Calls body(k) for k in [0, count) on `workers` threads, k striped across them.
template <typename Body>
void run_strided(std::size_t count, std::size_t workers, Body body) {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) {
        threads.emplace_back([&, t] {
            try {
                for (std::size_t k = t; k < count; k += workers) {
                    body(k);
                }
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : threads) {
        th.join();
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

/// Evaluates f(0..count-1) across workers; results are returned in index order
/// so the outcome does not depend on scheduling.
template <typename F>
auto parallel_map(std::size_t count, F f) -> std::vector<std::invoke_result_t<F, std::size_t>> {
    using R = std::invoke_result_t<F, std::size_t>;
    std::vector<std::optional<R>> slots(count);
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(worker_count()), count);
    if (workers <= 1) {
        for (std::size_t k = 0; k < count; ++k) {
            slots[k].emplace(f(k));
        }
    } else {
        run_strided(count, workers, [&](std::size_t k) { slots[k].emplace(f(k)); });
    }
    std::vector<R> results;
    results.reserve(count);
    for (auto& slot : slots) {
        results.push_back(std::move(*slot));
    }
    return results;
}

}  // namespace shi
