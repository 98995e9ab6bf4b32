/*
 * Copyright 2026 The unitri Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace unitri {

/// Worker count from UNITRI_WORKERS, else 1.
inline unsigned default_workers() {
    if (const char* env = std::getenv("UNITRI_WORKERS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

/**
 * Splits [0, total) into contiguous shards and runs body(worker, begin, end)
 * on each. Shard boundaries depend only on total and shard_count, never on
 * the worker count; callers merge per-worker tallies with an associative,
 * commutative reduction so results do not depend on scheduling.
 */
inline void for_each_shard(std::uint64_t total, unsigned workers,
                           const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& body,
                           std::uint64_t shard_count = 64) {
    if (workers == 0) workers = 1;
    if (shard_count == 0) shard_count = 1;
    if (shard_count > total) shard_count = total == 0 ? 1 : total;
    auto shard_begin = [&](std::uint64_t s) { return total / shard_count * s + std::min(s, total % shard_count); };
    if (workers == 1) {
        for (std::uint64_t s = 0; s < shard_count; ++s) body(0, shard_begin(s), shard_begin(s + 1));
        return;
    }
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::uint64_t s = w; s < shard_count; s += workers) body(w, shard_begin(s), shard_begin(s + 1));
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace unitri
