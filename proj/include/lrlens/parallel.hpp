#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace lrlens {

// Worker-pool bound: LRLENS_WORKERS when set, else hardware concurrency.
int worker_count();

// Runs fn(i) for i in [0, n) across up to worker_count() threads. Each index
// is processed exactly once and writes only its own output slot, so results
// are schedule-independent. Exceptions are captured and rethrown once.
void parallel_for(int64_t n, const std::function<void(int64_t)>& fn);

} // namespace lrlens
