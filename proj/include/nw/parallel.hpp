#pragma once
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace nw {

// Global cap on worker threads (settable by the CLI --threads flag).
// 0 = use hardware concurrency.
unsigned& thread_cap();

// Runs fn(i) for i in [0, count) across up to thread_cap() threads.
// Results must be written to pre-sized storage indexed by i; assembly is
// deterministic regardless of the thread count.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace nw
