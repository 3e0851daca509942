#pragma once

#include <cstddef>
#include <functional>

namespace mappeel {

// Hardware concurrency, capped by MAP_PEEL_THREADS when that is a positive integer.
unsigned worker_count();

// Runs f(0) .. f(count - 1) on up to worker_count() threads. The first exception
// thrown by any task is rethrown after all threads have joined.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& f);

}  // namespace mappeel
