#pragma once

#include <cstddef>
#include <functional>

namespace explicit_lab::parallel {

// Worker cap taken from EXPLICIT_LAB_THREADS (integer >= 1). Falls back to
// the hardware concurrency when unset or malformed.
unsigned thread_limit();

// Runs body(i) for i in [0, n_tasks). Tasks are claimed dynamically but each
// writes only its own slot, so callers merge results in index order and get
// the same answer for any thread count.
void for_each_task(std::size_t n_tasks, const std::function<void(std::size_t)>& body);

}  // namespace explicit_lab::parallel
