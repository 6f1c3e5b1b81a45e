#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace mostar {

/// 0 means "use available parallelism".
inline unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Number of threads parallel_tasks starts for the given task count.
inline unsigned effective_workers(std::size_t tasks, unsigned workers) {
  return static_cast<unsigned>(
      std::min<std::size_t>(resolve_workers(workers), std::max<std::size_t>(tasks, 1)));
}

/// Runs body(worker, task) for every task in 0..tasks-1 on up to `workers`
/// threads. Tasks are claimed dynamically, so callers must make the merged
/// result independent of which worker ran which task.
template <typename Body>
void parallel_tasks(std::size_t tasks, unsigned workers, Body&& body) {
  workers = effective_workers(tasks, workers);
  if (workers <= 1) {
    for (std::size_t t = 0; t < tasks; ++t) body(0u, t);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t t = next.fetch_add(1); t < tasks; t = next.fetch_add(1)) body(w, t);
      } catch (...) {
        errors[w] = std::current_exception();
        next.store(tasks);
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace mostar
