#pragma once

#include <cstddef>
#include <functional>

namespace ktdist {

// Fixed-size set of workers for data-parallel loops. Library operations take
// an optional pool and run serially without one; only the application
// creates pools.
class WorkerPool {
 public:
  // jobs == 0 selects std::thread::hardware_concurrency().
  explicit WorkerPool(std::size_t jobs);

  std::size_t jobs() const { return jobs_; }

  // Calls body(i) for every i in [0, count). Indices are claimed
  // dynamically; body must only write state owned by index i. The first
  // exception thrown by any body is rethrown after all workers stop.
  void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) const;

 private:
  std::size_t jobs_;
};

// Serial when pool is null.
void parallel_for(const WorkerPool* pool, std::size_t count,
                  const std::function<void(std::size_t)>& body);

}  // namespace ktdist
