#include "ktdist/worker_pool.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ktdist {

WorkerPool::WorkerPool(std::size_t jobs)
    : jobs_(jobs == 0 ? std::max<std::size_t>(1, std::thread::hardware_concurrency()) : jobs) {}

void WorkerPool::parallel_for(std::size_t count,
                              const std::function<void(std::size_t)>& body) const {
  const std::size_t workers = std::min(jobs_, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < count && !failed; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };
  std::vector<std::jthread> threads;
  threads.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) threads.emplace_back(work);
  work();
  threads.clear();
  if (error) std::rethrow_exception(error);
}

void parallel_for(const WorkerPool* pool, std::size_t count,
                  const std::function<void(std::size_t)>& body) {
  if (pool) {
    pool->parallel_for(count, body);
  } else {
    for (std::size_t i = 0; i < count; ++i) body(i);
  }
}

}  // namespace ktdist
