#ifndef DSV_PARALLEL_HPP
#define DSV_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace dsv {

/// Runs one pyramid stage at a time. `for_each` hands every index of a stage
/// to some worker and returns only when all of them are done, so consecutive
/// calls are separated by a barrier. Bodies must write only to their own
/// output slot; that is what makes results independent of the worker count.
class LevelExecutor {
 public:
  explicit LevelExecutor(unsigned workers = 1) : workers_(std::max(1u, workers)) {}

  unsigned workers() const noexcept { return workers_; }

  template <class Body>
  void for_each(std::size_t count, Body&& body) const {
    const std::size_t n_threads = std::min<std::size_t>(workers_, count);
    if (n_threads <= 1) {
      for (std::size_t i = 0; i < count; ++i) body(i);
      return;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
      std::vector<std::jthread> pool;
      pool.reserve(n_threads);
      for (std::size_t t = 0; t < n_threads; ++t) {
        pool.emplace_back([&, t] {
          try {
            // Contiguous blocks keep each worker on neighbouring cells.
            const std::size_t begin = count * t / n_threads;
            const std::size_t end = count * (t + 1) / n_threads;
            for (std::size_t i = begin; i < end; ++i) body(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        });
      }
    }  // jthreads join here
    if (failure) std::rethrow_exception(failure);
  }

 private:
  unsigned workers_;
};

}  // namespace dsv

#endif  // DSV_PARALLEL_HPP
