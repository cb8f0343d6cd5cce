#include "covering/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace covering {

  namespace {
    std::atomic<unsigned> thread_cap{0};
  }

  void set_max_threads(unsigned n) noexcept {
    thread_cap = n;
  }

  unsigned max_threads() noexcept {
    unsigned cap = thread_cap;
    if (cap == 0) {
      cap = std::max(1u, std::thread::hardware_concurrency());
    }
    return cap;
  }

  void parallel_for(std::size_t count, std::function<void(std::size_t)> const& body) {
    unsigned workers = static_cast<unsigned>(
        std::min<std::size_t>(max_threads(), count));
    if (workers <= 1) {
      for (std::size_t i = 0; i < count; ++i) {
        body(i);
      }
      return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr       error;
    std::mutex               error_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            body(i);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) {
              error = std::current_exception();
            }
          }
        }
      });
    }
    for (auto& t : pool) {
      t.join();
    }
    if (error) {
      std::rethrow_exception(error);
    }
  }

}  // namespace covering
