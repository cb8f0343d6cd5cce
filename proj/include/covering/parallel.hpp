#pragma once

#include <cstddef>
#include <functional>

namespace covering {

  // Worker cap shared by every parallel loop; 0 means hardware concurrency.
  void        set_max_threads(unsigned n) noexcept;
  unsigned    max_threads() noexcept;

  // Calls body(i) for i in [0, count); iterations must be independent.
  void parallel_for(std::size_t count, std::function<void(std::size_t)> const& body);

}  // namespace covering
