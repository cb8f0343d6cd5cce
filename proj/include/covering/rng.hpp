#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace covering {

  // Seeded generator with platform-independent draws (std distributions are
  // implementation defined, mt19937_64 itself is not).
  class Rng {
   public:
    explicit Rng(std::uint64_t seed) : _engine(seed) {}

    // Uniform in [lo, hi].
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
      std::uint64_t span = hi - lo + 1;
      if (span == 0) {
        return _engine();
      }
      std::uint64_t limit = std::numeric_limits<std::uint64_t>::max()
                            - std::numeric_limits<std::uint64_t>::max() % span;
      std::uint64_t x;
      do {
        x = _engine();
      } while (x >= limit);
      return lo + x % span;
    }

    bool coin() { return (_engine() >> 63) != 0; }

    // k distinct values from [0, n) in draw order.
    std::vector<std::size_t> sample(std::size_t n, std::size_t k) {
      std::vector<std::size_t> pool(n);
      for (std::size_t i = 0; i < n; ++i) {
        pool[i] = i;
      }
      for (std::size_t i = 0; i < k; ++i) {
        std::size_t j = static_cast<std::size_t>(uniform(i, n - 1));
        std::swap(pool[i], pool[j]);
      }
      pool.resize(k);
      return pool;
    }

   private:
    std::mt19937_64 _engine;
  };

}  // namespace covering
