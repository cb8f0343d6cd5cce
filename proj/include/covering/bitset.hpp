#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace covering {

  // Fixed-size dense bit vector; used for class sets and element sets.
  class Bitset {
   public:
    Bitset() = default;
    explicit Bitset(std::size_t size) : _size(size), _words((size + 63) / 64, 0) {}

    std::size_t size() const noexcept { return _size; }

    void set(std::size_t i) { _words[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { _words[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (_words[i >> 6] >> (i & 63)) & 1; }

    void set_all() {
      for (auto& w : _words) {
        w = ~std::uint64_t{0};
      }
      trim();
    }

    std::size_t count() const noexcept {
      std::size_t c = 0;
      for (auto w : _words) {
        c += static_cast<std::size_t>(std::popcount(w));
      }
      return c;
    }

    bool none() const noexcept {
      for (auto w : _words) {
        if (w != 0) {
          return false;
        }
      }
      return true;
    }

    bool all() const noexcept { return count() == _size; }

    bool is_subset_of(Bitset const& that) const {
      for (std::size_t i = 0; i < _words.size(); ++i) {
        if ((_words[i] & ~that._words[i]) != 0) {
          return false;
        }
      }
      return true;
    }

    Bitset& operator|=(Bitset const& that) {
      for (std::size_t i = 0; i < _words.size(); ++i) {
        _words[i] |= that._words[i];
      }
      return *this;
    }

    Bitset& operator&=(Bitset const& that) {
      for (std::size_t i = 0; i < _words.size(); ++i) {
        _words[i] &= that._words[i];
      }
      return *this;
    }

    Bitset operator~() const {
      Bitset r = *this;
      for (auto& w : r._words) {
        w = ~w;
      }
      r.trim();
      return r;
    }

    // Indices of set bits in increasing order.
    std::vector<std::size_t> members() const {
      std::vector<std::size_t> out;
      for (std::size_t i = 0; i < _words.size(); ++i) {
        for (auto w = _words[i]; w != 0; w &= w - 1) {
          out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        }
      }
      return out;
    }

    friend bool operator==(Bitset const&, Bitset const&) = default;

   private:
    void trim() {
      if (_size % 64 != 0 && !_words.empty()) {
        _words.back() &= (std::uint64_t{1} << (_size % 64)) - 1;
      }
    }

    std::size_t                _size = 0;
    std::vector<std::uint64_t> _words;
  };

}  // namespace covering
