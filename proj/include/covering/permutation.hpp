#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "covering/partitions.hpp"

namespace covering {

  // Bijection of {0, ..., n-1}; printed 1-based in cycle notation.
  //
  // Products act on the right: i(xy) = (ix)y, so x * y applies x first.
  class Permutation {
   public:
    using point_type = std::uint16_t;

    Permutation() = default;
    explicit Permutation(std::size_t degree);
    explicit Permutation(std::vector<point_type> images);

    // Cycles are 1-based.
    static Permutation from_cycles(std::size_t                          degree,
                                   std::vector<std::vector<int>> const& cycles);
    // "(1 2 3)(4 5)" or "()" ; commas between points are also accepted.
    static Permutation parse(std::string_view text, std::size_t degree);

    std::size_t degree() const noexcept { return _images.size(); }
    point_type  operator[](std::size_t i) const { return _images[i]; }
    std::vector<point_type> const& images() const noexcept { return _images; }

    Permutation operator*(Permutation const& that) const;
    Permutation inverse() const;
    // g^-1 * this * g
    Permutation conjugate_by(Permutation const& g) const;

    bool        is_identity() const noexcept;
    bool        even() const;
    // Cycles in order of smallest point, 0-based, fixed points included.
    std::vector<std::vector<point_type>> cycles() const;
    Partition                            cycle_type() const;
    std::size_t                          orbit_count() const;
    std::vector<int>                     fixed_points() const;  // 1-based

    std::string to_string() const;  // 1-based, fixed points omitted

    friend bool operator==(Permutation const&, Permutation const&) = default;
    friend auto operator<=>(Permutation const&, Permutation const&) = default;

   private:
    std::vector<point_type> _images;
  };

  // The element of the given cycle type whose cycles list 1..n in
  // increasing order with cycle lengths in decreasing order, e.g.
  // [3,2] -> (1 2 3)(4 5).
  Permutation canonical_representative(Partition const& cycle_type);

}  // namespace covering
