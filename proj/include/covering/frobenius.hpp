#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "covering/characters.hpp"
#include "covering/group.hpp"

namespace covering {

  // f(C1, C2, C3) = sum over irreducibles chi of
  //   chi(c1) chi(c2) chi(c3^-1) / chi(1).
  // It is a non-negative rational, zero iff C3 is disjoint from C1 C2. Each
  // term is accumulated exactly in Q(sqrt d); a non-rational or negative
  // total throws InternalError.
  mpq_class frobenius_sum(CharacterTable const& table,
                          std::size_t           c1,
                          std::size_t           c2,
                          std::size_t           c3);
  mpq_class frobenius_sum(CharacterTable const&  table,
                          ClassDescriptor const& c1,
                          ClassDescriptor const& c2,
                          ClassDescriptor const& c3);

  // C3 is contained in C1 C2.
  bool class_in_product(CharacterTable const& table,
                        std::size_t           c1,
                        std::size_t           c2,
                        std::size_t           c3);

  // Normal subset of a group: a non-empty union of classes.
  class NormalSet {
   public:
    NormalSet(GroupPtr group, ClassSet classes);
    NormalSet(GroupPtr group, std::vector<std::size_t> const& classes);

    static NormalSet whole(GroupPtr group);
    static NormalSet identity(GroupPtr group);
    // Comma separated class labels, e.g. "[9]:+,[9]:-,[7,1,1]".
    static NormalSet parse(GroupPtr group, std::string_view text);

    GroupPtr const&   group() const noexcept { return _group; }
    ClassSet const&   classes() const noexcept { return _classes; }
    bool              contains(std::size_t c) const { return _classes.test(c); }
    mpz_class         size() const;
    bool              is_whole_group() const { return _classes.all(); }
    std::vector<std::string> labels() const;

    friend bool operator==(NormalSet const& a, NormalSet const& b) {
      return a._group == b._group && a._classes == b._classes;
    }

   private:
    GroupPtr _group;
    ClassSet _classes;
  };

  struct CoverageReport {
    bool        covered = false;
    ClassSet    support;
    ClassSet    missing;
    std::size_t steps = 0;

    nlohmann::json to_json(GroupContext const& group) const;
  };

  NormalSet      product_support(NormalSet const& s1, NormalSet const& s2);
  CoverageReport covers_group(std::span<NormalSet const> sets);

  // Default iteration cap for power_diameter: 4 * ceil(log|G| / log|S|) + 8.
  std::size_t power_diameter_cap(NormalSet const& s);
  // Least k with S^k = G. Throws ResourceError past the cap.
  std::size_t power_diameter(NormalSet const& s, std::optional<std::size_t> cap = {});

  // Splits a comma-separated list at depth zero of brackets.
  std::vector<std::string> split_class_list(std::string_view text);

}  // namespace covering
