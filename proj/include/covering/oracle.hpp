#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "covering/bitset.hpp"
#include "covering/partitions.hpp"
#include "covering/permutation.hpp"

namespace covering {

  // A permutation group enumerated element by element; the ground truth the
  // character engine is checked against.
  //
  // Element 0 is the identity, ids follow breadth-first order under right
  // multiplication by the generators, and class 0 is the identity class.
  // Classes are numbered by their smallest element id.
  class PermGroup {
   public:
    static constexpr std::size_t default_cap = 2'000'000;
    static constexpr std::size_t max_degree  = 16;
    // Groups up to this order keep a full multiplication table.
    static constexpr std::size_t table_limit = 1500;

    static PermGroup enumerate(std::size_t                     degree,
                               std::vector<Permutation> const& generators,
                               std::size_t                     cap = default_cap);

    std::size_t degree() const noexcept { return _degree; }
    std::size_t order() const noexcept { return _order; }
    std::vector<Permutation> const& generators() const noexcept { return _generators; }

    Permutation element(std::size_t id) const;
    // Throws ArgumentError when p is not in the group.
    std::size_t index_of(Permutation const& p) const;
    bool        contains(Permutation const& p) const;
    std::size_t multiply(std::size_t a, std::size_t b) const;
    std::size_t inverse(std::size_t a) const;

    std::size_t num_classes() const noexcept { return _class_members.size(); }
    std::size_t class_of(std::size_t element) const { return _class_of[element]; }
    std::size_t class_rep(std::size_t cls) const { return _class_members[cls].front(); }
    std::size_t class_size(std::size_t cls) const { return _class_members[cls].size(); }
    std::vector<std::uint32_t> const& class_members(std::size_t cls) const {
      return _class_members[cls];
    }
    std::size_t inverse_class(std::size_t cls) const {
      return _class_of[inverse(class_rep(cls))];
    }

    // Class support of C1 * C2: { class_of(r * x) : x in C2 } for a fixed r
    // in C1. rep defaults to the class representative.
    Bitset brute_product_support(std::size_t c1, std::size_t c2) const;
    Bitset brute_product_support(std::size_t c1, std::size_t c2, std::size_t rep) const;

    // Element set of all products a*b.
    Bitset subset_product(Bitset const& a, Bitset const& b) const;
    Bitset class_set_elements(Bitset const& classes) const;

    // Hex digest of degree and generators (cache key).
    std::string content_hash() const;

    void             save(std::filesystem::path const& file) const;
    static PermGroup load(std::filesystem::path const& file);

   private:
    void        build_index();
    void        build_classes();
    std::uint64_t key(std::uint8_t const* images) const;
    std::uint8_t const* images(std::size_t id) const {
      return _elements.data() + id * _degree;
    }
    std::size_t lookup(std::uint8_t const* images) const;

    std::size_t                                  _degree = 0;
    std::size_t                                  _order  = 0;
    std::vector<Permutation>                     _generators;
    std::vector<std::uint8_t>                    _elements;
    std::unordered_map<std::uint64_t, std::uint32_t> _index;
    std::vector<std::uint32_t>                   _table;  // empty above table_limit
    std::vector<std::uint32_t>                   _class_of;
    std::vector<std::vector<std::uint32_t>>      _class_members;
  };

  // Exact test of AB = G by direct convolution with early exit.
  bool brute_subset_pair_product(PermGroup const& g, Bitset const& a, Bitset const& b);
  // Exact test of ABC = G; |G| <= 10^4.
  bool brute_subset_triple_product(PermGroup const& g,
                                   Bitset const&    a,
                                   Bitset const&    b,
                                   Bitset const&    c);
  inline constexpr std::size_t triple_product_limit = 10'000;

  std::vector<Permutation> sym_generators(int n);
  std::vector<Permutation> alt_generators(int n);
  // Mobius action of PSL(2,q) on the q+1 points of the projective line,
  // q in {4, 5, 7, 8, 9, 11, 13}.
  std::vector<Permutation> psl2_generators(int q);

  struct GroupDefinition {
    std::size_t              degree = 0;
    std::vector<Permutation> generators;
  };
  // "degree N" line, then one generator per line in cycle notation; '#'
  // starts a comment.
  GroupDefinition parse_group_definition(std::string_view text);

  // Sym(n)/Alt(n) descriptor of an oracle class of the natural permutation
  // group; the Plus half of a split type is the one holding the canonical
  // representative.
  ClassDescriptor describe_oracle_class(PermGroup const& g,
                                        std::size_t      cls,
                                        GroupSpec        spec);

}  // namespace covering
