#pragma once

#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "covering/bitset.hpp"
#include "covering/characters.hpp"
#include "covering/oracle.hpp"
#include "covering/partitions.hpp"

namespace covering {

  using ClassSet = Bitset;

  // A finite group together with whichever product backend it has: an exact
  // character table (Sym(n), Alt(n)) or an enumerated permutation group.
  // Class-pair supports are computed on demand and memoised; the backend is
  // chosen by what the context holds, never by the caller.
  class GroupContext {
   public:
    static std::shared_ptr<GroupContext const> with_table(CharacterTable table);
    static std::shared_ptr<GroupContext const> with_oracle(
        std::shared_ptr<PermGroup const> group,
        std::string                      description,
        std::optional<GroupSpec>         natural = {});

    std::string const& description() const noexcept { return _description; }
    mpz_class const&   order() const noexcept { return _order; }
    std::size_t        num_classes() const noexcept { return _sizes.size(); }
    mpz_class const&   class_size(std::size_t c) const { return _sizes[c]; }
    std::string const& class_label(std::size_t c) const { return _labels[c]; }
    std::size_t        identity_class() const noexcept { return _identity; }
    std::size_t        inverse_class(std::size_t c) const { return _inverse[c]; }

    // Accepts the short or fully qualified class label.
    std::size_t parse_class(std::string_view text) const;

    CharacterTable const* table() const noexcept {
      return _table ? &*_table : nullptr;
    }
    PermGroup const* oracle() const noexcept { return _oracle.get(); }
    // Sym(n)/Alt(n) identity of the group when known.
    std::optional<GroupSpec> const& natural() const noexcept { return _natural; }
    // Descriptor of class c; only for natural Sym(n)/Alt(n) contexts.
    ClassDescriptor const& descriptor(std::size_t c) const;

    // Class support of C_i C_j.
    ClassSet const& pair_support(std::size_t i, std::size_t j) const;
    // Smallest non-trivial irreducible degree; needs a table.
    mpz_class min_nontrivial_degree() const;
    std::string backend_name() const { return _table ? "character-table" : "oracle"; }

    ClassSet empty_set() const { return ClassSet(num_classes()); }
    ClassSet full_set() const {
      ClassSet s(num_classes());
      s.set_all();
      return s;
    }

   private:
    GroupContext() = default;
    void finish();

    std::string                      _description;
    mpz_class                        _order;
    std::vector<mpz_class>           _sizes;
    std::vector<std::string>         _labels;
    std::vector<ClassDescriptor>     _descriptors;
    std::vector<std::size_t>         _inverse;
    std::size_t                      _identity = 0;
    std::optional<CharacterTable>    _table;
    std::shared_ptr<PermGroup const> _oracle;
    std::optional<GroupSpec>         _natural;

    mutable std::mutex                           _mutex;
    mutable std::vector<std::unique_ptr<ClassSet>> _supports;
  };

  using GroupPtr = std::shared_ptr<GroupContext const>;

  struct GroupOptions {
    std::filesystem::path cache_dir;
    int                   table_cap = default_table_cap;
    std::size_t           oracle_cap = PermGroup::default_cap;
  };

  // Group descriptions:
  //   sym:N, alt:N           character-table backend
  //   oracle:sym:N, oracle:alt:N   enumerated natural permutation group
  //   psl:2:Q                PSL(2,Q) on the projective line (oracle)
  //   file:PATH              group definition file (oracle)
  GroupPtr make_group(std::string_view text, GroupOptions const& options = {});

  // Enumerates (or loads from cache_dir) the group generated by gens.
  std::shared_ptr<PermGroup const> enumerate_cached(std::size_t                     degree,
                                                    std::vector<Permutation> const& gens,
                                                    GroupOptions const& options = {});

  // For each class of an oracle-backed natural Sym(n)/Alt(n) context, the
  // index of the same class in the table-backed context.
  std::vector<std::size_t> match_classes(GroupContext const& oracle_ctx,
                                         GroupContext const& table_ctx);

}  // namespace covering
