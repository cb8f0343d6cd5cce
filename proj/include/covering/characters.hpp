#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "covering/algebraic.hpp"
#include "covering/partitions.hpp"

namespace covering {

  // Largest n for which full tables are built unless the caller raises it.
  inline constexpr int default_table_cap = 20;
  // Degrees-only mode (hook lengths) goes further.
  inline constexpr int degrees_only_cap = 40;
  inline constexpr int table_cache_version = 1;

  // chi_lambda on the class of cycle type mu in Sym(n), by border-strip
  // removal. Memoised per thread on (shape, remaining cycle parts).
  mpz_class mn_value(Partition const& lambda, Partition const& mu);

  // Label of an irreducible: a partition for Sym(n) and for non-self-conjugate
  // restrictions to Alt(n); a partition with a +/- half for the two
  // constituents of a self-conjugate restriction.
  struct IrreducibleLabel {
    Partition partition;
    Split     half = Split::NotSplit;

    std::string to_string() const;
    friend bool operator==(IrreducibleLabel const&, IrreducibleLabel const&) = default;
  };

  // Exact character table of Sym(n) or Alt(n).
  //
  // Alt(n) conventions: the split class tagged Plus contains
  // canonical_representative(type); for self-conjugate lambda with diagonal
  // hooks h and eps = (-1)^((n - #h)/2), the constituent tagged Plus takes
  // (eps + sqrt(eps * prod h)) / 2 on the Plus class of type h.
  class CharacterTable {
   public:
    CharacterTable() = default;
    CharacterTable(GroupSpec                     group,
                   std::vector<IrreducibleLabel> irreducibles,
                   std::vector<ClassDescriptor>  classes,
                   std::vector<AlgebraicValue>   values);

    GroupSpec const& group() const noexcept { return _group; }
    std::size_t      num_irreducibles() const noexcept { return _irreducibles.size(); }
    std::size_t      num_classes() const noexcept { return _classes.size(); }

    std::vector<IrreducibleLabel> const& irreducibles() const noexcept {
      return _irreducibles;
    }
    std::vector<ClassDescriptor> const& classes() const noexcept { return _classes; }
    std::vector<mpz_class> const&       degrees() const noexcept { return _degrees; }

    AlgebraicValue const& value(std::size_t chi, std::size_t cls) const {
      return _values[chi * _classes.size() + cls];
    }

    std::size_t identity_class() const noexcept { return _identity; }
    std::size_t class_index(ClassDescriptor const& c) const;
    // Index of the class of inverses.
    std::size_t inverse_class_index(std::size_t cls) const { return _inverse[cls]; }

    // One record per cell "lambda;mu;a;b;d;den" after a header line.
    void                  save(std::filesystem::path const& file) const;
    static CharacterTable load(std::filesystem::path const& file);

    friend bool operator==(CharacterTable const& x, CharacterTable const& y) {
      return x._group == y._group && x._irreducibles == y._irreducibles
             && x._classes == y._classes && x._values == y._values;
    }

   private:
    GroupSpec                     _group;
    std::vector<IrreducibleLabel> _irreducibles;
    std::vector<ClassDescriptor>  _classes;
    std::vector<AlgebraicValue>   _values;
    std::vector<mpz_class>        _degrees;
    std::vector<std::size_t>      _inverse;
    std::size_t                   _identity = 0;
  };

  CharacterTable build_sym_table(int n, int cap = default_table_cap);
  CharacterTable build_alt_table(int n, int cap = default_table_cap);
  CharacterTable build_table(GroupSpec group, int cap = default_table_cap);

  // Looks for a cached table under cache_dir, builds and stores it otherwise.
  CharacterTable cached_table(GroupSpec                    group,
                              std::filesystem::path const& cache_dir,
                              int                          cap = default_table_cap);

  // Irreducible degrees without the full table (hook-length formula).
  std::vector<mpz_class> irreducible_degrees(GroupSpec group,
                                             int       cap = degrees_only_cap);

  // Class of inverses of elements of c. Sym classes and non-split Alt
  // classes are their own inverse class; a split class is fixed iff a
  // permutation conjugating the canonical representative to its inverse
  // is even.
  ClassDescriptor inverse_class(ClassDescriptor const& c);

}  // namespace covering
