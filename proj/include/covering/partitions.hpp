#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace covering {

  // Weakly decreasing list of positive parts. Fixed points of a permutation
  // appear as explicit parts equal to 1.
  class Partition {
   public:
    Partition() = default;
    // Throws ArgumentError unless parts are positive and non-increasing.
    explicit Partition(std::vector<int> parts);

    static Partition identity(int n) { return Partition(std::vector<int>(n, 1)); }

    int n() const noexcept { return _n; }
    std::size_t length() const noexcept { return _parts.size(); }
    std::vector<int> const& parts() const noexcept { return _parts; }
    int operator[](std::size_t i) const { return _parts[i]; }

    Partition transpose() const;
    bool self_conjugate() const { return transpose() == *this; }
    // Sign of a permutation of this cycle type is even.
    bool even() const noexcept { return (_n - static_cast<int>(_parts.size())) % 2 == 0; }
    bool distinct_odd_parts() const noexcept;
    // multiplicity[k] = number of parts equal to k, index 0 unused
    std::vector<int> multiplicities() const;

    std::string to_string() const;  // "5,3,1"
    static Partition parse(std::string_view text);

    friend bool operator==(Partition const&, Partition const&) = default;
    // Lexicographic comparison on parts.
    friend auto operator<=>(Partition const& a, Partition const& b) {
      return a._parts <=> b._parts;
    }

   private:
    std::vector<int> _parts;
    int              _n = 0;
  };

  // All partitions of n, lexicographically decreasing ([n] first, [1^n] last).
  std::vector<Partition> enumerate_partitions(int n);

  // p(n) by the pentagonal-number recurrence; independent of the enumerator.
  mpz_class partition_count(int n);

  enum class Family { Sym, Alt };

  enum class Split { NotSplit, Plus, Minus };

  struct GroupSpec {
    Family family = Family::Sym;
    int    n      = 1;

    mpz_class   order() const;
    std::string to_string() const;  // "sym:5" / "alt:9"
    friend bool operator==(GroupSpec const&, GroupSpec const&) = default;
  };

  // Conjugacy class of Sym(n) or Alt(n).
  struct ClassDescriptor {
    GroupSpec group;
    Partition cycle_type;
    mpz_class size;
    mpz_class centralizer_order;
    bool      even  = true;
    Split     split = Split::NotSplit;

    bool is_identity() const {
      return cycle_type.length() == static_cast<std::size_t>(group.n);
    }
    // "alt:9:[5,3,1]:+"
    std::string id() const;
    // "[5,3,1]:+" relative to the group
    std::string short_id() const;

    friend bool operator==(ClassDescriptor const& a, ClassDescriptor const& b) {
      return a.group == b.group && a.cycle_type == b.cycle_type
             && a.split == b.split;
    }
  };

  // Whether the Sym(n) class of this type breaks into two Alt(n) classes.
  inline bool splits_in_alt(Partition const& p) {
    return p.distinct_odd_parts();
  }

  mpz_class sym_centralizer_order(Partition const& p);

  // split_choice must be given exactly when the type splits in Alt(n).
  ClassDescriptor describe_class(GroupSpec                 group,
                                 Partition const&          cycle_type,
                                 std::optional<Split> split_choice = {});

  // All classes of the group in canonical order: partitions in
  // lexicographically decreasing order, Plus before Minus for split types.
  std::vector<ClassDescriptor> all_classes(GroupSpec group);

  // Principal hook lengths of a self-conjugate partition, decreasing.
  std::vector<int> diagonal_hooks(Partition const& p);

  // Hook-length formula for the degree of the Sym(n) irreducible.
  mpz_class hook_degree(Partition const& p);

  GroupSpec parse_group_spec(std::string_view text);

  // Parses "[5,3,1]:+" (relative to group) or "alt:9:[5,3,1]:+".
  ClassDescriptor parse_class_id(std::string_view text,
                                 std::optional<GroupSpec> group = {});

}  // namespace covering
