#pragma once

#include <span>
#include <vector>

#include <gmpxx.h>

#include "covering/group.hpp"
#include "covering/partitions.hpp"
#include "covering/permutation.hpp"

namespace covering {

  // n minus the number of orbits (fixed points included) of an element.
  struct DeltaValue {
    int n      = 0;
    int orbits = 0;
    int delta  = 0;
  };

  DeltaValue delta_of_type(Partition const& cycle_type);
  DeltaValue delta_of_class(ClassDescriptor const& c);

  struct SizeBound {
    bool      holds = false;
    mpz_class class_size;
    mpz_class bound;  // n^(2 delta)
  };

  // |C| <= n^(2 delta(C)), exactly.
  SizeBound size_bound_check(ClassDescriptor const& c);

  // Sum of delta over the classes exceeds 3(n - 2). The classes must be
  // Sym-stable classes of Alt(n) (no split tag), n >= 5.
  bool rodgers_criterion(std::span<ClassDescriptor const> classes);

  struct RodgersCheck {
    bool criterion = false;
    int  delta_sum = 0;
    int  threshold = 0;  // 3(n - 2)
    bool covered   = false;
  };

  // Evaluates the criterion and decides coverage of the product with the
  // group's backend; alt must be the natural Alt(n) context.
  RodgersCheck rodgers_verify(GroupPtr const& alt, std::span<ClassDescriptor const> classes);

  // (s + 1) / 2 for the largest odd s with (s + 1)^2 / 4 <= n; bounds the
  // number of cycles of a permutation whose cycles have distinct odd lengths.
  int orbit_count_bound(int n);

  int isqrt(int n);

  // Alt(n) or Sym(n) class of an explicit permutation (split halves resolved
  // against canonical_representative).
  ClassDescriptor class_of_permutation(Permutation const& p, Family family);

  struct WitnessResult {
    ClassDescriptor  product_class;
    Permutation      x, y, y_prime, xy_prime;
    std::vector<int> fixed_points_of_product;  // 1-based
    DeltaValue       product_delta;
    bool             fixes_1_and_3      = false;
    bool             orbit_bound_holds  = false;  // orbits <= 2 sqrt(n) + 2
    bool             sym_stable         = false;
    bool             delta_bound_holds  = false;  // delta >= n - 2 floor(sqrt n) - 2
    bool ok() const {
      return fixes_1_and_3 && orbit_bound_holds && sym_stable && delta_bound_holds;
    }
  };

  // x, y canonical representatives of ci, cj; y' = y^((1 2)(3 4)); checks
  // the product xy'. Needs n >= 9 and distinct odd cycle types.
  WitnessResult pair_product_witness(ClassDescriptor const& ci, ClassDescriptor const& cj);

  // (beta l / 2) n + floor((8 - l) / 2) (n - 2 sqrt(n) - 2) > 3 (n - 2),
  // decided in exact integer arithmetic.
  bool budget_inequality_holds(mpq_class const& beta, int ell, long n);

  struct BudgetReport {
    mpq_class beta;
    long      verified_up_to = 0;
    // least N with the inequality true for all l in 0..8 and N <= n <= limit
    long              threshold = 0;
    std::vector<long> threshold_per_ell;  // same, per l
  };

  BudgetReport budget_threshold(mpq_class const& beta, long limit = 10'000);

}  // namespace covering
