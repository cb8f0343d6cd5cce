#include "covering/rodgers.hpp"

#include <algorithm>

#include "covering/errors.hpp"
#include "covering/frobenius.hpp"

namespace covering {

  DeltaValue delta_of_type(Partition const& cycle_type) {
    DeltaValue v;
    v.n      = cycle_type.n();
    v.orbits = static_cast<int>(cycle_type.length());
    v.delta  = v.n - v.orbits;
    return v;
  }

  DeltaValue delta_of_class(ClassDescriptor const& c) {
    return delta_of_type(c.cycle_type);
  }

  SizeBound size_bound_check(ClassDescriptor const& c) {
    SizeBound r;
    r.class_size = c.size;
    mpz_ui_pow_ui(r.bound.get_mpz_t(),
                  static_cast<unsigned long>(c.group.n),
                  2 * static_cast<unsigned long>(delta_of_class(c).delta));
    r.holds = r.class_size <= r.bound;
    return r;
  }

  namespace {
    void check_rodgers_input(std::span<ClassDescriptor const> classes) {
      if (classes.empty()) {
        throw ArgumentError("rodgers_criterion needs at least one class");
      }
      auto const& g = classes.front().group;
      if (g.n < 5) {
        throw ArgumentError("rodgers_criterion needs n >= 5");
      }
      for (auto const& c : classes) {
        if (!(c.group == g)) {
          throw ArgumentError("rodgers_criterion: classes from different groups");
        }
        if (c.group.family != Family::Alt) {
          throw ArgumentError("rodgers_criterion expects classes of Alt(n)");
        }
        if (c.split != Split::NotSplit) {
          throw ArgumentError("class " + c.id()
                              + " splits in Alt(n); the criterion needs Sym-stable classes");
        }
      }
    }
  }  // namespace

  bool rodgers_criterion(std::span<ClassDescriptor const> classes) {
    check_rodgers_input(classes);
    int n   = classes.front().group.n;
    int sum = 0;
    for (auto const& c : classes) {
      sum += delta_of_class(c).delta;
    }
    return sum > 3 * (n - 2);
  }

  RodgersCheck rodgers_verify(GroupPtr const& alt, std::span<ClassDescriptor const> classes) {
    RodgersCheck r;
    r.criterion = rodgers_criterion(classes);
    int n       = classes.front().group.n;
    r.threshold = 3 * (n - 2);
    for (auto const& c : classes) {
      r.delta_sum += delta_of_class(c).delta;
    }
    if (!alt->natural() || !(*alt->natural() == classes.front().group)) {
      throw ArgumentError("rodgers_verify: group context is not "
                          + classes.front().group.to_string());
    }
    std::vector<NormalSet> sets;
    for (auto const& c : classes) {
      sets.push_back(NormalSet::parse(alt, c.short_id()));
    }
    r.covered = covers_group(sets).covered;
    return r;
  }

  int isqrt(int n) {
    if (n < 0) {
      throw ArgumentError("isqrt of a negative number");
    }
    int r = 0;
    while ((r + 1) * (r + 1) <= n) {
      ++r;
    }
    return r;
  }

  int orbit_count_bound(int n) {
    if (n < 1) {
      throw ArgumentError("orbit_count_bound needs n >= 1");
    }
    int s = 1;
    while ((s + 3) * (s + 3) / 4 <= n) {
      s += 2;
    }
    return (s + 1) / 2;
  }

  ClassDescriptor class_of_permutation(Permutation const& p, Family family) {
    Partition type = p.cycle_type();
    GroupSpec g{family, type.n()};
    if (family == Family::Sym || !splits_in_alt(type) || g.n < 2) {
      return describe_class(g, type);
    }
    if (!type.even()) {
      throw DomainError("odd permutation has no Alt(n) class");
    }
    // Conjugator from the canonical representative to p, aligning cycles of
    // equal length; split types have distinct lengths so the alignment is
    // unique up to rotations, all of the same parity.
    Permutation canon = canonical_representative(type);
    auto        from  = canon.cycles();
    auto        to    = p.cycles();
    auto        by_len = [](auto const& a, auto const& b) { return a.size() > b.size(); };
    std::stable_sort(from.begin(), from.end(), by_len);
    std::stable_sort(to.begin(), to.end(), by_len);
    std::vector<Permutation::point_type> images(p.degree());
    for (std::size_t c = 0; c < from.size(); ++c) {
      for (std::size_t i = 0; i < from[c].size(); ++i) {
        images[from[c][i]] = to[c][i];
      }
    }
    return describe_class(g, type,
                          Permutation(std::move(images)).even() ? Split::Plus
                                                                : Split::Minus);
  }

  WitnessResult pair_product_witness(ClassDescriptor const& ci, ClassDescriptor const& cj) {
    int n = ci.group.n;
    if (!(ci.group == cj.group)) {
      throw ArgumentError("pair_product_witness: classes from different groups");
    }
    if (n < 9) {
      throw ArgumentError("pair_product_witness needs n >= 9");
    }
    if (!ci.cycle_type.distinct_odd_parts() || !cj.cycle_type.distinct_odd_parts()) {
      throw ArgumentError("pair_product_witness needs cycle types with distinct odd parts");
    }
    WitnessResult w;
    w.x            = canonical_representative(ci.cycle_type);
    w.y            = canonical_representative(cj.cycle_type);
    auto swap      = Permutation::from_cycles(n, {{1, 2}, {3, 4}});
    w.y_prime      = w.y.conjugate_by(swap);
    w.xy_prime     = w.x * w.y_prime;
    w.fixed_points_of_product = w.xy_prime.fixed_points();
    w.fixes_1_and_3 = w.xy_prime[0] == 0 && w.xy_prime[2] == 2;

    Partition type  = w.xy_prime.cycle_type();
    w.product_delta = delta_of_type(type);
    w.sym_stable    = !type.distinct_odd_parts();
    w.product_class = class_of_permutation(w.xy_prime, Family::Alt);

    // orbits <= 2 sqrt(n) + 2  <=>  orbits - 2 <= 0 or (orbits - 2)^2 <= 4n
    long t              = w.product_delta.orbits;
    w.orbit_bound_holds = t - 2 <= 0 || (t - 2) * (t - 2) <= 4L * n;
    w.delta_bound_holds = w.product_delta.delta >= n - 2 * isqrt(n) - 2;
    return w;
  }

  bool budget_inequality_holds(mpq_class const& beta, int ell, long n) {
    if (ell < 0 || ell > 8) {
      throw ArgumentError("budget inequality needs 0 <= l <= 8");
    }
    mpz_class p = beta.get_num(), q = beta.get_den();
    long      F = (8 - ell) / 2;
    // multiply through by 2q:  p l n + 2qF(n - 2) - 6q(n - 2) > 4qF sqrt(n)
    mpz_class lhs = p * ell * n + 2 * q * F * (n - 2) - 6 * q * (n - 2);
    if (F == 0) {
      return lhs > 0;
    }
    mpz_class rhs_sq = 16 * q * q * F * F * n;
    return lhs > 0 && lhs * lhs > rhs_sq;
  }

  BudgetReport budget_threshold(mpq_class const& beta, long limit) {
    BudgetReport r;
    r.beta           = beta;
    r.verified_up_to = limit;
    r.threshold_per_ell.assign(9, 1);
    for (int ell = 0; ell <= 8; ++ell) {
      for (long n = limit; n >= 1; --n) {
        if (!budget_inequality_holds(beta, ell, n)) {
          r.threshold_per_ell[ell] = n + 1;
          break;
        }
      }
    }
    r.threshold = *std::max_element(r.threshold_per_ell.begin(), r.threshold_per_ell.end());
    return r;
  }

}  // namespace covering
