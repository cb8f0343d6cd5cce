#pragma once

#include <map>
#include <string>

#include <gmpxx.h>

namespace covering {

  class RadicalSum;

  // Character value (a + b*sqrt(d)) / den with d square-free and den in {1, 2}.
  // b == 0 forces d == 1; a rational value with den == 2 is kept only when a
  // is odd.
  class AlgebraicValue {
   public:
    AlgebraicValue() = default;
    AlgebraicValue(mpz_class a) : _a(std::move(a)) {}  // NOLINT(runtime/explicit)
    AlgebraicValue(long a) : _a(a) {}                  // NOLINT(runtime/explicit)

    // Normalises; d must be square-free.
    static AlgebraicValue make(mpz_class a, mpz_class b, long d, int den);

    mpz_class const& a() const noexcept { return _a; }
    mpz_class const& b() const noexcept { return _b; }
    long             d() const noexcept { return _d; }
    int              den() const noexcept { return _den; }

    bool is_rational() const noexcept { return _b == 0; }
    bool is_zero() const noexcept { return _a == 0 && _b == 0; }

    // Complex conjugate: flips b when d < 0; real values are fixed.
    AlgebraicValue conjugate() const;
    AlgebraicValue operator-() const;

    RadicalSum to_radical_sum() const;
    // |value| as a double.
    double modulus() const;

    std::string to_string() const;

    friend bool operator==(AlgebraicValue const&, AlgebraicValue const&) = default;

   private:
    mpz_class _a = 0;
    mpz_class _b = 0;
    long      _d   = 1;
    int       _den = 1;
  };

  // Finite sum  sum_d q_d * sqrt(d)  over square-free d with rational q_d;
  // d == 1 is the rational part. Closed under +, -, * and conjugation.
  class RadicalSum {
   public:
    RadicalSum() = default;
    RadicalSum(mpq_class q);  // NOLINT(runtime/explicit)
    static RadicalSum radical(mpq_class coeff, long d);

    RadicalSum& operator+=(RadicalSum const& that);
    RadicalSum& operator-=(RadicalSum const& that);
    RadicalSum  operator+(RadicalSum const& that) const;
    RadicalSum  operator-(RadicalSum const& that) const;
    RadicalSum  operator*(RadicalSum const& that) const;
    RadicalSum& operator*=(mpq_class const& q);
    RadicalSum  conjugate() const;

    bool             is_rational() const;
    bool             is_zero() const;
    mpq_class        rational_part() const;
    std::string      to_string() const;
    std::map<long, mpq_class> const& terms() const noexcept { return _terms; }

    friend bool operator==(RadicalSum const& x, RadicalSum const& y) {
      return x._terms == y._terms;
    }

   private:
    void add_term(long d, mpq_class const& q);
    // d -> coefficient, zero coefficients never stored
    std::map<long, mpq_class> _terms;
  };

  // Writes v = s^2 * d with d square-free (sign carried by d). v != 0.
  void squarefree_decompose(mpz_class const& v, mpz_class& s, long& d);

}  // namespace covering
