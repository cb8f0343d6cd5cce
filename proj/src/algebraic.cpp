#include "covering/algebraic.hpp"

#include <cmath>
#include <numeric>

#include "covering/errors.hpp"

namespace covering {

  AlgebraicValue AlgebraicValue::make(mpz_class a, mpz_class b, long d, int den) {
    if (den != 1 && den != 2) {
      throw ArgumentError("AlgebraicValue denominator must be 1 or 2");
    }
    AlgebraicValue v;
    if (b == 0 || d == 1) {
      a += b;  // sqrt(1) = 1
      b = 0;
      d = 1;
    }
    if (den == 2 && b == 0 && mpz_even_p(a.get_mpz_t())) {
      a /= 2;
      den = 1;
    }
    v._a   = std::move(a);
    v._b   = std::move(b);
    v._d   = d;
    v._den = den;
    return v;
  }

  AlgebraicValue AlgebraicValue::conjugate() const {
    if (_d < 0) {
      return make(_a, -_b, _d, _den);
    }
    return *this;
  }

  AlgebraicValue AlgebraicValue::operator-() const {
    return make(-_a, -_b, _d, _den);
  }

  RadicalSum AlgebraicValue::to_radical_sum() const {
    RadicalSum r(mpq_class(_a, _den));
    if (_b != 0) {
      r += RadicalSum::radical(mpq_class(_b, _den), _d);
    }
    return r;
  }

  double AlgebraicValue::modulus() const {
    double a = _a.get_d(), b = _b.get_d();
    double den = _den;
    if (_d < 0) {
      return std::sqrt(a * a + b * b * static_cast<double>(-_d)) / den;
    }
    return std::fabs(a + b * std::sqrt(static_cast<double>(_d))) / den;
  }

  std::string AlgebraicValue::to_string() const {
    if (_b == 0) {
      return _den == 1 ? _a.get_str() : _a.get_str() + "/2";
    }
    std::string out = "(" + _a.get_str();
    out += (_b < 0 ? "-" : "+");
    mpz_class absb = abs(_b);
    if (absb != 1) {
      out += absb.get_str() + "*";
    }
    out += "sqrt(" + std::to_string(_d) + "))";
    if (_den == 2) {
      out += "/2";
    }
    return out;
  }

  RadicalSum::RadicalSum(mpq_class q) {
    add_term(1, q);
  }

  RadicalSum RadicalSum::radical(mpq_class coeff, long d) {
    RadicalSum r;
    r.add_term(d, coeff);
    return r;
  }

  void RadicalSum::add_term(long d, mpq_class const& q) {
    if (q == 0) {
      return;
    }
    auto [it, inserted] = _terms.try_emplace(d, q);
    if (!inserted) {
      it->second += q;
      if (it->second == 0) {
        _terms.erase(it);
      }
    }
  }

  RadicalSum& RadicalSum::operator+=(RadicalSum const& that) {
    for (auto const& [d, q] : that._terms) {
      add_term(d, q);
    }
    return *this;
  }

  RadicalSum& RadicalSum::operator-=(RadicalSum const& that) {
    for (auto const& [d, q] : that._terms) {
      add_term(d, -q);
    }
    return *this;
  }

  RadicalSum RadicalSum::operator+(RadicalSum const& that) const {
    RadicalSum r = *this;
    return r += that;
  }

  RadicalSum RadicalSum::operator-(RadicalSum const& that) const {
    RadicalSum r = *this;
    return r -= that;
  }

  RadicalSum RadicalSum::operator*(RadicalSum const& that) const {
    RadicalSum r;
    for (auto const& [d1, q1] : _terms) {
      for (auto const& [d2, q2] : that._terms) {
        // sqrt(d1) sqrt(d2) = sign * g * sqrt(d1 d2 / g^2), g = gcd
        long      g    = std::gcd(d1, d2);
        mpq_class coef = q1 * q2 * g;
        if (d1 < 0 && d2 < 0) {
          coef = -coef;
        }
        r.add_term((d1 / g) * (d2 / g), coef);
      }
    }
    return r;
  }

  RadicalSum& RadicalSum::operator*=(mpq_class const& q) {
    if (q == 0) {
      _terms.clear();
      return *this;
    }
    for (auto& [d, c] : _terms) {
      c *= q;
    }
    return *this;
  }

  RadicalSum RadicalSum::conjugate() const {
    RadicalSum r = *this;
    for (auto& [d, c] : r._terms) {
      if (d < 0) {
        c = -c;
      }
    }
    return r;
  }

  bool RadicalSum::is_rational() const {
    return _terms.empty() || (_terms.size() == 1 && _terms.begin()->first == 1);
  }

  bool RadicalSum::is_zero() const {
    return _terms.empty();
  }

  mpq_class RadicalSum::rational_part() const {
    auto it = _terms.find(1);
    return it == _terms.end() ? mpq_class(0) : it->second;
  }

  std::string RadicalSum::to_string() const {
    if (_terms.empty()) {
      return "0";
    }
    std::string out;
    for (auto const& [d, q] : _terms) {
      if (!out.empty()) {
        out += " + ";
      }
      out += q.get_str();
      if (d != 1) {
        out += "*sqrt(" + std::to_string(d) + ")";
      }
    }
    return out;
  }

  void squarefree_decompose(mpz_class const& v, mpz_class& s, long& d) {
    if (v == 0) {
      throw ArgumentError("squarefree_decompose: zero");
    }
    mpz_class rest = abs(v);
    s              = 1;
    mpz_class core = 1;
    for (unsigned long p = 2; mpz_class(p) * p <= rest; ++p) {
      int e = 0;
      while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
        rest /= p;
        ++e;
      }
      for (int i = 0; i < e / 2; ++i) {
        s *= p;
      }
      if (e % 2 == 1) {
        core *= p;
      }
    }
    core *= rest;
    if (!core.fits_slong_p()) {
      throw ResourceError("square-free core does not fit a machine word");
    }
    d = core.get_si();
    if (v < 0) {
      d = -d;
    }
  }

}  // namespace covering
