#include <doctest.h>

#include <cmath>

#include "covering/algebraic.hpp"

using namespace covering;

TEST_CASE("algebraic values normalise") {
  auto golden = AlgebraicValue::make(1, 1, 5, 2);
  CHECK_FALSE(golden.is_rational());
  CHECK(golden.to_string() == "(1+sqrt(5))/2");
  CHECK(AlgebraicValue::make(4, 0, 5, 2) == AlgebraicValue(2));
  CHECK(AlgebraicValue::make(3, 2, 1, 1) == AlgebraicValue(5));
  CHECK(AlgebraicValue::make(-1, 1, -7, 2).conjugate() == AlgebraicValue::make(-1, -1, -7, 2));
  CHECK(golden.conjugate() == golden);
  CHECK(golden.modulus() == doctest::Approx(1.6180339887));
  CHECK(AlgebraicValue::make(-1, 1, -7, 2).modulus() == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("radical sums multiply exactly") {
  auto r5 = RadicalSum::radical(1, 5);
  auto product = r5 * r5;
  CHECK(product.is_rational());
  CHECK(product.rational_part() == 5);

  auto r3 = RadicalSum::radical(1, 3);
  auto r15 = r3 * r5;
  CHECK_FALSE(r15.is_rational());
  CHECK(r15.terms().at(15) == 1);

  // sqrt(-7) sqrt(-7) = -7
  auto i7 = RadicalSum::radical(1, -7);
  CHECK((i7 * i7).rational_part() == -7);
  // sqrt(-3) sqrt(-15) = -3 sqrt(5)
  auto mixed = RadicalSum::radical(1, -3) * RadicalSum::radical(1, -15);
  CHECK(mixed.terms().at(5) == -3);

  // ((1 + sqrt 5)/2)((1 - sqrt 5)/2) = -1
  auto g  = AlgebraicValue::make(1, 1, 5, 2).to_radical_sum();
  auto gc = AlgebraicValue::make(1, -1, 5, 2).to_radical_sum();
  CHECK((g * gc).is_rational());
  CHECK((g * gc).rational_part() == -1);
  CHECK((g + gc).rational_part() == 1);
  CHECK((g - g).is_zero());
}

TEST_CASE("squarefree decomposition") {
  mpz_class s;
  long      d = 0;
  squarefree_decompose(45, s, d);
  CHECK(s == 3);
  CHECK(d == 5);
  squarefree_decompose(-28, s, d);
  CHECK(s == 2);
  CHECK(d == -7);
  squarefree_decompose(1, s, d);
  CHECK(s == 1);
  CHECK(d == 1);
}
