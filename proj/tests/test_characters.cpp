#include <doctest.h>

#include <filesystem>

#include "covering/characters.hpp"
#include "covering/errors.hpp"
#include "oracles.hpp"

using namespace covering;

namespace {

  // <row i, row j> weighted by class sizes, exactly.
  RadicalSum inner_product(CharacterTable const& t, std::size_t i, std::size_t j) {
    RadicalSum sum;
    for (std::size_t c = 0; c < t.num_classes(); ++c) {
      auto term = t.value(i, c).to_radical_sum() * t.value(j, c).conjugate().to_radical_sum();
      term *= mpq_class(t.classes()[c].size);
      sum += term;
    }
    return sum;
  }

  AlgebraicValue const& cell(CharacterTable const& t, std::string const& chi,
                             std::string const& cls) {
    for (std::size_t i = 0; i < t.num_irreducibles(); ++i) {
      if (t.irreducibles()[i].to_string() == chi) {
        for (std::size_t c = 0; c < t.num_classes(); ++c) {
          if (t.classes()[c].short_id() == cls) {
            return t.value(i, c);
          }
        }
      }
    }
    FAIL("cell not found: " << chi << " " << cls);
    return t.value(0, 0);
  }

}  // namespace

TEST_CASE("Murnaghan-Nakayama values") {
  CHECK(mn_value(Partition({5}), Partition({2, 2, 1})) == 1);
  CHECK(mn_value(Partition({1, 1, 1, 1, 1}), Partition({2, 2, 1})) == 1);
  CHECK(mn_value(Partition({4, 1}), Partition({5})) == -1);
  CHECK_THROWS_AS(mn_value(Partition({4, 1}), Partition({3})), ArgumentError);
  for (int n = 1; n <= 10; ++n) {
    auto parts = enumerate_partitions(n);
    for (auto const& lambda : parts) {
      for (auto const& mu : parts) {
        CHECK(mn_value(lambda, mu) == oracles::character(lambda.parts(), mu.parts()));
      }
    }
  }
}

TEST_CASE("small symmetric tables") {
  auto s2 = build_sym_table(2);
  REQUIRE(s2.num_classes() == 2);
  // rows [2], [1,1]; columns [2], [1,1]
  CHECK(s2.value(0, 0) == AlgebraicValue(1));
  CHECK(s2.value(0, 1) == AlgebraicValue(1));
  CHECK(s2.value(1, 0) == AlgebraicValue(-1));
  CHECK(s2.value(1, 1) == AlgebraicValue(1));

  auto s5 = build_sym_table(5);
  CHECK(cell(s5, "4,1", "[1,1,1,1,1]") == AlgebraicValue(4));
  CHECK(cell(s5, "3,1,1", "[2,2,1]") == AlgebraicValue(-2));
  CHECK(cell(s5, "3,1,1", "[5]") == AlgebraicValue(1));
  std::vector<mpz_class> degrees = s5.degrees();
  std::sort(degrees.begin(), degrees.end());
  CHECK(degrees == std::vector<mpz_class>{1, 1, 4, 4, 5, 5, 6});
}

TEST_CASE("alternating group of degree 5") {
  auto a5 = build_alt_table(5);
  std::vector<mpz_class> degrees = a5.degrees();
  std::sort(degrees.begin(), degrees.end());
  CHECK(degrees == std::vector<mpz_class>{1, 3, 3, 4, 5});
  auto plus  = AlgebraicValue::make(1, 1, 5, 2);
  auto minus = AlgebraicValue::make(1, -1, 5, 2);
  CHECK(cell(a5, "3,1,1:+", "[5]:+") == plus);
  CHECK(cell(a5, "3,1,1:+", "[5]:-") == minus);
  CHECK(cell(a5, "3,1,1:-", "[5]:+") == minus);
  CHECK(cell(a5, "3,1,1:-", "[5]:-") == plus);
  CHECK(cell(a5, "3,1,1:+", "[2,2,1]") == AlgebraicValue(-1));
  CHECK_THROWS_AS(build_alt_table(2), ArgumentError);
  CHECK_THROWS_AS(build_sym_table(25), ResourceError);
}

TEST_CASE("orthogonality and degree sums, exact") {
  for (int n = 2; n <= 9; ++n) {
    for (auto family : {Family::Sym, Family::Alt}) {
      if (family == Family::Alt && n < 3) {
        continue;
      }
      auto      t     = build_table({family, n});
      mpz_class order = t.group().order();
      REQUIRE(t.num_irreducibles() == t.num_classes());
      mpz_class squares = 0;
      for (auto const& d : t.degrees()) {
        squares += d * d;
      }
      CHECK(squares == order);
      for (std::size_t i = 0; i < t.num_irreducibles(); ++i) {
        for (std::size_t j = 0; j < t.num_irreducibles(); ++j) {
          auto ip = inner_product(t, i, j);
          CHECK(ip.is_rational());
          CHECK(ip.rational_part() == (i == j ? mpq_class(order) : mpq_class(0)));
        }
      }
    }
  }
}

TEST_CASE("split constituents restrict the symmetric character") {
  for (int n = 3; n <= 10; ++n) {
    auto alt = build_alt_table(n);
    for (std::size_t i = 0; i < alt.num_irreducibles(); ++i) {
      auto const& label = alt.irreducibles()[i];
      if (label.half != Split::Plus) {
        continue;
      }
      std::size_t partner = i + 1;
      REQUIRE(alt.irreducibles()[partner].half == Split::Minus);
      for (std::size_t c = 0; c < alt.num_classes(); ++c) {
        auto sum = alt.value(i, c).to_radical_sum() + alt.value(partner, c).to_radical_sum();
        CHECK(sum.is_rational());
        CHECK(sum.rational_part()
              == oracles::character(label.partition.parts(),
                                    alt.classes()[c].cycle_type.parts()));
      }
    }
  }
}

TEST_CASE("inverse classes") {
  auto a5p = describe_class({Family::Alt, 5}, Partition({5}), Split::Plus);
  CHECK(inverse_class(a5p) == a5p);
  auto a7p = describe_class({Family::Alt, 7}, Partition({7}), Split::Plus);
  CHECK(inverse_class(a7p).split == Split::Minus);
  auto s = describe_class({Family::Sym, 6}, Partition({4, 2}));
  CHECK(inverse_class(s) == s);
}

TEST_CASE("degrees-only mode and cache round trip") {
  auto d = irreducible_degrees({Family::Alt, 5});
  std::sort(d.begin(), d.end());
  CHECK(d == std::vector<mpz_class>{1, 3, 3, 4, 5});
  for (int n = 3; n <= 9; ++n) {
    auto full = build_alt_table(n).degrees();
    auto fast = irreducible_degrees({Family::Alt, n});
    std::sort(full.begin(), full.end());
    std::sort(fast.begin(), fast.end());
    CHECK(full == fast);
  }
  mpz_class squares = 0;
  for (auto const& x : irreducible_degrees({Family::Alt, 30})) {
    squares += x * x;
  }
  CHECK(squares == GroupSpec{Family::Alt, 30}.order());

  auto dir = std::filesystem::temp_directory_path() / "covering-test-cache";
  std::filesystem::remove_all(dir);
  auto built  = cached_table({Family::Alt, 7}, dir);
  auto loaded = cached_table({Family::Alt, 7}, dir);
  CHECK(built == loaded);
  CHECK(std::filesystem::exists(dir / "alt-7-v1.tbl"));
  std::filesystem::remove_all(dir);
}
