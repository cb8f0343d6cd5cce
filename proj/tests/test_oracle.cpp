#include <doctest.h>

#include <algorithm>
#include <filesystem>

#include "covering/errors.hpp"
#include "covering/oracle.hpp"
#include "covering/rng.hpp"

using namespace covering;

namespace {

  std::vector<std::size_t> sorted_class_sizes(PermGroup const& g) {
    std::vector<std::size_t> sizes;
    for (std::size_t c = 0; c < g.num_classes(); ++c) {
      sizes.push_back(g.class_size(c));
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
  }

}  // namespace

TEST_CASE("enumeration from generators") {
  auto a4 = PermGroup::enumerate(
      4, {Permutation::parse("(1 2 3)", 4), Permutation::parse("(2 3 4)", 4)});
  CHECK(a4.order() == 12);
  auto trivial = PermGroup::enumerate(3, {});
  CHECK(trivial.order() == 1);
  CHECK(trivial.num_classes() == 1);
  auto psl27 = PermGroup::enumerate(8, psl2_generators(7));
  CHECK(psl27.order() == 168);
  CHECK(psl27.num_classes() == 6);
  for (int q : {4, 5, 8, 9, 11, 13}) {
    auto g = PermGroup::enumerate(static_cast<std::size_t>(q) + 1, psl2_generators(q));
    std::size_t expected = static_cast<std::size_t>(q) * (q * q - 1) / (q % 2 ? 2 : 1);
    CHECK(g.order() == expected);
  }
  CHECK_THROWS_AS(PermGroup::enumerate(8, sym_generators(8), 1000), ResourceError);
}

TEST_CASE("class partitions") {
  auto a5 = PermGroup::enumerate(5, alt_generators(5));
  CHECK(sorted_class_sizes(a5) == std::vector<std::size_t>{1, 12, 12, 15, 20});
  auto s5 = PermGroup::enumerate(5, sym_generators(5));
  CHECK(s5.num_classes() == 7);
  CHECK(s5.class_of(0) == 0);
  CHECK(s5.element(0).is_identity());
}

TEST_CASE("class_of is invariant under conjugation") {
  auto g = PermGroup::enumerate(7, alt_generators(7));
  Rng  rng(11);
  for (int i = 0; i < 10000; ++i) {
    std::size_t x = rng.uniform(0, g.order() - 1);
    std::size_t y = rng.uniform(0, g.order() - 1);
    auto        conj = g.element(x).conjugate_by(g.element(y));
    CHECK(g.class_of(g.index_of(conj)) == g.class_of(x));
  }
}

TEST_CASE("product supports do not depend on the representative") {
  auto g = PermGroup::enumerate(6, alt_generators(6));
  for (std::size_t c1 = 0; c1 < g.num_classes(); ++c1) {
    for (std::size_t c2 = 0; c2 < g.num_classes(); ++c2) {
      auto base = g.brute_product_support(c1, c2);
      for (auto rep : {g.class_members(c1).back(), g.class_members(c1)[g.class_size(c1) / 2]}) {
        CHECK(g.brute_product_support(c1, c2, rep) == base);
      }
    }
    // identity times C is C; C times its inverse class contains the identity
    Bitset only(g.num_classes());
    only.set(c1);
    CHECK(g.brute_product_support(0, c1) == only);
    CHECK(g.brute_product_support(c1, g.inverse_class(c1)).test(0));
  }
}

TEST_CASE("support products are associative") {
  for (auto const& g : {PermGroup::enumerate(6, psl2_generators(5)),
                        PermGroup::enumerate(8, psl2_generators(7)),
                        PermGroup::enumerate(6, alt_generators(6))}) {
    std::size_t k = g.num_classes();
    auto fold = [&](Bitset const& s, std::size_t c, bool right) {
      Bitset r(k);
      for (auto a : s.members()) {
        r |= right ? g.brute_product_support(a, c) : g.brute_product_support(c, a);
      }
      return r;
    };
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        for (std::size_t c = 0; c < k; ++c) {
          CHECK(fold(g.brute_product_support(a, b), c, true)
                == fold(g.brute_product_support(b, c), a, false));
        }
      }
    }
  }
}

TEST_CASE("element-level subset products") {
  auto   g = PermGroup::enumerate(5, alt_generators(5));
  Bitset all(g.order());
  all.set_all();
  CHECK(brute_subset_triple_product(g, all, all, all));
  // a proper subgroup is closed: the point stabiliser of 5
  Bitset stab(g.order()), identity(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (g.element(i)[4] == 4) {
      stab.set(i);
    }
  }
  identity.set(0);
  CHECK(stab.count() == 12);
  CHECK_FALSE(brute_subset_triple_product(g, stab, stab, identity));
  CHECK_FALSE(brute_subset_pair_product(g, stab, stab));
  CHECK(g.subset_product(stab, stab) == stab);
  auto big = PermGroup::enumerate(8, alt_generators(8));
  Bitset x(big.order());
  CHECK_THROWS_AS(brute_subset_triple_product(big, x, x, x), ResourceError);
}

TEST_CASE("group definitions and persistence") {
  auto def = parse_group_definition("# Alt(4)\ndegree 4\n(1 2 3)\n(2 3 4)  # second\n");
  CHECK(def.degree == 4);
  CHECK(def.generators.size() == 2);
  CHECK_THROWS_AS(parse_group_definition("(1 2)\n"), ParseError);

  auto g    = PermGroup::enumerate(def.degree, def.generators);
  auto file = std::filesystem::temp_directory_path() / "covering-test-a4.grp";
  g.save(file);
  auto h = PermGroup::load(file);
  std::filesystem::remove(file);
  CHECK(h.order() == 12);
  CHECK(h.content_hash() == g.content_hash());
  for (std::size_t i = 0; i < g.order(); ++i) {
    CHECK(h.element(i) == g.element(i));
    CHECK(h.class_of(i) == g.class_of(i));
  }
}

TEST_CASE("oracle classes of natural groups carry descriptors") {
  auto g = PermGroup::enumerate(5, alt_generators(5));
  GroupSpec spec{Family::Alt, 5};
  int       split_plus = 0, split_minus = 0;
  for (std::size_t c = 0; c < g.num_classes(); ++c) {
    auto d = describe_oracle_class(g, c, spec);
    CHECK(d.size == g.class_size(c));
    split_plus += d.split == Split::Plus;
    split_minus += d.split == Split::Minus;
    if (d.split == Split::Plus) {
      CHECK(g.class_of(g.index_of(canonical_representative(d.cycle_type))) == c);
    }
  }
  CHECK(split_plus == 1);
  CHECK(split_minus == 1);
}
