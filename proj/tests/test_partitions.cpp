#include <doctest.h>

#include "covering/errors.hpp"
#include "covering/partitions.hpp"
#include "oracles.hpp"

using namespace covering;

TEST_CASE("enumerate_partitions lists partitions in decreasing order") {
  auto four = enumerate_partitions(4);
  REQUIRE(four.size() == 5);
  CHECK(four[0].to_string() == "4");
  CHECK(four[1].to_string() == "3,1");
  CHECK(four[2].to_string() == "2,2");
  CHECK(four[3].to_string() == "2,1,1");
  CHECK(four[4].to_string() == "1,1,1,1");
  auto one = enumerate_partitions(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].to_string() == "1");
  CHECK_THROWS_AS(enumerate_partitions(0), ArgumentError);
  CHECK_THROWS_AS(enumerate_partitions(-3), ArgumentError);
}

TEST_CASE("partition counts agree with an independent recurrence") {
  // p(12) = 77, frozen from the coin-change recurrence
  CHECK(oracles::partition_count(12) == 77);
  CHECK(enumerate_partitions(12).size() == 77);
  for (int n = 1; n <= 30; ++n) {
    CHECK(partition_count(n) == oracles::partition_count(n));
  }
  for (int n = 1; n <= 14; ++n) {
    auto lib = enumerate_partitions(n);
    auto ref = oracles::partitions(n);
    REQUIRE(lib.size() == ref.size());
    for (std::size_t i = 0; i < lib.size(); ++i) {
      CHECK(lib[i].parts() == ref[i]);
    }
  }
}

TEST_CASE("partition basics") {
  Partition p({3, 1, 1});
  CHECK(p.n() == 5);
  CHECK(p.transpose() == Partition({3, 1, 1}));
  CHECK(p.self_conjugate());
  CHECK(p.even());
  CHECK_FALSE(p.distinct_odd_parts());
  CHECK(Partition({5, 3, 1}).distinct_odd_parts());
  CHECK(Partition({4, 2}).transpose() == Partition({2, 2, 1, 1}));
  CHECK(Partition::parse("[5,3,1]") == Partition({5, 3, 1}));
  CHECK(Partition::parse("2,2,1") == Partition({2, 2, 1}));
  CHECK_THROWS_AS(Partition::parse(""), ParseError);
  CHECK_THROWS_AS(Partition::parse("[2,x]"), ParseError);
}

TEST_CASE("describe_class sizes and centralizers") {
  auto c = describe_class({Family::Sym, 5}, Partition({5}));
  CHECK(c.size == 24);
  CHECK(c.centralizer_order == 5);
  CHECK(c.even);
  CHECK(c.split == Split::NotSplit);

  auto d = describe_class({Family::Sym, 5}, Partition({2, 2, 1}));
  CHECK(d.size == 15);
  CHECK(d.centralizer_order == 8);
  CHECK(d.even);

  auto e = describe_class({Family::Alt, 5}, Partition({5}), Split::Plus);
  CHECK(e.size == 12);
  CHECK(e.centralizer_order == 5);
  CHECK(e.split == Split::Plus);

  CHECK_THROWS_AS(describe_class({Family::Alt, 5}, Partition({2, 1, 1, 1})), DomainError);
  CHECK_THROWS_AS(describe_class({Family::Alt, 5}, Partition({2, 2, 1}), Split::Plus),
                  ArgumentError);
  CHECK_THROWS_AS(describe_class({Family::Sym, 5}, Partition({5}), Split::Plus),
                  ArgumentError);
}

TEST_CASE("class sizes sum to the group order") {
  for (int n = 1; n <= 14; ++n) {
    for (auto family : {Family::Sym, Family::Alt}) {
      if (family == Family::Alt && n < 2) {
        continue;
      }
      GroupSpec g{family, n};
      mpz_class total = 0;
      for (auto const& c : all_classes(g)) {
        total += c.size;
        CHECK(c.size * c.centralizer_order == g.order());
        if (family == Family::Sym) {
          CHECK(c.size == oracles::sym_class_size(c.cycle_type.parts()));
        }
      }
      CHECK(total == g.order());
    }
  }
}

TEST_CASE("diagonal hooks") {
  CHECK(diagonal_hooks(Partition({3, 1, 1})) == std::vector<int>{5});
  CHECK(diagonal_hooks(Partition({2, 2})) == std::vector<int>{3, 1});
  // staircase, checked against the cell-by-cell hook computation
  CHECK(diagonal_hooks(Partition({4, 3, 2, 1})) == std::vector<int>{7, 3});
  CHECK(oracles::diagonal_hooks({4, 3, 2, 1}) == std::vector<int>{7, 3});
  CHECK_THROWS_AS(diagonal_hooks(Partition({3, 1})), ArgumentError);
  for (int n = 1; n <= 16; ++n) {
    for (auto const& p : enumerate_partitions(n)) {
      if (p.self_conjugate()) {
        CHECK(diagonal_hooks(p) == oracles::diagonal_hooks(p.parts()));
      }
    }
  }
}

TEST_CASE("hook degrees match the diagram") {
  CHECK(hook_degree(Partition({4, 1})) == 4);
  for (int n = 1; n <= 16; ++n) {
    for (auto const& p : enumerate_partitions(n)) {
      CHECK(hook_degree(p) == oracles::hook_degree(p.parts()));
    }
  }
}

TEST_CASE("class identifiers parse strictly") {
  auto c = parse_class_id("alt:9:[5,3,1]:+");
  CHECK(c.group == GroupSpec{Family::Alt, 9});
  CHECK(c.cycle_type == Partition({5, 3, 1}));
  CHECK(c.split == Split::Plus);
  CHECK(c.id() == "alt:9:[5,3,1]:+");
  CHECK(c.short_id() == "[5,3,1]:+");
  CHECK(parse_class_id("[2,2,1]", GroupSpec{Family::Sym, 5}).id() == "sym:5:[2,2,1]");
  CHECK(parse_group_spec("sym:12") == GroupSpec{Family::Sym, 12});

  auto position_of = [](std::string_view text) -> std::size_t {
    try {
      parse_class_id(text);
    } catch (ParseError const& e) {
      return e.position;
    }
    return 9999;
  };
  CHECK(position_of("alt:9:[5,3,1]:*") == 14);
  CHECK(position_of("alt:9:[5,3,1") == 12);
  CHECK(position_of("alt:9[5,3,1]") == 4);
  CHECK(position_of("alt:9:[5,3]") == 6);
  CHECK(position_of("5,3,1") == 5);
  CHECK_THROWS_AS(parse_class_id("alt:9:[5,3,1]"), ArgumentError);
  CHECK_THROWS_AS(parse_class_id("alt:9:[8,1]"), DomainError);
  CHECK_THROWS_AS(parse_group_spec("cyc:5"), ParseError);
}
