#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "nilorb/partition.hpp"

using namespace nilorb;

TEST_CASE("partition counts match the partition function") {
  CHECK(enumerate_partitions(1).size() == 1);
  CHECK(enumerate_partitions(2).size() == 2);
  CHECK(enumerate_partitions(4).size() == 5);
  CHECK(enumerate_partitions(8).size() == 22);
  CHECK(enumerate_partitions(12).size() == 77);
  CHECK_THROWS_AS(enumerate_partitions(0), InvalidInput);
  CHECK_THROWS_AS(enumerate_partitions(-3), InvalidInput);
}

TEST_CASE("enumeration is sorted and duplicate free") {
  for (int n : {5, 7, 9}) {
    const auto all = enumerate_partitions(n);
    for (const Partition& p : all) CHECK(p.n() == n);
    for (std::size_t i = 0; i + 1 < all.size(); ++i) {
      CHECK(partition_less(all[i], all[i + 1]));
      CHECK_FALSE(all[i] == all[i + 1]);
    }
  }
}

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(Partition({}), InvalidInput);
  CHECK_THROWS_AS(Partition({{2, 1}, {2, 1}}), InvalidInput);
  CHECK_THROWS_AS(Partition({{3, 1}, {2, 1}}), InvalidInput);
  CHECK_THROWS_AS(Partition({{2, 0}}), InvalidInput);
}

TEST_CASE("accessors") {
  const Partition p({{1, 2}, {3, 1}});
  CHECK(p.n() == 5);
  CHECK(p.multiplicity(1) == 2);
  CHECK(p.multiplicity(3) == 1);
  CHECK(p.multiplicity(2) == 0);
  CHECK(p.has_part(3));
  CHECK_FALSE(p.has_part(5));
  CHECK_FALSE(p.all_ones());
  CHECK(Partition({{1, 7}}).all_ones());
}

TEST_CASE("part classes split by residue") {
  const Partition p({{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}, {7, 1}});
  const PartClasses c = classify(p);
  CHECK(c.N == std::vector<int>{1, 2, 3, 4, 5, 7});
  CHECK(c.E == std::vector<int>{2, 4});
  CHECK(c.O == std::vector<int>{1, 3, 5, 7});
  CHECK(c.O1 == std::vector<int>{1, 5});
  CHECK(c.O3 == std::vector<int>{3, 7});
}

TEST_CASE("parity predicates") {
  const PartitionFlags even = predicates(Partition({{2, 1}, {4, 1}}));
  CHECK(even.is_even);
  CHECK_FALSE(even.is_very_even);

  const PartitionFlags very_even = predicates(Partition({{2, 2}, {4, 2}}));
  CHECK(very_even.is_even);
  CHECK(very_even.is_very_even);
  CHECK(very_even.in_P1);
  CHECK(very_even.in_P_minus1);

  const PartitionFlags mixed = predicates(Partition({{1, 2}, {2, 2}, {3, 1}}));
  CHECK_FALSE(mixed.is_even);
  CHECK(mixed.in_P1);
  CHECK_FALSE(mixed.in_P_minus1);

  const PartitionFlags odd_even_mult = predicates(Partition({{3, 2}, {5, 2}}));
  CHECK(odd_even_mult.in_P_minus1);
  CHECK(odd_even_mult.in_P1);
}

TEST_CASE("very even partitions are exactly the even ones with even multiplicities") {
  for (int n = 1; n <= 12; ++n) {
    for (const Partition& p : enumerate_partitions(n)) {
      const PartitionFlags f = predicates(p);
      bool expect = true;
      for (const auto& pm : p.parts())
        if (pm.d % 2 != 0 || pm.t % 2 != 0) expect = false;
      CHECK(f.is_very_even == expect);
      if (f.is_very_even) CHECK(f.in_P1);
    }
  }
}

TEST_CASE("text round trip") {
  for (const std::string text : {"1^2,3^1", "2^3", "1^1,2^1,5^2"}) {
    const Partition p = Partition::parse(text);
    CHECK(p.to_text() == text);
    CHECK(Partition::parse(p.to_text()) == p);
  }
  CHECK(Partition::parse("3").to_text() == "3^1");
  CHECK(Partition::parse("3^1,1^2").to_text() == "1^2,3^1");
  CHECK(Partition::parse("2^2,1") == Partition({{1, 1}, {2, 2}}));
}

TEST_CASE("parse rejects malformed text") {
  CHECK_THROWS_AS(Partition::parse(""), ParseError);
  CHECK_THROWS_AS(Partition::parse("a"), ParseError);
  CHECK_THROWS_AS(Partition::parse("2^"), ParseError);
  CHECK_THROWS_AS(Partition::parse("2^0"), ParseError);
  CHECK_THROWS_AS(Partition::parse("2,,3"), ParseError);
  CHECK_THROWS_AS(Partition::parse("2+^1"), ParseError);
  CHECK_THROWS_AS(Partition::parse("2,2,1"), ParseError);
}
