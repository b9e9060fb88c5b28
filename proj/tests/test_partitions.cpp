#include <set>

#include "ariki/partitions.hpp"
#include "ariki/serialize.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace ariki;

namespace {
Multipartition mp(const std::string& s) { return parse_multipartition(s); }
Multicomposition mc(const std::string& s) { return parse_multicomposition(s); }
}  // namespace

TEST_CASE("rank") {
  CHECK(rank(mp("4.2,-,5.2.1")) == 14);
  CHECK(rank(Multipartition::empty(3)) == 0);
  CHECK(rank(mp("2.2,2.2.1")) == 9);
  CHECK(rank(mc("1.3,2")) == 6);
}

TEST_CASE("partitions reject bad parts") {
  CHECK_THROWS_AS(Partition({1, 2}), InvalidArgument);
  CHECK_THROWS_AS(Partition({2, 0}), InvalidArgument);
  CHECK_THROWS_AS(Composition({1, -1}), InvalidArgument);
  CHECK_NOTHROW(Composition({1, 3, 2}));
  CHECK_THROWS_AS(Multipartition::empty(0), InvalidArgument);
}

TEST_CASE("border nodes") {
  const auto b = border_nodes(mc("4.2.3,3.5"));
  const std::vector<Node> want = {{1, 4, 0}, {2, 2, 0}, {3, 3, 0}, {1, 3, 1}, {2, 5, 1}};
  CHECK(b == want);
  CHECK(border_nodes(Multicomposition::empty(2)).empty());
  CHECK(border_nodes(mc("1,-")) == std::vector<Node>{{1, 1, 0}});
}

TEST_CASE("removable and addable nodes") {
  const std::vector<Node> rem = {{2, 2, 0}, {2, 2, 1}, {3, 1, 1}};
  CHECK(removable_nodes(mp("2.2,2.2.1")) == rem);
  const std::vector<Node> add = {{1, 1, 0}, {1, 1, 1}};
  CHECK(addable_nodes(Multipartition::empty(2)) == add);
  CHECK(removable_nodes(Multipartition::empty(2)).empty());
  // Composition positions include rows that would break weak decrease.
  CHECK(addable_nodes(mc("2.2")).size() == 3);
}

TEST_CASE("add then remove round-trips") {
  for (int n = 0; n <= 5; ++n)
    for (const auto& m : enumerate_multipartitions(2, n)) {
      for (const auto& g : removable_nodes(m)) CHECK(add_node(remove_node(m, g), g) == m);
      for (const auto& g : addable_nodes(m)) CHECK(remove_node(add_node(m, g), g) == m);
    }
  CHECK_THROWS_AS(add_node(mp("1,-"), Node{2, 2, 0}), InvalidArgument);
  CHECK_THROWS_AS(remove_node(mp("2.2,-"), Node{1, 2, 0}), InvalidArgument);
}

TEST_CASE("conjugate") {
  CHECK(conjugate(Partition({4, 2})) == Partition({2, 2, 1, 1}));
  CHECK(conjugate(Partition()) == Partition());
  CHECK(conjugate(Partition({1, 1, 1})) == Partition({3}));
  for (int n = 0; n <= 12; ++n)
    for (const auto& p : enumerate_partitions(n)) {
      CHECK(conjugate(conjugate(p)) == p);
      CHECK(oracle::parts_of(conjugate(p)) == oracle::transpose(oracle::parts_of(p)));
    }
}

TEST_CASE("dominance") {
  CHECK(dominates(mp("2"), mp("1.1")));
  CHECK_FALSE(dominates(mp("1.1"), mp("2")));
  CHECK(dominates(mp("2.2,2.2.1"), mp("2.2,2.2.1")));
  CHECK_THROWS_AS(dominates(mp("2"), mp("1")), InvalidArgument);
  CHECK_THROWS_AS(dominates(mp("1,-"), mp("1")), InvalidArgument);
}

TEST_CASE("dominance is a partial order up to rank 6") {
  for (int n = 0; n <= 6; ++n) {
    const auto all = enumerate_multipartitions(2, n);
    for (const auto& a : all) {
      CHECK(dominates(a, a));
      for (const auto& b : all) {
        if (a != b && dominates(a, b)) CHECK_FALSE(dominates(b, a));
        if (!dominates(a, b)) continue;
        for (const auto& c : all)
          if (dominates(b, c)) CHECK(dominates(a, c));
      }
    }
  }
}

TEST_CASE("e-regularity") {
  CHECK_FALSE(is_e_regular(Partition({1, 1}), 2));
  CHECK(is_e_regular(Partition({2}), 2));
  CHECK(is_e_regular(Partition({3, 3, 1}), 3));
  for (int e : {2, 3, 4})
    for (int n = 0; n <= 10; ++n)
      for (const auto& p : enumerate_partitions(n)) CHECK(is_e_regular(p, e) == oracle::e_regular(oracle::parts_of(p), e));
}

TEST_CASE("enumeration") {
  const auto one = enumerate_multipartitions(1, 2);
  REQUIRE(one.size() == 2);
  CHECK(one[0] == mp("2"));
  CHECK(one[1] == mp("1.1"));
  const auto zero = enumerate_multipartitions(2, 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].is_empty());
  const auto two = enumerate_multipartitions(2, 2);
  REQUIRE(two.size() == 5);
  const std::vector<std::string> want = {"2,-", "1.1,-", "1,1", "-,2", "-,1.1"};
  for (std::size_t i = 0; i < want.size(); ++i) CHECK(format_multipartition(two[i]) == want[i]);
}

TEST_CASE("enumeration counts match the generating function") {
  for (int d = 1; d <= 3; ++d)
    for (int n = 0; n <= 10; ++n) {
      const auto all = enumerate_multipartitions(d, n);
      CHECK(static_cast<std::int64_t>(all.size()) == oracle::multipartition_count(d, n));
      std::set<Multipartition> uniq(all.begin(), all.end());
      CHECK(uniq.size() == all.size());
      CHECK(std::is_sorted(all.begin(), all.end(), CanonicalOrder{}));
      for (const auto& m : all) CHECK(m.rank() == n);
    }
}
