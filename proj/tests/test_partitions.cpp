#include <map>
#include <set>

#include "doctest.h"
#include "multfree/partition.hpp"

using namespace multfree;

namespace {

Partition P(const char* s) { return Partition::parse(s); }

// independent oracle: transpose the diagram cell by cell
Partition transpose_oracle(const Partition& p) {
  std::set<std::pair<int, int>> cells;
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < p.part(i); ++j) cells.insert({j, i});
  std::vector<int> rows;
  for (auto [r, c] : cells) {
    (void)c;
    if (static_cast<size_t>(r) >= rows.size()) rows.resize(static_cast<size_t>(r) + 1, 0);
    rows[static_cast<size_t>(r)]++;
  }
  return Partition(rows);
}

}  // namespace

TEST_SUITE_BEGIN("partitions");

TEST_CASE("parse and print") {
  CHECK(P("[4,2,1]").str() == "[4,2,1]");
  CHECK(P("[]").str() == "[]");
  CHECK(P("[2^3,1^2]") == P("[2,2,2,1,1]"));
  CHECK(P("[10]").n() == 10);
  CHECK_THROWS(P("[1,2]"));
  CHECK_THROWS(P("[0]"));
  CHECK_THROWS(P("4,2"));
}

TEST_CASE("conjugate") {
  CHECK(P("[2,1]").conjugate() == P("[2,1]"));
  CHECK(P("[3]").conjugate() == P("[1,1,1]"));
  // transpose the 3x4 diagram cell by cell
  CHECK(transpose_oracle(P("[4,4,4]")) == P("[3,3,3,3]"));
  CHECK(P("[4,4,4]").conjugate() == P("[3,3,3,3]"));
  CHECK(P("[]").conjugate() == P("[]"));
}

TEST_CASE("conjugation is an involution for every n <= 30") {
  for (int n = 0; n <= 30; ++n) {
    for_each_partition(n, [&](const Partition& p) {
      CHECK(p.conjugate().conjugate() == p);
      if (n <= 12) CHECK(p.conjugate() == transpose_oracle(p));
      return true;
    });
  }
}

TEST_CASE("partitions_of order and count") {
  auto p0 = partitions_of(0);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0] == P("[]"));

  auto p4 = partitions_of(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4[0] == P("[4]"));
  CHECK(p4[1] == P("[3,1]"));
  CHECK(p4[2] == P("[2,2]"));
  CHECK(p4[3] == P("[2,1,1]"));
  CHECK(p4[4] == P("[1,1,1,1]"));

  CHECK(partitions_of(10).size() == 42);
  CHECK(partition_count(10) == 42);
  // enumeration agrees with the pentagonal recurrence
  for (int n = 0; n <= 18; ++n)
    CHECK(static_cast<long long>(partitions_of(n).size()) ==
          partition_count(n));
}

TEST_CASE("diagonal hooks") {
  auto h = diagonal_hooks(P("[4,4,4]"));
  REQUIRE(h.size() == 3);
  CHECK(h[0].width == 4);
  CHECK(h[0].depth == 3);
  CHECK(h[1].width == 3);
  CHECK(h[1].depth == 2);
  CHECK(h[2].width == 2);
  CHECK(h[2].depth == 1);

  auto h2 = diagonal_hooks(P("[7,1,1,1,1,1]"));
  REQUIRE(h2.size() == 1);
  CHECK(h2[0].width == 7);
  CHECK(h2[0].depth == 6);

  auto h3 = diagonal_hooks(P("[1]"));
  REQUIRE(h3.size() == 1);
  CHECK(h3[0].width == 1);
  CHECK(h3[0].depth == 1);
}

TEST_CASE("hook sum identity") {
  for (int n : {1, 5, 8, 11}) {
    for_each_partition(n, [&](const Partition& p) {
      int sum = 0;
      for (const auto& h : diagonal_hooks(p)) sum += h.width + h.depth - 1;
      CHECK(sum == n);
      return true;
    });
  }
}

TEST_CASE("all_hooks_satisfy") {
  CHECK(all_hooks_satisfy(P("[4,1,1]"), 1));
  CHECK(all_hooks_satisfy(P("[3,3]"), 1));
  CHECK_FALSE(all_hooks_satisfy(P("[2,2]"), 1));
  // conjugation swaps the +1 and -1 conditions
  for (int n : {4, 6, 9}) {
    for_each_partition(n, [&](const Partition& p) {
      CHECK(all_hooks_satisfy(p, 1) == all_hooks_satisfy(p.conjugate(), -1));
      return true;
    });
  }
}

TEST_CASE("doubled") {
  CHECK(P("[2,1]").doubled() == P("[4,2]"));
  CHECK(P("[]").doubled() == P("[]"));
  CHECK(P("[1,1,1]").doubled() == P("[2,2,2]"));
  // conjugate of a doubled partition has every part an even number of times
  for (int k = 0; k <= 12; ++k) {
    for_each_partition(k, [&](const Partition& p) {
      Partition c = p.doubled().conjugate();
      std::map<int, int> mult;
      for (int i = 0; i < c.rows(); ++i) mult[c.part(i)]++;
      for (auto [part, m] : mult) {
        (void)part;
        CHECK(m % 2 == 0);
      }
      return true;
    });
  }
}

TEST_CASE("odd promotions") {
  auto as_set = [](const std::vector<Partition>& v) {
    std::set<std::string> s;
    for (const auto& p : v) s.insert(p.str());
    return s;
  };
  CHECK(as_set(odd_promotions(P("[1]"))) ==
        std::set<std::string>{"[3]", "[2,1]"});
  CHECK(as_set(odd_promotions(P("[2,2]"))) ==
        std::set<std::string>{"[5,4]", "[4,4,1]"});
  CHECK(as_set(odd_promotions(P("[]"))) == std::set<std::string>{"[1]"});

  // brute-force oracle: mu of 2d+1 is a promotion of p iff removing one box
  // somewhere leaves exactly 2p
  for (int d = 0; d <= 7; ++d) {
    for_each_partition(d, [&](const Partition& p) {
      std::set<std::string> expect;
      for_each_partition(2 * d + 1, [&](const Partition& mu) {
        for (int i = 0; i < mu.rows(); ++i) {
          std::vector<int> cand(mu.parts());
          cand[static_cast<size_t>(i)] -= 1;
          auto shrunk = partition_from_terms(cand);
          if (shrunk && *shrunk == p.doubled()) expect.insert(mu.str());
        }
        return true;
      });
      CHECK(as_set(odd_promotions(p)) == expect);
      return true;
    });
  }
}

TEST_CASE("partition_from_terms vanishing convention") {
  CHECK(partition_from_terms({5, 0}).value() == P("[5]"));
  CHECK_FALSE(partition_from_terms({4, 0, 1}).has_value());
  CHECK_FALSE(partition_from_terms({2, 3}).has_value());
  CHECK(partition_from_terms({}).value() == P("[]"));
}

TEST_SUITE_END();
