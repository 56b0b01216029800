#include "bmaps/partitions.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

using namespace bmaps;

namespace {

// independent oracle: p(n) by the classic two-parameter recursion
long count_partitions(int n, int max_part) {
  if (n == 0) return 1;
  if (max_part == 0) return 0;
  long total = 0;
  for (int k = std::min(n, max_part); k >= 1; --k)
    total += count_partitions(n - k, k);
  return total;
}

// independent oracle: cycle types of all permutations of S_n
std::map<Partition, long> cycle_type_census(int n) {
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::map<Partition, long> census;
  do {
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> cycles;
    for (int i = 0; i < n; ++i) {
      if (seen[static_cast<size_t>(i)]) continue;
      int len = 0, j = i;
      while (!seen[static_cast<size_t>(j)]) {
        seen[static_cast<size_t>(j)] = 1;
        j = perm[static_cast<size_t>(j)];
        ++len;
      }
      cycles.push_back(len);
    }
    std::sort(cycles.begin(), cycles.end(), std::greater<int>());
    census[Partition(cycles)] += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return census;
}

} // namespace

TEST_SUITE_BEGIN("partitions");

TEST_CASE("all_partitions counts and order") {
  CHECK(all_partitions(0).size() == 1);
  CHECK(all_partitions(0)[0].empty());
  CHECK(all_partitions(4).size() == 5);
  CHECK(all_partitions(7).size() == 15);
  for (int n = 0; n <= 9; ++n) {
    auto ps = all_partitions(n);
    CHECK(static_cast<long>(ps.size()) == count_partitions(n, n == 0 ? 1 : n));
    // reverse-lexicographic: strictly decreasing part vectors
    for (size_t i = 1; i < ps.size(); ++i)
      CHECK(ps[i].parts() < ps[i - 1].parts());
    // no duplicates, correct sizes
    for (const auto& p : ps) CHECK(p.size() == n);
  }
}

TEST_CASE("dominance order") {
  Partition a({1, 1, 1}), b({2, 1}), c({3});
  CHECK(dominance_leq(a, b));
  CHECK(dominance_leq(b, c));
  CHECK(dominance_leq(Partition({2, 2}), Partition({3, 1})));
  CHECK_FALSE(dominance_leq(Partition({3, 1}), Partition({2, 2})));
  CHECK_THROWS_AS(dominance_leq(a, Partition({2})), std::invalid_argument);
  // reverse-lex refines dominance: mu <= lambda implies mu appears later
  for (int n = 2; n <= 8; ++n) {
    auto ps = all_partitions(n);
    for (size_t i = 0; i < ps.size(); ++i)
      for (size_t j = 0; j < ps.size(); ++j)
        if (i != j && dominance_leq(ps[i], ps[j]))
          CHECK(j < i);
  }
}

TEST_CASE("z_factor examples and the S_n census") {
  CHECK(z_factor(Partition({1, 1})) == 2);
  CHECK(z_factor(Partition({2, 1})) == 2);
  CHECK(z_factor(Partition()) == 1);
  for (int n = 1; n <= 6; ++n) {
    auto census = cycle_type_census(n);
    long nf = 1;
    for (int i = 2; i <= n; ++i) nf *= i;
    for (const auto& lambda : all_partitions(n)) {
      REQUIRE(census.count(lambda) == 1);
      CHECK(census[lambda] == nf / z_factor(lambda));
    }
  }
}

TEST_CASE("union, down") {
  CHECK(union_parts(Partition({2, 1}), Partition({3, 1})) == Partition({3, 2, 1, 1}));
  CHECK(union_parts(Partition({2, 1}), Partition()) == Partition({2, 1}));
  CHECK(union_parts(Partition({1}), Partition({1})) == Partition({1, 1}));
  CHECK(down(Partition({3, 2, 2}), 2) == Partition({3, 2, 1}));
  CHECK(down(Partition({1, 1}), 1) == Partition({1}));
  CHECK(down(Partition({5}), 5) == Partition({4}));
  CHECK_THROWS_AS(down(Partition({3, 1}), 2), std::invalid_argument);
}

TEST_CASE("splits against the brute-force Cartesian oracle") {
  CHECK(splits(Partition({2, 1}), {1, 2}) ==
        std::vector<std::vector<Partition>>{{Partition({1}), Partition({2})}});
  CHECK(splits(Partition({2, 1}), {3}) ==
        std::vector<std::vector<Partition>>{{Partition({2, 1})}});
  CHECK(splits(Partition({1, 1}), {1, 1}) ==
        std::vector<std::vector<Partition>>{{Partition({1}), Partition({1})}});
  CHECK_THROWS_AS(splits(Partition({2, 1}), {1, 1}), std::invalid_argument);

  // oracle: filter the Cartesian product of all_partitions(r_j)
  for (int n = 1; n <= 6; ++n) {
    for (const auto& mu : all_partitions(n)) {
      for (int r1 = 0; r1 <= n; ++r1) {
        std::vector<int> sizes{r1, n - r1};
        auto got = splits(mu, sizes);
        long expected = 0;
        for (const auto& p1 : all_partitions(r1))
          for (const auto& p2 : all_partitions(n - r1))
            if (union_parts(p1, p2) == mu) ++expected;
        CHECK(static_cast<long>(got.size()) == expected);
        for (const auto& t : got) {
          REQUIRE(t.size() == 2);
          CHECK(t[0].size() == r1);
          CHECK(union_parts(t[0], t[1]) == mu);
        }
        // exactness: no duplicates
        auto sorted = got;
        std::sort(sorted.begin(), sorted.end());
        CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
      }
    }
  }
  // a three-way case: the lone 1 is forced into the last slot
  auto three = splits(Partition({2, 2, 1}), {2, 2, 1});
  for (const auto& t : three)
    CHECK(union_parts(union_parts(t[0], t[1]), t[2]) == Partition({2, 2, 1}));
  CHECK(three.size() == 1);
}

TEST_CASE("parse and to_string round trip") {
  CHECK(Partition::parse("3,2,1") == Partition({3, 2, 1}));
  CHECK(Partition::parse("") == Partition());
  CHECK(Partition({4, 4, 2}).to_string() == "4,4,2");
  CHECK_THROWS_AS(Partition::parse("1,2"), std::invalid_argument);
}

TEST_SUITE_END();
