#include <doctest.h>

#include <set>
#include <thread>
#include <vector>

#include "decomp/diophantine.hpp"
#include "support/oracles.hpp"

using namespace decomp;

namespace {

std::set<std::vector<std::int32_t>> as_set(const SolutionSet& s) {
  std::set<std::vector<std::int32_t>> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto row = s.at(i);
    out.emplace(row.begin(), row.end());
  }
  return out;
}

}  // namespace

TEST_CASE("trivial solution sets") {
  const SolutionSet z0 = enumerate_solutions(5, 0);
  REQUIRE(z0.size() == 1);
  for (int j = 0; j < 5; ++j) CHECK(z0.at(0)[j] == 0);

  const SolutionSet z1 = enumerate_solutions(5, 1);
  REQUIRE(z1.size() == 1);
  CHECK(z1.at(0)[0] == 1);
  for (int j = 1; j < 5; ++j) CHECK(z1.at(0)[j] == 0);
}

TEST_CASE("m=4, z=4 gives the five known solutions") {
  const SolutionSet s = enumerate_solutions(4, 4);
  REQUIRE(s.size() == 5);
  const auto got = as_set(s);
  const std::set<std::vector<std::int32_t>> expect{
      {4, 0, 0, 0}, {2, 1, 0, 0}, {0, 2, 0, 0}, {1, 0, 1, 0}, {0, 0, 0, 1}};
  CHECK(got == expect);
}

TEST_CASE("cardinality equals the partition count for m >= z") {
  CHECK(enumerate_solutions(6, 6).size() == 11);
  CHECK(enumerate_solutions(10, 6).size() == 11);
}

TEST_CASE("oracle equivalence for all m <= 6, z <= 20") {
  for (int m = 1; m <= 6; ++m) {
    for (std::int64_t z = 0; z <= 20; ++z) {
      const SolutionSet s = enumerate_solutions(m, z);
      const auto expect = oracles::brute_force_solutions(m, z);
      REQUIRE(s.size() == expect.size());
      CHECK(as_set(s) == expect);
    }
  }
}

TEST_CASE("determinism: repeated enumeration yields the identical ordering") {
  const SolutionSet a = enumerate_solutions(5, 12);
  const SolutionSet b = enumerate_solutions(5, 12);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto ra = a.at(i);
    const auto rb = b.at(i);
    for (int j = 0; j < 5; ++j) CHECK(ra[j] == rb[j]);
  }
}

TEST_CASE("neighbor wrap rule") {
  const SolutionSet s = enumerate_solutions(4, 4);  // |S| = 5
  CHECK(s.neighbor_pair(2) == std::pair<std::size_t, std::size_t>{1, 3});
  CHECK(s.neighbor_pair(0) == std::pair<std::size_t, std::size_t>{1, 4});
  CHECK(s.neighbor_pair(4) == std::pair<std::size_t, std::size_t>{0, 3});

  // |S| = 2: each state proposes the unique other one
  const SolutionSet two = enumerate_solutions(2, 2);
  REQUIRE(two.size() == 2);
  CHECK(two.neighbor_pair(0) == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK(two.neighbor_pair(1) == std::pair<std::size_t, std::size_t>{0, 0});

  const SolutionSet one = enumerate_solutions(3, 1);
  CHECK_THROWS_AS(one.neighbor_pair(0), Error);
}

TEST_CASE("index_of finds members and rejects non-members") {
  const SolutionSet s = enumerate_solutions(4, 4);
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(s.index_of(s.at(i)) == i);
  CHECK(s.index_of(s.at(0)) == 0);
  const std::vector<std::int32_t> bad{1, 1, 0, 0};  // sums to 3, not 4
  CHECK_THROWS_AS(s.index_of(bad), Error);
}

TEST_CASE("memory budget fires before allocation") {
  CHECK_THROWS_WITH_AS(enumerate_solutions(15, 60, 1024), doctest::Contains("z=60"), Error);
  SolutionCache tiny(1024);
  CHECK_THROWS_AS(tiny.get(15, 60), Error);
}

TEST_CASE("cache enumerates once and serves concurrent readers") {
  SolutionCache cache;
  const SolutionSet& first = cache.get(5, 9);
  const SolutionSet& again = cache.get(5, 9);
  CHECK(&first == &again);
  CHECK(cache.bytes_used() == first.bytes());

  std::vector<std::thread> threads;
  std::vector<std::size_t> sizes(8, 0);
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&cache, &sizes, t] { sizes[t] = cache.get(6, 14).size(); });
  }
  for (auto& th : threads) th.join();
  for (std::size_t v : sizes) CHECK(v == sizes[0]);
}

TEST_CASE("bounded partition counts stay consistent with the pentagonal oracle") {
  const auto p = oracles::partition_counts_pentagonal(40);
  for (int z = 0; z <= 40; ++z) {
    CHECK(bounded_partition_count(z, z == 0 ? 1 : z) == p[z]);
  }
}
