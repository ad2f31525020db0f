#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "tverberg/partition.hpp"

using namespace tverberg;

namespace {

// Independent oracle for the stream length: inclusion-exclusion
// S(n,r) = (1/r!) sum_i (-1)^i binom(r,i) (r-i)^n, a different route than
// the recurrence used by partition_count.
BigInt stirling_by_sieve(int n, int r) {
  const auto binom = [](int a, int b) {
    BigInt v = 1;
    for (int i = 0; i < b; ++i) {
      v *= a - i;
      v /= i + 1;
    }
    return v;
  };
  BigInt sum = 0;
  for (int i = 0; i <= r; ++i) {
    BigInt term = binom(r, i);
    BigInt base = r - i;
    BigInt power = 1;
    for (int e = 0; e < n; ++e) power *= base;
    term *= power;
    sum += (i % 2 == 0) ? term : -term;
  }
  BigInt fact = 1;
  for (int i = 2; i <= r; ++i) fact *= i;
  return sum / fact;
}

std::vector<std::string> collect(PartitionEnumerator stream) {
  std::vector<std::string> out;
  while (auto p = stream.next()) out.push_back(p->str());
  return out;
}

}  // namespace

TEST_CASE("partition validation") {
  CHECK_THROWS_AS(Partition::parse("010x"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("021"), std::invalid_argument);  // not RGS
  CHECK_THROWS_AS(Partition({0, 1}, 3), std::invalid_argument);
  const auto p = Partition::parse("0121");
  CHECK(p.parts() == 3);
  CHECK(p.str() == "0121");
  CHECK(p.part_indices() == std::vector<std::vector<int>>{{0}, {1, 3}, {2}});
}

TEST_CASE("partition counts against the sieve oracle") {
  CHECK(partition_count(3, 2) == 3);
  CHECK(partition_count(4, 2) == 7);
  CHECK(partition_count(12, 4) == 611501);
  CHECK(partition_count(12, 3) == 86526);
  CHECK(partition_count(13, 4) == 2532530);
  CHECK(partition_count(5, 1) == 1);
  CHECK(partition_count(9, 1) == 1);
  CHECK(partition_count(2, 3) == 0);
  for (int n = 1; n <= 13; ++n)
    for (int r = 1; r <= std::min(n, 5); ++r)
      CHECK(partition_count(n, r) == stirling_by_sieve(n, r));
}

TEST_CASE("enumeration small cases") {
  CHECK(collect(PartitionEnumerator(3, 2)) ==
        std::vector<std::string>{"001", "010", "011"});
  CHECK(collect(PartitionEnumerator(4, 2)).size() == 7);
  CHECK(collect(PartitionEnumerator(4, 4)) ==
        std::vector<std::string>{"0123"});
  CHECK(collect(PartitionEnumerator(4, 1)) ==
        std::vector<std::string>{"0000"});
  CHECK_THROWS_AS(PartitionEnumerator(2, 3), std::invalid_argument);
}

TEST_CASE("enumeration is canonical, duplicate-free and deterministic") {
  for (int n = 1; n <= 10; ++n) {
    for (int r = 1; r <= std::min(n, 5); ++r) {
      const auto first_run = collect(PartitionEnumerator(n, r));
      CHECK(BigInt(first_run.size()) == partition_count(n, r));
      std::set<std::string> seen;
      std::string prev;
      for (const auto& s : first_run) {
        CHECK(seen.insert(s).second);
        CHECK(prev < s);  // strict lexicographic order
        prev = s;
        CHECK_NOTHROW(Partition::parse(s));
      }
      CHECK(first_run == collect(PartitionEnumerator(n, r)));
    }
  }
}

TEST_CASE("shards partition the stream") {
  const auto full = collect(PartitionEnumerator(6, 3));
  CHECK(full.size() == 90);

  std::set<std::string> combined;
  std::size_t total = 0;
  for (int s = 0; s < 4; ++s) {
    const auto shard = collect(PartitionEnumerator(6, 3, s, 4));
    total += shard.size();
    for (const auto& p : shard) CHECK(combined.insert(p).second);
  }
  CHECK(total == full.size());
  CHECK(combined == std::set<std::string>(full.begin(), full.end()));

  CHECK_THROWS_AS(PartitionEnumerator(6, 3, 4, 4), std::invalid_argument);
  CHECK_THROWS_AS(PartitionEnumerator(6, 3, -1, 4), std::invalid_argument);
}

TEST_CASE("eight shards cover the 12-point stream") {
  std::uint64_t total = 0;
  for (int s = 0; s < 8; ++s) {
    PartitionEnumerator stream(12, 4, s, 8);
    while (stream.next()) ++total;
  }
  CHECK(total == 611501);
}
