#include <doctest.h>

#include <random>

#include "tverberg/hull_intersect.hpp"

using namespace tverberg;

namespace {

using Sets = std::vector<std::vector<RVector>>;

RVector random_point(std::mt19937_64& rng, int d, int span = 6) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, 3);
  RVector x(static_cast<std::size_t>(d));
  for (auto& c : x) c = Rational(num(rng), den(rng));
  return x;
}

Sets random_sets(std::mt19937_64& rng, int k, int d, int max_points) {
  std::uniform_int_distribution<int> count(1, max_points);
  Sets sets;
  for (int i = 0; i < k; ++i) {
    std::vector<RVector> set;
    const int n = count(rng);
    for (int j = 0; j < n; ++j) set.push_back(random_point(rng, d));
    sets.push_back(std::move(set));
  }
  return sets;
}

}  // namespace

TEST_CASE("crossing segments meet at the origin") {
  const Sets sets{{RVector{-1, 0}, RVector{1, 0}},
                  {RVector{0, -1}, RVector{0, 1}}};
  const auto cert = hulls_common_point(sets);
  REQUIRE(cert.verdict == Verdict::nonempty);
  CHECK(cert.common_point == RVector{0, 0});
  CHECK(verify_certificate(sets, cert));
}

TEST_CASE("single-point sets") {
  const Sets same{{RVector{1, 2}}, {RVector{1, 2}}, {RVector{1, 2}}};
  const auto cert = hulls_common_point(same);
  REQUIRE(cert.verdict == Verdict::nonempty);
  CHECK(cert.common_point == RVector{1, 2});

  const Sets apart{{RVector{1, 2}}, {RVector{1, 3}}};
  const auto empty_cert = hulls_common_point(apart);
  CHECK(empty_cert.verdict == Verdict::empty);
  CHECK(verify_certificate(apart, empty_cert));
  CHECK(oracle_common_point(apart) == Verdict::empty);
  CHECK(oracle_common_point(same) == Verdict::nonempty);
}

TEST_CASE("one-dimensional sets behave like intervals") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto sets = random_sets(rng, 2, 1, 3);
    Rational lo0 = sets[0][0][0], hi0 = lo0, lo1 = sets[1][0][0], hi1 = lo1;
    for (const auto& p : sets[0]) {
      lo0 = std::min(lo0, p[0]);
      hi0 = std::max(hi0, p[0]);
    }
    for (const auto& p : sets[1]) {
      lo1 = std::min(lo1, p[0]);
      hi1 = std::max(hi1, p[0]);
    }
    const bool overlap = std::max(lo0, lo1) <= std::min(hi0, hi1);
    const auto cert = hulls_common_point(sets);
    CHECK((cert.verdict == Verdict::nonempty) == overlap);
    CHECK(verify_certificate(sets, cert));
    CHECK((oracle_common_point(sets) == Verdict::nonempty) == overlap);
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(hulls_common_point({}), std::invalid_argument);
  CHECK_THROWS_AS(hulls_common_point({{RVector{1, 0}}, {}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(hulls_common_point({{RVector{1, 0}}, {RVector{1}}}),
                  std::invalid_argument);
}

TEST_CASE("solver agrees with the enumeration oracle") {
  std::mt19937_64 rng(271828);
  std::uniform_int_distribution<int> dims(1, 3);
  std::uniform_int_distribution<int> ks(2, 3);
  int nonempty_seen = 0, empty_seen = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int d = dims(rng);
    const int k = ks(rng);
    const auto sets = random_sets(rng, k, d, 4);
    const auto cert = hulls_common_point(sets);
    CHECK(verify_certificate(sets, cert));
    CHECK(cert.verdict == oracle_common_point(sets));
    (cert.verdict == Verdict::nonempty ? nonempty_seen : empty_seen)++;
  }
  // both outcomes must actually occur for the agreement to mean anything
  CHECK(nonempty_seen > 100);
  CHECK(empty_seen > 100);
}

TEST_CASE("certificate tampering is caught") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const auto sets = random_sets(rng, 2, 2, 4);
    auto cert = hulls_common_point(sets);
    REQUIRE(verify_certificate(sets, cert));
    if (cert.verdict == Verdict::nonempty) {
      auto negated = cert;
      bool flipped = false;
      for (auto& set : negated.coefficients) {
        for (auto& c : set)
          if (c != 0) {
            c = -c;
            flipped = true;
            break;
          }
        if (flipped) break;
      }
      CHECK_FALSE(verify_certificate(sets, negated));

      auto rescaled = cert;
      for (auto& c : rescaled.coefficients[0]) c *= 2;  // sums to 2, not 1
      CHECK_FALSE(verify_certificate(sets, rescaled));
    } else {
      auto zeroed = cert;
      for (auto& y : zeroed.infeasibility_multipliers) y = 0;
      CHECK_FALSE(verify_certificate(sets, zeroed));
    }
  }
}

TEST_CASE("monotonicity: growing a set cannot empty the intersection") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    auto sets = random_sets(rng, 2, 2, 3);
    const auto before = hulls_common_point(sets);
    sets[trial % 2].push_back(random_point(rng, 2));
    const auto after = hulls_common_point(sets);
    if (before.verdict == Verdict::nonempty)
      CHECK(after.verdict == Verdict::nonempty);
  }
}

TEST_CASE("affine invariance of the verdict") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 2;
    const auto sets = random_sets(rng, 2, d, 3);

    RMatrix map(d, d);
    do {
      for (std::size_t i = 0; i < map.rows(); ++i)
        for (std::size_t j = 0; j < map.cols(); ++j) map(i, j) = entry(rng);
    } while (rank(map) != static_cast<std::size_t>(d));
    const RVector shift = random_point(rng, d);

    Sets mapped;
    for (const auto& set : sets) {
      std::vector<RVector> outset;
      for (const auto& p : set) {
        RVector q(static_cast<std::size_t>(d));
        for (std::size_t i = 0; i < map.rows(); ++i) q[i] = dot(map.row(i), p);
        outset.push_back(q + shift);
      }
      mapped.push_back(std::move(outset));
    }
    CHECK(hulls_common_point(sets).verdict ==
          hulls_common_point(mapped).verdict);
  }
}
