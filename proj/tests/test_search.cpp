#include <doctest.h>

#include <algorithm>
#include <random>

#include "tverberg/search.hpp"
#include "tverberg/verifier.hpp"

using namespace tverberg;

namespace {

bool certificates_verify(const PointCloud& cloud, const SearchResult& result) {
  if (!result.found) return false;
  const auto parts = result.partition->part_indices();
  for (const auto& [tuple, cert] : result.certificates) {
    if (cert.verdict != Verdict::nonempty) return false;
    std::vector<std::vector<RVector>> sets;
    for (int j : tuple) {
      std::vector<RVector> set;
      for (int p : parts[j]) set.push_back(cloud.points[p]);
      sets.push_back(std::move(set));
    }
    if (!verify_certificate(sets, cert)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("four collinear points split the Radon way") {
  PointCloud cloud{1, {RVector{0}, RVector{1}, RVector{2}, RVector{3}}};
  const auto result = find_tverberg_partition(cloud, 2);
  REQUIRE(result.found);
  CHECK(certificates_verify(cloud, result));
  // the common point of the two hulls must lie in [1, 2]
  const auto& point = result.certificates.front().second.common_point;
  CHECK(point[0] >= 1);
  CHECK(point[0] <= 2);
}

TEST_CASE("three collinear points: middle against endpoints") {
  PointCloud cloud{1, {RVector{0}, RVector{5}, RVector{2}}};
  const auto result = find_tverberg_partition(cloud, 2);
  REQUIRE(result.found);
  CHECK(certificates_verify(cloud, result));
}

TEST_CASE("square in convex position splits along the diagonals") {
  PointCloud cloud{
      2, {RVector{0, 0}, RVector{1, 0}, RVector{1, 1}, RVector{0, 1}}};
  const auto result = find_tverberg_partition(cloud, 2);
  REQUIRE(result.found);
  CHECK(certificates_verify(cloud, result));
  CHECK(result.partition->str() == "0101");
}

TEST_CASE("random clouds at the guaranteed size always split") {
  for (const auto& [d, r] : std::vector<std::pair<int, int>>{
           {1, 2}, {2, 2}, {2, 3}}) {
    const int n = (d + 1) * (r - 1) + 1;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto cloud = random_rational_cloud(d, n, seed * 977 + d * 13 + r);
      const auto result = find_tverberg_partition(cloud, r);
      REQUIRE(result.found);
      CHECK(certificates_verify(cloud, result));
    }
  }
}

TEST_CASE("pairwise search on the 6-point plane configuration finds nothing") {
  const auto config = RayConfiguration::standard(2, 3);
  const auto cloud = cloud_from_config(config);
  const auto result = find_k_wise_partition(cloud, 3, 2);
  CHECK_FALSE(result.found);

  // matches the verifier: every partition has an empty pair
  VerifyOptions options;
  options.k = 2;
  CHECK(verify_lower_bound(config, options).bad == 0);

  // reproducible under a relabeling of the points
  PointCloud shuffled = cloud;
  std::reverse(shuffled.points.begin(), shuffled.points.end());
  CHECK_FALSE(find_k_wise_partition(shuffled, 3, 2).found);
}

TEST_CASE("a seventh point makes the pairwise split possible") {
  const auto config = RayConfiguration::standard(2, 3);
  auto cloud = cloud_from_config(config);
  cloud.points.push_back(RVector{0, 0});
  const auto result = find_k_wise_partition(cloud, 3, 2);
  REQUIRE(result.found);
  CHECK(result.certificates.size() == 3);
  CHECK(certificates_verify(cloud, result));
}

TEST_CASE("search input validation") {
  PointCloud cloud{2, {RVector{0, 0}}};
  CHECK_THROWS_AS(find_k_wise_partition(cloud, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(find_k_wise_partition(cloud, 3, 4), std::invalid_argument);
  CHECK_FALSE(find_tverberg_partition(cloud, 2).found);  // fewer points than parts
  PointCloud bad{2, {RVector{0}}};
  CHECK_THROWS_AS(find_tverberg_partition(bad, 2), std::invalid_argument);
}

TEST_CASE("random cloud generation is deterministic") {
  const auto a = random_rational_cloud(3, 13, 7);
  const auto b = random_rational_cloud(3, 13, 7);
  CHECK(a.points == b.points);
  CHECK(a.d == 3);
  CHECK(a.points.size() == 13);
}
