#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "tverberg/json_io.hpp"
#include "tverberg/verifier.hpp"

using namespace tverberg;

namespace {

std::vector<int> part_of(const RayConfiguration& config,
                         std::initializer_list<PointId> ids) {
  std::vector<int> out;
  for (const auto& id : ids) out.push_back(config.index_of(id));
  return out;
}

// Convex combination with fixed pseudo-random weights.
RVector random_hull_point(std::mt19937_64& rng,
                          const std::vector<RVector>& points) {
  std::uniform_int_distribution<int> w(0, 5);
  std::vector<Rational> weights;
  Rational total = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    weights.emplace_back(w(rng));
    total += weights.back();
  }
  if (total == 0) {
    weights[0] = 1;
    total = 1;
  }
  RVector x(points.front().size());
  for (std::size_t i = 0; i < points.size(); ++i)
    x += (weights[i] / total) * points[i];
  return x;
}

}  // namespace

TEST_CASE("ray index sets") {
  const auto config = RayConfiguration::standard(5, 3);
  CHECK(ray_index_set(config, part_of(config, {PointId{2, 1}})) ==
        IndexSet{2});
  std::vector<int> everything;
  for (int i = 0; i < config.point_count(); ++i) everything.push_back(i);
  CHECK(ray_index_set(config, everything) == IndexSet::full(6));

  const auto parts =
      Partition::parse("011012212002").part_indices();
  CHECK(ray_index_set(config, parts[0]).count() == 4);

  // a displaced point keeps its home ray
  const auto moved = config.apply_move(
      {PointId{2, 1}, config.ray_point(PointId{0, 1}), Rational(1, 8)});
  CHECK(ray_index_set(moved, part_of(moved, {PointId{2, 1}})) == IndexSet{2});
}

TEST_CASE("classify finds the obvious separations") {
  const auto config = RayConfiguration::standard(2, 3);
  // {p_{0,2}} sits below {p_{0,1}} on the only shared ray
  const auto good = classify(config, Partition::parse("010222"), 2);
  CHECK(good.good);
  CHECK(verify_certificate(
      {{config.point(PointId{0, 1})}, {config.point(PointId{0, 2})}},
      hulls_common_point(
          {{config.point(PointId{0, 1})}, {config.point(PointId{0, 2})}})));

  CHECK_THROWS_AS(classify(config, Partition::parse("010222"), 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(classify(config, Partition::parse("010222"), 4),
                  std::invalid_argument);
}

TEST_CASE("the depicted three-coloring is bad at k=2") {
  const auto config = RayConfiguration::standard(5, 3);
  const auto result = classify(config, Partition::parse("011012212002"), 2);
  CHECK_FALSE(result.good);
  REQUIRE(result.tuple_certificates.size() == 3);
  const auto parts = parts_of(config, Partition::parse("011012212002"));
  for (const auto& [tuple, cert] : result.tuple_certificates) {
    CHECK(cert.verdict == Verdict::nonempty);
    std::vector<std::vector<RVector>> sets;
    for (int j : tuple) {
      std::vector<RVector> set;
      for (const auto& id : parts[j]) set.push_back(config.point(id));
      sets.push_back(std::move(set));
    }
    CHECK(verify_certificate(sets, cert));
  }
}

TEST_CASE("min_empty_k on the 12-point d=3 configuration stays at most 3") {
  const auto config = RayConfiguration::standard(3, 4);
  PartitionEnumerator stream(12, 4);
  int seen = 0;
  while (auto partition = stream.next()) {
    if (++seen > 150) break;
    const auto result = min_empty_k(config, *partition);
    REQUIRE(result.min_empty_k.has_value());
    CHECK(*result.min_empty_k <= 3);
    CHECK(result.certificate.verdict == Verdict::empty);
    CHECK(static_cast<int>(result.witness_tuple.size()) ==
          *result.min_empty_k);
  }
}

TEST_CASE("weights") {
  const auto config = RayConfiguration::standard(2, 4);  // 3 points per ray
  // ray 0 levels 1,2,3 -> parts 0,1,2; part 3 lives on rays 1 and 2
  const auto partition = Partition::parse("012301230");
  // tuple {0,1}: both parts hold one point of ray 0
  CHECK(weight(config, partition, {0, 1}, 0) == 1);
  // part 3 misses ray 0
  CHECK(weight(config, partition, {0, 3}, 0) == 0);

  const auto heavy = Partition::parse("000111222");  // parts = whole rays
  CHECK(weight(config, heavy, {0, 1}, 0) == 0);  // part 1 misses ray 0
  CHECK(weight(config, heavy, {0}, 0) == 2);     // 1 + one multi-point part
}

TEST_CASE("per-ray weight bound is attained by spread-out rays") {
  const auto config = RayConfiguration::standard(2, 3);
  // each ray's two points in two different parts
  const auto spread = Partition::parse("010212");
  BigInt total = 0;
  for (const auto& tuple :
       std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}})
    total += weight(config, spread, tuple, 0);
  CHECK(total == binomial(2, 2));  // exactly binom(r-1, k)
  CHECK(check_baba(config, spread, 2).empty());

  // a part holding a whole ray stays strictly below the bound
  const auto heavy = Partition::parse("001122");
  BigInt heavy_total = 0;
  for (const auto& tuple :
       std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}})
    heavy_total += weight(config, heavy, tuple, 0);
  CHECK(heavy_total < binomial(2, 2));
}

TEST_CASE("weight inequalities hold exhaustively on small configurations") {
  for (const auto& [d, r] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}}) {
    const RayConfiguration config(SimplexFrame::standard(d), r,
                                  seeded_heights(d, r, 7));
    const auto audit = audit_weights(config, 2);
    CHECK(audit.buba_violations.empty());
    CHECK(audit.baba_violations.empty());
    CHECK(audit.partitions_checked ==
          static_cast<std::uint64_t>(partition_count((d + 1) * (r - 1), r)));
  }
}

TEST_CASE("buba skips tuples with a part touching every ray") {
  const auto config = RayConfiguration::standard(2, 4);
  // part 0 = one point on every ray
  const auto partition = Partition::parse("012031023");
  const auto check = check_buba(config, partition, 2);
  CHECK(!check.skipped.empty());
  for (const auto& tuple : check.skipped)
    CHECK(std::find(tuple.begin(), tuple.end(), 0) != tuple.end());
  CHECK(check.violations.empty());
}

TEST_CASE("counting bound: some part meets few rays of every subset") {
  for (int r : {2, 3}) {
    const auto config = RayConfiguration::standard(2, r);
    const int n = config.point_count();
    PartitionEnumerator stream(n, r);
    while (auto partition = stream.next()) {
      const auto parts = partition->part_indices();
      for (std::uint32_t j = 1; j < 8u; ++j) {  // nonempty subsets of 3 rays
        const int size = __builtin_popcount(j);
        bool found_small = false;
        for (const auto& part : parts) {
          int hits = 0;
          for (int p : part)
            if (j >> config.id_of(p).ray & 1) ++hits;
          if (hits <= (r - 1) * size / r) found_small = true;
        }
        CHECK(found_small);
      }
    }
  }
}

TEST_CASE("certified common points have support inside every part's rays") {
  std::mt19937_64 rng(17);
  const auto config = RayConfiguration::standard(3, 4);
  const auto& frame = config.frame();
  std::uniform_int_distribution<int> pick(0, config.point_count() - 1);
  for (int trial = 0; trial < 60; ++trial) {
    std::set<int> chosen;
    std::uniform_int_distribution<int> size(1, 5);
    const int want = size(rng);
    while (static_cast<int>(chosen.size()) < want) chosen.insert(pick(rng));
    std::vector<int> part(chosen.begin(), chosen.end());
    std::vector<RVector> points;
    for (int p : part) points.push_back(config.point(p));
    const auto x = random_hull_point(rng, points);
    CHECK(frame.support(x).subset_of(ray_index_set(config, part)));

    // membership in the hull of the touched-ray points
    if (ray_index_set(config, part) != IndexSet::full(4)) {
      std::vector<RVector> restricted;
      for (int p : part)
        if (frame.support(x).contains(config.id_of(p).ray))
          restricted.push_back(config.point(p));
      if (!restricted.empty()) {
        const auto cert = hulls_common_point({restricted, {x}});
        CHECK(cert.verdict == Verdict::nonempty);
      }
    }
  }
}

TEST_CASE("ordered pairs on shared rays certify emptiness") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 3 + static_cast<int>(rng() % 3);  // 3..5
    const int r = 4;
    const RayConfiguration config(SimplexFrame::standard(d), r,
                                  seeded_heights(d, r, 100 + trial));
    // U = a random proper nonempty subset of the rays
    std::vector<int> rays(static_cast<std::size_t>(d) + 1);
    std::iota(rays.begin(), rays.end(), 0);
    std::shuffle(rays.begin(), rays.end(), rng);
    const int usize = 1 + static_cast<int>(rng() % d);
    std::vector<int> u(rays.begin(), rays.begin() + usize);

    std::vector<RVector> low, high, extra;
    for (int ray : u) {
      low.push_back(config.point(PointId{ray, r - 1}));   // lowest level
      high.push_back(config.point(PointId{ray, 1}));      // highest level
    }
    // a third set whose rays avoid one fixed ray, keeping its index set
    // proper; the mutual intersection stays inside U
    const int avoided = rays.back();
    for (int ray = 0; ray <= d; ++ray)
      if (ray != avoided) extra.push_back(config.point(PointId{ray, 2}));

    const auto cert = hulls_common_point({low, high, extra});
    CHECK(cert.verdict == Verdict::empty);
    CHECK(verify_certificate({low, high, extra}, cert));
  }
}

TEST_CASE("restriction to mutual rays preserves the verdict") {
  std::mt19937_64 rng(29);
  const auto config = RayConfiguration::standard(3, 4);
  PartitionEnumerator stream(12, 4);
  std::vector<Partition> sample;
  while (auto partition = stream.next()) {
    if (rng() % 97 == 0) sample.push_back(*partition);
    if (sample.size() == 25) break;
  }
  for (const auto& partition : sample) {
    const auto parts = partition.part_indices();
    // pick the first pair with proper ray sets
    for (int a = 0; a < partition.parts(); ++a) {
      for (int b = a + 1; b < partition.parts(); ++b) {
        const auto ia = ray_index_set(config, parts[a]);
        const auto ib = ray_index_set(config, parts[b]);
        if (ia == IndexSet::full(4) || ib == IndexSet::full(4)) continue;
        const auto mutual = ia & ib;
        std::vector<RVector> sa, sb, ra, rb;
        for (int p : parts[a]) {
          sa.push_back(config.point(p));
          if (mutual.contains(config.id_of(p).ray)) ra.push_back(config.point(p));
        }
        for (int p : parts[b]) {
          sb.push_back(config.point(p));
          if (mutual.contains(config.id_of(p).ray)) rb.push_back(config.point(p));
        }
        const auto whole = hulls_common_point({sa, sb}).verdict;
        if (ra.empty() || rb.empty()) {
          CHECK(whole == Verdict::empty);
        } else {
          CHECK(whole == hulls_common_point({ra, rb}).verdict);
        }
      }
    }
  }
}

TEST_CASE("single points per mutual ray with too few rays cannot meet") {
  // k=3 parts meeting on m=2 mutual rays, one point each, generic heights
  const RayConfiguration config(SimplexFrame::standard(4), 4,
                                seeded_heights(4, 4, 12345));
  std::vector<std::vector<RVector>> sets;
  for (int j = 0; j < 3; ++j) {
    std::vector<RVector> set;
    set.push_back(config.point(PointId{0, j + 1}));
    set.push_back(config.point(PointId{1, j + 1}));
    set.push_back(config.point(PointId{2 + j, 1}));  // parts differ off-U
    sets.push_back(std::move(set));
  }
  CHECK(hulls_common_point(sets).verdict == Verdict::empty);
}

TEST_CASE("verification of the smallest configuration") {
  const auto config = RayConfiguration::standard(2, 2);
  VerifyOptions options;
  options.k = 2;
  const auto report = verify_lower_bound(config, options);
  CHECK(report.total == 3);
  CHECK(report.good == 3);
  CHECK(report.bad == 0);
  CHECK(report.min_empty_k_histogram.at("2") == 3);
  CHECK(report.min_empty_k_histogram.at("none") == 0);
  CHECK(report.genericity_violations == 0);
}

TEST_CASE("reports are identical across job counts") {
  const RayConfiguration config(SimplexFrame::standard(2), 3,
                                seeded_heights(2, 3, 5));
  VerifyOptions serial;
  serial.k = 2;
  VerifyOptions parallel = serial;
  parallel.jobs = 3;
  auto a = verify_lower_bound(config, serial);
  auto b = verify_lower_bound(config, parallel);
  a.elapsed_ms = b.elapsed_ms = 0;
  const Json manifest = Json::object();
  CHECK(canonical_dump(report_to_json(a, manifest)) ==
        canonical_dump(report_to_json(b, manifest)));
}

TEST_CASE("classification is invariant under part relabeling") {
  const auto config = RayConfiguration::standard(2, 3);
  PartitionEnumerator stream(6, 3);
  std::mt19937_64 rng(3);
  while (auto partition = stream.next()) {
    // relabel parts by a random permutation, then re-canonicalize
    std::vector<int> perm{0, 1, 2};
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::uint8_t> relabeled(partition->size());
    for (std::size_t i = 0; i < partition->size(); ++i)
      relabeled[i] = static_cast<std::uint8_t>(perm[partition->label(i)]);
    std::vector<int> first_seen(3, -1);
    int next = 0;
    std::vector<std::uint8_t> canonical(relabeled.size());
    for (std::size_t i = 0; i < relabeled.size(); ++i) {
      if (first_seen[relabeled[i]] < 0) first_seen[relabeled[i]] = next++;
      canonical[i] = static_cast<std::uint8_t>(first_seen[relabeled[i]]);
    }
    const Partition other(canonical, 3);
    CHECK(min_empty_k(config, *partition).min_empty_k ==
          min_empty_k(config, other).min_empty_k);
  }
}
