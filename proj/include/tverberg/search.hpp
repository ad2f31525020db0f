#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tverberg/hull_intersect.hpp"
#include "tverberg/partition.hpp"
#include "tverberg/ray_config.hpp"

namespace tverberg {

struct PointCloud {
  int d = 0;
  std::vector<RVector> points;  // duplicates allowed
};

PointCloud cloud_from_config(const RayConfiguration& config);

// n random integer-coordinate points, deterministic in the seed.
PointCloud random_rational_cloud(int d, int n, std::uint64_t seed);

struct SearchResult {
  bool found = false;
  std::optional<Partition> partition;
  // One certified-nonempty tuple per required intersection: the full part
  // tuple when k = r, every k-tuple otherwise.
  std::vector<std::pair<std::vector<int>, IntersectionCertificate>>
      certificates;
};

// Looks for an r-partition in which every k of the r hulls share a point.
// Tries one radial-sweep round-robin candidate, then exhausts canonical
// partitions depth first, abandoning a branch as soon as some k completed
// parts are certified disjoint.  A not-found answer therefore proves that no
// such partition of this cloud exists.
SearchResult find_k_wise_partition(const PointCloud& cloud, int r, int k);

// k = r case: all r hulls share a point and the certificate carries it.
SearchResult find_tverberg_partition(const PointCloud& cloud, int r);

}  // namespace tverberg
