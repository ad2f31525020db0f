#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tverberg/hull_intersect.hpp"
#include "tverberg/partition.hpp"
#include "tverberg/ray_config.hpp"

namespace tverberg {

// Rays touched by a part.  A displaced point still counts for its home ray;
// hull tests always use true coordinates.
IndexSet ray_index_set(const RayConfiguration& config,
                       const std::vector<int>& part_point_indices);

struct PartClassification {
  // Smallest tuple size whose hulls have empty intersection; nullopt when
  // all r hulls share a point.
  std::optional<int> min_empty_k;
  // First empty tuple in stage order (sizes ascending, tuples lexicographic);
  // empty when min_empty_k is nullopt.
  std::vector<int> witness_tuple;
  // Emptiness certificate for witness_tuple, or the common point of all r
  // parts when min_empty_k is nullopt.
  IntersectionCertificate certificate;
};

PartClassification min_empty_k(const RayConfiguration& config,
                               const Partition& partition);

struct Classification {
  bool good = false;
  // good: the first empty tuple found (size <= k) and its certificate.
  std::vector<int> witness_tuple;
  IntersectionCertificate certificate;
  // bad: one nonempty certificate per k-tuple, in lexicographic order.
  std::vector<std::pair<std::vector<int>, IntersectionCertificate>>
      tuple_certificates;
};

// Good iff some k of the parts have hulls with empty intersection.
Classification classify(const RayConfiguration& config,
                        const Partition& partition, int k);

// 0 when some part of the tuple misses the ray, else 1 plus the number of
// parts holding more than one of its points.
int weight(const RayConfiguration& config, const Partition& partition,
           const std::vector<int>& tuple, int ray);

struct BubaCheck {
  // Certified-nonempty tuples whose weights sum below the tuple size.
  std::vector<std::vector<int>> violations;
  // Tuples skipped because a member touches every ray.
  std::vector<std::vector<int>> skipped;
};
BubaCheck check_buba(const RayConfiguration& config,
                     const Partition& partition, int k);

// Rays whose summed weight over all k-tuples exceeds binom(r-1, k).
std::vector<int> check_baba(const RayConfiguration& config,
                            const Partition& partition, int k);

BigInt binomial(int n, int k);

struct BadWitness {
  std::string partition;
  std::vector<int> tuple;
  IntersectionCertificate certificate;
};

struct VerificationReport {
  std::string config_hash;
  int r = 0;
  int k = 0;
  int shard_index = 0;
  int shard_total = 1;
  std::uint64_t total = 0;
  std::uint64_t good = 0;
  std::uint64_t bad = 0;
  // Keys "2".."r" plus "none"; counts partitions by min_empty_k.
  std::map<std::string, std::uint64_t> min_empty_k_histogram;
  // One entry per (bad partition, k-tuple), sorted by partition then tuple.
  std::vector<BadWitness> bad_witnesses;
  // Examined tuples that were nonempty although the one-point-per-mutual-ray
  // count says a generic configuration leaves them empty.  Nonzero means the
  // heights are degenerate and seeded configurations should be redrawn.
  std::uint64_t genericity_violations = 0;
  std::int64_t elapsed_ms = 0;
};

struct VerifyOptions {
  int k = 2;
  int jobs = 1;
  int shard_index = 0;
  int shard_total = 1;
  bool collect_witnesses = true;
};

// Classifies every partition of the configuration (or one shard of them).
// Reports are identical for any job count: work splits into sub-shards and
// merges in canonical order.
VerificationReport verify_lower_bound(const RayConfiguration& config,
                                      const VerifyOptions& options);

// Goodness flags at the given k for every partition, in shard-major order
// with jobs * 4 sub-shards; the order is fixed for a given closure, which is
// all calibration needs.
PartitionClassifier goodness_classifier(int k, int jobs = 1);

struct Characterization532 {
  std::vector<Partition> lp_bad;
  std::vector<Partition> structural_bad;
};

// For the two-points-per-ray d=5, r=3 configuration: partitions that are bad
// by hull tests, next to the partitions where every pair of parts shares
// exactly two rays with opposite height order.  The two lists must agree.
Characterization532 characterize_bad_532(const RayConfiguration& config);

struct WeightAudit {
  std::uint64_t partitions_checked = 0;
  std::uint64_t tuples_skipped = 0;
  // (partition, tuple) pairs violating the weight lower bound.
  std::vector<std::pair<std::string, std::vector<int>>> buba_violations;
  // (partition, ray) pairs violating the per-ray upper bound.
  std::vector<std::pair<std::string, int>> baba_violations;
  // Largest per-ray weight sum seen, by ray.
  std::vector<std::uint64_t> max_ray_weight;
  std::int64_t elapsed_ms = 0;
};

// Runs both weight checks over all partitions, or over an evenly strided
// sample of the given size.
WeightAudit audit_weights(const RayConfiguration& config, int k,
                          std::optional<std::uint64_t> sample = std::nullopt,
                          int jobs = 1);

}  // namespace tverberg
