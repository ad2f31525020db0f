#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "tverberg/partition.hpp"
#include "tverberg/simplex_frame.hpp"

namespace tverberg {

// Point p_{i,m}: ray index i in {0..d}, level m in {1..r-1} with level 1 the
// highest point of its ray.
struct PointId {
  int ray = 0;
  int level = 0;
  auto operator<=>(const PointId&) const = default;
};

struct PerturbationMove {
  PointId target;
  RVector direction;   // ambient displacement direction, nonzero
  Rational magnitude;  // positive scale applied to the direction
};

// r-1 points on each of the d+1 open rays through the frame vertices, plus
// per-point displacement offsets.  Point (i,m) sits at height(i,m) * p_i +
// offset(i,m).  Immutable; apply_move returns a new configuration.
class RayConfiguration {
public:
  RayConfiguration(SimplexFrame frame, int r,
                   std::vector<std::vector<Rational>> heights);

  // Standard frame with heights r-1, r-2, ..., 1 on every ray.
  static RayConfiguration standard(int d, int r);

  int dimension() const { return frame_.dimension(); }
  int r() const { return r_; }
  int ray_count() const { return frame_.ray_count(); }
  int points_per_ray() const { return r_ - 1; }
  int point_count() const { return ray_count() * points_per_ray(); }

  // Points are indexed by (ray, level) in row-major order.
  int index_of(PointId id) const;
  PointId id_of(int index) const;

  const Rational& height(PointId id) const;
  const std::vector<std::vector<Rational>>& heights() const { return heights_; }

  // height * p_i, ignoring any offset: where the point sits on its home ray.
  RVector ray_point(PointId id) const;
  // Actual coordinates, offset included.
  RVector point(PointId id) const;
  RVector point(int index) const { return point(id_of(index)); }
  std::vector<RVector> all_points() const;

  const RVector& offset(int index) const { return offsets_[index]; }
  bool perturbed(int index) const { return !offsets_[index].is_zero(); }
  bool any_perturbation() const;

  RayConfiguration apply_move(const PerturbationMove& move) const;

  const SimplexFrame& frame() const { return frame_; }
  std::optional<std::uint64_t> seed() const { return seed_; }
  void set_seed(std::uint64_t seed) { seed_ = seed; }

  bool operator==(const RayConfiguration&) const = default;

private:
  SimplexFrame frame_;
  int r_;
  std::vector<std::vector<Rational>> heights_;  // [ray][level-1], decreasing
  std::vector<RVector> offsets_;                // by point index
  std::optional<std::uint64_t> seed_;
};

std::vector<std::vector<Rational>> default_heights(int d, int r);

// Distinct pseudo-random integer heights, deterministic in the seed; each
// ray's draw is sorted highest first.  Degeneracies are caught downstream by
// the verifier's genericity accounting, in which case callers redraw with
// the next seed.
std::vector<std::vector<Rational>> seeded_heights(int d, int r,
                                                  std::uint64_t seed);

// The r parts of a partition as point-id sets, in label order.
std::vector<std::vector<PointId>> parts_of(const RayConfiguration& config,
                                           const Partition& partition);

// The two moves for the d=3, r=4 configuration: slide the top of ray 0
// toward the top of ray 3, then the bottom of ray 3 toward the bottom of
// ray 0.  Magnitudes are unit placeholders until calibration.
std::vector<PerturbationMove> recipe_342(const RayConfiguration& config);

// The three moves for the d=5, r=3 configuration, with directions given by
// frame-coefficient vectors (0,1,2,3,4,5), (5,4,3,2,1,0) and (1,0,0,0,1,0)
// applied to the tops of rays 0, 5 and 2.
std::vector<PerturbationMove> recipe_532(const RayConfiguration& config);

// Goodness flags for every partition of a configuration, in a fixed
// canonical order that is stable across calls.
using PartitionClassifier =
    std::function<std::vector<bool>(const RayConfiguration&)>;

struct CalibrationResult {
  std::vector<Rational> magnitudes;
  RayConfiguration configuration;
};

// Scales each move in turn, starting at 1/16 and halving, until every
// partition good before the move stays good after it; the chained result
// keeps every originally-good partition good.  Throws after 60 halvings per
// move.
CalibrationResult calibrate_epsilons(const RayConfiguration& config,
                                     const std::vector<PerturbationMove>& moves,
                                     const PartitionClassifier& classifier);

}  // namespace tverberg
