#include "tverberg/ray_config.hpp"

#include <random>
#include <set>
#include <stdexcept>

namespace tverberg {

RayConfiguration::RayConfiguration(SimplexFrame frame, int r,
                                   std::vector<std::vector<Rational>> heights)
    : frame_(std::move(frame)), r_(r), heights_(std::move(heights)) {
  if (r_ < 2) throw std::invalid_argument("need r >= 2");
  if (heights_.size() != static_cast<std::size_t>(frame_.ray_count()))
    throw std::invalid_argument("one height list per ray required");
  for (const auto& ray : heights_) {
    if (ray.size() != static_cast<std::size_t>(r_ - 1))
      throw std::invalid_argument("each ray needs r-1 heights");
    for (std::size_t m = 0; m < ray.size(); ++m) {
      if (ray[m] <= 0) throw std::invalid_argument("heights must be positive");
      if (m > 0 && ray[m] >= ray[m - 1])
        throw std::invalid_argument("heights must decrease from level 1 down");
    }
  }
  offsets_.assign(static_cast<std::size_t>(point_count()),
                  RVector(static_cast<std::size_t>(dimension())));
}

RayConfiguration RayConfiguration::standard(int d, int r) {
  return RayConfiguration(SimplexFrame::standard(d), r, default_heights(d, r));
}

int RayConfiguration::index_of(PointId id) const {
  if (id.ray < 0 || id.ray >= ray_count() || id.level < 1 || id.level >= r_)
    throw std::out_of_range("no such point");
  return id.ray * points_per_ray() + (id.level - 1);
}

PointId RayConfiguration::id_of(int index) const {
  if (index < 0 || index >= point_count())
    throw std::out_of_range("no such point");
  return PointId{index / points_per_ray(), index % points_per_ray() + 1};
}

const Rational& RayConfiguration::height(PointId id) const {
  index_of(id);  // bounds check
  return heights_[id.ray][id.level - 1];
}

RVector RayConfiguration::ray_point(PointId id) const {
  return height(id) * frame_.vertex(id.ray);
}

RVector RayConfiguration::point(PointId id) const {
  return ray_point(id) + offsets_[index_of(id)];
}

std::vector<RVector> RayConfiguration::all_points() const {
  std::vector<RVector> out;
  out.reserve(static_cast<std::size_t>(point_count()));
  for (int i = 0; i < point_count(); ++i) out.push_back(point(i));
  return out;
}

bool RayConfiguration::any_perturbation() const {
  for (int i = 0; i < point_count(); ++i)
    if (perturbed(i)) return true;
  return false;
}

RayConfiguration RayConfiguration::apply_move(
    const PerturbationMove& move) const {
  if (move.direction.size() != static_cast<std::size_t>(dimension()) ||
      move.direction.is_zero())
    throw std::invalid_argument("move direction must be a nonzero d-vector");
  if (move.magnitude <= 0)
    throw std::invalid_argument("move magnitude must be positive");
  RayConfiguration next = *this;
  next.offsets_[index_of(move.target)] += move.magnitude * move.direction;
  return next;
}

std::vector<std::vector<Rational>> default_heights(int d, int r) {
  std::vector<std::vector<Rational>> heights(
      static_cast<std::size_t>(d + 1));
  for (auto& ray : heights)
    for (int m = 1; m < r; ++m) ray.emplace_back(r - m);
  return heights;
}

std::vector<std::vector<Rational>> seeded_heights(int d, int r,
                                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(1, 1000000);
  std::set<int> used;
  std::vector<std::vector<Rational>> heights(
      static_cast<std::size_t>(d + 1));
  for (auto& ray : heights) {
    std::vector<int> draw;
    while (draw.size() < static_cast<std::size_t>(r - 1)) {
      const int v = dist(rng);
      if (used.insert(v).second) draw.push_back(v);
    }
    std::sort(draw.rbegin(), draw.rend());
    for (int v : draw) ray.emplace_back(v);
  }
  return heights;
}

std::vector<std::vector<PointId>> parts_of(const RayConfiguration& config,
                                           const Partition& partition) {
  if (partition.size() != static_cast<std::size_t>(config.point_count()))
    throw std::invalid_argument("partition size does not match configuration");
  std::vector<std::vector<PointId>> parts(
      static_cast<std::size_t>(partition.parts()));
  for (std::size_t i = 0; i < partition.size(); ++i)
    parts[partition.label(i)].push_back(config.id_of(static_cast<int>(i)));
  return parts;
}

std::vector<PerturbationMove> recipe_342(const RayConfiguration& config) {
  if (config.dimension() != 3 || config.r() != 4)
    throw std::invalid_argument("recipe applies to d=3, r=4 only");
  return {
      {PointId{0, 1}, config.ray_point(PointId{3, 1}), Rational(1)},
      {PointId{3, 3}, config.ray_point(PointId{0, 3}), Rational(1)},
  };
}

std::vector<PerturbationMove> recipe_532(const RayConfiguration& config) {
  if (config.dimension() != 5 || config.r() != 3)
    throw std::invalid_argument("recipe applies to d=5, r=3 only");
  const auto dir = [&](std::vector<Rational> coeffs) {
    return config.frame().combination(coeffs);
  };
  return {
      {PointId{0, 1}, dir({0, 1, 2, 3, 4, 5}), Rational(1)},
      {PointId{5, 1}, dir({5, 4, 3, 2, 1, 0}), Rational(1)},
      {PointId{2, 1}, dir({1, 0, 0, 0, 1, 0}), Rational(1)},
  };
}

CalibrationResult calibrate_epsilons(const RayConfiguration& config,
                                     const std::vector<PerturbationMove>& moves,
                                     const PartitionClassifier& classifier) {
  CalibrationResult result{{}, config};
  if (moves.empty()) return result;

  std::vector<bool> good = classifier(config);
  for (const auto& move : moves) {
    Rational eps = move.magnitude / 16;
    bool accepted = false;
    for (int iter = 0; iter < 60; ++iter, eps /= 2) {
      PerturbationMove trial = move;
      trial.magnitude = eps;
      RayConfiguration candidate = result.configuration.apply_move(trial);
      std::vector<bool> candidate_good = classifier(candidate);
      if (candidate_good.size() != good.size())
        throw std::logic_error("classifier changed partition count");
      bool preserved = true;
      for (std::size_t i = 0; i < good.size() && preserved; ++i)
        preserved = !good[i] || candidate_good[i];
      if (preserved) {
        result.configuration = std::move(candidate);
        result.magnitudes.push_back(eps);
        good = std::move(candidate_good);
        accepted = true;
        break;
      }
    }
    if (!accepted)
      throw std::runtime_error("epsilon calibration did not converge");
  }
  return result;
}

}  // namespace tverberg
