#include "tverberg/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace tverberg {

namespace {

struct ConfigView {
  explicit ConfigView(const RayConfiguration& config)
      : config(&config),
        coords(config.all_points()),
        all_rays(IndexSet::full(config.ray_count())) {
    const int n = config.point_count();
    if (n > 64) throw std::invalid_argument("configuration too large");
    home_ray.resize(n);
    level_height.resize(n);
    perturbed.resize(n);
    for (int i = 0; i < n; ++i) {
      const PointId id = config.id_of(i);
      home_ray[i] = id.ray;
      level_height[i] = config.height(id);
      perturbed[i] = config.perturbed(i);
    }
  }

  const RayConfiguration* config;
  std::vector<RVector> coords;
  std::vector<int> home_ray;
  std::vector<Rational> level_height;
  std::vector<char> perturbed;
  IndexSet all_rays;
};

struct PartData {
  std::vector<std::vector<int>> parts;
  std::vector<std::uint64_t> masks;
  std::vector<IndexSet> rays;
  std::vector<char> has_perturbed;
};

PartData build_part_data(const ConfigView& view, const Partition& partition) {
  if (partition.size() != view.coords.size())
    throw std::invalid_argument("partition size does not match configuration");
  PartData data;
  data.parts = partition.part_indices();
  for (const auto& part : data.parts) {
    std::uint64_t mask = 0;
    IndexSet rays;
    char any = 0;
    for (int p : part) {
      mask |= std::uint64_t{1} << p;
      rays.insert(view.home_ray[p]);
      any |= view.perturbed[p];
    }
    data.masks.push_back(mask);
    data.rays.push_back(rays);
    data.has_perturbed.push_back(any);
  }
  return data;
}

struct TupleFlags {
  bool empty = false;
  // Nonempty although the mutual-ray count of a generic configuration
  // forces emptiness.
  bool degenerate = false;
};

struct VecHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// Decides tuple emptiness with a cheap ordering test first and exact LP as
// fallback, memoized per distinct tuple of part masks.
class TupleDecider {
public:
  explicit TupleDecider(const ConfigView& view) : view_(&view) {}

  TupleFlags decide(const PartData& data, const std::vector<int>& tuple) {
    std::vector<std::uint64_t> key;
    key.reserve(tuple.size());
    for (int j : tuple) key.push_back(data.masks[j]);
    std::sort(key.begin(), key.end());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const TupleFlags flags = compute(data, tuple);
    memo_.emplace(std::move(key), flags);
    return flags;
  }

  IntersectionCertificate certify(const PartData& data,
                                  const std::vector<int>& tuple) const {
    return hulls_common_point(tuple_sets(data, tuple));
  }

  std::vector<std::vector<RVector>> tuple_sets(
      const PartData& data, const std::vector<int>& tuple) const {
    std::vector<std::vector<RVector>> sets;
    sets.reserve(tuple.size());
    for (int j : tuple) {
      std::vector<RVector> set;
      set.reserve(data.parts[j].size());
      for (int p : data.parts[j]) set.push_back(view_->coords[p]);
      sets.push_back(std::move(set));
    }
    return sets;
  }

private:
  // Points of the part sitting on the given home ray.
  std::vector<int> on_ray(const PartData& data, int part, int ray) const {
    std::vector<int> out;
    for (int p : data.parts[part])
      if (view_->home_ray[p] == ray) out.push_back(p);
    return out;
  }

  // Every point of part a strictly lower than every point of part b on each
  // of the given rays.
  bool lower_on_rays(const PartData& data, int a, int b,
                     const IndexSet& rays) const {
    for (int ray : rays.to_vector()) {
      Rational max_a, min_b;
      bool first = true;
      for (int p : on_ray(data, a, ray)) {
        if (first || view_->level_height[p] > max_a)
          max_a = view_->level_height[p];
        first = false;
      }
      first = true;
      for (int p : on_ray(data, b, ray)) {
        if (first || view_->level_height[p] < min_b)
          min_b = view_->level_height[p];
        first = false;
      }
      if (!(max_a < min_b)) return false;
    }
    return true;
  }

  TupleFlags compute(const PartData& data, const std::vector<int>& tuple) {
    bool on_rays_only = true;
    bool proper = true;
    for (int j : tuple) {
      on_rays_only = on_rays_only && !data.has_perturbed[j];
      proper = proper && data.rays[j] != view_->all_rays;
    }
    IndexSet mutual = view_->all_rays;
    for (int j : tuple) mutual = mutual & data.rays[j];

    TupleFlags flags;
    bool decided = false;
    if (on_rays_only && proper) {
      if (mutual.empty()) {
        // Supports of a common point would have to be empty, and the origin
        // lies in no hull of points from a proper ray subset.
        flags.empty = true;
        decided = true;
      } else {
        for (std::size_t a = 0; a < tuple.size() && !decided; ++a)
          for (std::size_t b = 0; b < tuple.size() && !decided; ++b)
            if (a != b &&
                lower_on_rays(data, tuple[a], tuple[b], mutual)) {
              flags.empty = true;
              decided = true;
            }
      }
    }
    if (!decided) {
      const auto cert = hulls_common_point(tuple_sets(data, tuple));
      flags.empty = cert.verdict == Verdict::empty;
    }
    if (!flags.empty && on_rays_only &&
        mutual.count() < static_cast<int>(tuple.size())) {
      bool one_each = true;
      for (int j : tuple)
        for (int ray : mutual.to_vector())
          one_each = one_each && on_ray(data, j, ray).size() == 1;
      flags.degenerate = one_each;
    }
    return flags;
  }

  const ConfigView* view_;
  std::unordered_map<std::vector<std::uint64_t>, TupleFlags, VecHash> memo_;
};

int weight_of(const ConfigView& view, const PartData& data,
              const std::vector<int>& tuple, int ray) {
  int multi = 0;
  for (int j : tuple) {
    int on = 0;
    for (int p : data.parts[j])
      if (view.home_ray[p] == ray) ++on;
    if (on == 0) return 0;
    if (on > 1) ++multi;
  }
  return 1 + multi;
}

// Lexicographic m-subsets of {0..r-1}.
bool next_combination(std::vector<int>& c, int r) {
  const int m = static_cast<int>(c.size());
  for (int i = m - 1; i >= 0; --i) {
    if (c[i] < r - m + i) {
      ++c[i];
      for (int j = i + 1; j < m; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<int> first_combination(int m) {
  std::vector<int> c(m);
  for (int i = 0; i < m; ++i) c[i] = i;
  return c;
}

struct StagedScan {
  std::optional<int> min_empty;
  std::vector<int> witness;
  std::uint64_t degenerate_instances = 0;
};

// Tuple sizes ascending, tuples lexicographic, stop at the first empty one.
StagedScan staged_scan(TupleDecider& decider, const PartData& data, int r,
                       int max_stage) {
  StagedScan scan;
  for (int m = 2; m <= max_stage; ++m) {
    auto tuple = first_combination(m);
    do {
      const TupleFlags flags = decider.decide(data, tuple);
      if (flags.degenerate) ++scan.degenerate_instances;
      if (flags.empty) {
        scan.min_empty = m;
        scan.witness = tuple;
        return scan;
      }
    } while (next_combination(tuple, r));
  }
  return scan;
}

void run_shards(int shard_count, int jobs,
                const std::function<void(int)>& work) {
  if (jobs <= 1) {
    for (int s = 0; s < shard_count; ++s) work(s);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (int s = next.fetch_add(1); s < shard_count;
           s = next.fetch_add(1))
        work(s);
    });
  for (auto& th : pool) th.join();
}

}  // namespace

IndexSet ray_index_set(const RayConfiguration& config,
                       const std::vector<int>& part_point_indices) {
  IndexSet rays;
  for (int p : part_point_indices) rays.insert(config.id_of(p).ray);
  return rays;
}

PartClassification min_empty_k(const RayConfiguration& config,
                               const Partition& partition) {
  const ConfigView view(config);
  const PartData data = build_part_data(view, partition);
  TupleDecider decider(view);
  const int r = partition.parts();
  auto scan = staged_scan(decider, data, r, r);

  PartClassification result;
  result.min_empty_k = scan.min_empty;
  if (scan.min_empty) {
    result.witness_tuple = scan.witness;
    result.certificate = decider.certify(data, scan.witness);
  } else {
    std::vector<int> all(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) all[i] = i;
    result.certificate = decider.certify(data, all);
  }
  return result;
}

Classification classify(const RayConfiguration& config,
                        const Partition& partition, int k) {
  if (k < 2 || k > partition.parts())
    throw std::invalid_argument("need 2 <= k <= r");
  const ConfigView view(config);
  const PartData data = build_part_data(view, partition);
  TupleDecider decider(view);
  auto scan = staged_scan(decider, data, partition.parts(), k);

  Classification result;
  result.good = scan.min_empty.has_value();
  if (result.good) {
    result.witness_tuple = scan.witness;
    result.certificate = decider.certify(data, scan.witness);
    return result;
  }
  auto tuple = first_combination(k);
  do {
    result.tuple_certificates.emplace_back(tuple,
                                           decider.certify(data, tuple));
  } while (next_combination(tuple, partition.parts()));
  return result;
}

int weight(const RayConfiguration& config, const Partition& partition,
           const std::vector<int>& tuple, int ray) {
  const auto parts = partition.part_indices();
  int multi = 0;
  for (int j : tuple) {
    int on_ray = 0;
    for (int p : parts[j])
      if (config.id_of(p).ray == ray) ++on_ray;
    if (on_ray == 0) return 0;
    if (on_ray > 1) ++multi;
  }
  return 1 + multi;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt result = 1;
  for (int i = 0; i < k; ++i) {
    result *= n - i;
    result /= i + 1;
  }
  return result;
}

BubaCheck check_buba(const RayConfiguration& config,
                     const Partition& partition, int k) {
  if (k < 2 || k > partition.parts())
    throw std::invalid_argument("need 2 <= k <= r");
  const ConfigView view(config);
  const PartData data = build_part_data(view, partition);
  TupleDecider decider(view);

  BubaCheck check;
  auto tuple = first_combination(k);
  do {
    bool full_part = false;
    for (int j : tuple) full_part = full_part || data.rays[j] == view.all_rays;
    if (full_part) {
      check.skipped.push_back(tuple);
      continue;
    }
    if (decider.decide(data, tuple).empty) continue;
    int total = 0;
    for (int ray = 0; ray < config.ray_count(); ++ray)
      total += weight_of(view, data, tuple, ray);
    if (total < k) check.violations.push_back(tuple);
  } while (next_combination(tuple, partition.parts()));
  return check;
}

std::vector<int> check_baba(const RayConfiguration& config,
                            const Partition& partition, int k) {
  if (k < 1 || k > partition.parts())
    throw std::invalid_argument("need 1 <= k <= r");
  const BigInt bound = binomial(partition.parts() - 1, k);
  std::vector<int> violating;
  for (int ray = 0; ray < config.ray_count(); ++ray) {
    BigInt total = 0;
    auto tuple = first_combination(k);
    do {
      total += weight(config, partition, tuple, ray);
    } while (next_combination(tuple, partition.parts()));
    if (total > bound) violating.push_back(ray);
  }
  return violating;
}

namespace {

struct ShardReport {
  std::uint64_t total = 0;
  std::uint64_t good = 0;
  std::uint64_t bad = 0;
  std::map<std::string, std::uint64_t> histogram;
  std::vector<BadWitness> witnesses;
  std::uint64_t degenerate = 0;
};

}  // namespace

VerificationReport verify_lower_bound(const RayConfiguration& config,
                                      const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const int r = config.r();
  const int k = options.k;
  if (k < 2 || k > r) throw std::invalid_argument("need 2 <= k <= r");
  if (options.shard_total < 1 || options.shard_index < 0 ||
      options.shard_index >= options.shard_total)
    throw std::invalid_argument("invalid shard spec");

  const int jobs = std::max(1, options.jobs);
  const int sub_shards = jobs > 1 ? jobs * 4 : 1;
  const int n = config.point_count();
  const ConfigView view(config);

  std::vector<ShardReport> shard_reports(sub_shards);
  run_shards(sub_shards, jobs, [&](int sub) {
    // Sub-shard `sub` of the requested shard: residue shard_index +
    // sub * shard_total in the combined modulus.
    PartitionEnumerator stream(n, r,
                               options.shard_index + sub * options.shard_total,
                               options.shard_total * sub_shards);
    TupleDecider decider(view);
    ShardReport& report = shard_reports[sub];
    while (auto partition = stream.next()) {
      const PartData data = build_part_data(view, *partition);
      auto scan = staged_scan(decider, data, r, r);
      report.degenerate += scan.degenerate_instances;
      ++report.total;
      const std::string bucket =
          scan.min_empty ? std::to_string(*scan.min_empty) : "none";
      ++report.histogram[bucket];
      const bool good = scan.min_empty && *scan.min_empty <= k;
      if (good) {
        ++report.good;
        continue;
      }
      ++report.bad;
      if (options.collect_witnesses) {
        auto tuple = first_combination(k);
        do {
          report.witnesses.push_back(BadWitness{
              partition->str(), tuple, decider.certify(data, tuple)});
        } while (next_combination(tuple, r));
      }
    }
  });

  VerificationReport report;
  report.r = r;
  report.k = k;
  report.shard_index = options.shard_index;
  report.shard_total = options.shard_total;
  for (int m = 2; m <= r; ++m) report.min_empty_k_histogram[std::to_string(m)];
  report.min_empty_k_histogram["none"];
  for (auto& shard : shard_reports) {
    report.total += shard.total;
    report.good += shard.good;
    report.bad += shard.bad;
    report.genericity_violations += shard.degenerate;
    for (const auto& [key, count] : shard.histogram)
      report.min_empty_k_histogram[key] += count;
    for (auto& witness : shard.witnesses)
      report.bad_witnesses.push_back(std::move(witness));
  }
  std::sort(report.bad_witnesses.begin(), report.bad_witnesses.end(),
            [](const BadWitness& a, const BadWitness& b) {
              return std::tie(a.partition, a.tuple) <
                     std::tie(b.partition, b.tuple);
            });
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

PartitionClassifier goodness_classifier(int k, int jobs) {
  const int effective_jobs = std::max(1, jobs);
  return [k, effective_jobs](const RayConfiguration& config) {
    const int r = config.r();
    const int n = config.point_count();
    const ConfigView view(config);
    const int sub_shards = effective_jobs > 1 ? effective_jobs * 4 : 1;
    std::vector<std::vector<bool>> shard_flags(sub_shards);
    run_shards(sub_shards, effective_jobs, [&](int sub) {
      PartitionEnumerator stream(n, r, sub, sub_shards);
      TupleDecider decider(view);
      while (auto partition = stream.next()) {
        const PartData data = build_part_data(view, *partition);
        shard_flags[sub].push_back(
            staged_scan(decider, data, r, k).min_empty.has_value());
      }
    });
    std::vector<bool> flags;
    for (auto& shard : shard_flags)
      flags.insert(flags.end(), shard.begin(), shard.end());
    return flags;
  };
}

Characterization532 characterize_bad_532(const RayConfiguration& config) {
  if (config.dimension() != 5 || config.r() != 3)
    throw std::invalid_argument("characterization applies to d=5, r=3 only");
  if (config.any_perturbation())
    throw std::invalid_argument("characterization needs unperturbed points");

  const ConfigView view(config);
  Characterization532 out;
  PartitionEnumerator stream(config.point_count(), 3);
  TupleDecider decider(view);
  while (auto partition = stream.next()) {
    const PartData data = build_part_data(view, *partition);
    if (!staged_scan(decider, data, 3, 2).min_empty) out.lp_bad.push_back(*partition);

    // Pattern: every pair of parts shares exactly two rays, with the lower
    // point from one part on the first and from the other on the second.
    bool structural = true;
    for (int a = 0; a < 3 && structural; ++a) {
      for (int b = a + 1; b < 3 && structural; ++b) {
        int a_low = 0, b_low = 0;
        for (int ray = 0; ray < config.ray_count(); ++ray) {
          const int high = ray * 2, low = ray * 2 + 1;  // level 1 then 2
          const int lh = partition->label(high), ll = partition->label(low);
          if (lh == a && ll == b) ++b_low;
          if (lh == b && ll == a) ++a_low;
        }
        structural = a_low == 1 && b_low == 1;
      }
    }
    if (structural) out.structural_bad.push_back(*partition);
  }
  return out;
}

WeightAudit audit_weights(const RayConfiguration& config, int k,
                          std::optional<std::uint64_t> sample, int jobs) {
  const auto start = std::chrono::steady_clock::now();
  const int r = config.r();
  if (k < 2 || k > r) throw std::invalid_argument("need 2 <= k <= r");
  const int n = config.point_count();
  const ConfigView view(config);
  const BigInt bound = binomial(r - 1, k);

  WeightAudit audit;
  audit.max_ray_weight.assign(static_cast<std::size_t>(config.ray_count()),
                              0);

  const auto process = [&](TupleDecider& decider, const Partition& partition,
                           WeightAudit& into) {
    const PartData data = build_part_data(view, partition);
    ++into.partitions_checked;
    std::vector<BigInt> ray_totals(
        static_cast<std::size_t>(config.ray_count()), BigInt(0));
    auto tuple = first_combination(k);
    do {
      std::vector<int> weights(static_cast<std::size_t>(config.ray_count()));
      for (int ray = 0; ray < config.ray_count(); ++ray) {
        weights[ray] = weight_of(view, data, tuple, ray);
        ray_totals[ray] += weights[ray];
      }
      bool full_part = false;
      for (int j : tuple)
        full_part = full_part || data.rays[j] == view.all_rays;
      if (full_part) {
        ++into.tuples_skipped;
        continue;
      }
      if (decider.decide(data, tuple).empty) continue;
      int total = 0;
      for (int w : weights) total += w;
      if (total < k)
        into.buba_violations.emplace_back(partition.str(), tuple);
    } while (next_combination(tuple, r));
    for (int ray = 0; ray < config.ray_count(); ++ray) {
      if (ray_totals[ray] > bound)
        into.baba_violations.emplace_back(partition.str(), ray);
      if (ray_totals[ray] > into.max_ray_weight[ray])
        into.max_ray_weight[ray] =
            static_cast<std::uint64_t>(ray_totals[ray]);
    }
  };

  if (sample) {
    const BigInt total = partition_count(n, r);
    BigInt stride = *sample == 0 ? BigInt(0) : total / BigInt(*sample);
    if (stride < 1) stride = 1;
    if (*sample > 0) {
      PartitionEnumerator stream(n, r);
      TupleDecider decider(view);
      BigInt index = 0;
      std::uint64_t taken = 0;
      while (auto partition = stream.next()) {
        if (index % stride == 0 && taken < *sample) {
          process(decider, *partition, audit);
          ++taken;
        }
        ++index;
        if (taken == *sample) break;
      }
    }
  } else {
    const int effective_jobs = std::max(1, jobs);
    const int sub_shards = effective_jobs > 1 ? effective_jobs * 4 : 1;
    std::vector<WeightAudit> shard_audits(
        static_cast<std::size_t>(sub_shards));
    for (auto& a : shard_audits)
      a.max_ray_weight.assign(
          static_cast<std::size_t>(config.ray_count()), 0);
    run_shards(sub_shards, effective_jobs, [&](int sub) {
      PartitionEnumerator stream(n, r, sub, sub_shards);
      TupleDecider decider(view);
      while (auto partition = stream.next())
        process(decider, *partition, shard_audits[sub]);
    });
    for (auto& shard : shard_audits) {
      audit.partitions_checked += shard.partitions_checked;
      audit.tuples_skipped += shard.tuples_skipped;
      for (auto& v : shard.buba_violations)
        audit.buba_violations.push_back(std::move(v));
      for (auto& v : shard.baba_violations)
        audit.baba_violations.push_back(std::move(v));
      for (std::size_t ray = 0; ray < audit.max_ray_weight.size(); ++ray)
        audit.max_ray_weight[ray] =
            std::max(audit.max_ray_weight[ray], shard.max_ray_weight[ray]);
    }
    std::sort(audit.buba_violations.begin(), audit.buba_violations.end());
    std::sort(audit.baba_violations.begin(), audit.baba_violations.end());
  }
  audit.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  return audit;
}

}  // namespace tverberg
