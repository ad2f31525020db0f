#include "tverberg/search.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace tverberg {

PointCloud cloud_from_config(const RayConfiguration& config) {
  return PointCloud{config.dimension(), config.all_points()};
}

PointCloud random_rational_cloud(int d, int n, std::uint64_t seed) {
  if (d < 1 || n < 1) throw std::invalid_argument("need d >= 1 and n >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-1000, 1000);
  PointCloud cloud{d, {}};
  for (int i = 0; i < n; ++i) {
    RVector p(static_cast<std::size_t>(d));
    for (int c = 0; c < d; ++c) p[c] = dist(rng);
    cloud.points.push_back(std::move(p));
  }
  return cloud;
}

namespace {

struct MaskVecHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

class PartitionSearch {
public:
  PartitionSearch(const PointCloud& cloud, int r, int k)
      : cloud_(&cloud), r_(r), k_(k), n_(static_cast<int>(cloud.points.size())) {}

  SearchResult run() {
    SearchResult greedy = try_greedy();
    if (greedy.found) return greedy;

    parts_.assign(static_cast<std::size_t>(r_), {});
    masks_.assign(static_cast<std::size_t>(r_), 0);
    SearchResult result;
    dfs(0, 0, result);
    return result;
  }

private:
  bool tuple_nonempty(const std::vector<int>& tuple) {
    std::vector<std::uint64_t> key;
    key.reserve(tuple.size());
    for (int j : tuple) key.push_back(masks_[j]);
    std::sort(key.begin(), key.end());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<std::vector<RVector>> sets;
    for (int j : tuple) {
      std::vector<RVector> set;
      for (int p : parts_[j]) set.push_back(cloud_->points[p]);
      sets.push_back(std::move(set));
    }
    const bool nonempty =
        hulls_common_point(sets).verdict == Verdict::nonempty;
    memo_.emplace(std::move(key), nonempty);
    return nonempty;
  }

  // Intersection requirements decidable once part `last` is final: the whole
  // prefix for the Tverberg case, else every k-tuple through `last`.
  bool completed_checks_pass(int last) {
    if (k_ == r_) {
      std::vector<int> prefix(static_cast<std::size_t>(last) + 1);
      std::iota(prefix.begin(), prefix.end(), 0);
      return prefix.size() < 2 || tuple_nonempty(prefix);
    }
    if (last + 1 < k_) return true;
    std::vector<int> tuple(static_cast<std::size_t>(k_));
    std::vector<int> choose(static_cast<std::size_t>(k_) - 1);
    std::iota(choose.begin(), choose.end(), 0);
    for (;;) {
      for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(k_); ++i)
        tuple[i] = choose[i];
      tuple[k_ - 1] = last;
      if (!tuple_nonempty(tuple)) return false;
      int i = k_ - 2;
      while (i >= 0 && choose[i] == last - (k_ - 1 - i)) --i;
      if (i < 0) break;
      ++choose[i];
      for (std::size_t j = i + 1; j < choose.size(); ++j)
        choose[j] = choose[j - 1] + 1;
    }
    return true;
  }

  void dfs(int depth, std::uint64_t assigned, SearchResult& result) {
    if (result.found) return;
    if (depth == r_) {
      finalize(result);
      return;
    }
    std::vector<int> remaining;
    for (int p = 0; p < n_; ++p)
      if (!(assigned >> p & 1)) remaining.push_back(p);
    const int slots_needed = r_ - depth - 1;
    const int anchor = remaining.front();

    if (depth == r_ - 1) {
      parts_[depth] = remaining;
      masks_[depth] = 0;
      for (int p : remaining) masks_[depth] |= std::uint64_t{1} << p;
      if (completed_checks_pass(depth)) dfs(depth + 1, ~std::uint64_t{0}, result);
      return;
    }

    const std::vector<int> rest(remaining.begin() + 1, remaining.end());
    const std::uint64_t subsets = std::uint64_t{1} << rest.size();
    for (std::uint64_t choice = 0; choice < subsets && !result.found;
         ++choice) {
      if (static_cast<int>(rest.size()) - __builtin_popcountll(choice) <
          slots_needed)
        continue;
      std::vector<int> part{anchor};
      std::uint64_t mask = std::uint64_t{1} << anchor;
      for (std::size_t i = 0; i < rest.size(); ++i)
        if (choice >> i & 1) {
          part.push_back(rest[i]);
          mask |= std::uint64_t{1} << rest[i];
        }
      parts_[depth] = std::move(part);
      masks_[depth] = mask;
      if (!completed_checks_pass(depth)) continue;
      dfs(depth + 1, assigned | mask, result);
    }
  }

  void finalize(SearchResult& result) {
    std::vector<std::uint8_t> labels(static_cast<std::size_t>(n_));
    for (int j = 0; j < r_; ++j)
      for (int p : parts_[j]) labels[p] = static_cast<std::uint8_t>(j);
    result.found = true;
    result.partition = Partition(labels, r_);
    attach_certificates(result);
  }

  void attach_certificates(SearchResult& result) {
    const auto parts = result.partition->part_indices();
    const auto sets_for = [&](const std::vector<int>& tuple) {
      std::vector<std::vector<RVector>> sets;
      for (int j : tuple) {
        std::vector<RVector> set;
        for (int p : parts[j]) set.push_back(cloud_->points[p]);
        sets.push_back(std::move(set));
      }
      return sets;
    };
    if (k_ == r_) {
      std::vector<int> all(static_cast<std::size_t>(r_));
      std::iota(all.begin(), all.end(), 0);
      result.certificates.emplace_back(all,
                                       hulls_common_point(sets_for(all)));
      return;
    }
    std::vector<int> tuple(static_cast<std::size_t>(k_));
    std::iota(tuple.begin(), tuple.end(), 0);
    for (;;) {
      result.certificates.emplace_back(tuple,
                                       hulls_common_point(sets_for(tuple)));
      int i = k_ - 1;
      while (i >= 0 && tuple[i] == r_ - k_ + i) --i;
      if (i < 0) break;
      ++tuple[i];
      for (int j = i + 1; j < k_; ++j) tuple[j] = tuple[j - 1] + 1;
    }
  }

  // One cheap candidate: points swept radially, dealt round-robin.
  SearchResult try_greedy() {
    SearchResult result;
    std::vector<int> order(static_cast<std::size_t>(n_));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return radial_less(cloud_->points[a], cloud_->points[b]);
    });
    parts_.assign(static_cast<std::size_t>(r_), {});
    masks_.assign(static_cast<std::size_t>(r_), 0);
    for (int i = 0; i < n_; ++i) {
      parts_[i % r_].push_back(order[i]);
      masks_[i % r_] |= std::uint64_t{1} << order[i];
    }
    for (auto& part : parts_)
      if (part.empty()) return result;
    for (auto& part : parts_) std::sort(part.begin(), part.end());
    for (int j = 0; j < r_; ++j)
      if (!completed_checks_pass(j)) return result;

    // Canonical relabeling by first occurrence.
    std::vector<int> first_point(static_cast<std::size_t>(r_));
    for (int j = 0; j < r_; ++j) first_point[j] = parts_[j].front();
    std::vector<int> by_anchor(static_cast<std::size_t>(r_));
    std::iota(by_anchor.begin(), by_anchor.end(), 0);
    std::sort(by_anchor.begin(), by_anchor.end(),
              [&](int a, int b) { return first_point[a] < first_point[b]; });
    std::vector<std::vector<int>> relabeled;
    for (int j : by_anchor) relabeled.push_back(parts_[j]);
    parts_ = relabeled;
    masks_.assign(static_cast<std::size_t>(r_), 0);
    for (int j = 0; j < r_; ++j)
      for (int p : parts_[j]) masks_[j] |= std::uint64_t{1} << p;
    finalize(result);
    return result;
  }

  bool radial_less(const RVector& a, const RVector& b) const {
    if (cloud_->d >= 2) {
      const auto half = [](const RVector& v) {
        if (v[0] == 0 && v[1] == 0) return 0;
        if (v[1] > 0 || (v[1] == 0 && v[0] > 0)) return 1;
        return 2;
      };
      if (half(a) != half(b)) return half(a) < half(b);
      const Rational cross = a[0] * b[1] - b[0] * a[1];
      if (cross != 0) return cross > 0;
    }
    return dot(a, a) < dot(b, b);
  }

  const PointCloud* cloud_;
  int r_, k_, n_;
  std::vector<std::vector<int>> parts_;
  std::vector<std::uint64_t> masks_;
  std::unordered_map<std::vector<std::uint64_t>, bool, MaskVecHash> memo_;
};

}  // namespace

SearchResult find_k_wise_partition(const PointCloud& cloud, int r, int k) {
  if (r < 2 || k < 2 || k > r) throw std::invalid_argument("need 2 <= k <= r");
  if (cloud.points.size() > 64)
    throw std::invalid_argument("cloud too large for exhaustive search");
  for (const auto& p : cloud.points)
    if (p.size() != static_cast<std::size_t>(cloud.d))
      throw std::invalid_argument("point dimension mismatch");
  if (static_cast<int>(cloud.points.size()) < r) return {};
  return PartitionSearch(cloud, r, k).run();
}

SearchResult find_tverberg_partition(const PointCloud& cloud, int r) {
  return find_k_wise_partition(cloud, r, r);
}

}  // namespace tverberg
