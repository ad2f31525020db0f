#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tverberg/rational.hpp"

namespace tverberg {

// Partition of {0,...,n-1} into exactly r nonempty unlabeled parts, stored
// as a restricted growth string: label(0) = 0 and the first occurrence of
// label j precedes the first occurrence of j+1.
class Partition {
public:
  Partition(std::vector<std::uint8_t> labels, int parts);
  // Digits '0'-'9'; the part count is the largest digit plus one.
  static Partition parse(const std::string& digits);

  int parts() const { return parts_; }
  std::size_t size() const { return labels_.size(); }
  std::uint8_t label(std::size_t index) const { return labels_[index]; }
  const std::vector<std::uint8_t>& labels() const { return labels_; }

  // Point indices per part, in label order.
  std::vector<std::vector<int>> part_indices() const;

  std::string str() const;

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

private:
  std::vector<std::uint8_t> labels_;
  int parts_ = 0;
};

// Number of partitions of an n-set into exactly r nonempty parts (Stirling
// number of the second kind), by the exact recurrence.
BigInt partition_count(int n, int r);

// Lexicographic stream of every restricted growth string on n points with
// exactly r labels.  Sharding fixes a prefix length and deals prefix blocks
// round-robin, so shards are disjoint, cover everything, and need no
// coordination between workers.
class PartitionEnumerator {
public:
  PartitionEnumerator(int n, int r) : PartitionEnumerator(n, r, 0, 1) {}
  PartitionEnumerator(int n, int r, int shard_index, int shard_total);

  std::optional<Partition> next();

private:
  void first();
  void complete_from(int pos);
  bool increment_in_range(int lo, int hi);
  bool advance_prefix();

  int n_, r_, shard_index_, shard_total_, prefix_len_;
  std::uint64_t prefix_ordinal_ = 0;
  std::vector<std::uint8_t> labels_;
  std::vector<std::uint8_t> prefix_max_;  // prefix_max_[i] = max(labels_[0..i])
  bool started_ = false;
  bool done_ = false;
};

}  // namespace tverberg
