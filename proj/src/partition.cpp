#include "tverberg/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace tverberg {

Partition::Partition(std::vector<std::uint8_t> labels, int parts)
    : labels_(std::move(labels)), parts_(parts) {
  if (parts_ < 1 || labels_.empty())
    throw std::invalid_argument("partition needs at least one part and point");
  int max_seen = -1;
  for (auto l : labels_) {
    if (l > max_seen + 1)
      throw std::invalid_argument("not a restricted growth string");
    max_seen = std::max(max_seen, static_cast<int>(l));
  }
  if (max_seen + 1 != parts_)
    throw std::invalid_argument("label count does not match part count");
}

Partition Partition::parse(const std::string& digits) {
  std::vector<std::uint8_t> labels;
  int max_seen = -1;
  for (char c : digits) {
    if (c < '0' || c > '9')
      throw std::invalid_argument("partition string must be digits");
    labels.push_back(static_cast<std::uint8_t>(c - '0'));
    max_seen = std::max(max_seen, c - '0');
  }
  return Partition(std::move(labels), max_seen + 1);
}

std::vector<std::vector<int>> Partition::part_indices() const {
  std::vector<std::vector<int>> parts(static_cast<std::size_t>(parts_));
  for (std::size_t i = 0; i < labels_.size(); ++i)
    parts[labels_[i]].push_back(static_cast<int>(i));
  return parts;
}

std::string Partition::str() const {
  std::string out;
  out.reserve(labels_.size());
  for (auto l : labels_) out.push_back(static_cast<char>('0' + l));
  return out;
}

BigInt partition_count(int n, int r) {
  if (n < 0 || r < 0) throw std::invalid_argument("negative arguments");
  if (r > n) return 0;
  if (n == 0) return r == 0 ? 1 : 0;
  // S(n,r) = r S(n-1,r) + S(n-1,r-1)
  std::vector<BigInt> row(static_cast<std::size_t>(r) + 1, BigInt(0));
  row[0] = 1;  // S(0,0)
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, r); j >= 1; --j)
      row[j] = BigInt(j) * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[r];
}

PartitionEnumerator::PartitionEnumerator(int n, int r, int shard_index,
                                         int shard_total)
    : n_(n),
      r_(r),
      shard_index_(shard_index),
      shard_total_(shard_total),
      prefix_len_(std::min(n, 6)) {
  if (r < 1 || r > n) throw std::invalid_argument("need 1 <= r <= n");
  if (shard_total < 1 || shard_index < 0 || shard_index >= shard_total)
    throw std::invalid_argument("invalid shard spec");
  labels_.resize(static_cast<std::size_t>(n));
  prefix_max_.resize(static_cast<std::size_t>(n));
}

void PartitionEnumerator::first() {
  labels_[0] = 0;
  prefix_max_[0] = 0;
  complete_from(1);
}

// Minimal completion: zeros until the tail where missing labels become
// forced, one new label per remaining slot.
void PartitionEnumerator::complete_from(int pos) {
  for (int j = pos; j < n_; ++j) {
    const int m = prefix_max_[j - 1];
    const int missing = (r_ - 1) - m;
    labels_[j] = missing > (n_ - 1 - j) ? static_cast<std::uint8_t>(m + 1) : 0;
    prefix_max_[j] = std::max(prefix_max_[j - 1], labels_[j]);
  }
}

// Bump the rightmost position in [lo, hi) that can grow, then complete
// minimally: the lexicographic successor among strings sharing the
// untouched head.
bool PartitionEnumerator::increment_in_range(int lo, int hi) {
  for (int i = hi - 1; i >= lo; --i) {
    const int cap = std::min<int>(prefix_max_[i - 1] + 1, r_ - 1);
    if (labels_[i] < cap) {
      ++labels_[i];
      prefix_max_[i] = std::max(prefix_max_[i - 1], labels_[i]);
      complete_from(i + 1);
      return true;
    }
  }
  return false;
}

bool PartitionEnumerator::advance_prefix() {
  if (!increment_in_range(1, prefix_len_)) return false;
  ++prefix_ordinal_;
  return true;
}

std::optional<Partition> PartitionEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    first();
    if (shard_total_ == 1 ||
        prefix_ordinal_ % static_cast<std::uint64_t>(shard_total_) ==
            static_cast<std::uint64_t>(shard_index_))
      return Partition(labels_, r_);
  } else if (shard_total_ == 1) {
    if (!increment_in_range(1, n_)) {
      done_ = true;
      return std::nullopt;
    }
    return Partition(labels_, r_);
  } else if (increment_in_range(prefix_len_, n_)) {
    return Partition(labels_, r_);
  }
  // move to the next prefix block owned by this shard
  do {
    if (!advance_prefix()) {
      done_ = true;
      return std::nullopt;
    }
  } while (prefix_ordinal_ % static_cast<std::uint64_t>(shard_total_) !=
           static_cast<std::uint64_t>(shard_index_));
  return Partition(labels_, r_);
}

}  // namespace tverberg
