#include "fgm/partition.hpp"

#include <numeric>

#include "fgm/common.hpp"

namespace fgm {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw ValidationError("partition: no parts");
  int prev = parts_.front();
  for (int p : parts_) {
    if (p < 1) throw ValidationError("partition: parts must be positive");
    if (p > prev) throw ValidationError("partition: parts must be nonincreasing");
    prev = p;
    n_ += p;
  }
}

std::strong_ordering Partition::operator<=>(const Partition& other) const {
  if (n_ != other.n_) return n_ <=> other.n_;
  // Lexicographically larger part sequence comes first.
  const std::size_t len = std::min(parts_.size(), other.parts_.size());
  for (std::size_t i = 0; i < len; ++i) {
    if (parts_[i] != other.parts_[i]) return other.parts_[i] <=> parts_[i];
  }
  return parts_.size() <=> other.parts_.size();
}

namespace {

void enumerate_rec(int remaining, int max_part, std::vector<int>& acc,
                   std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(acc);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    acc.push_back(p);
    enumerate_rec(remaining - p, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 1) throw ValidationError("enumerate_partitions: n must be at least 1");
  std::vector<Partition> out;
  std::vector<int> acc;
  enumerate_rec(n, n, acc, out);
  return out;
}

std::int64_t dimension(const Partition& lambda) {
  const int n = lambda.n();
  if (n > 33)
    throw ValidationError("dimension: hook-length arithmetic limited to n <= 33");
  const auto& parts = lambda.parts();
  const int k = lambda.rows();

  // Column lengths for hook computation.
  std::vector<int> col_len(parts[0], 0);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < parts[r]; ++c) ++col_len[c];

  unsigned __int128 numer = 1;
  for (int i = 2; i <= n; ++i) numer *= static_cast<unsigned>(i);
  unsigned __int128 denom = 1;
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < parts[r]; ++c) {
      const int hook = (parts[r] - c) + (col_len[c] - r) - 1;
      denom *= static_cast<unsigned>(hook);
    }
  return static_cast<std::int64_t>(numer / denom);
}

std::vector<Partition> restrict_partition(const Partition& lambda) {
  std::vector<Partition> out;
  if (lambda.n() == 1) return out;
  const auto& parts = lambda.parts();
  const int k = lambda.rows();
  for (int r = 0; r < k; ++r) {
    const bool removable = (r + 1 == k) || (parts[r] > parts[r + 1]);
    if (!removable) continue;
    std::vector<int> next = parts;
    if (--next[r] == 0) next.pop_back();
    out.emplace_back(std::move(next));
  }
  return out;
}

std::vector<Partition> induce_partition(const Partition& mu) {
  std::vector<Partition> out;
  const auto& parts = mu.parts();
  const int k = mu.rows();
  for (int r = 0; r <= k; ++r) {
    const bool addable = (r == 0) || (r == k) || (parts[r] < parts[r - 1]);
    if (!addable) continue;
    std::vector<int> next = parts;
    if (r == k)
      next.push_back(1);
    else
      ++next[r];
    out.emplace_back(std::move(next));
  }
  return out;
}

}  // namespace fgm
