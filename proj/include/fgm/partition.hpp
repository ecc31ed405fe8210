#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace fgm {

// Integer partition lambda ⊢ n: weakly decreasing positive parts. Indexes the
// irreducible representations of S_n ("frequencies").
class Partition {
 public:
  explicit Partition(std::vector<int> parts);

  int n() const { return n_; }
  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }

  bool operator==(const Partition&) const = default;
  // Orders partitions of equal n reverse-lexicographically, (n) first and
  // (1,...,1) last, matching every list this library produces.
  std::strong_ordering operator<=>(const Partition& other) const;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

// All partitions of n in reverse-lexicographic order; length p(n).
// n == 0 is an empty-domain error.
std::vector<Partition> enumerate_partitions(int n);

// d_lambda: number of standard Young tableaux of the shape (hook length
// formula, exact integer arithmetic; valid through n = 33).
std::int64_t dimension(const Partition& lambda);

// Partitions of n-1 obtained by removing one removable corner, ordered by
// increasing row of the removed cell. Empty for n == 1.
std::vector<Partition> restrict_partition(const Partition& lambda);

// Partitions of n+1 obtained by adding one addable corner, ordered by
// increasing row of the added cell. Inverse relation of restrict_partition.
std::vector<Partition> induce_partition(const Partition& mu);

}  // namespace fgm
