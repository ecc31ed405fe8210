#pragma once

#include <utility>
#include <vector>

#include "fgm/partition.hpp"

namespace fgm {

// Standard Young tableau: cells of the shape filled with 1..n, strictly
// increasing along rows and columns. Stored as entry -> (row, col), 1-based.
class StandardTableau {
 public:
  StandardTableau(Partition shape, std::vector<std::pair<int, int>> cell_of_entry)
      : shape_(std::move(shape)), cells_(std::move(cell_of_entry)) {}

  const Partition& shape() const { return shape_; }
  int n() const { return shape_.n(); }
  std::pair<int, int> cell(int entry) const { return cells_[entry - 1]; }

  // col - row of the entry's cell; the YOR axial distances come from these.
  int content(int entry) const {
    auto [r, c] = cells_[entry - 1];
    return c - r;
  }

  bool operator==(const StandardTableau&) const = default;

 private:
  Partition shape_;
  std::vector<std::pair<int, int>> cells_;
};

// All standard tableaux of the shape in last-letter order: tableaux are
// grouped by the row of n following restrict_partition(shape), recursively.
// Index arithmetic therefore matches the restricted block layout exactly.
std::vector<StandardTableau> enumerate_tableaux(const Partition& shape);

}  // namespace fgm
