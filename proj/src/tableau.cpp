#include "fgm/tableau.hpp"

namespace fgm {

namespace {

// Row (1-based) of the corner removed when passing from lambda to mu.
int removed_row(const Partition& lambda, const Partition& mu) {
  const auto& lp = lambda.parts();
  const auto& mp = mu.parts();
  for (std::size_t r = 0; r < mp.size(); ++r)
    if (lp[r] != mp[r]) return static_cast<int>(r) + 1;
  return static_cast<int>(lp.size());
}

}  // namespace

std::vector<StandardTableau> enumerate_tableaux(const Partition& shape) {
  const int n = shape.n();
  if (n == 1) {
    return {StandardTableau(shape, {{1, 1}})};
  }
  std::vector<StandardTableau> out;
  for (const Partition& mu : restrict_partition(shape)) {
    const int row = removed_row(shape, mu);
    const int col = shape.parts()[row - 1];
    for (const StandardTableau& sub : enumerate_tableaux(mu)) {
      std::vector<std::pair<int, int>> cells;
      cells.reserve(n);
      for (int entry = 1; entry < n; ++entry) cells.push_back(sub.cell(entry));
      cells.emplace_back(row, col);
      out.emplace_back(shape, std::move(cells));
    }
  }
  return out;
}

}  // namespace fgm
