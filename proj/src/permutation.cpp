#include "fgm/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "fgm/common.hpp"

namespace fgm {

Permutation::Permutation(std::vector<int> one_line) : images_(std::move(one_line)) {
  const int n = degree();
  if (n == 0) throw ValidationError("permutation: empty one-line array");
  std::vector<char> seen(n + 1, 0);
  for (int v : images_) {
    if (v < 1 || v > n) throw ValidationError("permutation: value out of range");
    if (seen[v]) throw ValidationError("permutation: repeated value");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw ValidationError("permutation: degree must be positive");
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v), Unchecked{});
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= degree(); ++i) inv[images_[i - 1] - 1] = i;
  return Permutation(std::move(inv), Unchecked{});
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.degree() != inner.degree())
    throw ValidationError("compose: degree mismatch");
  std::vector<int> v(outer.degree());
  for (int i = 1; i <= inner.degree(); ++i) v[i - 1] = outer(inner(i));
  return Permutation(std::move(v), Permutation::Unchecked{});
}

Permutation contiguous_cycle(int i, int n) {
  if (n < 1) throw ValidationError("contiguous_cycle: degree must be positive");
  if (i < 1 || i > n) throw ValidationError("contiguous_cycle: index out of range");
  std::vector<int> v(n);
  for (int j = 1; j < i; ++j) v[j - 1] = j;
  for (int j = i; j < n; ++j) v[j - 1] = j + 1;
  v[n - 1] = i;
  return Permutation(std::move(v), Permutation::Unchecked{});
}

Permutation embed(const Permutation& p, int n) {
  if (n < p.degree()) throw ValidationError("embed: target degree too small");
  std::vector<int> v(p.one_line());
  for (int j = p.degree() + 1; j <= n; ++j) v.push_back(j);
  return Permutation(std::move(v));
}

std::vector<int> adjacent_transposition_factors(const Permutation& sigma) {
  std::vector<int> work = sigma.one_line();
  const int n = static_cast<int>(work.size());
  std::vector<int> swaps;
  // Bubble sort to the identity; each recorded swap is a right-factor s[k].
  bool moved = true;
  while (moved) {
    moved = false;
    for (int k = 1; k < n; ++k) {
      if (work[k - 1] > work[k]) {
        std::swap(work[k - 1], work[k]);
        swaps.push_back(k);
        moved = true;
      }
    }
  }
  // sigma ∘ s[k_1] ∘ ... ∘ s[k_L] = e, so sigma = s[k_L] ∘ ... ∘ s[k_1].
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

Permutation random_permutation(int n, Rng& rng) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  rng.shuffle(v);
  return Permutation(std::move(v));
}

void for_each_permutation_adjacent(
    int n, const std::function<void(const Permutation&, int)>& visit) {
  if (n < 1) throw ValidationError("for_each_permutation_adjacent: n must be positive");
  Permutation sigma = Permutation::identity(n);
  visit(sigma, 0);
  if (n == 1) return;

  // Steinhaus-Johnson-Trotter with directed values. dir[v] is -1 (left) or
  // +1 (right); pos[v] is the 0-based position of value v in the array.
  std::vector<int> arr(sigma.one_line());
  std::vector<int> pos(n + 1), dir(n + 1, -1);
  for (int p = 0; p < n; ++p) pos[arr[p]] = p;

  for (;;) {
    // Largest mobile value: points at an adjacent smaller value.
    int mobile = 0;
    for (int v = n; v >= 1; --v) {
      const int p = pos[v];
      const int q = p + dir[v];
      if (q < 0 || q >= n) continue;
      if (arr[q] < v) {
        mobile = v;
        break;
      }
    }
    if (mobile == 0) return;

    const int p = pos[mobile];
    const int q = p + dir[mobile];
    std::swap(arr[p], arr[q]);
    pos[arr[p]] = p;
    pos[arr[q]] = q;
    for (int v = mobile + 1; v <= n; ++v) dir[v] = -dir[v];

    const int swapped = std::min(p, q) + 1;  // 1-based position pair (k, k+1)
    sigma = Permutation(arr);
    visit(sigma, swapped);
  }
}

}  // namespace fgm
