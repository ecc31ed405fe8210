#pragma once

#include <functional>
#include <vector>

#include "fgm/rng.hpp"

namespace fgm {

// Element of S_n in one-line notation, 1-based: operator()(i) is the image
// of i. Composition convention is (outer * inner)(i) = outer(inner(i)).
class Permutation {
 public:
  // Validates that the entries are a bijection on {1..n}.
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& one_line() const { return images_; }

  Permutation inverse() const;

  bool operator==(const Permutation&) const = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> one_line, Unchecked) : images_(std::move(one_line)) {}

  std::vector<int> images_;

  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation contiguous_cycle(int, int);
};

// (outer ∘ inner)(i) = outer(inner(i)); degrees must match.
Permutation compose(const Permutation& outer, const Permutation& inner);

// The cycle mapping n -> i and j -> j+1 for i <= j < n, identity elsewhere.
// Its left coset of S_{n-1} is exactly {sigma : sigma(n) = i}.
Permutation contiguous_cycle(int i, int n);

// Extends p in S_m to S_n (n >= m) fixing m+1..n.
Permutation embed(const Permutation& p, int n);

// Indices k(1..n-1) such that sigma = s[k_0] ∘ s[k_1] ∘ ... ∘ s[k_last],
// where s[k] swaps k and k+1 and the rightmost factor applies first.
// Length is at most n(n-1)/2 (one factor per inversion).
std::vector<int> adjacent_transposition_factors(const Permutation& sigma);

Permutation random_permutation(int n, Rng& rng);

// Visits all n! permutations starting from the identity; each subsequent
// permutation differs from its predecessor by swapping one-line positions
// (k, k+1), i.e. sigma_next = sigma_prev ∘ s[k] (Steinhaus-Johnson-Trotter).
// The callback receives the permutation and k (0 for the initial identity).
void for_each_permutation_adjacent(
    int n, const std::function<void(const Permutation&, int)>& visit);

}  // namespace fgm
