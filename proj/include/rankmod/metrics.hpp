#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rankmod/budget.hpp"
#include "rankmod/numbers.hpp"
#include "rankmod/permutation.hpp"

namespace rankmod {

/// Kendall tau distance: the minimum number of adjacent transpositions
/// transforming sigma into pi, which equals the number of value pairs whose
/// relative order differs. O(n log n) by merge counting.
std::int64_t kendall_tau(const Permutation& sigma, const Permutation& pi);

/// Kendall tau distance between the inverses; equivalently the number of
/// position pairs (i, j) on which sigma and pi disagree about the order.
std::int64_t inversion_distance(const Permutation& sigma, const Permutation& pi);

std::int64_t manhattan(std::span<const int> x, std::span<const int> y);
std::int64_t manhattan(const Permutation& x, const Permutation& y);

/// Number of permutations of [n] with exactly 0, 1, ..., n(n-1)/2 inversions
/// (coefficients of prod_{i<=n} (1 + q + ... + q^{i-1})).
std::vector<BigCount> mahonian_row(int n);

/// b_I(n, r): the size of a radius-r ball in the inversion distance. The size
/// is center-independent, so it is the partial sum of the Mahonian row;
/// radii beyond n(n-1)/2 clamp to n!.
BigCount ball_size_inversion(int n, std::int64_t r);

struct SandwichReport {
    std::int64_t d_M;
    std::int64_t d_I;
    bool holds; // d_M/2 <= d_I <= d_M
};

/// Evaluates both distances and whether the two-sided bound between them holds.
SandwichReport check_sandwich(const Permutation& sigma, const Permutation& pi);

/// Number of vectors in {1..n}^n meeting the two-neighbor k-constraint, by
/// exhaustive scan with prefix pruning. Same condition as the permutation
/// family, minus the distinctness requirement.
BigCount count_two_neighbor_vectors(int n, int k, int budget = kDefaultVectorScanBudget);

/// Manhattan ball sizes by exhaustive scan, pruned on partial distance.
BigCount ball_manhattan_hn(std::span<const int> center, std::int64_t r,
                           int budget = kDefaultVectorScanBudget);
BigCount ball_manhattan_constrained(std::span<const int> center, int k, std::int64_t r,
                                    int budget = kDefaultVectorScanBudget);

struct ExtremalBall {
    BigCount size;
    std::vector<int> center; // lexicographically first attaining vector
};

/// Extremal Manhattan ball sizes over all centers in the constrained space.
ExtremalBall min_ball_constrained(int n, int k, std::int64_t r,
                                  int budget = kDefaultVectorScanBudget);
ExtremalBall max_ball_constrained(int n, int k, std::int64_t r,
                                  int budget = kDefaultVectorScanBudget);

} // namespace rankmod
