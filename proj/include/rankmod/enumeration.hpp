#pragma once

#include <functional>
#include <vector>

#include "rankmod/budget.hpp"
#include "rankmod/constraints.hpp"
#include "rankmod/numbers.hpp"
#include "rankmod/permutation.hpp"

namespace rankmod {

/// Streams exactly the permutations of S_n satisfying the constraint, in
/// lexicographic order of one-line notation. Backtracking places sigma(1),
/// sigma(2), ... and prunes a prefix as soon as the interior position behind
/// the frontier is irrecoverably violated.
void enumerate_constrained(int n, ConstraintKind kind, int k,
                           const std::function<void(const Permutation&)>& yield);

std::vector<Permutation> constrained_permutations(int n, ConstraintKind kind, int k);

/// Exact |{sigma in S_n : constraint holds}|. Refuses when n exceeds the
/// budget; never returns a silent partial count.
BigCount count_constrained(int n, ConstraintKind kind, int k,
                           int budget = kDefaultEnumerationBudget);

/// Same value, computed by partitioning the search forest by first symbol
/// across hardware threads and summing in symbol order.
BigCount count_constrained_parallel(int n, ConstraintKind kind, int k,
                                    int budget = kDefaultEnumerationBudget);

/// The difference map: x_1 = sigma(1), x_i = sigma(i) - sigma(i-1). Injective
/// on S_n; the preimage is recovered by partial sums.
std::vector<int> psi(const Permutation& sigma);

/// log2(4^(n-1) * k^(n/2) * n^(n/2+1)), the counting upper bound on |A_{n,k}|,
/// evaluated in the log domain. Requires 1 <= k < n.
double upper_bound_A_log(int n, int k);

/// log2(count) / log2(n!), the finite-n rate of a code set. count must be
/// positive; the full space S_1 (n = 1) has ratio 1 by convention.
double capacity_ratio(const BigCount& count, int n);

} // namespace rankmod
