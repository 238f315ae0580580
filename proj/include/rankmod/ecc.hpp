#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rankmod/budget.hpp"
#include "rankmod/constructions.hpp"
#include "rankmod/metrics.hpp"
#include "rankmod/numbers.hpp"
#include "rankmod/permutation.hpp"

namespace rankmod {

enum class CodeMetric { inversion, kendall };

std::string to_string(CodeMetric metric);
CodeMetric code_metric_from_string(const std::string& name);

std::int64_t code_distance(CodeMetric metric, const Permutation& a, const Permutation& b);

/// A code carrying a minimum-distance claim under a declared metric.
struct ECCCode {
    Code base;
    int min_distance_claim = 1;
    CodeMetric metric = CodeMetric::inversion;
};

/// Scans the universe in its given order (lexicographic for all generators
/// here), admitting a word iff it is at distance >= d from every admitted
/// member. For the inversion metric the result is guaranteed to reach
/// |universe| / b_I(n, d-1) in size.
ECCCode greedy_code(const std::vector<Permutation>& universe, int d, CodeMetric metric);

/// Convenience: greedy over the full constrained set of S_n, labeled with it.
ECCCode greedy_over_constrained(int n, int k, ConstraintKind kind, int d, CodeMetric metric,
                                int budget = kDefaultEnumerationBudget);

struct DistanceViolation {
    Permutation a;
    Permutation b;
    std::int64_t distance;
};

/// Exact all-pairs re-verification of the distance claim; returns the first
/// violating pair if any.
std::optional<DistanceViolation> verify_min_distance(const ECCCode& code);

/// |A_{n,k}| / b_I(n, d-1): the ball-covering existence bound matched by the
/// greedy construction under the inversion metric.
Rational gv_lower_bound(int n, int k, int d, int budget = kDefaultEnumerationBudget);

struct BoundReport {
    Rational value;
    std::vector<int> extremal_center; // center attaining the extremal ball
};

/// Packing upper bound over the constrained vector space: |script A_{n,k}|
/// divided by the smallest Manhattan ball of radius floor((d-1)/2) around a
/// member, balls taken within the space.
BoundReport sphere_packing_bound(int n, int k, int d,
                                 int enumeration_budget = kDefaultEnumerationBudget,
                                 int scan_budget = kDefaultVectorScanBudget);

/// Covering lower bound: |A_{n,k}| divided by the largest Manhattan ball of
/// radius 2d-1 within the constrained vector space.
BoundReport gv_manhattan_lower_bound(int n, int k, int d,
                                     int enumeration_budget = kDefaultEnumerationBudget,
                                     int scan_budget = kDefaultVectorScanBudget);

/// The true maximum code size, by exhaustive branch-and-bound maximum-clique
/// search over the compatibility graph. Exponential; intended for n <= 5.
size_t max_code_size(int n, int k, ConstraintKind kind, int d, CodeMetric metric,
                     int budget = kDefaultEnumerationBudget);

} // namespace rankmod
