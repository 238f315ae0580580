#pragma once

namespace rankmod {

// Closed-form asymptotic rates, log|code| / log(n!) in the limit, for the
// regimes k = Theta(n^eps) (counting only) and additionally d = Theta(n^eps2)
// (error correction). All four are exact piecewise-linear surfaces.

/// Two-neighbor constraint alone: (1 + eps) / 2 for eps in [0, 1].
double capacity_single_sym(double eps);

/// Asymmetric constraint alone: the constraint costs nothing, rate 1.
double capacity_single_asym(double eps);

/// Two-neighbor constraint with minimum inversion distance:
///   1/2 + eps1/2             for eps2 <= 1
///   3/2 + eps1/2 - eps2      for 1 < eps2 <= 1 + eps1
///   1 - eps2/2               for 1 + eps1 < eps2 <= 2
/// Continuous across both seams.
double capacity_two_sym(double eps1, double eps2);

/// Asymmetric constraint with distance: 1 for eps2 <= 1, else 2 - eps2.
/// Independent of eps1.
double capacity_two_asym(double eps1, double eps2);

} // namespace rankmod
