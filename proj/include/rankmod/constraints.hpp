#pragma once

#include <cstdlib>
#include <span>
#include <string>

#include "rankmod/permutation.hpp"

namespace rankmod {

enum class ConstraintKind { single_neighbor, two_neighbor, asym_two_neighbor };

std::string to_string(ConstraintKind kind);
ConstraintKind constraint_kind_from_string(const std::string& name);

// The predicates are defined for every k >= 1; k >= n is simply trivially
// true, and the two-neighbor quantifier range [2, n-1] is empty for n <= 2.

/// |x(i) - x(i+1)| <= k for all adjacent pairs.
inline bool satisfies_single_neighbor(std::span<const int> x, int k) {
    for (size_t i = 1; i < x.size(); ++i)
        if (std::abs(x[i - 1] - x[i]) > k) return false;
    return true;
}

/// Every interior position has at least one neighbor within distance k:
/// for all i in [2, n-1], |x(i-1) - x(i)| <= k or |x(i) - x(i+1)| <= k.
inline bool satisfies_two_neighbor(std::span<const int> x, int k) {
    for (size_t i = 1; i + 1 < x.size(); ++i)
        if (std::abs(x[i - 1] - x[i]) > k && std::abs(x[i] - x[i + 1]) > k) return false;
    return true;
}

/// Forbids deep high-low-high dips: for all i in [2, n-1],
/// x(i-1) - x(i) <= k or x(i+1) - x(i) <= k.
inline bool satisfies_asym_two_neighbor(std::span<const int> x, int k) {
    for (size_t i = 1; i + 1 < x.size(); ++i)
        if (x[i - 1] - x[i] > k && x[i + 1] - x[i] > k) return false;
    return true;
}

inline bool satisfies_single_neighbor(const Permutation& s, int k) {
    return satisfies_single_neighbor(std::span<const int>(s.values()), k);
}
inline bool satisfies_two_neighbor(const Permutation& s, int k) {
    return satisfies_two_neighbor(std::span<const int>(s.values()), k);
}
inline bool satisfies_asym_two_neighbor(const Permutation& s, int k) {
    return satisfies_asym_two_neighbor(std::span<const int>(s.values()), k);
}

/// Vectors of H_n = [n]^n under the same interior-neighbor rule; repeats are
/// allowed, so a repeated value always counts as a gap of 0.
inline bool satisfies_two_neighbor_vector(std::span<const int> x, int k) {
    return satisfies_two_neighbor(x, k);
}

bool satisfies(ConstraintKind kind, const Permutation& s, int k);
bool satisfies(ConstraintKind kind, std::span<const int> x, int k);

} // namespace rankmod
