#pragma once

#include <compare>
#include <string>
#include <vector>

namespace rankmod {

/// A permutation of [n] in one-line notation. sigma(i) is the rank of cell i;
/// positions and values are 1-based everywhere in the public interface.
class Permutation {
public:
    /// Validates that `values` is a bijection on [n]; rejects empty input,
    /// duplicates and out-of-range entries.
    explicit Permutation(std::vector<int> values);

    /// Trusted fast path for generators that construct bijections by design.
    static Permutation unchecked(std::vector<int> values);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(v_.size()); }

    /// sigma(i), 1-based.
    int operator()(int i) const { return v_[static_cast<size_t>(i) - 1]; }

    const std::vector<int>& values() const { return v_; }

    Permutation inverse() const;

    bool operator==(const Permutation&) const = default;
    // Lexicographic order of one-line notation.
    auto operator<=>(const Permutation& o) const { return v_ <=> o.v_; }

private:
    Permutation() = default;
    std::vector<int> v_;
};

/// Positions i in [2, n-1] with sigma(i-1) > sigma(i) < sigma(i+1), sorted.
std::vector<int> valleys(const Permutation& sigma);

enum class RunDirection { ascending, descending };

/// The elements of a nonempty set in ascending or descending order.
std::vector<int> ordered_run(std::vector<int> elements, RunDirection dir);

} // namespace rankmod
