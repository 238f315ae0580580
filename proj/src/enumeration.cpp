#include "rankmod/enumeration.hpp"

#include <cmath>
#include <cstdint>
#include <future>
#include <stdexcept>
#include <thread>

namespace rankmod {
namespace {

// True when appending v to the prefix keeps every fully determined interior
// position valid. The constraint at position p-1 involves p-2, p-1, p, so it
// becomes checkable exactly when sigma(p) is placed.
inline bool placement_ok(ConstraintKind kind, int k, const std::vector<int>& prefix, int v) {
    const size_t p = prefix.size() + 1;
    switch (kind) {
    case ConstraintKind::single_neighbor:
        return p < 2 || std::abs(prefix[p - 2] - v) <= k;
    case ConstraintKind::two_neighbor:
        return p < 3 || std::abs(prefix[p - 3] - prefix[p - 2]) <= k
                     || std::abs(prefix[p - 2] - v) <= k;
    case ConstraintKind::asym_two_neighbor:
        return p < 3 || prefix[p - 3] - prefix[p - 2] <= k
                     || v - prefix[p - 2] <= k;
    }
    return false;
}

void dfs_enumerate(int n, ConstraintKind kind, int k, std::vector<int>& prefix,
                   std::uint64_t used, const std::function<void(const Permutation&)>& yield) {
    if (static_cast<int>(prefix.size()) == n) {
        yield(Permutation::unchecked(prefix));
        return;
    }
    for (int v = 1; v <= n; ++v) {
        const std::uint64_t bit = std::uint64_t{1} << (v - 1);
        if ((used & bit) || !placement_ok(kind, k, prefix, v)) continue;
        prefix.push_back(v);
        dfs_enumerate(n, kind, k, prefix, used | bit, yield);
        prefix.pop_back();
    }
}

std::uint64_t dfs_count(int n, ConstraintKind kind, int k, std::vector<int>& prefix,
                        std::uint64_t used) {
    if (static_cast<int>(prefix.size()) == n) return 1;
    std::uint64_t total = 0;
    for (int v = 1; v <= n; ++v) {
        const std::uint64_t bit = std::uint64_t{1} << (v - 1);
        if ((used & bit) || !placement_ok(kind, k, prefix, v)) continue;
        prefix.push_back(v);
        total += dfs_count(n, kind, k, prefix, used | bit);
        prefix.pop_back();
    }
    return total;
}

void validate_args(int n, int k) {
    if (n < 1) throw std::invalid_argument("enumeration: n must be >= 1");
    if (n > 64) throw std::invalid_argument("enumeration: n too large for the bitmask state");
    if (k < 1) throw std::invalid_argument("enumeration: k must be >= 1");
}

} // namespace

void enumerate_constrained(int n, ConstraintKind kind, int k,
                           const std::function<void(const Permutation&)>& yield) {
    validate_args(n, k);
    std::vector<int> prefix;
    prefix.reserve(static_cast<size_t>(n));
    dfs_enumerate(n, kind, k, prefix, 0, yield);
}

std::vector<Permutation> constrained_permutations(int n, ConstraintKind kind, int k) {
    std::vector<Permutation> out;
    enumerate_constrained(n, kind, k, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

BigCount count_constrained(int n, ConstraintKind kind, int k, int budget) {
    validate_args(n, k);
    check_budget(n, budget, "enumeration");
    std::vector<int> prefix;
    prefix.reserve(static_cast<size_t>(n));
    return BigCount(dfs_count(n, kind, k, prefix, 0));
}

BigCount count_constrained_parallel(int n, ConstraintKind kind, int k, int budget) {
    validate_args(n, k);
    check_budget(n, budget, "enumeration");
    std::vector<std::future<std::uint64_t>> parts;
    parts.reserve(static_cast<size_t>(n));
    for (int first = 1; first <= n; ++first) {
        parts.push_back(std::async(std::launch::async, [n, kind, k, first] {
            std::vector<int> prefix{first};
            prefix.reserve(static_cast<size_t>(n));
            return dfs_count(n, kind, k, prefix, std::uint64_t{1} << (first - 1));
        }));
    }
    std::uint64_t total = 0;
    for (auto& f : parts) total += f.get(); // summed in first-symbol order
    return BigCount(total);
}

std::vector<int> psi(const Permutation& sigma) {
    std::vector<int> x;
    x.reserve(static_cast<size_t>(sigma.size()));
    x.push_back(sigma(1));
    for (int i = 2; i <= sigma.size(); ++i) x.push_back(sigma(i) - sigma(i - 1));
    return x;
}

double upper_bound_A_log(int n, int k) {
    if (k < 1 || k >= n) throw std::invalid_argument("upper_bound_A_log: need 1 <= k < n");
    const double nd = n;
    return 2.0 * (nd - 1.0) + 0.5 * nd * std::log2(static_cast<double>(k))
           + (0.5 * nd + 1.0) * std::log2(nd);
}

double capacity_ratio(const BigCount& count, int n) {
    if (count < 1) throw std::invalid_argument("capacity_ratio: count must be positive");
    const BigCount full = factorial(n);
    if (count > full) throw std::invalid_argument("capacity_ratio: count exceeds n!");
    if (count == full) return 1.0; // covers n = 1, where log2(n!) = 0
    return log2_big(count) / log2_big(full);
}

} // namespace rankmod
