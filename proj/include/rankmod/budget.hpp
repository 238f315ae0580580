#pragma once

#include <stdexcept>
#include <string>

namespace rankmod {

// Exhaustive routines refuse outright rather than return a silent partial
// result when n exceeds the configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(int n, int limit, const std::string& what_domain)
        : std::runtime_error("n=" + std::to_string(n) + " exceeds the " + what_domain
                             + " budget of n<=" + std::to_string(limit)),
          n_(n), limit_(limit) {}
    int n() const { return n_; }
    int limit() const { return limit_; }

private:
    int n_;
    int limit_;
};

// Default ceiling for permutation enumeration (13! worst case ~ 6.2e9 nodes;
// pruning keeps constrained counts far cheaper).
inline constexpr int kDefaultEnumerationBudget = 13;

// Default ceiling for exhaustive scans of H_n = [n]^n (8^8 ~ 1.7e7).
inline constexpr int kDefaultVectorScanBudget = 8;

inline void check_budget(int n, int limit, const char* domain) {
    if (n > limit) throw BudgetExceeded(n, limit, domain);
}

} // namespace rankmod
