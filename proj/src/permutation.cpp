#include "rankmod/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rankmod {

Permutation::Permutation(std::vector<int> values) : v_(std::move(values)) {
    if (v_.empty()) throw std::invalid_argument("permutation: empty input");
    const int n = size();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int x : v_) {
        if (x < 1 || x > n)
            throw std::invalid_argument("permutation: value " + std::to_string(x)
                                        + " out of range [1," + std::to_string(n) + "]");
        if (seen[static_cast<size_t>(x) - 1])
            throw std::invalid_argument("permutation: duplicate value " + std::to_string(x));
        seen[static_cast<size_t>(x) - 1] = 1;
    }
}

Permutation Permutation::unchecked(std::vector<int> values) {
    Permutation p;
    p.v_ = std::move(values);
    return p;
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return unchecked(std::move(v));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(v_.size());
    for (int i = 0; i < size(); ++i) inv[static_cast<size_t>(v_[static_cast<size_t>(i)]) - 1] = i + 1;
    return unchecked(std::move(inv));
}

std::vector<int> valleys(const Permutation& sigma) {
    std::vector<int> out;
    for (int i = 2; i + 1 <= sigma.size(); ++i)
        if (sigma(i - 1) > sigma(i) && sigma(i) < sigma(i + 1)) out.push_back(i);
    return out;
}

std::vector<int> ordered_run(std::vector<int> elements, RunDirection dir) {
    if (elements.empty()) throw std::invalid_argument("ordered_run: empty set");
    std::sort(elements.begin(), elements.end());
    if (dir == RunDirection::descending) std::reverse(elements.begin(), elements.end());
    return elements;
}

} // namespace rankmod
