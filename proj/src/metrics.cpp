#include "rankmod/metrics.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "rankmod/constraints.hpp"

namespace rankmod {
namespace {

// Inversions of an integer sequence, counted during a merge sort.
std::int64_t count_inversions(std::vector<int>& a) {
    const size_t n = a.size();
    std::vector<int> buf(n);
    std::int64_t inv = 0;
    for (size_t width = 1; width < n; width *= 2) {
        for (size_t lo = 0; lo + width < n; lo += 2 * width) {
            const size_t mid = lo + width;
            const size_t hi = std::min(lo + 2 * width, n);
            size_t i = lo, j = mid, out = lo;
            while (i < mid && j < hi) {
                if (a[i] <= a[j]) buf[out++] = a[i++];
                else {
                    inv += static_cast<std::int64_t>(mid - i);
                    buf[out++] = a[j++];
                }
            }
            while (i < mid) buf[out++] = a[i++];
            while (j < hi) buf[out++] = a[j++];
            std::copy(buf.begin() + static_cast<std::ptrdiff_t>(lo),
                      buf.begin() + static_cast<std::ptrdiff_t>(hi),
                      a.begin() + static_cast<std::ptrdiff_t>(lo));
        }
    }
    return inv;
}

void require_same_length(const Permutation& a, const Permutation& b, const char* who) {
    if (a.size() != b.size()) throw std::invalid_argument(std::string(who) + ": length mismatch");
}

} // namespace

std::int64_t kendall_tau(const Permutation& sigma, const Permutation& pi) {
    require_same_length(sigma, pi, "kendall_tau");
    const int n = sigma.size();
    std::vector<int> pos(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) pos[static_cast<size_t>(pi(i)) - 1] = i;
    // Rank each value of sigma by its position in pi; adjacent swaps fix one
    // out-of-order value pair each, so the minimum count is the inversions.
    std::vector<int> w(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) w[static_cast<size_t>(i) - 1] = pos[static_cast<size_t>(sigma(i)) - 1];
    return count_inversions(w);
}

std::int64_t inversion_distance(const Permutation& sigma, const Permutation& pi) {
    require_same_length(sigma, pi, "inversion_distance");
    const int n = sigma.size();
    // d_K(sigma^-1, pi^-1) without materializing the inverses: the word
    // u(pi(i)) = sigma(i) has exactly that many inversions.
    std::vector<int> u(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) u[static_cast<size_t>(pi(i)) - 1] = sigma(i);
    return count_inversions(u);
}

std::int64_t manhattan(std::span<const int> x, std::span<const int> y) {
    if (x.size() != y.size()) throw std::invalid_argument("manhattan: length mismatch");
    std::int64_t d = 0;
    for (size_t i = 0; i < x.size(); ++i) d += std::abs(x[i] - y[i]);
    return d;
}

std::int64_t manhattan(const Permutation& x, const Permutation& y) {
    return manhattan(std::span<const int>(x.values()), std::span<const int>(y.values()));
}

std::vector<BigCount> mahonian_row(int n) {
    if (n < 1) throw std::invalid_argument("mahonian_row: n must be >= 1");
    std::vector<BigCount> row{1};
    for (int m = 2; m <= n; ++m) {
        // Convolve with 1 + q + ... + q^(m-1) via a sliding window sum.
        std::vector<BigCount> next(row.size() + static_cast<size_t>(m) - 1);
        BigCount window = 0;
        for (size_t j = 0; j < next.size(); ++j) {
            if (j < row.size()) window += row[j];
            if (j >= static_cast<size_t>(m) && j - static_cast<size_t>(m) < row.size())
                window -= row[j - static_cast<size_t>(m)];
            next[j] = window;
        }
        row = std::move(next);
    }
    return row;
}

BigCount ball_size_inversion(int n, std::int64_t r) {
    if (r < 0) throw std::invalid_argument("ball_size_inversion: negative radius");
    const auto row = mahonian_row(n);
    const std::int64_t max_r = static_cast<std::int64_t>(row.size()) - 1;
    BigCount total = 0;
    for (std::int64_t i = 0; i <= std::min(r, max_r); ++i) total += row[static_cast<size_t>(i)];
    return total;
}

SandwichReport check_sandwich(const Permutation& sigma, const Permutation& pi) {
    require_same_length(sigma, pi, "check_sandwich");
    const std::int64_t dm = manhattan(sigma, pi);
    const std::int64_t di = inversion_distance(sigma, pi);
    return {dm, di, dm <= 2 * di && di <= dm};
}

namespace {

// Shared DFS over [n]^n with the two-neighbor pruning rule. When `center` is
// nonempty, also prunes on the partial Manhattan distance exceeding `radius`.
struct VectorScan {
    int n;
    int k;                      // k = 0 disables the constraint (plain H_n)
    std::span<const int> center;
    std::int64_t radius = 0;

    std::uint64_t count = 0;
    std::vector<int> x;

    void run() {
        x.clear();
        x.reserve(static_cast<size_t>(n));
        dfs(0);
    }

    void dfs(std::int64_t used_dist) {
        const size_t p = x.size();
        if (p == static_cast<size_t>(n)) {
            ++count;
            return;
        }
        for (int v = 1; v <= n; ++v) {
            std::int64_t nd = used_dist;
            if (!center.empty()) {
                nd += std::abs(v - center[p]);
                if (nd > radius) continue;
            }
            if (k > 0 && p >= 2 && std::abs(x[p - 2] - x[p - 1]) > k && std::abs(x[p - 1] - v) > k)
                continue;
            x.push_back(v);
            dfs(nd);
            x.pop_back();
        }
    }
};

} // namespace

BigCount count_two_neighbor_vectors(int n, int k, int budget) {
    if (n < 1 || k < 1) throw std::invalid_argument("count_two_neighbor_vectors: need n, k >= 1");
    check_budget(n, budget, "vector scan");
    VectorScan scan{.n = n, .k = k, .center = {}, .radius = 0, .count = 0, .x = {}};
    scan.run();
    return BigCount(scan.count);
}

BigCount ball_manhattan_hn(std::span<const int> center, std::int64_t r, int budget) {
    const int n = static_cast<int>(center.size());
    if (n < 1) throw std::invalid_argument("ball_manhattan_hn: empty center");
    if (r < 0) throw std::invalid_argument("ball_manhattan_hn: negative radius");
    check_budget(n, budget, "vector scan");
    VectorScan scan{.n = n, .k = 0, .center = center, .radius = r, .count = 0, .x = {}};
    scan.run();
    return BigCount(scan.count);
}

BigCount ball_manhattan_constrained(std::span<const int> center, int k, std::int64_t r, int budget) {
    const int n = static_cast<int>(center.size());
    if (n < 1 || k < 1) throw std::invalid_argument("ball_manhattan_constrained: need n, k >= 1");
    if (r < 0) throw std::invalid_argument("ball_manhattan_constrained: negative radius");
    check_budget(n, budget, "vector scan");
    VectorScan scan{.n = n, .k = k, .center = center, .radius = r, .count = 0, .x = {}};
    scan.run();
    return BigCount(scan.count);
}

namespace {

// Streams every vector of the constrained space in lexicographic order.
void for_each_constrained_vector(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> x;
    x.reserve(static_cast<size_t>(n));
    auto dfs = [&](auto&& self) -> void {
        const size_t p = x.size();
        if (p == static_cast<size_t>(n)) {
            fn(x);
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (p >= 2 && std::abs(x[p - 2] - x[p - 1]) > k && std::abs(x[p - 1] - v) > k) continue;
            x.push_back(v);
            self(self);
            x.pop_back();
        }
    };
    dfs(dfs);
}

ExtremalBall extremal_ball(int n, int k, std::int64_t r, int budget, bool want_min) {
    if (n < 1 || k < 1) throw std::invalid_argument("extremal ball: need n, k >= 1");
    if (r < 0) throw std::invalid_argument("extremal ball: negative radius");
    check_budget(n, budget, "vector scan");
    ExtremalBall best;
    for_each_constrained_vector(n, k, [&](const std::vector<int>& c) {
        BigCount size = ball_manhattan_constrained(c, k, r, budget);
        const bool better = best.center.empty()
                            || (want_min ? size < best.size : size > best.size);
        if (better) best = {std::move(size), c};
    });
    return best;
}

} // namespace

ExtremalBall min_ball_constrained(int n, int k, std::int64_t r, int budget) {
    return extremal_ball(n, k, r, budget, /*want_min=*/true);
}

ExtremalBall max_ball_constrained(int n, int k, std::int64_t r, int budget) {
    return extremal_ball(n, k, r, budget, /*want_min=*/false);
}

} // namespace rankmod
