#include "rankmod/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace rankmod {
namespace {

void require_csym_feasible(int n, int k) {
    if (k < 1) throw std::invalid_argument("paired-block code: k must be >= 1");
    if (k % 2 == 0) throw std::invalid_argument("paired-block code: k must be odd");
    if (n < 2 || n % (k + 1) != 0)
        throw std::invalid_argument("paired-block code: n must be a positive multiple of k+1");
}

} // namespace

void enumerate_D(int ell, int m, const std::function<void(const MultiPermutation&)>& yield) {
    if (ell < 1) throw std::invalid_argument("enumerate_D: ell must be >= 1");
    if (m < 2 || m % 2 != 0) throw std::invalid_argument("enumerate_D: m must be even and >= 2");
    // Halving the pairs gives a bijection with the arrangements of
    // {1^(m/2), ..., ell^(m/2)}; expansion preserves lexicographic order.
    std::vector<int> tau;
    tau.reserve(static_cast<size_t>(ell * m / 2));
    for (int i = 1; i <= ell; ++i)
        for (int j = 0; j < m / 2; ++j) tau.push_back(i);
    std::vector<int> rho(static_cast<size_t>(ell * m));
    do {
        for (size_t t = 0; t < tau.size(); ++t) rho[2 * t] = rho[2 * t + 1] = tau[t];
        yield(MultiPermutation(ell, m, rho));
    } while (std::next_permutation(tau.begin(), tau.end()));
}

std::vector<MultiPermutation> all_D(int ell, int m) {
    std::vector<MultiPermutation> out;
    enumerate_D(ell, m, [&](const MultiPermutation& rho) { out.push_back(rho); });
    return out;
}

BigCount cardinality_P(int ell, int m) {
    if (ell < 1 || m < 1) throw std::invalid_argument("cardinality_P: need ell, m >= 1");
    BigCount denom = 1;
    const BigCount fm = factorial(m);
    for (int i = 0; i < ell; ++i) denom *= fm;
    return factorial(ell * m) / denom;
}

void for_each_csym_member(int n, int k, const std::function<void(const Permutation&)>& yield) {
    require_csym_feasible(n, k);
    const int m = k + 1;
    const int ell = n / m;

    // One ascending block permutation per value interval; the tuple of blocks
    // is advanced like an odometer via next_permutation per block.
    std::vector<std::vector<int>> blocks(static_cast<size_t>(ell));
    for (int i = 0; i < ell; ++i) {
        blocks[static_cast<size_t>(i)].resize(static_cast<size_t>(m));
        for (int j = 0; j < m; ++j) blocks[static_cast<size_t>(i)][static_cast<size_t>(j)] = i * m + j + 1;
    }

    enumerate_D(ell, m, [&](const MultiPermutation& rho) {
        for (auto& b : blocks) std::sort(b.begin(), b.end());
        while (true) {
            std::vector<BlockPermutation> gammas;
            gammas.reserve(static_cast<size_t>(ell));
            for (int i = 0; i < ell; ++i) gammas.emplace_back(i + 1, blocks[static_cast<size_t>(i)]);
            yield(compose(rho, gammas));
            // Advance the block tuple; stop after the last block wraps.
            int i = ell - 1;
            while (i >= 0 && !std::next_permutation(blocks[static_cast<size_t>(i)].begin(),
                                                    blocks[static_cast<size_t>(i)].end()))
                --i;
            if (i < 0) break;
        }
    });
}

Code build_Csym(int n, int k) {
    Code code;
    code.n = n;
    code.k = k;
    code.kind = ConstraintKind::two_neighbor;
    code.label = "Csym(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";
    for_each_csym_member(n, k, [&](const Permutation& p) { code.members.push_back(p); });
    std::sort(code.members.begin(), code.members.end());
    // Distinct representations compose to distinct permutations; a collision
    // here would be a generator bug, not a data condition.
    if (std::adjacent_find(code.members.begin(), code.members.end()) != code.members.end())
        throw std::logic_error("paired-block code: duplicate member generated");
    return code;
}

BigCount cardinality_Csym(int n, int k) {
    require_csym_feasible(n, k);
    const int ell = n / (k + 1);
    BigCount result = factorial(n / 2);
    const BigCount num = factorial(k + 1);
    const BigCount den = factorial((k + 1) / 2);
    for (int i = 0; i < ell; ++i) result = result * num / den;
    return result;
}

void enumerate_set_partitions(const std::vector<int>& ground, int r,
                              const std::function<void(const std::vector<std::vector<int>>&)>& yield) {
    const int g = static_cast<int>(ground.size());
    if (r < 1 || r > g) throw std::invalid_argument("enumerate_set_partitions: need 1 <= r <= |ground|");
    std::vector<int> sorted_ground = ground;
    std::sort(sorted_ground.begin(), sorted_ground.end());
    std::vector<std::vector<int>> parts(static_cast<size_t>(r));
    int empty = r;
    auto rec = [&](auto&& self, int idx) -> void {
        if (idx == g) {
            if (empty == 0) yield(parts);
            return;
        }
        if (empty > g - idx) return; // not enough elements left to fill every part
        for (int b = 0; b < r; ++b) {
            auto& part = parts[static_cast<size_t>(b)];
            if (part.empty()) --empty;
            part.push_back(sorted_ground[static_cast<size_t>(idx)]);
            self(self, idx + 1);
            part.pop_back();
            if (part.empty()) ++empty;
        }
    };
    rec(rec, 0);
}

BigCount stirling2(int ell, int r) {
    if (r < 0 || ell < 0) throw std::invalid_argument("stirling2: arguments must be nonnegative");
    if (r > ell) return 0; // more parts than elements

    std::vector<BigCount> row(static_cast<size_t>(r) + 1, 0);
    row[0] = 1; // S(0,0)
    for (int i = 1; i <= ell; ++i) {
        for (int j = std::min(i, r); j >= 1; --j) row[static_cast<size_t>(j)] = j * row[static_cast<size_t>(j)] + row[static_cast<size_t>(j) - 1];
        row[0] = 0;
    }
    return row[static_cast<size_t>(r)];
}

namespace {

// Assembles one codeword of the valley-controlled construction from an
// ordered partition (parts ascending) and the low-value permutation pi.
std::vector<int> assemble_cr_word(int n, int r, const std::vector<std::vector<int>>& parts,
                                  const std::vector<int>& pi) {
    std::vector<int> w;
    w.reserve(static_cast<size_t>(n));
    auto append_run = [&](const std::vector<int>& part, RunDirection dir) {
        auto run = ordered_run(part, dir);
        w.insert(w.end(), run.begin(), run.end());
    };
    if (r % 2 == 0) {
        // [I1 up, I2 down, pi(1), pi(2), I3 up, I4 down, ..., I(r-1) up, Ir down]
        for (int t = 0; t < r / 2; ++t) {
            append_run(parts[static_cast<size_t>(2 * t)], RunDirection::ascending);
            append_run(parts[static_cast<size_t>(2 * t) + 1], RunDirection::descending);
            if (t + 1 < r / 2) {
                w.push_back(pi[static_cast<size_t>(2 * t)]);
                w.push_back(pi[static_cast<size_t>(2 * t) + 1]);
            }
        }
    } else {
        // [I1 up, I2 down, pi(1), pi(2), ..., pi(r-1), Ir up]
        for (int t = 0; t < (r - 1) / 2; ++t) {
            append_run(parts[static_cast<size_t>(2 * t)], RunDirection::ascending);
            append_run(parts[static_cast<size_t>(2 * t) + 1], RunDirection::descending);
            w.push_back(pi[static_cast<size_t>(2 * t)]);
            w.push_back(pi[static_cast<size_t>(2 * t) + 1]);
        }
        append_run(parts[static_cast<size_t>(r) - 1], RunDirection::ascending);
    }
    return w;
}

void for_each_cr_raw(int n, int r, const std::function<void(const Permutation&)>& yield) {
    if (n < 1) throw std::invalid_argument("valley construction: n must be >= 1");
    if (r < 1 || r > n / 2)
        throw std::invalid_argument("valley construction: need 1 <= r <= floor(n/2)");
    const int ground_lo = (r % 2 == 0) ? r - 1 : r;
    const int pi_len = ground_lo - 1;
    std::vector<int> ground;
    for (int v = ground_lo; v <= n; ++v) ground.push_back(v);

    std::vector<std::vector<int>> pis;
    if (pi_len == 0) {
        pis.push_back({});
    } else {
        for (const Permutation& p : build_Csym(pi_len, 1).members) pis.push_back(p.values());
    }

    enumerate_set_partitions(ground, r, [&](const std::vector<std::vector<int>>& parts) {
        for (const auto& pi : pis)
            yield(Permutation::unchecked(assemble_cr_word(n, r, parts, pi)));
    });
}

} // namespace

void enumerate_Cr_raw(int n, int r, const std::function<void(const Permutation&)>& yield) {
    for_each_cr_raw(n, r, yield);
}

Code build_Cr(int n, int r) {
    Code code;
    code.n = n;
    code.k = 1;
    code.kind = ConstraintKind::asym_two_neighbor;
    code.label = "Cr(r=" + std::to_string(r) + ")";
    for_each_cr_raw(n, r, [&](const Permutation& p) { code.members.push_back(p); });
    std::sort(code.members.begin(), code.members.end());
    code.members.erase(std::unique(code.members.begin(), code.members.end()), code.members.end());
    return code;
}

Code build_Casym(int n) {
    if (n < 1) throw std::invalid_argument("valley construction: n must be >= 1");
    Code code;
    code.n = n;
    code.k = 1;
    code.kind = ConstraintKind::asym_two_neighbor;
    code.label = "Casym(n=" + std::to_string(n) + ")";
    for (int r = 1; r <= n / 2; ++r)
        for_each_cr_raw(n, r, [&](const Permutation& p) { code.members.push_back(p); });
    std::sort(code.members.begin(), code.members.end());
    code.members.erase(std::unique(code.members.begin(), code.members.end()), code.members.end());
    return code;
}

Rational lower_bound_Casym(int n) {
    if (n < 2) throw std::invalid_argument("lower_bound_Casym: n must be >= 2");
    Rational total = 0;
    for (int r = 1; r <= n / 2; ++r) {
        const int m = (r - 1) / 2;
        total += Rational(factorial(r) * stirling2(n - 2 * m, r) * factorial(m), 2);
    }
    return total;
}

} // namespace rankmod
