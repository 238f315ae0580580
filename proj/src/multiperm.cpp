#include "rankmod/multiperm.hpp"

#include <stdexcept>
#include <string>

namespace rankmod {

MultiPermutation::MultiPermutation(int ell, int m, std::vector<int> values)
    : ell_(ell), m_(m), v_(std::move(values)) {
    if (ell < 1 || m < 1) throw std::invalid_argument("multi-permutation: ell and m must be positive");
    if (static_cast<int>(v_.size()) != ell * m)
        throw std::invalid_argument("multi-permutation: expected " + std::to_string(ell * m) + " entries");
    std::vector<int> count(static_cast<size_t>(ell), 0);
    occ_.reserve(v_.size());
    for (int x : v_) {
        if (x < 1 || x > ell)
            throw std::invalid_argument("multi-permutation: symbol " + std::to_string(x) + " out of [1,ell]");
        occ_.push_back(++count[static_cast<size_t>(x) - 1]);
    }
    for (int i = 0; i < ell; ++i)
        if (count[static_cast<size_t>(i)] != m)
            throw std::invalid_argument("multi-permutation: symbol " + std::to_string(i + 1)
                                        + " occurs " + std::to_string(count[static_cast<size_t>(i)])
                                        + " times, expected " + std::to_string(m));
}

BlockPermutation::BlockPermutation(int block_index, std::vector<int> perm)
    : i_(block_index), p_(std::move(perm)) {
    if (block_index < 1) throw std::invalid_argument("block permutation: index must be positive");
    if (p_.empty()) throw std::invalid_argument("block permutation: empty");
    const int m = static_cast<int>(p_.size());
    const int lo = (i_ - 1) * m + 1;
    std::vector<char> seen(p_.size(), 0);
    for (int x : p_) {
        if (x < lo || x >= lo + m)
            throw std::invalid_argument("block permutation: value " + std::to_string(x)
                                        + " outside interval [" + std::to_string(lo) + ","
                                        + std::to_string(lo + m - 1) + "]");
        if (seen[static_cast<size_t>(x - lo)])
            throw std::invalid_argument("block permutation: duplicate value " + std::to_string(x));
        seen[static_cast<size_t>(x - lo)] = 1;
    }
}

Permutation compose(const MultiPermutation& rho, const std::vector<BlockPermutation>& gammas) {
    const int ell = rho.ell();
    if (static_cast<int>(gammas.size()) != ell)
        throw std::invalid_argument("compose: expected one block permutation per block");
    for (int i = 1; i <= ell; ++i) {
        if (gammas[static_cast<size_t>(i) - 1].block_index() != i)
            throw std::invalid_argument("compose: block " + std::to_string(i) + " missing or out of order");
        if (gammas[static_cast<size_t>(i) - 1].m() != rho.m())
            throw std::invalid_argument("compose: block size mismatch");
    }
    std::vector<int> out;
    out.reserve(static_cast<size_t>(rho.size()));
    for (int j = 1; j <= rho.size(); ++j) {
        auto [i, r] = rho.occurrence(j);
        out.push_back(gammas[static_cast<size_t>(i) - 1](r));
    }
    return Permutation::unchecked(std::move(out));
}

std::pair<MultiPermutation, std::vector<BlockPermutation>>
decompose(const Permutation& sigma, int ell, int m) {
    if (ell < 1 || m < 1 || sigma.size() != ell * m)
        throw std::invalid_argument("decompose: need n = ell*m");
    std::vector<int> symbols;
    symbols.reserve(static_cast<size_t>(sigma.size()));
    std::vector<std::vector<int>> blocks(static_cast<size_t>(ell));
    for (int j = 1; j <= sigma.size(); ++j) {
        const int i = (sigma(j) + m - 1) / m; // block by value interval
        symbols.push_back(i);
        blocks[static_cast<size_t>(i) - 1].push_back(sigma(j));
    }
    std::vector<BlockPermutation> gammas;
    gammas.reserve(static_cast<size_t>(ell));
    for (int i = 1; i <= ell; ++i) gammas.emplace_back(i, std::move(blocks[static_cast<size_t>(i) - 1]));
    return {MultiPermutation(ell, m, std::move(symbols)), std::move(gammas)};
}

} // namespace rankmod
