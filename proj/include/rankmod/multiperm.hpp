#pragma once

#include <utility>
#include <vector>

#include "rankmod/permutation.hpp"

namespace rankmod {

/// An arrangement of the balanced multi-set {1^m, 2^m, ..., ell^m}.
/// The occurrence index r of position j (the entry is the r-th copy of its
/// symbol, left to right) is materialized at construction: composition and
/// decomposition are the hot paths of code generation.
class MultiPermutation {
public:
    MultiPermutation(int ell, int m, std::vector<int> values);

    int ell() const { return ell_; }
    int m() const { return m_; }
    int size() const { return static_cast<int>(v_.size()); }

    /// rho(j), 1-based.
    int symbol(int j) const { return v_[static_cast<size_t>(j) - 1]; }
    /// The (i, r) pair with rho(j) = i_r, 1-based.
    std::pair<int, int> occurrence(int j) const {
        return {v_[static_cast<size_t>(j) - 1], occ_[static_cast<size_t>(j) - 1]};
    }

    const std::vector<int>& values() const { return v_; }

    bool operator==(const MultiPermutation& o) const { return ell_ == o.ell_ && m_ == o.m_ && v_ == o.v_; }

private:
    int ell_;
    int m_;
    std::vector<int> v_;
    std::vector<int> occ_;
};

/// A bijection on the value interval [(i-1)m+1, i*m], stored in one-line
/// notation: perm(r) is the r-th entry.
class BlockPermutation {
public:
    BlockPermutation(int block_index, std::vector<int> perm);

    int block_index() const { return i_; }
    int m() const { return static_cast<int>(p_.size()); }
    /// gamma_i(r), 1-based r in [m].
    int operator()(int r) const { return p_[static_cast<size_t>(r) - 1]; }
    const std::vector<int>& values() const { return p_; }

    bool operator==(const BlockPermutation& o) const { return i_ == o.i_ && p_ == o.p_; }

private:
    int i_;
    std::vector<int> p_;
};

/// alpha(j) = gamma_i(r) where rho(j) = i_r. The result is a permutation of
/// [ell*m]; distinct (rho, gammas) give distinct results.
Permutation compose(const MultiPermutation& rho, const std::vector<BlockPermutation>& gammas);

/// The unique preimage of sigma under compose for block shape (ell, m):
/// position j belongs to block ceil(sigma(j)/m); no search involved.
std::pair<MultiPermutation, std::vector<BlockPermutation>>
decompose(const Permutation& sigma, int ell, int m);

} // namespace rankmod
