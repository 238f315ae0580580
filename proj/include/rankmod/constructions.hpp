#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rankmod/constraints.hpp"
#include "rankmod/multiperm.hpp"
#include "rankmod/numbers.hpp"
#include "rankmod/permutation.hpp"

namespace rankmod {

/// A set of distinct length-n permutations tied to the constraint family it
/// was built for. Members are kept in lexicographic order.
struct Code {
    int n = 0;
    int k = 0;
    ConstraintKind kind = ConstraintKind::two_neighbor;
    std::string label;
    std::vector<Permutation> members;

    size_t size() const { return members.size(); }
};

/// Multi-permutations over {1^m, ..., ell^m} whose entries are equal in
/// consecutive pairs (positions 2j-1 and 2j). Yielded in lexicographic order;
/// there are exactly |P_{ell,m/2}| = (ell*m/2)! / ((m/2)!)^ell of them.
void enumerate_D(int ell, int m, const std::function<void(const MultiPermutation&)>& yield);
std::vector<MultiPermutation> all_D(int ell, int m);

/// (ell*m)! / (m!)^ell, the number of arrangements of the balanced multi-set.
BigCount cardinality_P(int ell, int m);

/// The paired-block code: for odd k and n = ell*(k+1), all compositions
/// rho(gamma_1, ..., gamma_ell) with rho in D_{ell,k+1} and gamma_i ranging
/// over the bijections of the i-th value block. Every member satisfies the
/// two-neighbor k-constraint.
Code build_Csym(int n, int k);

/// Streams the same members without materializing the code; order follows the
/// generator nesting, not one-line lexicographic order.
void for_each_csym_member(int n, int k, const std::function<void(const Permutation&)>& yield);

/// Exact closed form (n/2)! * (k+1)!^ell / (((k+1)/2)!)^ell for |build_Csym|.
BigCount cardinality_Csym(int n, int k);

/// All ordered sequences of r disjoint nonempty sets covering `ground`
/// (r! * S(|ground|, r) of them). Parts are emitted with ascending elements.
void enumerate_set_partitions(const std::vector<int>& ground, int r,
                              const std::function<void(const std::vector<std::vector<int>>&)>& yield);

/// Stirling number of the second kind via S(l,r) = r*S(l-1,r) + S(l-1,r-1).
BigCount stirling2(int ell, int r);

/// One layer of the valley-controlled construction: ascending/descending runs
/// over an ordered partition, interleaved with a paired-block permutation of
/// the low values. Members have exactly floor((r-1)/2) valleys.
Code build_Cr(int n, int r);

/// Same generation including every (partition, pi) representation, duplicates
/// and all; used to bound the representation multiplicity.
void enumerate_Cr_raw(int n, int r, const std::function<void(const Permutation&)>& yield);

/// Union of build_Cr over r = 1..floor(n/2), deduplicated. Every member
/// satisfies the asymmetric two-neighbor 1-constraint.
Code build_Casym(int n);

/// Exact rational lower bound on |build_Casym(n)|:
/// sum over r of (1/2) * r! * S(n - 2*floor((r-1)/2), r) * floor((r-1)/2)!.
Rational lower_bound_Casym(int n);

} // namespace rankmod
