#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "rankmod/constraints.hpp"
#include "rankmod/permutation.hpp"

using namespace rankmod;

namespace {

template <typename Pred>
std::set<std::vector<int>> violators(int n, Pred pred) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::set<std::vector<int>> out;
    do {
        if (!pred(std::span<const int>(v))) out.insert(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

} // namespace

TEST_CASE("single neighbor bounds every adjacent gap") {
    CHECK(satisfies_single_neighbor(Permutation({1, 2, 3, 4}), 1));
    CHECK(satisfies_single_neighbor(Permutation({4, 3, 2, 1}), 1));
    // The 1 -> 3 step has gap 2.
    CHECK_FALSE(satisfies_single_neighbor(Permutation({2, 1, 3, 4}), 1));
    CHECK_FALSE(satisfies_single_neighbor(Permutation({1, 3, 2, 4}), 1));
    CHECK(satisfies_single_neighbor(Permutation({1, 3, 2, 4}), 2));
}

TEST_CASE("two neighbor needs one close side per interior position") {
    // 3 sits between 1 and 4: the left gap is 2 but 1's right neighbor works.
    CHECK(satisfies_two_neighbor(Permutation({3, 1, 2, 4}), 1));
    CHECK_FALSE(satisfies_two_neighbor(Permutation({2, 4, 1, 3}), 1));
    CHECK(satisfies_two_neighbor(Permutation({2, 4, 1, 3}), 2));
}

TEST_CASE("asymmetric variant only limits drops") {
    // Rises of any size are fine; an interior value must have some neighbor
    // at most k above it.
    CHECK(satisfies_asym_two_neighbor(Permutation({1, 4, 2, 3}), 1));
    CHECK_FALSE(satisfies_asym_two_neighbor(Permutation({2, 3, 1, 4}), 1));
}

TEST_CASE("asymmetric violators at n=4 k=1 are exactly four words") {
    const auto bad = violators(4, [](std::span<const int> w) {
        return satisfies_asym_two_neighbor(w, 1);
    });
    const std::set<std::vector<int>> expected{
        {2, 3, 1, 4}, {2, 4, 1, 3}, {3, 1, 4, 2}, {4, 1, 3, 2}};
    CHECK(bad == expected);
}

TEST_CASE("short words satisfy everything") {
    for (int n = 1; n <= 2; ++n) {
        std::vector<int> v(static_cast<size_t>(n));
        std::iota(v.begin(), v.end(), 1);
        do {
            const Permutation p(v);
            for (auto kind : {ConstraintKind::single_neighbor, ConstraintKind::two_neighbor,
                              ConstraintKind::asym_two_neighbor})
                CHECK(satisfies(kind, p, 1));
        } while (std::next_permutation(v.begin(), v.end()));
    }
}

TEST_CASE("large k makes every constraint vacuous") {
    std::vector<int> v{4, 1, 5, 2, 3};
    do {
        const Permutation p(v);
        for (auto kind : {ConstraintKind::single_neighbor, ConstraintKind::two_neighbor,
                          ConstraintKind::asym_two_neighbor})
            CHECK(satisfies(kind, p, 5));
    } while (std::next_permutation(v.begin(), v.end()));
}

TEST_CASE("satisfied sets nest: single implies two implies asymmetric") {
    for (int n = 3; n <= 6; ++n) {
        for (int k = 1; k < n; ++k) {
            std::vector<int> v(static_cast<size_t>(n));
            std::iota(v.begin(), v.end(), 1);
            do {
                const std::span<const int> w(v);
                if (satisfies_single_neighbor(w, k)) CHECK(satisfies_two_neighbor(w, k));
                if (satisfies_two_neighbor(w, k)) CHECK(satisfies_asym_two_neighbor(w, k));
            } while (std::next_permutation(v.begin(), v.end()));
        }
    }
}

TEST_CASE("reversal and complement symmetries") {
    std::vector<int> v{1, 2, 3, 4, 5};
    do {
        auto rev = v;
        std::reverse(rev.begin(), rev.end());
        std::vector<int> comp;
        for (int x : v) comp.push_back(6 - x);
        const std::span<const int> w(v), wr(rev), wc(comp);
        // Both variants look at each interior value's two neighbors, so
        // reversing the word changes nothing.
        CHECK(satisfies_two_neighbor(w, 1) == satisfies_two_neighbor(wr, 1));
        CHECK(satisfies_asym_two_neighbor(w, 1) == satisfies_asym_two_neighbor(wr, 1));
        // Complementing values preserves gaps but flips their sign, which
        // only the symmetric variant tolerates.
        CHECK(satisfies_two_neighbor(w, 1) == satisfies_two_neighbor(wc, 1));
    } while (std::next_permutation(v.begin(), v.end()));
    // [2,3,1,4] breaks the asymmetric rule at k=1 but its complement [3,2,4,1]
    // does not: the sign flip matters.
    CHECK_FALSE(satisfies_asym_two_neighbor(Permutation({2, 3, 1, 4}), 1));
    CHECK(satisfies_asym_two_neighbor(Permutation({3, 2, 4, 1}), 1));
}

TEST_CASE("kind names round-trip") {
    for (auto kind : {ConstraintKind::single_neighbor, ConstraintKind::two_neighbor,
                      ConstraintKind::asym_two_neighbor})
        CHECK(constraint_kind_from_string(to_string(kind)) == kind);
    CHECK_THROWS_AS(constraint_kind_from_string("bogus"), std::invalid_argument);
}

TEST_CASE("k below one is rejected") {
    CHECK_THROWS_AS(satisfies(ConstraintKind::two_neighbor, Permutation::identity(3), 0),
                    std::invalid_argument);
}
