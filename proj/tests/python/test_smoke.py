import math
from fractions import Fraction
from itertools import permutations

import pytest

import rankmod as rm


def test_counts_match_brute_force():
    for n in range(1, 7):
        brute = sum(
            1
            for p in permutations(range(1, n + 1))
            if all(abs(p[i + 1] - p[i]) <= 2 for i in range(n - 1))
        )
        assert rm.count_constrained(n, "single_neighbor", 2) == brute


def test_two_neighbor_reference_values():
    assert rm.count_constrained(4, "two_neighbor", 1) == 18
    assert rm.count_constrained(4, "asym_two_neighbor", 1) == 20
    assert rm.count_constrained_parallel(6, "two_neighbor", 1) == rm.count_constrained(
        6, "two_neighbor", 1
    )


def test_counts_are_python_ints():
    assert rm.count_constrained(10, "two_neighbor", 9) == math.factorial(10)
    # Values past the int64 range arrive intact.
    assert rm.ball_size_inversion(30, 435) == math.factorial(30)
    assert rm.csym_cardinality(40, 1) == math.factorial(20) * 2**20


def test_budget_is_enforced():
    with pytest.raises(rm.BudgetExceeded):
        rm.count_constrained(14, "two_neighbor", 1)
    with pytest.raises(rm.BudgetExceeded):
        rm.count_constrained(6, "two_neighbor", 1, budget=5)
    assert rm.count_constrained(6, "two_neighbor", 1, budget=6) == 170


def test_distances_and_sandwich():
    sigma, pi = [3, 1, 2, 4], [1, 2, 3, 4]
    assert rm.kendall_tau(sigma, pi) == 2
    assert rm.inversion_distance(sigma, pi) == 2
    assert rm.manhattan(sigma, pi) == 4
    d_m, d_i, holds = rm.check_sandwich(sigma, pi)
    assert (d_m, d_i, holds) == (4, 2, True)


def test_balls_follow_mahonian_row():
    row = rm.mahonian_row(4)
    assert row == [1, 3, 5, 6, 5, 3, 1]
    assert rm.ball_size_inversion(4, 2) == 1 + 3 + 5
    assert rm.ball_size_inversion(4, 100) == 24


def test_construction_roundtrip():
    members = rm.csym_members(4, 1)
    assert len(members) == rm.csym_cardinality(4, 1) == 8
    assert all(rm.satisfies("two_neighbor", m, 1) for m in members)

    sigma = rm.compose_blocks(3, 2, [1, 2, 1, 3, 2, 3], [[2, 1], [3, 4], [6, 5]])
    assert sigma == [2, 3, 1, 6, 4, 5]
    rho, blocks = rm.decompose_blocks(sigma, 3, 2)
    assert rho == [1, 2, 1, 3, 2, 3]
    assert blocks == [[2, 1], [3, 4], [6, 5]]


def test_asym_construction_and_bound():
    members = rm.casym_members(6)
    assert len(members) == 88
    assert all(rm.satisfies("asym_two_neighbor", m, 1) for m in members)
    bound = rm.casym_lower_bound(6)
    assert isinstance(bound, Fraction)
    assert len(members) >= bound


def test_codes_and_bounds():
    code = rm.greedy_code(4, 1, "two_neighbor", 2)
    assert len(code) == 8
    gv = rm.gv_lower_bound(4, 1, 2)
    assert gv == Fraction(9, 2)
    assert len(code) >= gv
    assert rm.max_code_size(4, 1, "two_neighbor", 2, "inversion") == 10


def test_capacity_surfaces():
    assert rm.capacity_single_sym(0.5) == 0.75
    assert rm.capacity_single_asym(0.5) == 1.0
    assert rm.capacity_two_sym(0.5, 1.2) == pytest.approx(0.55)
    assert rm.capacity_two_asym(0.9, 1.5) == pytest.approx(0.5)


def test_psi_and_valleys():
    assert rm.psi([3, 1, 2, 4, 5]) == [3, -2, 1, 2, 1]
    assert rm.valleys([5, 8, 10, 12, 6, 4, 3, 7, 15, 13, 9, 1, 2, 11, 14]) == [7, 12]
    assert rm.inverse([3, 1, 2]) == [2, 3, 1]
