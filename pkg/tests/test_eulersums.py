"""Euler-sum tests: DP tables against brute-force enumeration oracles."""

import itertools
import math
from fractions import Fraction

import pytest

from trigint import central_tail, central_tail_float, nested_sum, tail_coupled_sum
from trigint.pipoly import binomial


# --- independent oracles: exhaustive enumeration over nondecreasing tuples ---

def brute_nested(kind: str, depth: int, bound: int) -> Fraction:
    if depth == 0:
        return Fraction(1)
    lo = 1 if kind == "even" else 0
    total = Fraction(0)
    for tup in itertools.combinations_with_replacement(range(lo, bound + 1), depth):
        prod = Fraction(1)
        for k in tup:
            prod *= Fraction(1, k * k) if kind == "even" else Fraction(1, (2 * k + 1) ** 2)
        total += prod
    return total


def brute_tail(kind: str, m: int) -> Fraction:
    if kind == "even":
        return sum(
            (Fraction(4**k, k * k * binomial(2 * k, k)) for k in range(1, m + 1)), Fraction(0)
        )
    return sum(
        (Fraction(binomial(2 * k, k), 4**k * (2 * k + 1)) for k in range(0, m + 1)), Fraction(0)
    )


def brute_coupled(kind: str, depth: int, bound: int, attach: str) -> Fraction:
    if depth == 0:
        if kind == "even" and bound == 0:
            return Fraction(0)
        return brute_tail(kind, bound)
    lo = 1 if kind == "even" else 0
    total = Fraction(0)
    for tup in itertools.combinations_with_replacement(range(lo, bound + 1), depth):
        prod = Fraction(1)
        for k in tup:
            prod *= Fraction(1, k * k) if kind == "even" else Fraction(1, (2 * k + 1) ** 2)
        anchor = tup[0] if attach == "smallest" else tup[-1]
        tail = Fraction(0) if (kind == "even" and anchor == 0) else brute_tail(kind, anchor)
        total += prod * tail
    return total


class TestNestedSum:
    def test_empty_product(self):
        assert nested_sum("even", 0, 5) == 1
        assert nested_sum("odd", 0, 3) == 1

    def test_small_cases_by_enumeration(self):
        # (1,1), (1,2), (2,2) -> 1 + 1/4 + 1/16
        assert nested_sum("even", 2, 2) == Fraction(21, 16)
        # k1 in {0, 1} -> 1 + 1/9
        assert nested_sum("odd", 1, 1) == Fraction(10, 9)

    def test_zero_bound(self):
        assert nested_sum("even", 3, 0) == 0
        assert nested_sum("odd", 3, 0) == 1  # the all-zero tuple

    def test_against_brute_force(self):
        for kind in ("even", "odd"):
            for j in range(4):
                for n in range(7):
                    assert nested_sum(kind, j, n) == brute_nested(kind, j, n), (kind, j, n)

    def test_monotone_in_bound(self):
        for kind in ("even", "odd"):
            for j in range(4):
                prev = nested_sum(kind, j, 0)
                for n in range(1, 10):
                    cur = nested_sum(kind, j, n)
                    assert cur >= prev
                    prev = cur

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            nested_sum("weird", 1, 1)
        with pytest.raises(ValueError):
            nested_sum("even", -1, 1)


class TestCentralTail:
    def test_frozen_values(self):
        assert central_tail("even", 2) == Fraction(8, 3)  # 2 + 2/3
        assert central_tail("odd", 1) == Fraction(7, 6)  # 1 + 1/6
        assert central_tail("odd", 0) == 1

    def test_even_needs_positive_bound(self):
        with pytest.raises(ValueError):
            central_tail("even", 0)

    def test_against_direct_sum(self):
        for m in range(1, 30):
            assert central_tail("even", m) == brute_tail("even", m)
            assert central_tail("odd", m) == brute_tail("odd", m)

    def test_float_agrees_with_exact(self):
        for kind in ("even", "odd"):
            for m in (1, 2, 7, 50, 200, 512):
                exact = float(central_tail(kind, m))
                assert abs(central_tail_float(kind, m) - exact) < 1e-12

    def test_limit_error_shrinks_like_sqrt(self):
        # |partial - pi^2/2| ~ 2 sqrt(pi) / sqrt(m): quadrupling m halves it
        target = math.pi**2 / 2
        e1 = abs(central_tail_float("even", 10_000) - target)
        e2 = abs(central_tail_float("even", 40_000) - target)
        assert e2 < 0.6 * e1
        assert e1 < 2.2 * math.sqrt(math.pi) / math.sqrt(10_000)


class TestTailCoupled:
    def test_frozen_values(self):
        # depth 1, bound 1: E(1)/1 = 2
        assert tail_coupled_sum("even", 1, 1, "smallest") == 2
        # O(0)/1 + O(1)/9 = 1 + 7/54
        assert tail_coupled_sum("odd", 1, 1, "smallest") == Fraction(61, 54)

    def test_degenerate_depth_zero(self):
        assert tail_coupled_sum("even", 0, 0) == 0
        assert tail_coupled_sum("even", 0, 2) == Fraction(8, 3)
        assert tail_coupled_sum("odd", 0, 0) == 1

    def test_against_brute_force(self):
        for kind in ("even", "odd"):
            for attach in ("smallest", "largest"):
                for depth in range(4):
                    for bound in range(6):
                        assert tail_coupled_sum(kind, depth, bound, attach) == brute_coupled(
                            kind, depth, bound, attach
                        ), (kind, attach, depth, bound)

    def test_attach_modes_differ(self):
        # the two couplings are genuinely different sums
        assert tail_coupled_sum("even", 2, 3, "smallest") != tail_coupled_sum(
            "even", 2, 3, "largest"
        )

    def test_bad_attach(self):
        with pytest.raises(ValueError):
            tail_coupled_sum("even", 1, 1, "middle")
