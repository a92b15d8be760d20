from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

import pytest
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from arrgroups.nilq.snf import (AbelianInvariants, abelian_invariants, diagonal, element_order,
                                invariant_factors, smith_normal_form)


def _det(rows):
    m = [[Fraction(x) for x in r] for r in rows]
    n, det = len(m), Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c]), None)
        if p is None:
            return 0
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return int(det)


def determinantal_divisors(m):
    """Invariant factors as ratios of gcds of k x k minors (independent oracle)."""
    rows, cols = len(m), len(m[0])
    out, prev = [], 1
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for rs in itertools.combinations(range(rows), k):
            for cs in itertools.combinations(range(cols), k):
                g = math.gcd(g, _det([[m[r][c] for c in cs] for r in rs]))
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


def _random_matrix(rng):
    r, c = rng.randint(1, 5), rng.randint(1, 5)
    return [[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)]


def _matmul(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def test_random_matrices_against_minors_oracle():
    rng = random.Random(1)
    for _ in range(150):
        m = _random_matrix(rng)
        d, u, v = smith_normal_form(m)
        assert _matmul(_matmul(u, m), v) == d
        assert abs(_det(u)) == 1 and abs(_det(v)) == 1
        diag = [x for x in diagonal(d) if x]
        assert diag == determinantal_divisors(m)
        assert all(b % a == 0 for a, b in zip(diag, diag[1:]))


def test_random_matrices_against_sympy():
    rng = random.Random(2)
    for _ in range(100):
        m = _random_matrix(rng)
        s = sympy_snf(Matrix(m), domain=ZZ)
        theirs = [abs(int(s[i, i])) for i in range(min(s.shape)) if s[i, i] != 0]
        assert invariant_factors(m) == theirs


def test_abelian_invariants():
    inv = abelian_invariants([[2, 0, 0], [0, 6, 0]], 3)
    assert inv == AbelianInvariants(1, (2, 6))
    assert str(inv) == "Z + Z_2 + Z_2 + Z_3"  # primary decomposition
    assert inv.primary() == (2, 2, 3)
    assert str(AbelianInvariants(211, (2,))) == "Z^211 + Z_2"
    assert str(AbelianInvariants(0)) == "0"
    assert abelian_invariants([[1, 1], [1, -1]], 2) == AbelianInvariants(0, (2,))


def test_element_order():
    rows = [[2, 0], [0, 0]]
    assert element_order(rows, 2, [1, 0]) == 2
    assert element_order(rows, 2, [2, 0]) == 1
    assert element_order(rows, 2, [0, 1]) == 0
    assert element_order([[4, 2]], 2, [2, 1]) == 2
    assert element_order([], 1, [3]) == 0


@pytest.mark.parametrize("m", [[[0]], [[0, 0], [0, 0]], [[5]], [[-3, 0], [0, 0]]])
def test_degenerate(m):
    d, u, v = smith_normal_form(m)
    assert _matmul(_matmul(u, m), v) == d
