import random
from itertools import combinations
from math import gcd

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from momentcx.errors import InputError
from momentcx.lattice import (Character, Cocharacter, IntegerMatrix, pair, smith_normal_form,
                              span_rank, torsion_order)


def test_pair_examples():
    assert pair(Character((1, 0)), Cocharacter((0, 1))) == 0
    assert pair(Character((1, 0)), Cocharacter((1, 0))) == 1
    assert pair(Character((2, 3)), Cocharacter((1, -1))) == -1


def test_pair_length_mismatch():
    with pytest.raises(InputError):
        pair(Character((1, 0)), Cocharacter((1,)))


def test_character_rejects_non_integers():
    with pytest.raises(InputError):
        Character((1, 0.5))


def test_character_arithmetic_and_order():
    a, b = Character((1, 2)), Character((0, 5))
    assert a + b == (1, 7) and a - b == (1, -3) and -a == (-1, -2)
    assert sorted([a, b]) == [b, a]


def test_snf_examples():
    assert smith_normal_form(IntegerMatrix([[1, 0], [0, 1]])) == ((1, 1), 2)
    assert smith_normal_form(IntegerMatrix([[2]])) == ((2,), 1)
    assert smith_normal_form(IntegerMatrix.from_columns([(1, 1), (1, -1)])) == ((1, 2), 2)


def test_torsion_examples():
    assert torsion_order([(1, 0), (0, 1)]) == 1
    assert torsion_order([(2,)]) == 2
    assert torsion_order([(1, 1), (1, -1)]) == 2


def test_span_rank_examples():
    assert span_rank([]) == 0
    assert span_rank([(1, 0), (2, 0)]) == 1
    assert span_rank([(1, 0), (0, 1), (1, 1)]) == 2


def determinantal_divisors(rows):
    """Smith diagonal from gcds of k x k minors: d_k / d_(k-1)."""
    m = sympy.Matrix(rows)
    out, prev = [], 1
    for k in range(1, min(m.shape) + 1):
        g = 0
        for r in combinations(range(m.shape[0]), k):
            for c in combinations(range(m.shape[1]), k):
                g = gcd(g, int(m.extract(list(r), list(c)).det()))
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return tuple(out)


def random_matrix(rng):
    rows, cols = rng.randint(1, 3), rng.randint(1, 3)
    return [[rng.randint(-6, 6) for _ in range(cols)] for _ in range(rows)]


def test_snf_matches_determinantal_divisors():
    rng = random.Random(11)
    for _ in range(250):
        rows = random_matrix(rng)
        diag, rank = smith_normal_form(IntegerMatrix(rows))
        assert diag == determinantal_divisors(rows), rows
        assert rank == len(diag)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.lists(st.integers(-9, 9), min_size=3, max_size=3), min_size=1, max_size=4))
def test_snf_divisibility(rows):
    diag, _ = smith_normal_form(IntegerMatrix(rows))
    assert all(d > 0 for d in diag)
    assert all(b % a == 0 for a, b in zip(diag, diag[1:]))


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 3).flatmap(
    lambda r: st.lists(st.lists(st.integers(-5, 5), min_size=r, max_size=r), min_size=r, max_size=r)))
def test_torsion_is_abs_det(cols):
    det = int(sympy.Matrix(cols).det())
    if det:
        assert torsion_order(cols) == abs(det)


def unimodular(rng, r):
    m = sympy.eye(r)
    for _ in range(6):
        i, j = rng.sample(range(r), 2) if r > 1 else (0, 0)
        if i != j:
            m = m * sympy.Matrix(r, r, lambda a, b: int(a == b) + (rng.randint(-2, 2) if (a, b) == (i, j) else 0))
    if rng.random() < 0.5:
        m[:, 0] = -m[:, 0]
    return m


def test_torsion_invariances():
    rng = random.Random(5)
    for _ in range(60):
        r = rng.randint(1, 3)
        weights = [tuple(rng.randint(-4, 4) for _ in range(r)) for _ in range(rng.randint(1, 4))]
        base = torsion_order(weights)
        shuffled = weights[:]
        rng.shuffle(shuffled)
        assert torsion_order(shuffled) == base
        u = unimodular(rng, r)
        assert abs(u.det()) == 1
        moved = [tuple(int(x) for x in u * sympy.Matrix(w)) for w in weights]
        assert torsion_order(moved) == base
