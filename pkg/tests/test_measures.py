from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from conftest import DESK, P1, P2, P3, SQUARE, cx_of
from momentcx.errors import PreconditionError, ResourceLimitError
from momentcx.measures import (ADDITIVE, LITERAL, MODES, NORMALIZED, MomentMeasure,
                               closed_orbit_cell, enumerate_measures, git_measure,
                               is_geometric, is_valid, u_membership, u_supports, validate)
from momentcx.moment_complex import Limits


def M(cx, *cells, mode=NORMALIZED):
    return MomentMeasure.from_cells(cx, cells, mode)


def keys(cx, measures):
    return sorted(tuple(cx.cells[i].components for i in m.key) for m in measures)


def brute_force(cx, mode):
    """Every nonzero 0/1 assignment, checked directly against the subdivision catalogue."""
    out = []
    n = len(cx.cells)
    for bits in product((0, 1), repeat=n):
        if not any(bits):
            continue
        ok = True
        for cid, subs in enumerate(cx.subdivisions):
            for s in subs:
                total = sum(bits[i] for i in s.maximal + s.internal)
                if mode == LITERAL:
                    ok &= bits[cid] == 0 or total == 1
                else:
                    ok &= total == bits[cid]
        if mode == NORMALIZED:
            ok &= bits[cx.generic] + sum(bits[f] for f in cx.faces[cx.generic]) == 1
        if ok:
            out.append(frozenset(i for i in range(n) if bits[i]))
    return sorted(tuple(sorted(s)) for s in out)


@pytest.mark.parametrize("name", ["P1", "P2", "P3"])
@pytest.mark.parametrize("mode", MODES)
def test_enumeration_matches_brute_force(name, mode):
    cx = cx_of(DESK[name])
    assert [m.key for m in enumerate_measures(cx, mode)] == brute_force(cx, mode)


def test_square_enumeration_matches_brute_force_normalized():
    cx = cx_of(SQUARE)
    assert [m.key for m in enumerate_measures(cx, NORMALIZED)] == brute_force(cx, NORMALIZED)


def test_validate_examples():
    cx = cx_of(P1)
    ones = M(cx, (0,), (1,), (0, 1))
    assert is_valid(ones, LITERAL)
    bad = validate(ones, NORMALIZED)
    assert [v.kind for v in bad] == ["normalization"] and bad[0].lhs == 3
    cx = cx_of(P2)
    assert is_valid(M(cx, (1,), (0, 2)), NORMALIZED)
    v = validate(M(cx, (0, 2)), ADDITIVE)
    assert len(v) == 1 and v[0].lhs == 0 and v[0].rhs == 1
    assert "{0,2}" in v[0].message


def test_validate_zero_measure():
    cx = cx_of(P1)
    zero = MomentMeasure(cx, frozenset())
    assert [v.kind for v in validate(zero, LITERAL)] == ["nonzero"]
    assert [v.kind for v in validate(zero)] == ["nonzero", "normalization"]


def test_is_geometric_examples():
    assert is_geometric(M(cx_of(P1), (0, 1)))
    assert not is_geometric(M(cx_of(P1), (0,)))
    assert not is_geometric(M(cx_of(P2), (1,), (0, 2)))


def test_enumeration_examples():
    cx = cx_of(P1)
    assert keys(cx, enumerate_measures(cx)) == [((0,),), ((0, 1),), ((1,),)]
    assert len(enumerate_measures(cx, geometric_only=True)) == 1
    assert len(enumerate_measures(cx, LITERAL)) == 7
    cx = cx_of(P2)
    assert keys(cx, enumerate_measures(cx)) == sorted([
        ((0,),), ((2,),), ((0, 1), (0, 2)), ((0, 2), (1, 2)), ((1,), (0, 2))])
    assert len(enumerate_measures(cx, geometric_only=True)) == 2


def test_enumeration_limit():
    with pytest.raises(ResourceLimitError):
        enumerate_measures(cx_of(SQUARE), limits=Limits(max_cells=10))


def test_mode_monotonicity(desk_complex):
    cx = desk_complex
    for m in enumerate_measures(cx, NORMALIZED):
        assert is_valid(m, ADDITIVE) and is_valid(m, LITERAL)
    if len(cx.cells) <= 10:
        for m in enumerate_measures(cx, ADDITIVE):
            assert is_valid(m, LITERAL)


def test_u_membership_examples():
    cx = cx_of(P1)
    m = M(cx, (0, 1))
    assert u_membership(m, (0, 1)) and not u_membership(m, (0,))
    assert u_membership(M(cx_of(P2), (1,), (0, 2)), (0, 1, 2))


def test_u_supports_examples():
    cx = cx_of(P2)
    fam = u_supports(M(cx, (0,)))
    assert fam.supports == ((0,), (0, 1), (0, 2), (0, 1, 2)) and fam.is_open
    fam = u_supports(M(cx, (1,), mode=LITERAL))
    assert fam.supports == ((1,), (0, 1), (1, 2)) and not fam.is_open
    fam = u_supports(M(cx_of(P1), (0, 1)))
    assert fam.supports == ((0, 1),) and fam.is_open


def test_closed_orbit_cell_examples():
    cx = cx_of(P2)
    m = M(cx, (1,), (0, 2))
    assert cx.cells[closed_orbit_cell(m, (0, 1, 2))].components == (0, 2)
    assert cx.cells[closed_orbit_cell(m, (0, 1))].components == (1,)
    assert closed_orbit_cell(m, (0,)) is None
    cx = cx_of(P1)
    assert cx.cells[closed_orbit_cell(M(cx, (0,)), (0, 1))].components == (0,)


def test_closed_orbit_unique_for_valid_measures(desk_complex):
    for m in enumerate_measures(desk_complex):
        for s in u_supports(m).supports:
            assert closed_orbit_cell(m, s) is not None


def test_git_examples():
    cx = cx_of(P2)
    assert keys(cx, [git_measure(cx, [Fraction(1, 2)])]) == [((0, 1), (0, 2))]
    assert keys(cx, [git_measure(cx, ["3/2"])]) == [((0, 2), (1, 2))]
    with pytest.raises(PreconditionError) as exc:
        git_measure(cx, [1])
    assert exc.value.cell == (1,)
    cx = cx_of(P1)
    assert keys(cx, [git_measure(cx, ["1/3"])]) == [((0, 1),)]
    with pytest.raises(PreconditionError):
        git_measure(cx, [2])


def test_git_square():
    cx = cx_of(SQUARE)
    m = git_measure(cx, ["1/3", "1/2"])
    assert cx.cell_id((0, 1, 2, 3)) in m.ones
    assert len(m.ones) == 3 and is_geometric(m)


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(sorted(DESK)), st.data())
def test_git_measures_are_valid(name, data):
    cx = cx_of(DESK[name])
    chi = [data.draw(st.fractions(min_value=0, max_value=3, max_denominator=7))
           for _ in range(cx.config.rank)]
    try:
        m = git_measure(cx, chi)
    except PreconditionError:
        return
    assert is_valid(m, NORMALIZED) and is_geometric(m)
    assert m.key in {x.key for x in enumerate_measures(cx)}


def test_openness_and_distinctness(desk_complex):
    measures = enumerate_measures(desk_complex)
    families = [u_supports(m) for m in measures]
    assert all(f.is_open for f in families)
    assert len({f.supports for f in families}) == len(families)


def test_literal_mode_is_weaker():
    cx = cx_of(P1)
    families = [u_supports(m).supports for m in enumerate_measures(cx, LITERAL)]
    assert len(set(families)) < len(families)
