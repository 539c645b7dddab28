"""Character and cocharacter lattices of a split torus, with exact integer tools."""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import _linalg
from .errors import InputError


class _LatticeVector(tuple):
    __slots__ = ()

    def __new__(cls, coords):
        coords = tuple(coords)
        for c in coords:
            if isinstance(c, bool) or not isinstance(c, int):
                raise InputError(f"{cls.__name__} coordinates must be integers, got {c!r}")
        return super().__new__(cls, coords)

    @property
    def rank(self):
        return len(self)

    def __add__(self, other):
        _check_lengths(self, other)
        return type(self)(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        _check_lengths(self, other)
        return type(self)(a - b for a, b in zip(self, other))

    def __neg__(self):
        return type(self)(-a for a in self)

    def __repr__(self):
        return f"{type(self).__name__}{tuple(self)!r}"


class Character(_LatticeVector):
    """An element of X*(T) = Hom(T, G_m), i.e. an integer vector of length r."""

    __slots__ = ()


class Cocharacter(_LatticeVector):
    """An element of X_*(T) = Hom(G_m, T)."""

    __slots__ = ()


def _check_lengths(u, v):
    if len(u) != len(v):
        raise InputError(f"length mismatch: {len(u)} vs {len(v)}")


def pair(chi, lam):
    """The natural pairing <chi, lam> of a character with a cocharacter."""
    _check_lengths(chi, lam)
    return sum(a * b for a, b in zip(chi, lam))


@dataclass(frozen=True)
class IntegerMatrix:
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        if rows and len({len(r) for r in rows}) != 1:
            raise InputError("ragged integer matrix")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_columns(cls, columns, nrows=None):
        columns = [tuple(c) for c in columns]
        if not columns:
            return cls(tuple(() for _ in range(nrows or 0)))
        n = len(columns[0])
        return cls(tuple(tuple(col[i] for col in columns) for i in range(n)))

    @property
    def shape(self):
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)


def smith_normal_form(matrix):
    """Nonzero invariant factors ``d_1 | d_2 | ...`` and the rank.

    Accepts an :class:`IntegerMatrix` or a list of integer rows.
    """
    rows = matrix.rows if isinstance(matrix, IntegerMatrix) else matrix
    a = [list(r) for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    diag = []
    t = 0
    while t < min(m, n):
        # choose the smallest nonzero entry of the remaining block as pivot
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            done = True
            p = a[t][t]
            for i in range(t + 1, m):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    done = False
            for j in range(t + 1, n):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    done = False
            if done:
                # enforce divisibility against the rest of the block
                bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                            if a[i][j] % p), None)
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                continue
            # move the smallest nonzero entry of row/column t into the pivot
            cands = [(abs(a[i][t]), i, t) for i in range(t, m) if a[i][t]]
            cands += [(abs(a[t][j]), t, j) for j in range(t, n) if a[t][j]]
            _, i, j = min(cands)
            a[t], a[i] = a[i], a[t]
            for row in a:
                row[t], row[j] = row[j], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    return tuple(diag), len(diag)


def torsion_order(weights):
    """Order of the torsion subgroup of Z^r / Span(weights).

    The empty family spans nothing and the quotient Z^r is torsion free, so
    the answer is 1.
    """
    weights = [tuple(w) for w in weights]
    if not weights:
        return 1
    diag, _ = smith_normal_form(IntegerMatrix.from_columns(weights))
    out = 1
    for d in diag:
        out *= d
    return out


def span_rank(weights):
    """Rank of the rational span of ``weights``."""
    weights = [tuple(w) for w in weights]
    if not weights:
        return 0
    return _linalg.rank(weights)


def affine_rank(points):
    """Dimension of the affine span of ``points`` (-1 for the empty set)."""
    points = [tuple(p) for p in points]
    if not points:
        return -1
    base = points[0]
    return span_rank([tuple(Fraction(a) - b for a, b in zip(p, base)) for p in points[1:]])


def content(vec):
    g = 0
    for x in vec:
        g = gcd(g, x)
    return g
