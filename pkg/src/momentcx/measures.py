"""Moment measures on a moment complex and the invariant open sets they define.

Three validation modes are offered:

``literal``
    additivity is required only under cells where the measure is 1.
``additive``
    additivity under every subdivision of every cell.
``normalized`` (default)
    additive, and the closed generic polytope carries total mass 1.

The literal reading accepts assignments (for instance all ones on P^1) whose
open set admits no proper quotient, which is why ``normalized`` is the
default and the other modes are kept for comparison.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InputError, PreconditionError, ResourceLimitError
from .moment_complex import Limits

LITERAL = "literal"
ADDITIVE = "additive"
NORMALIZED = "normalized"
MODES = (LITERAL, ADDITIVE, NORMALIZED)


def _check_mode(mode):
    if mode not in MODES:
        raise InputError(f"unknown mode {mode!r}; choose one of {', '.join(MODES)}")
    return mode


@dataclass(frozen=True)
class MomentMeasure:
    """A {0,1}-valued function on cells, stored as the set of value-1 cell ids."""

    complex: object = field(compare=False, repr=False)
    ones: frozenset
    mode: str = NORMALIZED

    def __post_init__(self):
        _check_mode(self.mode)
        ones = frozenset(self.complex.cell_id(c) for c in self.ones)
        object.__setattr__(self, "ones", ones)

    @classmethod
    def from_cells(cls, cx, cells, mode=NORMALIZED):
        return cls(cx, frozenset(cx.cell_id(c) for c in cells), mode)

    def __call__(self, cell):
        return int(self.complex.cell_id(cell) in self.ones)

    @property
    def key(self):
        return tuple(sorted(self.ones))

    @property
    def values(self):
        return {i: int(i in self.ones) for i in range(len(self.complex.cells))}

    def cells(self):
        return [self.complex.cells[i] for i in self.key]


@dataclass(frozen=True)
class Violation:
    kind: str
    cell: object
    subdivision: object
    lhs: int
    rhs: int
    message: str


@dataclass(frozen=True)
class Constraint:
    """``kind`` is additive (sum = m(cell)), literal (m(cell)=1 => sum = 1)
    or normalization (sum = 1)."""

    kind: str
    cell: object
    subdivision: object
    collection: tuple


def constraints(cx, mode=NORMALIZED):
    _check_mode(mode)
    out = []
    kind = LITERAL if mode == LITERAL else ADDITIVE
    for cid, subs in enumerate(cx.subdivisions):
        for si, sub in enumerate(subs):
            if sub.is_trivial:
                continue
            out.append(Constraint(kind, cid, si, sub.collection))
    if mode == NORMALIZED:
        out.append(Constraint("normalization", cx.generic, None,
                              (cx.generic,) + tuple(cx.faces[cx.generic])))
    return out


def _fmt_cells(cx, ids):
    return " + ".join(f"m({cx.cells[i]})" for i in ids)


def validate(m, mode=None):
    """Violations of ``m`` under ``mode`` (default: the measure's own mode).

    Returns an empty list for a valid measure; never raises for invalid ones.
    """
    mode = _check_mode(mode or m.mode)
    cx = m.complex
    out = []
    if not m.ones:
        out.append(Violation("nonzero", None, None, 0, 1, "measure is identically 0"))
    for con in constraints(cx, mode):
        total = sum(m(i) for i in con.collection)
        if con.kind == "normalization":
            if total != 1:
                out.append(Violation(con.kind, con.cell, None, total, 1,
                                     f"closed mass of generic cell {cx.cells[con.cell]}: "
                                     f"{_fmt_cells(cx, con.collection)} = {total} != 1"))
            continue
        target = m(con.cell)
        if con.kind == LITERAL and target == 0:
            continue
        if total != target:
            sub = cx.subdivisions[con.cell][con.subdivision]
            pieces = ", ".join(str(cx.cells[i]) for i in sub.maximal)
            out.append(Violation(con.kind, con.cell, con.subdivision, total, target,
                                 f"cell {cx.cells[con.cell]}, subdivision [{pieces}]: "
                                 f"{_fmt_cells(cx, con.collection)} = {total} "
                                 f"!= m({cx.cells[con.cell]}) = {target}"))
    return out


def is_valid(m, mode=None):
    return not validate(m, mode)


def is_geometric(m):
    """Whether every value-1 cell has the dimension of the generic cell."""
    cx = m.complex
    return all(cx.cells[i].dim == cx.top_dimension for i in m.ones)


def closed_mass(m):
    """Diagnostic: for each cell, the sum of m over cells whose polytope lies in it."""
    cx = m.complex
    out = {}
    for cid in range(len(cx.cells)):
        poly = cx.polytope(cid)
        out[cid] = sum(m(j) for j in range(len(cx.cells))
                       if all(poly.contains(cx.config.weights[k]) for k in cx.cells[j].components))
    return out


# -- enumeration ---------------------------------------------------------------

def _linear_rows(cx, mode, geometric_only):
    """Constraints as (coefficients dict, constant) or conditional literal rows."""
    linear, conditional = [], []
    for con in constraints(cx, mode):
        if con.kind == "normalization":
            linear.append(({i: 1 for i in con.collection}, 1))
        elif con.kind == ADDITIVE:
            coeffs = {i: 1 for i in con.collection}
            coeffs[con.cell] = coeffs.get(con.cell, 0) - 1
            linear.append((coeffs, 0))
        else:
            conditional.append((con.cell, con.collection))
    if geometric_only:
        for cid, cell in enumerate(cx.cells):
            if cell.dim != cx.top_dimension:
                linear.append(({cid: 1}, 0))
    return linear, conditional


def _bounds(coeffs, assign):
    lo = hi = 0
    for v, c in coeffs.items():
        x = assign.get(v)
        if x is None:
            lo += min(0, c)
            hi += max(0, c)
        else:
            lo += c * x
            hi += c * x
    return lo, hi


def _propagate(assign, linear, conditional):
    """Bounds propagation to a fixpoint. Returns False on contradiction."""
    changed = True
    while changed:
        changed = False
        rows = list(linear)
        for cell, coll in conditional:
            x = assign.get(cell)
            coeffs = {i: 1 for i in coll}
            if x == 1:
                rows.append((coeffs, 1))
            elif x is None:
                lo, hi = _bounds(coeffs, assign)
                if lo > 1 or hi < 1:
                    assign[cell] = 0
                    changed = True
        for coeffs, const in rows:
            lo, hi = _bounds(coeffs, assign)
            if const < lo or const > hi:
                return False
            for v, c in coeffs.items():
                if v in assign or c == 0:
                    continue
                if lo + abs(c) > const:
                    assign[v] = 0 if c > 0 else 1
                    changed = True
                    break
                if hi - abs(c) < const:
                    assign[v] = 1 if c > 0 else 0
                    changed = True
                    break
            if changed:
                break
    return True


def enumerate_measures(cx, mode=NORMALIZED, geometric_only=False, limits=None):
    """All valid measures under ``mode``, sorted by their value-1 cell ids.

    Depth-first search over cells in id order with bounds propagation from
    the subdivision constraints.
    """
    _check_mode(mode)
    limits = limits or Limits()
    n = len(cx.cells)
    if n > limits.max_cells:
        raise ResourceLimitError(f"{n} cells exceed the enumeration limit of {limits.max_cells}")
    linear, conditional = _linear_rows(cx, mode, geometric_only)
    found = []

    def search(assign):
        if not _propagate(assign, linear, conditional):
            return
        free = next((v for v in range(n) if v not in assign), None)
        if free is None:
            ones = frozenset(v for v, x in assign.items() if x)
            if ones:
                found.append(MomentMeasure(cx, ones, mode))
            return
        for x in (0, 1):
            branch = dict(assign)
            branch[free] = x
            search(branch)

    search({})
    return sorted(found, key=lambda m: m.key)


# -- the open set U_(m) --------------------------------------------------------

@dataclass(frozen=True)
class SupportFamily:
    supports: tuple
    is_open: bool

    def __contains__(self, support):
        return tuple(sorted(support)) in self.supports

    def __len__(self):
        return len(self.supports)


def u_membership(m, support):
    """Whether points with this support lie in U_(m)."""
    return any(c in m.ones for c in m.complex.orbit_closure_cells(support))


def u_supports(m):
    """The supports of U_(m) and whether the family is upward closed (U open)."""
    cx = m.complex
    n = len(cx.config)
    supports = set(cx.supports())
    family = {s for s in supports if u_membership(m, s)}
    extensions = ((tuple(sorted(set(s) | {j}))) for s in family for j in range(n) if j not in s)
    is_open = all(t in family for t in extensions if t in supports)
    return SupportFamily(tuple(sorted(family, key=lambda s: (len(s), s))), is_open)


class AmbiguousClosedOrbit(PreconditionError):
    def __init__(self, support, candidates):
        super().__init__(f"support {support} has incomparable value-1 closure cells "
                         f"{candidates}")
        self.support = support
        self.candidates = candidates


def closed_orbit_cell(m, support):
    """Cell id of the closed orbit of U_(m) in the orbit closure, or None outside U."""
    cx = m.complex
    hits = [c for c in cx.orbit_closure_cells(support) if c in m.ones]
    minimal = [c for c in hits if not any(d != c and cx.is_face(d, c) for d in hits)]
    if not minimal:
        return None
    if len(minimal) > 1:
        raise AmbiguousClosedOrbit(tuple(support), [cx.cells[c].components for c in minimal])
    return minimal[0]


# -- GIT oracle ------------------------------------------------------------------

def parse_rational_vector(values, rank):
    try:
        chi = tuple(Fraction(v) if not isinstance(v, Fraction) else v for v in values)
    except (ValueError, ZeroDivisionError, TypeError):
        raise InputError(f"cannot read {values!r} as a rational vector")
    if len(chi) != rank:
        raise InputError(f"expected {rank} coordinates, got {len(chi)}")
    return chi


def git_measure(cx, chi):
    """Chamber measure of a generic linearization shift ``chi``.

    ``m(c) = 1`` exactly for the top-dimensional cells whose relative
    interior contains ``chi``. Raises :class:`PreconditionError` naming the
    wall cell when ``chi`` lies on a lower-dimensional cell.
    """
    chi = parse_rational_vector(chi, cx.config.rank)
    top = cx.top_dimension
    for cid, cell in enumerate(cx.cells):
        if cell.dim < top and cx.polytope(cid).contains(chi):
            raise PreconditionError(f"chi = {_fmt_vec(chi)} lies on the wall cell {cell}",
                                    cell=cell.components)
    if not cx.polytope(cx.generic).relint_contains(chi):
        raise PreconditionError(f"chi = {_fmt_vec(chi)} lies outside the moment polytope")
    ones = frozenset(cid for cid, cell in enumerate(cx.cells)
                     if cell.dim == top and cx.polytope(cid).relint_contains(chi))
    return MomentMeasure(cx, ones, NORMALIZED)


def _fmt_vec(v):
    return "(" + ", ".join(str(x) for x in v) + ")"
