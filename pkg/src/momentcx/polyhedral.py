"""Exact rational convex geometry at desk scale.

Polytopes are given by generators (lattice or rational points). All derived
data -- affine span, facets, vertices, faces, volumes -- is computed with
``int``/``Fraction`` arithmetic. Facets are found by exhausting hyperplanes
through affinely independent generator subsets inside the affine span, which
is plenty for ranks up to 3-4 and a dozen points.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Optional

from . import _linalg
from .errors import InputError, ResourceLimitError
from .lattice import torsion_order

DEFAULT_SUBDIVISION_POINT_LIMIT = 8


def _as_point(p):
    return tuple(x if isinstance(x, (int, Fraction)) and not isinstance(x, bool)
                 else Fraction(x) for x in p)


@dataclass(frozen=True)
class Facet:
    """Valid inequality ``normal . proj(x) <= offset`` that is tight on ``members``.

    ``normal`` lives in the projected coordinates of the owning polytope.
    """

    normal: tuple
    offset: Fraction
    members: frozenset


class Polytope:
    """Convex hull of finitely many points, with exact derived structure."""

    def __init__(self, generators):
        gens = tuple(_as_point(p) for p in generators)
        if not gens:
            raise InputError("a polytope needs at least one generator")
        if len({len(p) for p in gens}) != 1:
            raise InputError("generators have inconsistent lengths")
        self.generators = gens
        self.ambient_dim = len(gens[0])
        # first occurrence of each distinct point
        seen = {}
        for i, p in enumerate(gens):
            seen.setdefault(p, i)
        self._unique = sorted(seen.values())

    # -- affine span ------------------------------------------------------
    @cached_property
    def _span(self):
        base = self.generators[self._unique[0]]
        dirs = [_linalg.sub(self.generators[i], base) for i in self._unique[1:]]
        dirs = [d for d in dirs if any(d)]
        if dirs:
            _, pivots = _linalg.rref(dirs, self.ambient_dim)
        else:
            pivots = []
        equations = _linalg.nullspace(dirs, self.ambient_dim)
        equations = [(n, _linalg.dot(n, base)) for n in equations]
        return base, tuple(pivots), equations

    @property
    def dim(self):
        return len(self._span[1])

    def project(self, point):
        """Coordinates of ``point`` on the pivot axes of the affine span."""
        return tuple(Fraction(point[p]) for p in self._span[1])

    def in_affine_span(self, point):
        return all(_linalg.dot(n, point) == b for n, b in self._span[2])

    @cached_property
    def _projected(self):
        return [self.project(p) for p in self.generators]

    # -- facets and vertices ------------------------------------------------
    @cached_property
    def facets(self):
        k = self.dim
        if k == 0:
            return ()
        q = self._projected
        found = {}
        for combo in combinations(self._unique, k):
            base = q[combo[0]]
            rows = [_linalg.sub(q[i], base) for i in combo[1:]]
            ns = _linalg.nullspace(rows, k)
            if len(ns) != 1:
                continue
            a = ns[0]
            b = _linalg.dot(a, base)
            signs = [_linalg.dot(a, q[i]) - b for i in range(len(q))]
            if all(s <= 0 for s in signs):
                pass
            elif all(s >= 0 for s in signs):
                a = [-x for x in a]
                b = -b
            else:
                continue
            members = frozenset(i for i, s in enumerate(signs) if s == 0)
            if members in found:
                continue
            prim = _linalg.primitive(a)
            scale = Fraction(prim[next(i for i, x in enumerate(a) if x)]) / a[
                next(i for i, x in enumerate(a) if x)]
            found[members] = Facet(prim, b * scale, members)
        return tuple(sorted(found.values(), key=lambda f: (f.normal, f.offset)))

    @cached_property
    def vertex_indices(self):
        k = self.dim
        if k == 0:
            return (self._unique[0],)
        out = []
        for i in self._unique:
            normals = [f.normal for f in self.facets if i in f.members]
            if normals and _linalg.rank(normals) == k:
                out.append(i)
        return tuple(out)

    @property
    def vertices(self):
        return tuple(self.generators[i] for i in self.vertex_indices)

    @cached_property
    def vertex_key(self):
        return tuple(sorted(self.vertices))

    def __eq__(self, other):
        return isinstance(other, Polytope) and self.vertex_key == other.vertex_key

    def __hash__(self):
        return hash(self.vertex_key)

    def __repr__(self):
        return f"Polytope({[tuple(v) for v in self.vertex_key]})"

    # -- faces ---------------------------------------------------------------
    @cached_property
    def _face_sets(self):
        everything = frozenset(range(len(self.generators)))
        faces = {f.members for f in self.facets}
        frontier = set(faces)
        while frontier:
            new = set()
            for a in frontier:
                for b in faces:
                    c = a & b
                    if c and c not in faces:
                        new.add(c)
            faces |= new
            frontier = new
        faces.add(everything)
        return sorted(faces, key=lambda s: (len(s), sorted(s)))

    def faces(self):
        """All nonempty faces, each as the frozenset of generator indices on it."""
        return list(self._face_sets)

    def face_dimension(self, face):
        pts = [self.generators[i] for i in face]
        base = pts[0]
        return _linalg.rank([_linalg.sub(p, base) for p in pts[1:]]) if len(pts) > 1 else 0

    def face_vertices(self, face):
        """Generator indices of the vertices of ``face`` (first occurrences)."""
        return tuple(i for i in self.vertex_indices if i in face)

    def edges_at(self, index):
        """Vertex indices adjacent to vertex ``index`` along edges."""
        out = set()
        for face in self._face_sets:
            if index in face and self.face_dimension(face) == 1:
                out.update(i for i in self.face_vertices(face) if i != index)
        return sorted(out)

    # -- membership --------------------------------------------------------
    def contains(self, point):
        point = _as_point(point)
        if not self.in_affine_span(point):
            return False
        y = self.project(point)
        return all(_linalg.dot(f.normal, y) <= f.offset for f in self.facets)

    def relint_contains(self, point):
        point = _as_point(point)
        if not self.in_affine_span(point):
            return False
        y = self.project(point)
        return all(_linalg.dot(f.normal, y) < f.offset for f in self.facets)

    def inequalities(self, projector=None):
        """Facet inequalities expressed in another span's projected coordinates.

        ``projector`` is a polytope whose affine span contains this one; the
        result is a list of ``(normal, offset)`` valid in its coordinates.
        """
        if projector is None or projector is self:
            return [(f.normal, f.offset) for f in self.facets]
        proj = Polytope([projector.project(p) for p in self.vertices])
        if proj.dim != self.dim:
            raise InputError("projector span does not contain this polytope")
        return [(f.normal, f.offset) for f in proj.facets]

    # -- volume ------------------------------------------------------------
    @cached_property
    def normalized_volume(self):
        """dim! times the volume measured in the lattice of the affine span."""
        verts = self.vertex_key
        for p in verts:
            if not all(isinstance(x, int) or x.denominator == 1 for x in p):
                raise InputError("normalized volume needs lattice vertices")
        verts = [tuple(int(x) for x in p) for p in verts]
        total = 0
        for simplex in placing_triangulation(verts):
            v0 = verts[simplex[0]]
            edges = [_linalg.sub(verts[i], v0) for i in simplex[1:]]
            total += torsion_order(edges) if edges else 1
        return total

    @cached_property
    def euclidean_volume(self):
        """Volume in projected coordinates (the true volume when full dimensional)."""
        q = [self.project(p) for p in self.vertex_key]
        k = self.dim
        total = Fraction(0)
        for simplex in placing_triangulation(q):
            v0 = q[simplex[0]]
            rows = [_linalg.sub(q[i], v0) for i in simplex[1:]]
            total += abs(_linalg.det(rows)) if rows else 1
        fact = 1
        for i in range(2, k + 1):
            fact *= i
        return total / fact


def vertex_set(points):
    """Indices of the points that are vertices of their convex hull."""
    return Polytope(points).vertex_indices


def faces(polytope):
    return polytope.faces()


def relint_contains(polytope, point):
    return polytope.relint_contains(point)


# -- triangulation ------------------------------------------------------------

def _barycentric(simplex_pts, p):
    v0 = simplex_pts[0]
    cols = [_linalg.sub(v, v0) for v in simplex_pts[1:]]
    if not cols:
        return [Fraction(1)] if tuple(p) == tuple(v0) else None
    a = [[c[i] for c in cols] for i in range(len(v0))]
    mu = _linalg.solve(a, _linalg.sub(p, v0))
    if mu is None:
        return None
    return [1 - sum(mu)] + mu


def placing_triangulation(points, order=None):
    """Triangulate a point configuration using every distinct point.

    Points are inserted in ``order`` (default: index order). A point outside
    the current hull is placed by coning over the visible boundary facets; a
    point inside is inserted by stellar subdivision of the simplices that
    contain it. Returns sorted tuples of point indices.
    """
    pts = [_as_point(p) for p in points]
    order = list(range(len(pts))) if order is None else list(order)
    simplices = []
    used = []
    for idx in order:
        p = pts[idx]
        if any(pts[u] == p for u in used):
            continue
        if not used:
            simplices = [(idx,)]
            used.append(idx)
            continue
        bary = [(s, _barycentric([pts[i] for i in s], p)) for s in simplices]
        if bary[0][1] is None:
            # leaves the affine span: cone everything over the new point
            simplices = [tuple(sorted(s + (idx,))) for s in simplices]
            used.append(idx)
            continue
        inside = [(s, lam) for s, lam in bary if all(x >= 0 for x in lam)]
        if inside:
            inside_set = {s for s, _ in inside}
            new = [s for s in simplices if s not in inside_set]
            for s, lam in inside:
                for v, l in zip(s, lam):
                    if l > 0:
                        new.append(tuple(sorted((set(s) - {v}) | {idx})))
            simplices = new
        else:
            count = {}
            owner = {}
            for s in simplices:
                for v in s:
                    f = tuple(x for x in s if x != v)
                    count[f] = count.get(f, 0) + 1
                    owner[f] = (s, v)
            new = list(simplices)
            lam_of = dict(bary)
            for f, c in count.items():
                if c != 1:
                    continue
                s, v = owner[f]
                if lam_of[s][s.index(v)] < 0:
                    new.append(tuple(sorted(f + (idx,))))
            simplices = new
        used.append(idx)
    return sorted(tuple(sorted(s)) for s in simplices)


# -- Fourier-Motzkin -----------------------------------------------------------

def _normalize_ineq(a, b, strict):
    nz = next((abs(x) for x in a if x), None)
    if nz is None:
        return (tuple(Fraction(0) for _ in a), Fraction(b), strict)
    return (tuple(Fraction(x) / nz for x in a), Fraction(b) / nz, strict)


def fm_feasible(inequalities, nvars):
    """Decide feasibility of a system of ``a.y < b`` / ``a.y <= b`` rows.

    ``inequalities`` holds ``(a, b, strict)`` triples. Exact Fourier-Motzkin
    elimination; strictness propagates through combinations.
    """
    system = {_normalize_ineq(a, b, s) for a, b, s in inequalities}
    for j in range(nvars):
        pos, neg, rest = [], [], []
        for a, b, s in system:
            (pos if a[j] > 0 else neg if a[j] < 0 else rest).append((a, b, s))
        combined = set(rest)
        for ap, bp, sp in pos:
            for an, bn, sn in neg:
                cp, cn = ap[j], -an[j]
                a = tuple(x / cp + y / cn for x, y in zip(ap, an))
                combined.add(_normalize_ineq(a, bp / cp + bn / cn, sp or sn))
        system = combined
        # weakly dominated duplicates are harmless; drop exact ones only
    for a, b, s in system:
        if s and not b > 0:
            return False
        if not s and not b >= 0:
            return False
    return True


def _interiors_meet(ineqs_p, ineqs_q, k):
    rows = [(a, b, True) for a, b in ineqs_p] + [(a, b, True) for a, b in ineqs_q]
    return fm_feasible(rows, k)


# -- subdivisions --------------------------------------------------------------

@dataclass(frozen=True)
class Subdivision:
    parent: Polytope
    pieces: tuple
    internal_faces: tuple = ()
    regular: Optional[bool] = None

    @property
    def is_trivial(self):
        return len(self.pieces) == 1

    def key(self):
        return tuple(p.vertex_key for p in self.pieces)

    def __eq__(self, other):
        return (isinstance(other, Subdivision) and self.parent == other.parent
                and self.key() == other.key())

    def __hash__(self):
        return hash((self.parent, self.key()))


@dataclass
class SubdivisionCheck:
    ok: bool
    subdivision: Optional[Subdivision] = None
    problems: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


def _face_closure(poly, vertex_pts):
    """Vertices of the smallest face of ``poly`` containing ``vertex_pts``."""
    idx = {poly.generators[i]: i for i in poly.vertex_indices}
    want = {idx[p] for p in vertex_pts}
    face = frozenset(range(len(poly.generators)))
    for f in poly.facets:
        if want <= f.members:
            face &= f.members
    return {poly.generators[i] for i in poly.face_vertices(face)}


def _face_to_face(pp, qq):
    """Whether two interior-disjoint full-dimensional polytopes meet in a common face."""
    k = pp.dim
    common = set(pp.vertices) & set(qq.vertices)
    base = [(a, b, False) for a, b in pp.inequalities()] + \
           [(a, b, False) for a, b in qq.inequalities()]
    if not common:
        return not fm_feasible(base, k)
    if _face_closure(pp, common) != common or _face_closure(qq, common) != common:
        return False
    idx = {pp.generators[i]: i for i in pp.vertex_indices}
    want = {idx[p] for p in common}
    for f in pp.facets:
        if want <= f.members:
            if fm_feasible(base + [(f.normal, f.offset, True)], k):
                return False
    return True


def _canonical_pieces(pieces):
    return tuple(sorted((Polytope(p.vertices) for p in pieces), key=lambda p: p.vertex_key))


def is_subdivision(parent, pieces):
    """Check that ``pieces`` subdivide ``parent``; derive the internal faces.

    Conditions: every piece lies in the parent with the same dimension,
    pieces have pairwise disjoint interiors and meet face to face, and their
    normalized volumes add up to the parent's.
    """
    pieces = list(pieces)
    problems = []
    if not pieces:
        return SubdivisionCheck(False, None, ["no pieces"])
    k = parent.dim
    for p in pieces:
        if p.dim != k:
            problems.append(f"{p!r} has dimension {p.dim}, parent has {k}")
        elif not all(parent.contains(v) for v in p.vertices):
            problems.append(f"{p!r} is not contained in the parent")
    if problems:
        return SubdivisionCheck(False, None, problems)
    projected = [Polytope([parent.project(v) for v in p.vertices]) for p in pieces]
    for (i, a), (j, b) in combinations(enumerate(projected), 2):
        if _interiors_meet(a.inequalities(), b.inequalities(), k):
            problems.append(f"interiors of {pieces[i]!r} and {pieces[j]!r} overlap")
    if problems:
        return SubdivisionCheck(False, None, problems)
    vol = sum(p.normalized_volume for p in pieces)
    if vol != parent.normalized_volume:
        return SubdivisionCheck(False, None, [
            f"piece volumes sum to {vol}, parent volume is {parent.normalized_volume}"])
    for (i, a), (j, b) in combinations(enumerate(projected), 2):
        if not _face_to_face(a, b):
            problems.append(f"{pieces[i]!r} and {pieces[j]!r} do not meet face to face")
    if problems:
        return SubdivisionCheck(False, None, problems)
    internal = {}
    for p in pieces:
        for face in p.faces():
            verts = p.face_vertices(face)
            if len(verts) == len(p.vertex_indices):
                continue
            pts = [p.generators[i] for i in verts]
            centroid = tuple(sum(Fraction(x[c]) for x in pts) / len(pts)
                             for c in range(parent.ambient_dim))
            if parent.relint_contains(centroid):
                poly = Polytope(pts)
                internal[poly.vertex_key] = poly
    sub = Subdivision(parent, _canonical_pieces(pieces),
                      tuple(internal[k_] for k_ in sorted(internal)))
    return SubdivisionCheck(True, sub, [])


def convex_position_subsets(points, dim=None):
    """Subsets of ``points`` (as index tuples) whose members are all hull vertices."""
    out = []
    n = len(points)
    for size in range(1, n + 1):
        for combo in combinations(range(n), size):
            poly = Polytope([points[i] for i in combo])
            if len(poly.vertex_indices) != size:
                continue
            if dim is not None and poly.dim != dim:
                continue
            out.append(combo)
    return out


def enumerate_subdivisions(points, allowed_pieces=None, limit=DEFAULT_SUBDIVISION_POINT_LIMIT):
    """All subdivisions of conv(points) built from ``allowed_pieces``.

    By default every convex-position subset of full dimension is allowed.
    Exact backtracking over pieces in canonical order with volume bounds and
    pairwise interior-disjointness pruning; the trivial subdivision is
    included whenever the parent itself is allowed.
    """
    points = [_as_point(p) for p in points]
    distinct = sorted(set(points))
    if len(distinct) > limit:
        raise ResourceLimitError(
            f"{len(distinct)} points exceed the subdivision limit of {limit}")
    parent = Polytope(distinct)
    k = parent.dim
    if allowed_pieces is None:
        candidates = [Polytope([distinct[i] for i in c])
                      for c in convex_position_subsets(distinct, dim=k)]
    else:
        candidates = [p if isinstance(p, Polytope) else Polytope(p) for p in allowed_pieces]
    candidates = [p for p in candidates
                  if p.dim == k and all(parent.contains(v) for v in p.vertices)]
    candidates = sorted(set(candidates), key=lambda p: (-p.normalized_volume, p.vertex_key))
    target = parent.normalized_volume
    vols = [p.normalized_volume for p in candidates]
    ineqs = [Polytope([parent.project(v) for v in p.vertices]).inequalities()
             for p in candidates]
    n = len(candidates)
    clash = [[False] * n for _ in range(n)]
    for i, j in combinations(range(n), 2):
        clash[i][j] = clash[j][i] = _interiors_meet(ineqs[i], ineqs[j], k)
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + vols[i]

    found = {}

    def extend(start, chosen, volume):
        if volume == target:
            check = is_subdivision(parent, [candidates[i] for i in chosen])
            if check.ok:
                found[check.subdivision.key()] = check.subdivision
            return
        if volume + suffix[start] < target:
            return
        for i in range(start, n):
            if volume + vols[i] > target:
                continue
            if any(clash[i][j] for j in chosen):
                continue
            chosen.append(i)
            extend(i + 1, chosen, volume + vols[i])
            chosen.pop()

    extend(0, [], 0)
    return [found[key] for key in sorted(found, key=lambda key: (len(key), key))]


def regular_subdivision(points, valuation):
    """Subdivision cut out by the lower hull of the points lifted to ``-valuation``.

    ``valuation`` is a sequence aligned with ``points`` or a mapping from
    point to value. The maximal pieces are the domains of linearity of the
    largest convex function bounded above by ``-valuation``.
    """
    points = [_as_point(p) for p in points]
    if hasattr(valuation, "items"):
        vals = [Fraction(valuation[p]) for p in points]
    else:
        vals = [Fraction(v) for v in valuation]
        if len(vals) != len(points):
            raise InputError("valuation must give one value per point")
    parent = Polytope(points)
    lifted = [parent.project(p) + (-v,) for p, v in zip(points, vals)]
    hull = Polytope(lifted)
    if hull.dim == parent.dim:
        pieces = [parent]
    else:
        pieces = []
        for f in hull.facets:
            if f.normal[-1] < 0:
                pieces.append(Polytope([points[i] for i in sorted(f.members)]))
    check = is_subdivision(parent, pieces)
    if not check.ok:  # pragma: no cover - would indicate a bug in the hull code
        raise AssertionError(check.problems)
    sub = check.subdivision
    return Subdivision(sub.parent, sub.pieces, sub.internal_faces, regular=True)


# -- cones -----------------------------------------------------------------------

class Cone:
    """Cone spanned by rational ray generators."""

    def __init__(self, rays):
        self.rays = tuple(_as_point(r) for r in rays)
        self._nonzero = [r for r in self.rays if any(r)]

    @cached_property
    def _hull(self):
        if not self._nonzero:
            return None
        zero = tuple(0 for _ in self._nonzero[0])
        return Polytope([zero] + self._nonzero)

    @property
    def dim(self):
        return 0 if self._hull is None else self._hull.dim

    @cached_property
    def is_strictly_convex(self):
        return self._hull is None or 0 in self._hull.vertex_indices

    def _require_pointed(self):
        if not self.is_strictly_convex:
            raise InputError(f"cone {self!r} contains a line")

    @cached_property
    def extremal_rays(self):
        self._require_pointed()
        if self._hull is None:
            return ()
        out = set()
        for j in self._hull.edges_at(0):
            out.add(_linalg.primitive(self._hull.generators[j]))
        return tuple(sorted(out))

    @cached_property
    def facet_normals(self):
        """Inner normals (projected coordinates) of the facets through the apex."""
        self._require_pointed()
        if self._hull is None:
            return ()
        return tuple(tuple(-x for x in f.normal) for f in self._hull.facets if 0 in f.members)

    def project(self, point):
        return self._hull.project(point)

    def contains(self, point):
        point = _as_point(point)
        if not any(point):
            return True
        if self._hull is None or not self._hull.in_affine_span(point):
            return False
        y = self._hull.project(point)
        return all(_linalg.dot(a, y) >= 0 for a in self.facet_normals)

    def positive_functional(self):
        """A functional (projected coordinates) positive on every nonzero cone vector."""
        normals = self.facet_normals
        return tuple(sum(a[i] for a in normals) for i in range(self.dim))

    def __eq__(self, other):
        return isinstance(other, Cone) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def key(self):
        if not self.is_strictly_convex:
            return ("line",) + tuple(sorted(self.rays))
        return self.extremal_rays

    def __repr__(self):
        return f"Cone({[tuple(r) for r in self.rays]})"


def extremal_rays(cone):
    return list(cone.extremal_rays)


def triangulate_cone(cone, markers, keep_order=False):
    """Split a pointed cone into simplicial cones spanned by ``markers``.

    Markers must lie in the cone and include a generator of every extremal
    ray. They are placed in lexicographic order unless ``keep_order``;
    markers on an already used ray are skipped.
    """
    ext = cone.extremal_rays
    markers = [_as_point(m) for m in markers if any(m)]
    if not ext:
        return [Cone(())]
    for m in markers:
        if not cone.contains(m):
            raise InputError(f"marker {m} lies outside {cone!r}")
    marker_rays = {_linalg.primitive(m) for m in markers}
    missing = [r for r in ext if r not in marker_rays]
    if missing:
        raise InputError(f"extremal rays {missing} carry no marker")
    if not keep_order:
        markers = sorted(markers)
    h = cone.positive_functional()
    section = []
    for m in markers:
        y = cone.project(m)
        t = _linalg.dot(h, y)
        section.append(tuple(Fraction(x) / t for x in m))
    simplices = placing_triangulation(section)
    return [Cone([markers[i] for i in s]) for s in simplices]


def hrep_vertices(normals, offsets):
    """Vertices of the bounded polyhedron ``{y : normals . y <= offsets}``."""
    n = len(normals[0])
    verts = set()
    for combo in combinations(range(len(normals)), n):
        a = [normals[i] for i in combo]
        if _linalg.rank(a) < n:
            continue
        y = _linalg.solve(a, [offsets[i] for i in combo])
        if all(_linalg.dot(nr, y) <= b for nr, b in zip(normals, offsets)):
            verts.add(tuple(y))
    return sorted(verts)


def is_complete_fan(cones, rank):
    """Whether pointed full-dimensional cones tile Q^rank with disjoint interiors.

    Each cone is truncated by the box [-1, 1]^rank; the fan is complete iff
    the truncations have pairwise disjoint interiors and their volumes add up
    to the box volume 2^rank.
    """
    problems = []
    box_n = []
    box_b = []
    for i in range(rank):
        e = [Fraction(int(i == j)) for j in range(rank)]
        box_n += [e, [-x for x in e]]
        box_b += [Fraction(1), Fraction(1)]
    ineqs = []
    total = Fraction(0)
    for c in cones:
        if not c.is_strictly_convex:
            return False, [f"{c!r} is not strictly convex"]
        if c.dim != rank:
            return False, [f"{c!r} is not full dimensional"]
        normals = [[-Fraction(x) for x in a] for a in c.facet_normals]
        rows = [(a, Fraction(0)) for a in normals]
        ineqs.append(rows)
        verts = hrep_vertices(normals + box_n, [Fraction(0)] * len(normals) + box_b)
        total += Polytope(verts).euclidean_volume
    for i, j in combinations(range(len(cones)), 2):
        if _interiors_meet(ineqs[i], ineqs[j], rank):
            problems.append(f"interiors of {cones[i]!r} and {cones[j]!r} overlap")
    if total != 2 ** rank:
        problems.append(f"truncated volume {total} != {2 ** rank}")
    return not problems, problems


def face_fan(points):
    """Cones over the facets of conv(points); the origin must be an interior point.

    Each cone is spanned by the points on its facet, so every extremal ray
    carries one of the given points.
    """
    poly = Polytope(points)
    rank = poly.ambient_dim
    if poly.dim != rank or not poly.relint_contains([0] * rank):
        raise InputError("the origin is not an interior point of the hull")
    return [Cone([poly.generators[i] for i in sorted(f.members)]) for f in poly.facets]
