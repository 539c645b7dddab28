"""The moment complex of P(V) for a torus acting through a weight configuration.

Fixed components of P(V) are the projectivized weight spaces, one per
distinct character, and the line bundle O(1) has the character itself as its
weight there. A point's orbit closure meets exactly the components whose
weights are vertices of conv(supp(x)), so the cells of P(V) are the
convex-position subsets of the weights.
"""

import os
from dataclasses import dataclass, field
from itertools import combinations

from .errors import InputError, ResourceLimitError
from .lattice import Character
from .polyhedral import (DEFAULT_SUBDIVISION_POINT_LIMIT, Polytope,
                         convex_position_subsets, enumerate_subdivisions)


@dataclass(frozen=True)
class Limits:
    max_components: int = 10
    max_subdivision_points: int = DEFAULT_SUBDIVISION_POINT_LIMIT
    max_cells: int = 20

    ENV = {
        "max_components": "MOMENTCX_LIMIT_COMPONENTS",
        "max_subdivision_points": "MOMENTCX_LIMIT_POINTS",
        "max_cells": "MOMENTCX_LIMIT_CELLS",
    }

    @classmethod
    def from_env(cls, environ=None, **overrides):
        environ = os.environ if environ is None else environ
        values = {}
        for name, var in cls.ENV.items():
            if var in environ:
                try:
                    values[name] = int(environ[var])
                except ValueError:
                    raise InputError(f"{var} must be an integer, got {environ[var]!r}")
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


@dataclass(frozen=True)
class WeightConfiguration:
    """The weights of V with multiplicities; components are sorted by character."""

    rank: int
    components: tuple

    def __post_init__(self):
        if not isinstance(self.rank, int) or self.rank < 1:
            raise InputError(f"rank must be a positive integer, got {self.rank!r}")
        comps = []
        for chi, mult in self.components:
            chi = Character(chi)
            if len(chi) != self.rank:
                raise InputError(f"character {tuple(chi)} does not have length {self.rank}")
            if not isinstance(mult, int) or isinstance(mult, bool) or mult < 1:
                raise InputError(f"multiplicity of {tuple(chi)} must be a positive integer")
            comps.append((chi, mult))
        if not comps:
            raise InputError("a configuration needs at least one weight")
        chars = [c for c, _ in comps]
        if len(set(chars)) != len(chars):
            dup = next(c for c in chars if chars.count(c) > 1)
            raise InputError(f"character {tuple(dup)} listed twice; merge the entries "
                             f"and add their multiplicities")
        object.__setattr__(self, "components", tuple(sorted(comps)))

    @classmethod
    def from_weights(cls, weights, mults=None):
        """Convenience constructor from bare characters (ints allowed in rank 1)."""
        chars = [(w,) if isinstance(w, int) else tuple(w) for w in weights]
        mults = mults or [1] * len(chars)
        return cls(len(chars[0]), tuple(zip(chars, mults)))

    @property
    def weights(self):
        return tuple(c for c, _ in self.components)

    @property
    def multiplicities(self):
        return tuple(m for _, m in self.components)

    @property
    def dimension(self):
        """dim V, the sum of the multiplicities."""
        return sum(self.multiplicities)

    def __len__(self):
        return len(self.components)

    def index_of(self, chi):
        return self.weights.index(Character(chi))

    def check_support(self, support):
        support = tuple(sorted(set(support)))
        if not support:
            raise InputError("a support must be nonempty")
        for i in support:
            if not isinstance(i, int) or not 0 <= i < len(self):
                raise InputError(f"component index {i!r} out of range")
        return support


@dataclass(frozen=True, order=True)
class Cell:
    """A cell, named by the sorted indices of its vertex components."""

    dim: int
    components: tuple

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return len(self.components)

    def __str__(self):
        return "{" + ",".join(map(str, self.components)) + "}"


@dataclass(frozen=True)
class CellSubdivision:
    """A subdivision of a cell, in cell ids: maximal pieces and internal faces."""

    maximal: tuple
    internal: tuple = ()

    @property
    def collection(self):
        return self.maximal + self.internal

    @property
    def is_trivial(self):
        return len(self.maximal) == 1 and not self.internal


def fixed_components(cfg):
    """One fixed component per distinct weight, labelled by that weight."""
    return list(enumerate(cfg.weights))


def _polytope(cfg, comps):
    return Polytope([cfg.weights[i] for i in comps])


def cell_of_support(cfg, support):
    """The cell of a point with the given support: the hull vertices."""
    support = cfg.check_support(support)
    poly = _polytope(cfg, support)
    return Cell(poly.dim, tuple(support[i] for i in poly.vertex_indices))


def orbit_closure_cells(cfg, support):
    """Cells of the orbits in the closure of a point with this support."""
    support = cfg.check_support(support)
    poly = _polytope(cfg, support)
    cells = {Cell(poly.face_dimension(face), tuple(support[i] for i in poly.face_vertices(face)))
             for face in poly.faces()}
    return sorted(cells)


def orbit_dimension(cfg, support):
    support = cfg.check_support(support)
    return _polytope(cfg, support).dim


@dataclass(frozen=True)
class MomentComplex:
    config: WeightConfiguration
    cells: tuple
    faces: tuple
    subdivisions: tuple
    generic: int
    abstract: bool = False
    _ids: dict = field(default=None, compare=False, repr=False)
    _polys: dict = field(default=None, compare=False, repr=False)
    _closures: dict = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_ids", {c.components: i for i, c in enumerate(self.cells)})
        object.__setattr__(self, "_polys", {})
        object.__setattr__(self, "_closures", {})

    def __len__(self):
        return len(self.cells)

    def cell_id(self, cell):
        """Id of a cell given as an id, a :class:`Cell` or a component tuple."""
        if isinstance(cell, int):
            if not 0 <= cell < len(self.cells):
                raise InputError(f"cell id {cell} out of range")
            return cell
        comps = tuple(sorted(cell.components if isinstance(cell, Cell) else cell))
        try:
            return self._ids[comps]
        except KeyError:
            raise InputError(f"{{{','.join(map(str, comps))}}} is not a cell of the complex")

    def cell(self, cell):
        return self.cells[self.cell_id(cell)]

    def polytope(self, cell):
        cid = self.cell_id(cell)
        if cid not in self._polys:
            self._polys[cid] = _polytope(self.config, self.cells[cid].components)
        return self._polys[cid]

    @property
    def generic_cell(self):
        return self.cells[self.generic]

    @property
    def top_dimension(self):
        return self.cells[self.generic].dim

    def proper_faces(self, cell):
        return self.faces[self.cell_id(cell)]

    def is_face(self, small, big):
        """Face order: ``small`` is a face of ``big`` (possibly equal)."""
        s, b = self.cell_id(small), self.cell_id(big)
        return s == b or s in self.faces[b]

    def subdivisions_of(self, cell):
        return list(self.subdivisions[self.cell_id(cell)])

    def cell_of_support(self, support):
        return self.cell_id(cell_of_support(self.config, support))

    def orbit_closure_cells(self, support):
        key = self.config.check_support(support)
        if key not in self._closures:
            self._closures[key] = tuple(self.cell_id(c)
                                        for c in orbit_closure_cells(self.config, key))
        return list(self._closures[key])

    def supports(self):
        """All supports; for an abstract complex only those whose orbit-closure
        cells are all listed."""
        n = len(self.config)
        out = [s for size in range(1, n + 1) for s in combinations(range(n), size)]
        if self.abstract:
            out = [s for s in out
                   if all(c.components in self._ids for c in orbit_closure_cells(self.config, s))]
        return out


def _faces_and_subdivisions(cfg, cells, limits):
    ids = {c.components: i for i, c in enumerate(cells)}
    faces = []
    subdivisions = []
    for cell in cells:
        poly = _polytope(cfg, cell.components)
        fs = set()
        for face in poly.faces():
            comps = tuple(cell.components[i] for i in poly.face_vertices(face))
            if comps == cell.components:
                continue
            if comps not in ids:
                raise InputError(f"face {comps} of cell {cell.components} is not a cell")
            fs.add(ids[comps])
        faces.append(tuple(sorted(fs)))

        inside = [i for i, w in enumerate(cfg.weights) if poly.contains(w)]
        if len(inside) > limits.max_subdivision_points:
            raise ResourceLimitError(
                f"cell {cell} contains {len(inside)} weights, above the subdivision "
                f"limit of {limits.max_subdivision_points}")
        pieces = [c for c in cells if c.dim == cell.dim and set(c.components) <= set(inside)]
        if len(pieces) == 1:
            subdivisions.append((CellSubdivision((ids[cell.components],)),))
            continue
        weight_index = {tuple(w): i for i, w in enumerate(cfg.weights)}

        def to_cell(p):
            return ids[tuple(sorted(weight_index[tuple(int(x) for x in v)] for v in p.vertex_key))]

        found = enumerate_subdivisions(
            [cfg.weights[i] for i in inside],
            allowed_pieces=[_polytope(cfg, c.components) for c in pieces],
            limit=limits.max_subdivision_points)
        recs = [CellSubdivision(tuple(sorted(to_cell(p) for p in s.pieces)),
                                tuple(sorted(to_cell(f) for f in s.internal_faces)))
                for s in found]
        subdivisions.append(tuple(sorted(recs, key=lambda r: (len(r.maximal), r.maximal))))
    return tuple(faces), tuple(subdivisions)


def build_complex(cfg, limits=None):
    """All cells of P(V), their face relation and subdivision catalogue."""
    limits = limits or Limits()
    if len(cfg) > limits.max_components:
        raise ResourceLimitError(
            f"{len(cfg)} components exceed the limit of {limits.max_components}")
    cells = []
    for comps in convex_position_subsets(cfg.weights):
        cells.append(Cell(_polytope(cfg, comps).dim, comps))
    cells = tuple(sorted(cells))
    faces, subdivisions = _faces_and_subdivisions(cfg, cells, limits)
    generic_cell = cell_of_support(cfg, range(len(cfg)))
    generic = cells.index(generic_cell)
    return MomentComplex(cfg, cells, faces, subdivisions, generic)


def abstract_complex(cfg, cell_list, generic=None, limits=None):
    """A complex from an explicit cell list, checked only for polytopal consistency.

    Every listed cell must be in convex position and the list must be closed
    under taking faces. Whether the complex comes from an actual variety is
    not decided. ``generic`` defaults to the hull cell of all weights.
    """
    limits = limits or Limits()
    cells = set()
    for comps in cell_list:
        comps = cfg.check_support(comps)
        poly = _polytope(cfg, comps)
        if len(poly.vertex_indices) != len(comps):
            raise InputError(f"cell {comps} is not in convex position")
        cells.add(Cell(poly.dim, comps))
    cells = tuple(sorted(cells))
    faces, subdivisions = _faces_and_subdivisions(cfg, cells, limits)
    if generic is None:
        generic = cell_of_support(cfg, range(len(cfg))).components
    generic = tuple(sorted(generic))
    ids = [c.components for c in cells]
    if generic not in ids:
        raise InputError(f"generic cell {generic} is not among the listed cells")
    gid = ids.index(generic)
    if any(c.dim > cells[gid].dim for c in cells):
        raise InputError("the generic cell must have maximal dimension")
    return MomentComplex(cfg, cells, faces, subdivisions, gid, abstract=True)
