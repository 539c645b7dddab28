"""Equivariant cycle classes of orbit closures, computed in Sym X*(T).

A weight list ``phi`` is a sequence of ``(character, multiplicity)`` pairs
describing a representation V. The class of a cone of weights is the torsion
order of the lattice quotient times the orbit-closure class; it is computed
by triangulating the cone into simplicial pieces, where the class is an
explicit product of linear forms.

Classes on P(V) are represented by their restrictions to the fixed
components (localization fingerprints). At a component with multiplicity
greater than one only the H*(BT) factor is kept.
"""

from dataclasses import dataclass

from . import _linalg
from .errors import ConePreconditionError, InputError
from .lattice import span_rank, torsion_order
from .moment_complex import Cell, WeightConfiguration, cell_of_support
from .poly import SymPolynomial, char_to_linear
from .polyhedral import Cone, is_complete_fan, triangulate_cone


def _phi_pairs(phi):
    if isinstance(phi, WeightConfiguration):
        return [(tuple(c), m) for c, m in phi.components]
    if hasattr(phi, "items"):
        phi = phi.items()
    out = []
    for entry in phi:
        chi, mult = entry
        chi = (chi,) if isinstance(chi, int) else tuple(chi)
        if any(chi == c for c, _ in out):
            raise InputError(f"weight {chi} listed twice; add the multiplicities")
        out.append((chi, mult))
    return out


def _infer_rank(pairs, rays=(), rank=None):
    if rank is not None:
        return rank
    for chi, _ in pairs:
        return len(chi)
    for r in rays:
        return len(r)
    raise InputError("cannot infer the rank from an empty weight list; pass rank=")


def _check_phi(pairs):
    for chi, _ in pairs:
        if not any(chi):
            raise ConePreconditionError("the zero character may not occur among the weights")


def simplicial_cone_class(subset, phi, rank=None):
    """Class of the orbit closure of a point supported on a simplicial set of weights.

    Product over weights outside ``subset`` of chi^m, times the product over
    weights inside of chi^(m-1).
    """
    pairs = _phi_pairs(phi)
    subset = [(s,) if isinstance(s, int) else tuple(s) for s in subset]
    r = _infer_rank(pairs, subset, rank)
    _check_phi(pairs)
    mult = dict(pairs)
    for s in subset:
        if s not in mult:
            raise ConePreconditionError(f"{s} is not a weight of the representation")
    if len(set(subset)) != len(subset) or span_rank(subset) != len(subset):
        raise ConePreconditionError(f"weights {subset} are not linearly independent")
    chosen = set(subset)
    out = SymPolynomial.one(r)
    for chi, m in pairs:
        out = out * char_to_linear(chi) ** (m - 1 if chi in chosen else m)
    return out


def _ray_markers(ext, pairs):
    markers = []
    for e in ext:
        on_ray = [chi for chi, _ in pairs if any(chi) and _linalg.primitive(chi) == e]
        if not on_ray:
            raise ConePreconditionError(f"extremal ray {e} contains no weight of the representation")
        # the shortest weight on the ray; any choice gives the same class
        markers.append(min(on_ray, key=lambda chi: (max(abs(x) for x in chi), chi)))
    return markers


def cone_class(rays, phi, markers=None, keep_order=False, rank=None):
    """Cycle class of the cone spanned by ``rays`` in the representation ``phi``.

    The cone is triangulated using weights of ``phi`` (by default one on each
    extremal ray) and the torsion-weighted simplicial classes are summed.
    """
    pairs = _phi_pairs(phi)
    if isinstance(rays, Cone):
        rays = [tuple(int(x) for x in g) for g in rays.rays]
    rays = [(x,) if isinstance(x, int) else tuple(x) for x in rays]
    r = _infer_rank(pairs, rays, rank)
    _check_phi(pairs)
    cone = Cone(rays)
    if not cone.is_strictly_convex:
        raise ConePreconditionError(f"cone spanned by {rays} is not strictly convex")
    ext = cone.extremal_rays
    if markers is None:
        markers = _ray_markers(ext, pairs)
    else:
        markers = [(x,) if isinstance(x, int) else tuple(x) for x in markers]
        weights = {chi for chi, _ in pairs}
        for mk in markers:
            if mk not in weights:
                raise ConePreconditionError(f"marker {mk} is not a weight of the representation")
    total = SymPolynomial.zero(r)
    for piece in triangulate_cone(cone, markers, keep_order=keep_order):
        gens = [tuple(int(x) for x in g) for g in piece.rays]
        total = total + torsion_order(gens) * simplicial_cone_class(gens, pairs, rank=r)
    return total


def verify_fan_vanishing(cones, phi, rank=None):
    """Sum of cone classes over a complete fan; zero when the theory holds.

    Raises :class:`InputError` if the cones do not form a complete fan.
    """
    pairs = _phi_pairs(phi)
    cones = [c if isinstance(c, Cone) else Cone(c) for c in cones]
    r = _infer_rank(pairs, [c.rays[0] for c in cones if c.rays], rank)
    ok, problems = is_complete_fan(cones, r)
    if not ok:
        raise InputError("not a complete fan: " + "; ".join(problems))
    total = SymPolynomial.zero(r)
    for c in cones:
        total = total + cone_class([tuple(int(x) for x in g) for g in c.rays], pairs, rank=r)
    return total


@dataclass(frozen=True)
class Fingerprint:
    """Restrictions of a class to the fixed components, one polynomial each."""

    entries: tuple

    def __getitem__(self, i):
        return self.entries[i]

    def __len__(self):
        return len(self.entries)

    def __add__(self, other):
        return Fingerprint(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other):
        return Fingerprint(tuple(a - b for a, b in zip(self.entries, other.entries)))

    def is_zero(self):
        return all(e.is_zero() for e in self.entries)

    def as_dict(self):
        return {i: e for i, e in enumerate(self.entries) if not e.is_zero()}

    def __str__(self):
        return "(" + ", ".join(str(e) for e in self.entries) + ")"


def vertex_representation(cfg, i):
    """Normal weights at component ``i``: differences to the other weights."""
    wi = cfg.weights[i]
    return [(tuple(w - x for w, x in zip(wj, wi)), m)
            for j, (wj, m) in enumerate(cfg.components) if j != i]


def _resolve_cell(cx, c):
    if isinstance(c, Cell):
        return c
    return cx.cell(c)


def cell_fingerprint(cx, c):
    """Localized class of a cell: the vertex-cone class at each of its vertices."""
    cfg = cx.config
    cell = _resolve_cell(cx, c)
    poly = cx.polytope(cell.components)
    entries = [SymPolynomial.zero(cfg.rank) for _ in range(len(cfg))]
    for local, i in enumerate(cell.components):
        wi = cfg.weights[i]
        rays = [tuple(a - b for a, b in zip(cfg.weights[cell.components[j]], wi))
                for j in poly.edges_at(local)]
        entries[i] = cone_class(rays, vertex_representation(cfg, i), rank=cfg.rank)
    return Fingerprint(tuple(entries))


def verify_fingerprint_additivity(cx, c, subdivision):
    """Per-component residual class(c) - sum of classes of the maximal pieces."""
    residual = cell_fingerprint(cx, c)
    for piece in subdivision.maximal:
        residual = residual - cell_fingerprint(cx, piece)
    return residual


def support_class(cx, support):
    """Fingerprint of a point with this support: that of its cell."""
    return cell_fingerprint(cx, cell_of_support(cx.config, support))


def orbit_fingerprint(cx, support):
    """Fingerprint computed from the support itself rather than from its cell.

    At each hull vertex i the cone is spanned by all differences to the other
    support weights and triangulated through every one of them, in support
    order. Agreement with :func:`support_class` is a consistency check.
    """
    cfg = cx.config
    support = cfg.check_support(support)
    cell = cell_of_support(cfg, support)
    entries = [SymPolynomial.zero(cfg.rank) for _ in range(len(cfg))]
    for i in cell.components:
        wi = cfg.weights[i]
        diffs, seen = [], set()
        for j in support:
            d = tuple(a - b for a, b in zip(cfg.weights[j], wi))
            if j != i and _linalg.primitive(d) not in seen:
                seen.add(_linalg.primitive(d))
                diffs.append(d)
        entries[i] = cone_class(diffs, vertex_representation(cfg, i), markers=diffs,
                                keep_order=True, rank=cfg.rank)
    return Fingerprint(tuple(entries))
