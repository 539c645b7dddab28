"""The invariant suite run by ``momentcx verify`` on one configuration.

Each check returns a :class:`CheckResult`; a failing check carries the first
counterexample found, in the order the check enumerates its instances.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

from .equivariant import (cell_fingerprint, orbit_fingerprint, support_class,
                          verify_fan_vanishing, verify_fingerprint_additivity,
                          vertex_representation)
from .errors import PreconditionError
from .measures import (NORMALIZED, enumerate_measures, git_measure, is_geometric,
                       is_valid, u_supports)
from .polyhedral import face_fan


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    checked: int
    detail: str = ""
    counterexample: object = None


def _unit_vectors(rank):
    return [tuple(int(i == j) for j in range(rank)) for i in range(rank)]


def symmetric_phi(pairs, rank):
    """Extend a weight list by the negatives and +-e_k (multiplicity 1) where absent."""
    out = dict(pairs)
    extra = [tuple(-x for x in chi) for chi, _ in pairs]
    for e in _unit_vectors(rank):
        extra += [e, tuple(-x for x in e)]
    for chi in extra:
        out.setdefault(chi, 1)
    return sorted(out.items())


def check_fan_vanishing(cx):
    """At each component: the face fan of the symmetrized normal weights sums to zero."""
    cfg = cx.config
    for i in range(len(cfg)):
        phi = symmetric_phi(vertex_representation(cfg, i), cfg.rank)
        fan = face_fan([chi for chi, _ in phi])
        total = verify_fan_vanishing(fan, phi, rank=cfg.rank)
        if not total.is_zero():
            return CheckResult("fan vanishing", False, i + 1, f"sum = {total}",
                               {"component": i, "cones": [c.extremal_rays for c in fan]})
    return CheckResult("fan vanishing", True, len(cfg))


def check_fingerprint_additivity(cx):
    count = 0
    for cid, subs in enumerate(cx.subdivisions):
        for sub in subs:
            count += 1
            residual = verify_fingerprint_additivity(cx, cid, sub)
            if not residual.is_zero():
                return CheckResult("fingerprint additivity", False, count,
                                   f"residual {residual}",
                                   {"cell": list(cx.cells[cid].components),
                                    "maximal": [list(cx.cells[j].components)
                                                for j in sub.maximal]})
    return CheckResult("fingerprint additivity", True, count)


def check_class_by_cell(cx):
    """Classes computed from supports agree with each other and with the cell's."""
    by_cell = {}
    supports = cx.supports()
    for s in supports:
        direct = orbit_fingerprint(cx, s)
        via_cell = support_class(cx, s)
        cell = cx.cell_of_support(s)
        first = by_cell.setdefault(cell, (s, direct))
        if direct != via_cell or direct != first[1]:
            return CheckResult("class determined by cell", False, len(by_cell),
                               f"support {list(s)} gives {direct}",
                               {"support": list(s), "other": list(first[0]),
                                "cell": list(cx.cells[cell].components)})
    return CheckResult("class determined by cell", True, len(supports))


def check_nonvanishing(cx):
    for cid, cell in enumerate(cx.cells):
        fp = cell_fingerprint(cx, cid)
        for i in cell.components:
            if fp[i].is_zero():
                return CheckResult("vertex classes nonzero", False, cid + 1,
                                   f"zero class at component {i}",
                                   {"cell": list(cell.components), "component": i})
    return CheckResult("vertex classes nonzero", True, len(cx.cells))


def sample_chambers(cx, samples=20, seed=0):
    """Generic characters in the moment polytope: random positive combinations
    of all weights, dropping those that hit a wall."""
    rng = random.Random(seed)
    weights = cx.config.weights
    out = []
    for _ in range(samples):
        coeffs = [rng.randint(1, 9) for _ in weights]
        total = sum(coeffs)
        chi = tuple(Fraction(sum(c * w[k] for c, w in zip(coeffs, weights)), total)
                    for k in range(cx.config.rank))
        try:
            out.append((chi, git_measure(cx, chi)))
        except PreconditionError:
            continue
    return out


def check_git_oracle(cx, enumerated, samples=20, seed=0):
    keys = {m.key for m in enumerated}
    found = sample_chambers(cx, samples, seed)
    for chi, m in found:
        if not (is_valid(m, NORMALIZED) and is_geometric(m) and m.key in keys):
            return CheckResult("GIT chambers", False, len(found),
                               f"chi = {[str(x) for x in chi]}",
                               {"chi": [str(x) for x in chi],
                                "cells": [list(c.components) for c in m.cells()]})
    return CheckResult("GIT chambers", True, len(found))


def check_openness(enumerated):
    for m in enumerated:
        if not u_supports(m).is_open:
            return CheckResult("measures open", False, len(enumerated), "",
                               {"cells": [list(c.components) for c in m.cells()]})
    return CheckResult("measures open", True, len(enumerated))


def check_distinctness(enumerated):
    seen = {}
    for m in enumerated:
        fam = u_supports(m).supports
        if fam in seen:
            return CheckResult("support families distinct", False, len(enumerated), "",
                               {"first": [list(c.components) for c in seen[fam].cells()],
                                "second": [list(c.components) for c in m.cells()]})
        seen[fam] = m
    return CheckResult("support families distinct", True, len(enumerated))


def run_all(cx, limits=None, samples=20, seed=0):
    enumerated = enumerate_measures(cx, NORMALIZED, limits=limits)
    return [
        check_fan_vanishing(cx),
        check_fingerprint_additivity(cx),
        check_class_by_cell(cx),
        check_nonvanishing(cx),
        check_git_oracle(cx, enumerated, samples, seed),
        check_openness(enumerated),
        check_distinctness(enumerated),
    ]
