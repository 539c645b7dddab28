"""JSON configuration files and machine-readable reports.

A configuration is one object::

    {"rank": 1,
     "weights": [{"chi": [0], "mult": 1}, {"chi": [1], "mult": 1}],
     "limits": {"maxComponents": 10, "maxSubdivisionPoints": 8, "maxCells": 20},
     "cells": [[0], [1], [0, 1]]}

``limits`` and ``cells`` are optional. ``cells`` switches to the abstract
mode, where the listed cells (indices into the ``weights`` list as written)
replace the convex-position enumeration. Internally components are sorted by
character and reports use that order. Rationals are written as "p/q".
"""

import hashlib
import json
from fractions import Fraction

from .errors import InputError
from .measures import MomentMeasure, u_supports, is_geometric
from .moment_complex import (Cell, CellSubdivision, Limits, MomentComplex,
                             WeightConfiguration)

LIMIT_KEYS = {
    "maxComponents": "max_components",
    "maxSubdivisionPoints": "max_subdivision_points",
    "maxCells": "max_cells",
}


def _fail(path, message):
    raise InputError(f"{path}: {message}")


def _int(value, path, minimum=None):
    if not isinstance(value, int) or isinstance(value, bool):
        _fail(path, f"expected an integer, got {json.dumps(value)}")
    if minimum is not None and value < minimum:
        _fail(path, f"expected an integer >= {minimum}, got {value}")
    return value


def _list(value, path):
    if not isinstance(value, list):
        _fail(path, f"expected a list, got {json.dumps(value)}")
    return value


def parse_config(data):
    """Validate a decoded config object. Returns (config, limit overrides, cells)."""
    if not isinstance(data, dict):
        _fail("$", "expected an object with keys rank and weights")
    unknown = set(data) - {"rank", "weights", "limits", "cells", "generic"}
    if unknown:
        _fail("$", f"unknown keys {sorted(unknown)}")
    if "rank" not in data:
        _fail("$.rank", "missing")
    rank = _int(data["rank"], "$.rank", 1)
    if "weights" not in data:
        _fail("$.weights", "missing")
    comps = []
    seen = {}
    for k, entry in enumerate(_list(data["weights"], "$.weights")):
        where = f"$.weights[{k}]"
        if not isinstance(entry, dict) or "chi" not in entry:
            _fail(where, 'expected an object {"chi": [...], "mult": n}')
        chi = tuple(_int(x, f"{where}.chi[{j}]") for j, x in
                    enumerate(_list(entry["chi"], f"{where}.chi")))
        if len(chi) != rank:
            _fail(f"{where}.chi", f"has length {len(chi)}, expected rank {rank}")
        mult = _int(entry.get("mult", 1), f"{where}.mult", 1)
        if chi in seen:
            _fail(where, f"character {list(chi)} already given at $.weights[{seen[chi]}]; "
                         f"merge the entries and add their multiplicities")
        seen[chi] = k
        comps.append((chi, mult))
    if not comps:
        _fail("$.weights", "needs at least one weight")
    cfg = WeightConfiguration(rank, tuple(comps))

    limits = {}
    raw = data.get("limits", {})
    if not isinstance(raw, dict):
        _fail("$.limits", "expected an object")
    for key, value in raw.items():
        if key not in LIMIT_KEYS:
            _fail(f"$.limits.{key}", f"unknown limit; use one of {sorted(LIMIT_KEYS)}")
        limits[LIMIT_KEYS[key]] = _int(value, f"$.limits.{key}", 1)

    def index_set(value, where):
        out = []
        for j, x in enumerate(_list(value, where)):
            x = _int(x, f"{where}[{j}]", 0)
            if x >= len(comps):
                _fail(f"{where}[{j}]", f"index {x} out of range for {len(comps)} weights")
            out.append(cfg.index_of(comps[x][0]))
        return tuple(sorted(out))

    cells = None
    if "cells" in data:
        cells = [index_set(c, f"$.cells[{k}]")
                 for k, c in enumerate(_list(data["cells"], "$.cells"))]
    generic = index_set(data["generic"], "$.generic") if "generic" in data else None
    return cfg, limits, (cells, generic)


def loads_config(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"line {exc.lineno} column {exc.colno}: {exc.msg}")
    return parse_config(data)


def load_config(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}")
    return loads_config(text)


def config_to_dict(cfg):
    return {"rank": cfg.rank,
            "weights": [{"chi": list(chi), "mult": m} for chi, m in cfg.components]}


def canonical_json(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def digest(cfg):
    """Short stable hash of a configuration (independent of input order)."""
    return hashlib.sha256(canonical_json(config_to_dict(cfg)).encode()).hexdigest()[:16]


def fraction_str(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def limits_from(overrides, environ=None):
    return Limits.from_env(environ, **overrides)


# -- complexes ---------------------------------------------------------------

def complex_to_dict(cx):
    return {
        "rank": cx.config.rank,
        "components": [{"index": i, "chi": list(chi), "mult": m}
                       for i, (chi, m) in enumerate(cx.config.components)],
        "cells": [{"id": i, "components": list(c.components), "dim": c.dim,
                   "faces": list(cx.faces[i]),
                   "subdivisions": [{"maximal": list(s.maximal), "internal": list(s.internal)}
                                    for s in cx.subdivisions[i]]}
                  for i, c in enumerate(cx.cells)],
        "generic": cx.generic,
        "abstract": cx.abstract,
    }


def complex_from_dict(d):
    try:
        cfg = WeightConfiguration(d["rank"], tuple((tuple(c["chi"]), c["mult"])
                                                   for c in d["components"]))
        cells = tuple(Cell(c["dim"], tuple(c["components"])) for c in d["cells"])
        faces = tuple(tuple(c["faces"]) for c in d["cells"])
        subs = tuple(tuple(CellSubdivision(tuple(s["maximal"]), tuple(s["internal"]))
                           for s in c["subdivisions"]) for c in d["cells"])
        return MomentComplex(cfg, cells, faces, subs, d["generic"], d.get("abstract", False))
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed complex report: {exc}")


# -- measures ----------------------------------------------------------------

def measure_to_dict(m, mid=None):
    cx = m.complex
    family = u_supports(m)
    out = {"ones": list(m.key),
           "cells": [list(cx.cells[i].components) for i in m.key],
           "mode": m.mode,
           "geometric": is_geometric(m),
           "open": family.is_open,
           "supports": [list(s) for s in family.supports]}
    if mid is not None:
        out["id"] = mid
    return out


def measures_to_dict(measures, mode):
    return {"mode": mode,
            "count": len(measures),
            "geometricCount": sum(is_geometric(m) for m in measures),
            "measures": [measure_to_dict(m, i) for i, m in enumerate(measures)]}


def measures_from_dict(d, cx):
    try:
        return [MomentMeasure(cx, frozenset(m["ones"]), m.get("mode", d["mode"]))
                for m in d["measures"]]
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed measures report: {exc}")
