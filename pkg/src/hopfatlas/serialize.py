"""Canonical serialization: algebra files and witness files.

Algebra files are JSON with entries sorted lexicographically by index tuple
and coefficients in the exact-scalars format {"N": n, "coords": ["p/q", ...]};
dumping is deterministic, so files round-trip byte-identically.
"""

from __future__ import annotations

import json

from .hopf import FinHopf
from .linalg import LinearMap
from .scalars import FieldElem

FORMAT_VERSION = 1

_META_VEC_KEYS = ("claimed_grouplikes", "dual_grouplikes")
_META_BLOCK_KEYS = ("claimed_matrix_bases", "dual_matrix_bases")
_META_PLAIN_KEYS = ("family", "basis_labels", "dual_of")


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _vec_json(vec: dict):
    return [[i, c.to_json()] for i, c in sorted(vec.items())]


def _vec_load(entries, order):
    return {int(i): FieldElem.from_json(c) for i, c in entries}


def _dense_json(vec: dict, dim: int, order: int):
    zero = FieldElem.zero(order)
    return [vec.get(i, zero).to_json() for i in range(dim)]


def _dense_load(lst):
    out = {}
    for i, cj in enumerate(lst):
        c = FieldElem.from_json(cj)
        if c:
            out[i] = c
    return out


def algebra_to_json(h: FinHopf) -> dict:
    mult = []
    for (i, j), row in h.mult.items():
        for k, c in row.items():
            mult.append([i, j, k, c.to_json()])
    mult.sort(key=lambda e: (e[0], e[1], e[2]))
    comult = []
    for i, row in h.comult.items():
        for (j, k), c in row.items():
            comult.append([i, j, k, c.to_json()])
    comult.sort(key=lambda e: (e[0], e[1], e[2]))
    antipode = []
    for j, col in enumerate(h.antipode.columns):
        for i, c in col.items():
            antipode.append([i, j, c.to_json()])
    antipode.sort(key=lambda e: (e[0], e[1]))
    meta = {}
    for key in _META_PLAIN_KEYS:
        if key in h.metadata:
            meta[key] = h.metadata[key]
    for key in _META_VEC_KEYS:
        if key in h.metadata:
            meta[key] = [_vec_json(v) for v in h.metadata[key]]
    if "claimed_generators" in h.metadata:
        meta["claimed_generators"] = {
            name: _vec_json(v) for name, v in sorted(h.metadata["claimed_generators"].items())
        }
    for key in _META_BLOCK_KEYS:
        if key in h.metadata:
            meta[key] = [
                [[_vec_json(v) for v in row] for row in block]
                for block in h.metadata[key]
            ]
    return {
        "format": FORMAT_VERSION,
        "name": h.name,
        "dim": h.dim,
        "N": h.order,
        "mult": mult,
        "unit": _dense_json(h.unit, h.dim, h.order),
        "comult": comult,
        "counit": _dense_json(h.counit, h.dim, h.order),
        "antipode": antipode,
        "metadata": meta,
    }


def algebra_from_json(obj) -> FinHopf:
    order = obj["N"]
    dim = obj["dim"]
    mult = {}
    for i, j, k, cj in obj["mult"]:
        mult.setdefault((i, j), {})[k] = FieldElem.from_json(cj)
    comult = {}
    for i, j, k, cj in obj["comult"]:
        comult.setdefault(i, {})[(j, k)] = FieldElem.from_json(cj)
    cols = [dict() for _ in range(dim)]
    for i, j, cj in obj["antipode"]:
        cols[j][i] = FieldElem.from_json(cj)
    meta = {}
    raw = obj.get("metadata", {})
    for key in _META_PLAIN_KEYS:
        if key in raw:
            meta[key] = raw[key]
    for key in _META_VEC_KEYS:
        if key in raw:
            meta[key] = [_vec_load(v, order) for v in raw[key]]
    if "claimed_generators" in raw:
        meta["claimed_generators"] = {
            name: _vec_load(v, order) for name, v in raw["claimed_generators"].items()
        }
    for key in _META_BLOCK_KEYS:
        if key in raw:
            meta[key] = [
                [[_vec_load(v, order) for v in row] for row in block]
                for block in raw[key]
            ]
    return FinHopf(
        obj["name"], dim, order, mult, _dense_load(obj["unit"]), comult,
        _dense_load(obj["counit"]), LinearMap(order, dim, dim, cols), meta,
    )


def dump_algebra(h: FinHopf) -> str:
    return canonical_json(algebra_to_json(h))


def load_algebra(text: str) -> FinHopf:
    return algebra_from_json(json.loads(text))


def witness_to_json(w) -> dict:
    images = {}
    order = None
    for gen, vec in sorted(w.generator_images.items()):
        images[gen] = _vec_json(vec)
        for c in vec.values():
            order = c.order
    return {
        "format": FORMAT_VERSION,
        "source": w.source_family,
        "target": w.target if isinstance(w.target, str) else w.target.name,
        "N": order,
        "generator_images": images,
    }


def load_witness(text: str):
    from .isowitness import IsoWitness

    obj = json.loads(text)
    order = obj["N"]
    images = {
        gen: _vec_load(v, order) for gen, v in obj["generator_images"].items()
    }
    return IsoWitness(obj["source"], obj["target"], images)


def dump_witness(w) -> str:
    return canonical_json(witness_to_json(w))
