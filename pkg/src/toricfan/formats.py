"""Text formats for fans and weight data.

Both documents are JSON (hence whitespace-insensitive).  Fan files carry
`dim`, `rays`, and `maximal_cones`; weight files carry `dim` and a list of
`fixed_points` records `{id, weights}`.  Input rays and weight rows need
not be primitive or tidy: rays are normalized with a warning.
"""

from __future__ import annotations

import json

from . import lattice
from .errors import MalformedInput, ZeroVector
from .fan import Fan, make_fan
from .toric import WeightBasis, WeightData


def _int_vector(obj, what):
    if not isinstance(obj, list) or not obj:
        raise MalformedInput(f"{what} must be a nonempty list of integers")
    out = []
    for x in obj:
        if isinstance(x, bool) or not isinstance(x, int):
            raise MalformedInput(f"{what} must contain integers, got {x!r}")
        out.append(x)
    return tuple(out)


def _document(text, what):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedInput(f"unparseable {what} document: {e}") from None
    if not isinstance(doc, dict):
        raise MalformedInput(f"{what} document must be a JSON object")
    return doc


def _dim_of(doc):
    dim = doc.get("dim")
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise MalformedInput("field 'dim' must be a positive integer")
    return dim


def parse_fan(text) -> tuple[Fan, list[str]]:
    """Parse a fan document; returns the fan and normalization warnings."""
    doc = _document(text, "fan")
    dim = _dim_of(doc)
    rays_field = doc.get("rays")
    cones_field = doc.get("maximal_cones")
    if not isinstance(rays_field, list) or not isinstance(cones_field, list):
        raise MalformedInput("fan document needs list fields 'rays' and 'maximal_cones'")
    warnings = []
    rays = []
    for k, raw in enumerate(rays_field):
        ray = _int_vector(raw, f"ray {k}")
        if len(ray) != dim:
            raise MalformedInput(f"ray {k} has length {len(ray)}, expected {dim}")
        try:
            prim = lattice.primitive(ray)
        except ZeroVector:
            raise MalformedInput(f"ray {k} is the zero vector") from None
        if prim != ray:
            warnings.append(f"ray {k} {list(ray)} normalized to {list(prim)}")
        rays.append(prim)
    cones = []
    for k, raw in enumerate(cones_field):
        if not isinstance(raw, list):
            raise MalformedInput(f"maximal cone {k} must be a list of ray indices")
        cone = []
        for x in raw:
            if isinstance(x, bool) or not isinstance(x, int):
                raise MalformedInput(f"maximal cone {k} must contain integers")
            cone.append(x)
        cones.append(tuple(cone))
    return make_fan(rays, cones, dim=dim), warnings


def dump_fan(f: Fan) -> str:
    doc = {
        "dim": f.ambient_dim,
        "rays": [list(r) for r in f.rays],
        "maximal_cones": [list(c) for c in f.maximal_cones],
    }
    return json.dumps(doc, indent=2) + "\n"


def parse_weight_data(text) -> WeightData:
    doc = _document(text, "weight data")
    dim = _dim_of(doc)
    records = doc.get("fixed_points")
    if not isinstance(records, list) or not records:
        raise MalformedInput("weight document needs a nonempty list 'fixed_points'")
    bases = []
    for k, rec in enumerate(records):
        if not isinstance(rec, dict):
            raise MalformedInput(f"fixed point {k} must be an object")
        label = rec.get("id", f"p{k}")
        if not isinstance(label, str):
            raise MalformedInput(f"fixed point {k}: 'id' must be a string")
        rows = rec.get("weights")
        if not isinstance(rows, list) or len(rows) != dim:
            raise MalformedInput(f"fixed point {k}: 'weights' must list {dim} covectors")
        weights = []
        for row in rows:
            cov = _int_vector(row, f"weight of fixed point {k}")
            if len(cov) != dim:
                raise MalformedInput(
                    f"fixed point {k}: weight {list(cov)} has length {len(cov)}, expected {dim}"
                )
            weights.append(cov)
        bases.append(WeightBasis(label, tuple(weights)))
    return WeightData(dim, tuple(bases))


def dump_weight_data(data: WeightData) -> str:
    doc = {
        "dim": data.dim,
        "fixed_points": [
            {"id": b.fixed_point_id, "weights": [list(row) for row in b.weights]}
            for b in data.bases
        ],
    }
    return json.dumps(doc, indent=2) + "\n"
