"""Fans of unimodular cones.

A fan is stored as a ray table plus the index sets of its maximal cones;
the full face closure is materialized at construction, so downstream
queries (the simplicial complex, facet incidence, support membership)
are set lookups.  Axiom checking, the facet-pairing completeness
criterion, the ray-casting completeness oracle, and star subdivision all
live here.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import lattice
from .cone import Cone, RayTable, intersect_generators, make_table
from .errors import (
    DegenerateSubdivision,
    MalformedInput,
    NotMaximal,
    ZeroVector,
)

IndexSet = tuple[int, ...]


class Fan:
    """Immutable fan: ray table, maximal cones, derived face closure.

    Construction normalizes the listed cones (sorts, deduplicates, absorbs
    subsets) and rejects structurally broken input; it does not check the
    fan axioms themselves -- that is validate()'s job, so that invalid
    fans can be represented and reported on.
    """

    def __init__(self, table: RayTable, maximal_cones):
        cones = []
        for raw in maximal_cones:
            idx = tuple(sorted(raw))
            if len(set(idx)) != len(idx):
                raise MalformedInput(f"repeated ray index in cone {raw}")
            if idx and (idx[0] < 0 or idx[-1] >= len(table)):
                raise MalformedInput(f"ray index out of range in cone {raw}")
            cones.append(idx)
        if not cones:
            cones = [()]
        # keep only inclusion-maximal index sets
        cones = sorted(set(cones), key=len, reverse=True)
        maximal = []
        for c in cones:
            if not any(set(c) < set(other) for other in maximal):
                maximal.append(c)
        used = set().union(*(set(c) for c in maximal))
        if used != set(range(len(table))):
            missing = sorted(set(range(len(table))) - used)
            raise MalformedInput(f"rays {missing} appear in no maximal cone")
        closure = set()
        for c in maximal:
            for k in range(len(c) + 1):
                closure.update(combinations(c, k))
        self._table = table
        self._maximal = tuple(sorted(maximal))
        self._closure = frozenset(closure)
        self._weight_cache: dict[IndexSet, tuple | None] = {}

    @property
    def table(self) -> RayTable:
        return self._table

    @property
    def rays(self) -> tuple:
        return self._table.rays

    @property
    def ambient_dim(self) -> int:
        return self._table.dim

    @property
    def ray_count(self) -> int:
        return len(self._table)

    @property
    def maximal_cones(self) -> tuple[IndexSet, ...]:
        return self._maximal

    @property
    def cones(self) -> frozenset[IndexSet]:
        """Face closure: every cone of the fan as a sorted index set."""
        return self._closure

    def cone(self, indices) -> Cone:
        idx = tuple(sorted(indices))
        if idx not in self._closure:
            raise MalformedInput(f"{set(indices) if indices else '{}'} is not a cone of this fan")
        return Cone(self._table, idx)

    def generators(self, indices) -> tuple:
        return tuple(self._table[i] for i in indices)

    def chart_weights(self, indices):
        """Dual basis rows of a full-dimensional cone, cached; None when the
        cone is lower-dimensional or its generator matrix is singular."""
        idx = tuple(sorted(indices))
        if idx not in self._weight_cache:
            w = None
            if len(idx) == self.ambient_dim:
                gens = self.generators(idx)
                if lattice.det(gens) in (1, -1):
                    w = lattice.dual_basis(gens)
            self._weight_cache[idx] = w
        return self._weight_cache[idx]

    def __eq__(self, other):
        if not isinstance(other, Fan):
            return NotImplemented
        return fans_equal(self, other)

    __hash__ = None

    def __repr__(self):
        return (f"Fan(dim={self.ambient_dim}, rays={self.ray_count}, "
                f"maximal={len(self._maximal)})")


def make_fan(rays, maximal_cones, dim=None) -> Fan:
    return Fan(make_table(rays, dim), maximal_cones)


def fans_equal(a: Fan, b: Fan) -> bool:
    """Fan equality: same ray set and same maximal cones after the induced
    relabeling of ray indices."""
    if a.ambient_dim != b.ambient_dim or a.ray_count != b.ray_count:
        return False
    if set(a.rays) != set(b.rays):
        return False
    position = {ray: i for i, ray in enumerate(b.rays)}
    relabel = [position[ray] for ray in a.rays]
    remapped = {tuple(sorted(relabel[i] for i in c)) for c in a.maximal_cones}
    return remapped == set(b.maximal_cones)


@dataclass(frozen=True)
class Violation:
    axiom: str  # "face-closure" | "intersection" | "unimodular"
    witness: tuple
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...]

    def __str__(self):
        if self.ok:
            return "ok"
        lines = [f"{len(self.violations)} violation(s)"]
        for v in self.violations:
            lines.append(f"  [{v.axiom}] {v.witness}: {v.detail}")
        return "\n".join(lines)


def validate(f: Fan) -> ValidationReport:
    """Check the three fan axioms and report every violation with a witness.

    Face closure holds by construction but is re-verified; unimodularity is
    checked on the listed cones (faces of unimodular cones are unimodular);
    the intersection axiom is checked on pairs of listed cones, which
    suffices for simplicial fans.
    """
    violations = []
    independent = []
    for c in f.maximal_cones:
        gens = f.generators(c)
        if not gens:
            independent.append(c)
            continue
        if lattice.rational_rank(gens) != len(gens):
            violations.append(
                Violation("unimodular", (c,), "generators are linearly dependent")
            )
            continue
        independent.append(c)
        if not lattice.is_part_of_basis(gens):
            violations.append(
                Violation("unimodular", (c,), "generators are not part of a Z-basis")
            )
    for c, d in combinations(independent, 2):
        shared = tuple(sorted(set(c) & set(d)))
        expected = set(f.generators(shared))
        got = set(intersect_generators(f.generators(c), f.generators(d),
                                       f.ambient_dim))
        if got != expected:
            violations.append(
                Violation(
                    "intersection",
                    (c, d),
                    f"intersection has rays {sorted(got)}, "
                    f"common face has rays {sorted(expected)}",
                )
            )
    for c in f.cones:
        for k in range(len(c)):
            for sub in combinations(c, k):
                if sub not in f.cones:
                    violations.append(
                        Violation("face-closure", (c, sub), "face missing from fan")
                    )
    return ValidationReport(ok=not violations, violations=tuple(violations))


@dataclass(frozen=True)
class SimplicialComplex:
    """Subset-closed family of index sets on vertices 0..m-1."""

    vertex_count: int
    faces: frozenset[IndexSet]

    def __post_init__(self):
        if () not in self.faces:
            raise MalformedInput("a simplicial complex contains the empty face")

    @property
    def maximal_faces(self) -> tuple[IndexSet, ...]:
        return tuple(sorted(
            c for c in self.faces
            if not any(set(c) < set(d) for d in self.faces)
        ))


def sigma(f: Fan) -> SimplicialComplex:
    """The abstract simplicial complex of the fan: I is a face iff the rays
    indexed by I span a cone."""
    return SimplicialComplex(f.ray_count, f.cones)


def support_contains(f: Fan, v):
    """The unique I with v in the relative interior of the cone over I,
    or None when v lies outside the support of the fan.

    v may have integer or Fraction entries; all arithmetic is exact.
    """
    for c in f.maximal_cones:
        weights = f.chart_weights(c)
        if weights is not None:
            pairings = [lattice.dot(row, v) for row in weights]
            if all(p >= 0 for p in pairings):
                return tuple(i for i, p in zip(c, pairings) if p > 0)
            continue
        gens = f.generators(c)
        if not gens:
            if all(Fraction(x) == 0 for x in v):
                return ()
            continue
        coeffs = lattice.solve_combination(gens, v)
        if coeffs is not None and all(a >= 0 for a in coeffs):
            return tuple(i for i, a in zip(c, coeffs) if a > 0)
    return None


@dataclass(frozen=True)
class FacetReport:
    complete: bool
    pure: bool
    facet_counts: tuple[tuple[IndexSet, int], ...]
    undominated: tuple[IndexSet, ...]

    def __str__(self):
        lines = [f"complete: {self.complete}", f"pure: {self.pure}"]
        for c in self.undominated:
            lines.append(f"  cone {set(c) if c else '{}'} not contained in a full-dimensional cone")
        for facet, count in self.facet_counts:
            mark = "" if count == 2 else "  <-- expected 2"
            lines.append(f"  facet {set(facet) if facet else '{0}'}: {count} maximal cone(s){mark}")
        return "\n".join(lines)


def is_complete_facet(f: Fan) -> tuple[bool, FacetReport]:
    """Facet-pairing completeness test.

    A valid fan is complete iff it has at least one maximal cone, is pure
    of top dimension, and every codimension-one cone is a face of exactly
    two full-dimensional cones.
    """
    n = f.ambient_dim
    top = [c for c in f.maximal_cones if len(c) == n]
    undominated = tuple(c for c in f.maximal_cones if len(c) < n)
    pure = not undominated
    counts = []
    for facet in sorted(c for c in f.cones if len(c) == n - 1):
        inc = sum(1 for c in top if set(facet) <= set(c))
        counts.append((facet, inc))
    complete = bool(top) and pure and all(k == 2 for _, k in counts)
    return complete, FacetReport(complete, pure, tuple(counts), undominated)


RAYCAST_BOUND = 97


def is_complete_raycast(f: Fan, samples: int = 10000, seed: int = 0):
    """Monte-Carlo test of the completeness definition itself.

    Samples integer directions with entries uniform in [-B, B] (B = 97,
    zero vector rejected) and classifies each with exact arithmetic.
    Returns (True, None) when every sample lies in the support, else
    (False, witness_direction).  Deterministic for a given seed.
    """
    if samples < 1:
        raise ValueError("need at least one sample")
    rng = random.Random(seed)
    n = f.ambient_dim
    for _ in range(samples):
        v = tuple(rng.randint(-RAYCAST_BOUND, RAYCAST_BOUND) for _ in range(n))
        while not any(v):
            v = tuple(rng.randint(-RAYCAST_BOUND, RAYCAST_BOUND) for _ in range(n))
        if support_contains(f, v) is None:
            return False, v
    return True, None


def star_subdivide(f: Fan, cone_indices) -> Fan:
    """Blow-up: replace a maximal cone by the cones joining its facets to
    the new ray at the (primitive) sum of its generators."""
    c = tuple(sorted(cone_indices))
    if c not in f.maximal_cones:
        raise NotMaximal(f"{set(cone_indices) if cone_indices else '{}'} is not a maximal cone")
    if len(c) < 2:
        raise DegenerateSubdivision(
            "star subdivision needs a cone with at least two generators"
        )
    try:
        new_ray = lattice.primitive(
            tuple(map(sum, zip(*f.generators(c))))
        )
    except ZeroVector:
        raise DegenerateSubdivision("generators sum to zero") from None
    if new_ray in set(f.rays):
        raise DegenerateSubdivision(f"sum ray {new_ray} already present")
    j = f.ray_count
    replacement = [tuple(sorted(set(c) - {i} | {j})) for i in c]
    maximal = [d for d in f.maximal_cones if d != c] + replacement
    return Fan(make_table(f.rays + (new_ray,), f.ambient_dim), maximal)
