"""Toric manifold data attached to a fan.

Fixed points, isotropy weight bases, the chart atlas with its monomial
transition maps, the quotient presentation of the manifold, and the
reconstruction of a fan from fixed-point weight data.  The dictionary in
use throughout: the weights at a fixed point form the dual basis of the
corresponding full-dimensional cone's primitive generators.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import lattice
from .errors import InconsistentData, MalformedInput, NotMaximal, NotPure, NotUnimodular
from .fan import Fan, IndexSet, SimplicialComplex, make_fan, sigma, validate
from .lattice import Matrix, Vector


@dataclass(frozen=True)
class WeightBasis:
    """Isotropy weights at one fixed point; the rows are a Z-basis of the
    dual lattice, ordered to pair with the cone generators in ascending
    ray-index order."""

    fixed_point_id: str
    weights: Matrix

    def __post_init__(self):
        n = len(self.weights)
        if n == 0 or any(len(row) != n for row in self.weights):
            raise MalformedInput("weight basis must be square and nonempty")
        if lattice.det(self.weights) not in (1, -1):
            raise NotUnimodular(
                f"weights at {self.fixed_point_id} are not a Z-basis"
            )

    @property
    def dim(self) -> int:
        return len(self.weights)


@dataclass(frozen=True)
class WeightData:
    """One weight basis per fixed point."""

    dim: int
    bases: tuple[WeightBasis, ...]

    def __post_init__(self):
        if not self.bases:
            raise MalformedInput("weight data needs at least one fixed point")
        for b in self.bases:
            if b.dim != self.dim:
                raise MalformedInput(
                    f"weight basis at {b.fixed_point_id} has dimension {b.dim}, "
                    f"expected {self.dim}"
                )


@dataclass(frozen=True)
class MonomialMap:
    """Coordinate change w_j = prod_i z_i^(E_ji) for an exponent matrix E."""

    exponents: Matrix

    @classmethod
    def identity(cls, n: int) -> "MonomialMap":
        return cls(lattice.identity(n))

    def apply(self, coords):
        out = []
        for row in self.exponents:
            w = complex(1.0)
            for z, e in zip(coords, row):
                if e:
                    w *= z ** e
            out.append(w)
        return tuple(out)

    def after(self, inner: "MonomialMap") -> "MonomialMap":
        """The composite map applying `inner` first, then this map."""
        return MonomialMap(lattice.mat_mul(self.exponents, inner.exponents))

    def inverse(self) -> "MonomialMap":
        return MonomialMap(lattice.dual_basis(tuple(zip(*self.exponents))))


def fixed_points(f: Fan) -> tuple[IndexSet, ...]:
    """Index sets of the full-dimensional cones, in lexicographic order;
    these are in bijection with the fixed points."""
    n = f.ambient_dim
    return tuple(c for c in f.maximal_cones if len(c) == n)


def chart_label(indices) -> str:
    return "p" + "-".join(str(i) for i in sorted(indices))


def isotropy_weights(f: Fan, cone_indices) -> WeightBasis:
    """Weight basis of the fixed point of a full-dimensional cone."""
    c = tuple(sorted(cone_indices))
    if c not in f.maximal_cones or len(c) != f.ambient_dim:
        raise NotMaximal(
            f"{set(cone_indices) if cone_indices else '{}'} is not a "
            "full-dimensional maximal cone"
        )
    return WeightBasis(chart_label(c), lattice.dual_basis(f.generators(c)))


def transition(f: Fan, source, target) -> MonomialMap:
    """Exponent matrix of the chart change from `source` to `target`.

    Both charts' coordinates are characters of the torus, so the change is
    monomial with matrix A_target * A_source^(-1); the inverse of a weight
    matrix is the transposed generator matrix of its cone.
    """
    src = tuple(sorted(source))
    if src not in f.maximal_cones or len(src) != f.ambient_dim:
        raise NotMaximal(f"{set(source)} is not a full-dimensional maximal cone")
    a_target = isotropy_weights(f, target).weights
    g_source = f.generators(src)
    exponents = tuple(
        tuple(lattice.dot(arow, g) for g in g_source) for arow in a_target
    )
    return MonomialMap(exponents)


@dataclass(frozen=True)
class QuotientPresentation:
    """Structural data of the quotient construction: the manifold is the
    set of points with an allowed zero set, modulo the kernel of the
    monomial homomorphism given by the ray matrix."""

    ray_count: int
    ray_matrix: Matrix
    kernel_basis: tuple[Vector, ...]
    component_group: tuple[int, ...]
    allowed_zero_sets: SimplicialComplex


def quotient_presentation(f: Fan) -> QuotientPresentation:
    rays = f.rays
    kernel = lattice.integer_kernel_basis(lattice.transpose(rays)) if rays else ()
    factors = lattice.invariant_factors(rays) if rays else ()
    return QuotientPresentation(
        ray_count=f.ray_count,
        ray_matrix=rays,
        kernel_basis=kernel,
        component_group=tuple(d for d in factors if d > 1),
        allowed_zero_sets=sigma(f),
    )


def weight_data_from_fan(f: Fan) -> WeightData:
    """Weight bases of all fixed points; requires a pure fan so the data
    determines the fan completely."""
    n = f.ambient_dim
    if any(len(c) != n for c in f.maximal_cones):
        bad = next(c for c in f.maximal_cones if len(c) != n)
        raise NotPure(
            f"cone {set(bad) if bad else '{}'} is not contained in a "
            "full-dimensional cone"
        )
    return WeightData(n, tuple(isotropy_weights(f, c) for c in fixed_points(f)))


def fan_from_weight_data(data: WeightData) -> Fan:
    """Reconstruct the fan whose fixed-point weights are the given data.

    Rays are the deduplicated dual-basis vectors across fixed points; each
    fixed point contributes the cone spanned by its dual basis.  Raises
    InconsistentData when two fixed points produce the same cone or the
    assembled cones violate a fan axiom (then the data does not come from
    a toric manifold).
    """
    ray_index: dict[Vector, int] = {}
    rays: list[Vector] = []
    cone_owner: dict[IndexSet, str] = {}
    cones: list[IndexSet] = []
    for basis in data.bases:
        generators = lattice.dual_basis(basis.weights)
        indices = []
        for g in generators:
            if g not in ray_index:
                ray_index[g] = len(rays)
                rays.append(g)
            indices.append(ray_index[g])
        cone = tuple(sorted(indices))
        if cone in cone_owner:
            raise InconsistentData(
                f"fixed points {cone_owner[cone]!r} and {basis.fixed_point_id!r} "
                f"yield the same cone {set(cone)}"
            )
        cone_owner[cone] = basis.fixed_point_id
        cones.append(cone)
    result = make_fan(rays, cones, dim=data.dim)
    report = validate(result)
    if not report.ok:
        raise InconsistentData(
            "assembled cones violate the fan axioms", report
        )
    return result
