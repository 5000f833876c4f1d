"""Gradient-like torus flows in chart coordinates.

In a chart with weight basis alpha_1..alpha_n, the flow of a direction
(u, v) is the diagonal linear ODE

    dz_j/dr = 2*pi*(<u, alpha_j> + i <v, alpha_j>) z_j,

whose solution is the closed-form curve used throughout this module.
Exponent pairings are computed in exact rational arithmetic; only the
final exponential is floating point, so the signs deciding convergence
are never corrupted.  Trajectories are followed across charts: the stay
region of a chart is the unit polydisc, and leaving it triggers a switch
through the exact monomial transition map.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from . import lattice
from .errors import (
    NonFiniteState,
    NotComplete,
    NotMaximal,
    TrackingError,
    ZeroCoordinateStart,
)
from .fan import Fan, IndexSet, is_complete_facet, support_contains
from .toric import WeightBasis, isotropy_weights, transition

TWO_PI = 2.0 * math.pi
# chart-switch trigger: a coordinate modulus exceeding 1 + POLYDISC_MARGIN
POLYDISC_MARGIN = 1e-9
# the numerical stand-in for r -> -infinity
R_AT_INFINITY = -10.0
DEFAULT_TOL = 1e-6


@dataclass(frozen=True)
class Direction:
    """A rational flow direction: xi drives the gradient-like part, the
    optional angular part adds the rotational (circle-action) component."""

    xi: tuple[Fraction, ...]
    angular: tuple[Fraction, ...] | None = None


def direction(xi, angular=None) -> Direction:
    x = tuple(Fraction(t) for t in xi)
    a = None if angular is None else tuple(Fraction(t) for t in angular)
    if a is not None and len(a) != len(x):
        raise ValueError("angular part has a different length than xi")
    return Direction(x, a)


@dataclass(frozen=True)
class ChartPoint:
    chart: IndexSet
    coords: tuple[complex, ...]


def chart_point(chart, coords) -> ChartPoint:
    return ChartPoint(tuple(sorted(chart)), tuple(complex(z) for z in coords))


@dataclass(frozen=True)
class TrajectorySegment:
    chart: IndexSet
    r_start: float
    r_end: float
    start: tuple[complex, ...]
    end: tuple[complex, ...]

    @property
    def endpoint(self) -> ChartPoint:
        return ChartPoint(self.chart, self.end)


@dataclass(frozen=True)
class LimitReport:
    predicted_stratum: IndexSet
    numeric_limit: ChartPoint
    residual: float
    converged: bool


def limit_stratum(f: Fan, xi):
    """The index set I with xi in the relative interior of the cone over I;
    the flow of xi converges into the stratum of I as r -> -infinity.
    None only for directions outside the support of an incomplete fan."""
    return support_contains(f, tuple(Fraction(t) for t in xi))


def pairing_rates(weights: WeightBasis, d: Direction):
    """Exact pairings (<u, alpha_j>, <v, alpha_j>) per chart coordinate."""
    u = [lattice.dot(d.xi, row) for row in weights.weights]
    if d.angular is None:
        v = [Fraction(0)] * len(u)
    else:
        v = [lattice.dot(d.angular, row) for row in weights.weights]
    return list(zip(u, v))


def _factor(u, v, r: float) -> complex:
    """exp(2*pi*r*(u + i v)) with overflow mapped to an infinite modulus."""
    try:
        mag = math.exp(TWO_PI * r * float(u))
    except OverflowError:
        mag = math.inf
    phase = TWO_PI * r * float(v)
    return complex(mag * math.cos(phase), mag * math.sin(phase))


def curve_point(weights: WeightBasis, q: ChartPoint, d: Direction, r: float) -> ChartPoint:
    """Closed form of the flow after parameter r, started at q."""
    rates = pairing_rates(weights, d)
    coords = tuple(_factor(u, v, r) * z for (u, v), z in zip(rates, q.coords))
    return ChartPoint(q.chart, coords)


def integrate(weights: WeightBasis, q: ChartPoint, d: Direction,
              r_final: float, step: float) -> ChartPoint:
    """Classical fourth-order Runge-Kutta integration of the chart ODE.

    Matches curve_point to about 1e-8 relative accuracy when the total
    exponents |r_final * <u, alpha_j>| stay below 3 and the step is at
    most 1e-3 with |r_final| >= 1 or so.
    """
    if step <= 0:
        raise ValueError("step must be positive")
    rates = pairing_rates(weights, d)
    cs = [complex(TWO_PI * float(u), TWO_PI * float(v)) for u, v in rates]
    z = list(q.coords)
    nfull, h = divmod(abs(r_final), step)
    steps = [math.copysign(step, r_final)] * int(nfull)
    if h > 0:
        steps.append(math.copysign(h, r_final))
    for h in steps:
        k1 = [c * x for c, x in zip(cs, z)]
        k2 = [c * (x + 0.5 * h * k) for c, x, k in zip(cs, z, k1)]
        k3 = [c * (x + 0.5 * h * k) for c, x, k in zip(cs, z, k2)]
        k4 = [c * (x + h * k) for c, x, k in zip(cs, z, k3)]
        z = [x + h / 6.0 * (a + 2 * b + 2 * cc + dd)
             for x, a, b, cc, dd in zip(z, k1, k2, k3, k4)]
        if not all(cmath.isfinite(x) for x in z):
            raise NonFiniteState("integration overflowed; the direction expands out of the chart")
    return ChartPoint(q.chart, tuple(z))


def _max_modulus(coords) -> float:
    return max(abs(z) for z in coords)


def track(f: Fan, start: ChartPoint, d: Direction, r_final: float) -> list[TrajectorySegment]:
    """Follow the flow from r = 0 to r_final across charts.

    Within a chart the closed form is used, so switch times are exact
    threshold crossings of the coordinate moduli.  On a switch, the next
    chart is the maximal cone containing the target stratum that shares a
    facet with the current chart when one exists; otherwise any maximal
    cone whose polydisc contains the transformed point.
    """
    threshold = 1.0 + POLYDISC_MARGIN
    n = f.ambient_dim
    complete, _ = is_complete_facet(f)
    if not complete:
        raise NotComplete("trajectory tracking needs a complete fan")
    chart = tuple(sorted(start.chart))
    if chart not in f.maximal_cones or len(chart) != n:
        raise NotMaximal(f"start chart {set(start.chart)} is not a full-dimensional cone")
    if any(z == 0 for z in start.coords):
        raise ZeroCoordinateStart("start must lie in the free orbit (no zero coordinate)")

    forward = r_final > 0
    target_xi = tuple(-t for t in d.xi) if forward else d.xi
    target = limit_stratum(f, target_xi) or ()
    segments: list[TrajectorySegment] = []
    r = 0.0
    z = start.coords
    if r_final == 0:
        return [TrajectorySegment(chart, 0.0, 0.0, z, z)]
    s = 1.0 if forward else -1.0
    switches = 0
    max_switches = 8 * len(f.maximal_cones) + 16

    while True:
        weights = isotropy_weights(f, chart)
        rates = pairing_rates(weights, d)
        # exact threshold crossings of the growing coordinates
        t_event = None
        for (u, _), x in zip(rates, z):
            if u * (1 if forward else -1) <= 0:
                continue
            mod = abs(x)
            if mod == 0.0:
                continue  # underflowed coordinate: numerically stuck at 0
            if mod >= threshold:
                t_event = 0.0
                break
            t_cross = math.log(threshold / mod) / (TWO_PI * abs(float(u)))
            if t_event is None or t_cross < t_event:
                t_event = t_cross
        remaining = abs(r_final - r)
        if t_event is None or t_event >= remaining:
            end = curve_point(weights, ChartPoint(chart, z), d, r_final - r)
            segments.append(TrajectorySegment(chart, r, r_final, z, end.coords))
            return segments
        r_event = r + s * t_event
        at_event = curve_point(weights, ChartPoint(chart, z), d, s * t_event)
        segments.append(TrajectorySegment(chart, r, r_event, z, at_event.coords))

        candidates = [
            c for c in f.maximal_cones
            if len(c) == n and c != chart
            and set(target) <= set(c)
            and len(set(chart) & set(c)) == n - 1
        ]
        if not candidates:
            candidates = [c for c in f.maximal_cones if len(c) == n and c != chart]
        best = None
        for c in candidates:
            try:
                w = transition(f, chart, c).apply(at_event.coords)
            except ZeroDivisionError:
                continue
            if not all(cmath.isfinite(x) for x in w):
                continue
            key = (_max_modulus(w), c)
            if best is None or key < best[0]:
                best = (key, c, w)
        if best is None:
            raise NonFiniteState("no chart can represent the trajectory point")
        _, chart, z = best
        r = r_event
        switches += 1
        if switches > max_switches:
            raise TrackingError("chart switching failed to settle")


def verify_limit(f: Fan, xi, start: ChartPoint, tol: float = DEFAULT_TOL,
                 r_final: float = R_AT_INFINITY) -> LimitReport:
    """Numerically confirm the limit classification of a direction.

    Tracks the flow of xi to r_final and checks the coordinate pattern in
    the final chart: coordinates dual to the rays of the predicted stratum
    must be below tol in modulus, all others bounded away from zero.  The
    residual is the largest must-vanish modulus, or infinity when some
    must-survive coordinate dropped below tol.
    """
    stratum = limit_stratum(f, xi)
    segments = track(f, start, direction(xi), r_final)
    last = segments[-1]
    inside = set(stratum)
    residual = 0.0
    for ray, coord in zip(last.chart, last.end):
        if ray in inside:
            residual = max(residual, abs(coord))
        elif abs(coord) < tol:
            residual = math.inf
    return LimitReport(
        predicted_stratum=stratum,
        numeric_limit=last.endpoint,
        residual=residual,
        converged=residual <= tol,
    )


def vanishing_pattern(report: LimitReport, tol: float = DEFAULT_TOL) -> IndexSet:
    """Ray indices of the final chart whose coordinates vanished."""
    pt = report.numeric_limit
    return tuple(ray for ray, z in zip(pt.chart, pt.coords) if abs(z) <= tol)


def trajectory_samples(f: Fan, d: Direction, segments, per_segment: int = 32):
    """Evenly sampled (r, chart, coords) rows along a tracked trajectory,
    for line-oriented export."""
    rows = []
    for seg in segments:
        weights = isotropy_weights(f, seg.chart)
        q = ChartPoint(seg.chart, seg.start)
        span = seg.r_end - seg.r_start
        count = per_segment if span else 0
        for k in range(count + 1):
            r = seg.r_start + span * k / per_segment if span else seg.r_start
            pt = curve_point(weights, q, d, r - seg.r_start)
            rows.append((r, seg.chart, pt.coords))
    return rows
