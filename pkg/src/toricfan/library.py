"""Builtin fan library: projective spaces, Hirzebruch surfaces, and their
star subdivisions.  Used as the shared test corpus and exposed by the CLI."""

from __future__ import annotations

from itertools import combinations

from .errors import BadParam, UnknownBuiltin
from .fan import Fan, make_fan, star_subdivide


def cpn(k: int) -> Fan:
    """Fan of k-dimensional projective space: rays e_1..e_k and -(e_1+..+e_k),
    maximal cones all k-subsets of the k+1 rays."""
    if k < 1:
        raise BadParam("cpn needs k >= 1")
    rays = [tuple(1 if j == i else 0 for j in range(k)) for i in range(k)]
    rays.append(tuple(-1 for _ in range(k)))
    return make_fan(rays, combinations(range(k + 1), k))


def cp1() -> Fan:
    return cpn(1)


def hirzebruch(a: int) -> Fan:
    """Fan of the a-th Hirzebruch surface."""
    if a < 0:
        raise BadParam("hirzebruch needs a >= 0")
    rays = [(1, 0), (0, 1), (-1, a), (0, -1)]
    return make_fan(rays, [(0, 1), (1, 2), (2, 3), (3, 0)])


def quadrant(n: int = 2) -> Fan:
    """The single cone spanned by the standard basis: an incomplete fan."""
    if n < 1:
        raise BadParam("quadrant needs n >= 1")
    rays = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    return make_fan(rays, [tuple(range(n))])


BUILTIN_NAMES = ("cp1", "cpn", "hirzebruch", "quadrant", "subdivided")


def _int_param(name, value):
    try:
        return int(value)
    except (TypeError, ValueError):
        raise BadParam(f"{name} parameter must be an integer, got {value!r}") from None


def builtin_fan(name: str, params=(), cone=None) -> Fan:
    """Dispatch a builtin by name.

    `subdivided` wraps another builtin: its params are the base builtin's
    name and params, and `cone` picks the maximal cone to subdivide.
    """
    params = tuple(params)
    if name == "cp1":
        _expect_params(name, params, 0)
        return cp1()
    if name == "cpn":
        _expect_params(name, params, 1)
        return cpn(_int_param(name, params[0]))
    if name == "hirzebruch":
        _expect_params(name, params, 1)
        return hirzebruch(_int_param(name, params[0]))
    if name == "quadrant":
        if len(params) > 1:
            raise BadParam("quadrant takes at most one parameter")
        return quadrant(_int_param(name, params[0])) if params else quadrant()
    if name == "subdivided":
        if not params:
            raise BadParam("subdivided needs a base builtin name")
        base = builtin_fan(str(params[0]), params[1:])
        if cone is None:
            if not base.maximal_cones:
                raise BadParam("base fan has no maximal cone")
            cone = base.maximal_cones[0]
        return star_subdivide(base, cone)
    raise UnknownBuiltin(f"no builtin fan named {name!r}")


def _expect_params(name, params, count):
    if len(params) != count:
        raise BadParam(f"{name} takes {count} parameter(s), got {len(params)}")
