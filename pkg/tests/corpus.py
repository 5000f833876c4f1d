"""Shared fan corpus for the tests: the builtin library, star-subdivision
iterates, incomplete fans, and deterministic invalid mutations."""

import random

from toricfan.fan import make_fan, star_subdivide
from toricfan.library import cp1, cpn, hirzebruch, quadrant


def complete_builtins():
    """The canonical complete fans the acceptance criteria quantify over."""
    return {
        "cp1": cp1(),
        "cp2": cpn(2),
        "cp3": cpn(3),
        "cp4": cpn(4),
        "hirzebruch0": hirzebruch(0),
        "hirzebruch1": hirzebruch(1),
        "hirzebruch2": hirzebruch(2),
        "hirzebruch3": hirzebruch(3),
    }


def subdivision_iterates(seed=0, rounds=3, bases=("cp2", "hirzebruch1", "cp3")):
    """Deterministic star-subdivision chains over the builtin bases; yields
    every intermediate fan."""
    rng = random.Random(seed)
    builtins = complete_builtins()
    out = []
    for name in bases:
        f = builtins[name]
        for _ in range(rounds):
            full = [c for c in f.maximal_cones if len(c) == f.ambient_dim]
            f = star_subdivide(f, rng.choice(full))
            out.append(f)
    return out


def incomplete_fans():
    half_plane = make_fan([(1, 0), (0, 1), (-1, 0)], [(0, 1), (1, 2)])
    cp2_missing = make_fan([(1, 0), (0, 1), (-1, -1)], [(0, 1), (1, 2)])
    return [
        quadrant(1),
        quadrant(2),
        quadrant(3),
        half_plane,
        cp2_missing,
    ]


def invalid_fans():
    """Hand-built fans violating one axiom each (all structurally well
    formed, so they construct fine and fail validate)."""
    crossing = make_fan([(1, 0), (0, 1), (1, 1)], [(0, 1), (0, 2)])
    crossing2 = make_fan([(1, 0), (0, 1), (1, 2), (-1, -1)], [(0, 1), (2, 3)])
    non_unimodular = make_fan([(1, 0), (1, 2)], [(0, 1)])
    non_unimodular3 = make_fan([(1, 0, 0), (0, 1, 0), (1, 1, 2)], [(0, 1, 2)])
    nested3 = make_fan(
        [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)], [(0, 1, 2), (0, 1, 3)]
    )
    return [crossing, crossing2, non_unimodular, non_unimodular3, nested3]


RAY_POOL_2D = [
    (1, 0), (0, 1), (-1, 0), (0, -1),
    (1, 1), (-1, 1), (1, -1), (-1, -1),
    (1, 2), (2, 1), (-1, 2), (-2, 1), (1, -2), (-1, -2),
]


def random_unimodular(n, rng, ops=12):
    """Random element of GL(n, Z) as a product of elementary matrices."""
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(ops):
        kind = rng.randrange(3)
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if kind == 0 and i != j:
            c = rng.randint(-2, 2)
            m[i] = [a + c * b for a, b in zip(m[i], m[j])]
        elif kind == 1 and i != j:
            m[i], m[j] = m[j], m[i]
        else:
            m[i] = [-a for a in m[i]]
    return tuple(tuple(row) for row in m)


def random_two_cone_fans(count, seed=1):
    """Small random 2d fans (two 2-dimensional cones); a mix of valid and
    invalid instances, to be judged by validate and its oracle."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        rays = rng.sample(RAY_POOL_2D, 4)
        try:
            f = make_fan(rays, [(0, 1), (2, 3)])
        except Exception:
            continue
        out.append(f)
    return out
