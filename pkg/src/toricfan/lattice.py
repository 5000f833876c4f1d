"""Exact integer linear algebra over Z^n.

Vectors are tuples of Python ints and matrices are tuples of row vectors,
so all arithmetic is arbitrary precision.  Every function is pure and
returns fresh immutable values; nothing here touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .errors import NotUnimodular, ZeroVector

Vector = tuple[int, ...]
Matrix = tuple[Vector, ...]


def vec(entries) -> Vector:
    return tuple(int(x) for x in entries)


def mat(rows) -> Matrix:
    m = tuple(vec(r) for r in rows)
    if m and any(len(r) != len(m[0]) for r in m):
        raise ValueError("ragged matrix")
    return m


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def mat_vec(m: Matrix, v) -> tuple:
    return tuple(dot(row, v) for row in m)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    cols = tuple(zip(*b))
    return tuple(tuple(dot(row, c) for c in cols) for row in a)


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m))


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def primitive(v) -> Vector:
    """Divide a nonzero integer vector by the gcd of its entries.

    The result points in the same direction (the sign is never flipped).
    """
    v = vec(v)
    g = gcd(*v) if v else 0
    if g == 0:
        raise ZeroVector(f"cannot normalize the zero vector {v}")
    return tuple(x // g for x in v)


def _xgcd(a: int, b: int):
    """Return (g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def _row_combine(w, u, i, j, col):
    """Unimodular row operation putting gcd(w[i][col], w[j][col]) at (i, col)
    and 0 at (j, col); applied to the work matrix w and the transform u."""
    a, b = w[i][col], w[j][col]
    if b == 0:
        return
    if a == 0:
        w[i], w[j] = w[j], [-x for x in w[i]]
        u[i], u[j] = u[j], [-x for x in u[i]]
        return
    if b % a == 0:
        # plain elimination keeps the pivot row untouched (no fill-in)
        q = b // a
        w[j] = [t - q * s for s, t in zip(w[i], w[j])]
        u[j] = [t - q * s for s, t in zip(u[i], u[j])]
        return
    g, x, y = _xgcd(a, b)
    p, q = -(b // g), a // g  # second row of the 2x2 transform, det = +1
    w[i], w[j] = (
        [x * s + y * t for s, t in zip(w[i], w[j])],
        [p * s + q * t for s, t in zip(w[i], w[j])],
    )
    u[i], u[j] = (
        [x * s + y * t for s, t in zip(u[i], u[j])],
        [p * s + q * t for s, t in zip(u[i], u[j])],
    )


def hnf(m) -> tuple[Matrix, Matrix]:
    """Row Hermite normal form.

    Returns (H, U) with H = U*m, U unimodular, pivots positive, entries
    above each pivot reduced into [0, pivot), and zero rows at the bottom.
    """
    m = mat(m)
    if not m:
        raise ValueError("empty matrix")
    nrows, ncols = len(m), len(m[0])
    w = [list(r) for r in m]
    u = [list(r) for r in identity(nrows)]
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        for i in range(row + 1, nrows):
            _row_combine(w, u, row, i, col)
        if w[row][col] == 0:
            continue
        if w[row][col] < 0:
            w[row] = [-x for x in w[row]]
            u[row] = [-x for x in u[row]]
        pivot = w[row][col]
        for i in range(row):
            q = w[i][col] // pivot
            if q:
                w[i] = [s - q * t for s, t in zip(w[i], w[row])]
                u[i] = [s - q * t for s, t in zip(u[i], u[row])]
        row += 1
    return mat(w), mat(u)


def _col_combine(w, v, j, k, row):
    """Column analogue of _row_combine, acting on columns j, k of w and v."""
    a, b = w[row][j], w[row][k]
    if b == 0:
        return
    if a == 0:
        for r in w:
            r[j], r[k] = r[k], -r[j]
        for r in v:
            r[j], r[k] = r[k], -r[j]
        return
    if b % a == 0:
        q = b // a
        for r in w:
            r[k] -= q * r[j]
        for r in v:
            r[k] -= q * r[j]
        return
    g, x, y = _xgcd(a, b)
    p, q = -(b // g), a // g
    for r in w:
        r[j], r[k] = x * r[j] + y * r[k], p * r[j] + q * r[k]
    for r in v:
        r[j], r[k] = x * r[j] + y * r[k], p * r[j] + q * r[k]


def snf(m) -> tuple[Matrix, Matrix, Matrix]:
    """Smith normal form.

    Returns (S, U, V) with S = U*m*V diagonal, nonnegative, with the
    divisibility chain d1 | d2 | ..., and U, V unimodular.
    """
    m = mat(m)
    if not m:
        raise ValueError("empty matrix")
    nrows, ncols = len(m), len(m[0])
    w = [list(r) for r in m]
    u = [list(r) for r in identity(nrows)]
    v = [list(r) for r in identity(ncols)]
    k = min(nrows, ncols)

    def diagonalize_from(t0):
        for t in range(t0, k):
            # move a nonzero entry to the (t, t) slot
            pos = next(
                ((i, j) for i in range(t, nrows) for j in range(t, ncols) if w[i][j]),
                None,
            )
            if pos is None:
                return
            i, j = pos
            if i != t:
                w[t], w[i] = w[i], w[t]
                u[t], u[i] = u[i], u[t]
            if j != t:
                for r in w:
                    r[t], r[j] = r[j], r[t]
                for r in v:
                    r[t], r[j] = r[j], r[t]
            # row ops can refill the pivot row and vice versa; iterate
            while True:
                for i in range(t + 1, nrows):
                    _row_combine(w, u, t, i, t)
                if all(w[t][j] == 0 for j in range(t + 1, ncols)):
                    break
                for j in range(t + 1, ncols):
                    _col_combine(w, v, t, j, t)
                if all(w[i][t] == 0 for i in range(t + 1, nrows)):
                    break

    diagonalize_from(0)
    # enforce the divisibility chain; a violation is repaired by folding the
    # offending diagonal entry into column t and rediagonalizing from t
    t = 0
    while t < k - 1:
        a = w[t][t]
        bad = next(
            (j for j in range(t + 1, k) if w[j][j] and (a == 0 or w[j][j] % a)), None
        )
        if bad is None:
            t += 1
            continue
        for r in w:
            r[t] += r[bad]
        for r in v:
            r[t] += r[bad]
        diagonalize_from(t)
    for t in range(k):
        if w[t][t] < 0:
            w[t] = [-x for x in w[t]]
            u[t] = [-x for x in u[t]]
    return mat(w), mat(u), mat(v)


def invariant_factors(m) -> tuple[int, ...]:
    """Nonzero diagonal entries of the Smith normal form, in chain order."""
    s, _, _ = snf(m)
    k = min(len(s), len(s[0]))
    return tuple(s[i][i] for i in range(k) if s[i][i])


def det(m) -> int:
    """Determinant of a square integer matrix (fraction-free Bareiss)."""
    m = mat(m)
    n = len(m)
    if n == 0 or any(len(r) != n for r in m):
        raise ValueError("determinant needs a square nonempty matrix")
    w = [list(r) for r in m]
    sign = 1
    prev = 1
    for t in range(n - 1):
        if w[t][t] == 0:
            swap = next((i for i in range(t + 1, n) if w[i][t]), None)
            if swap is None:
                return 0
            w[t], w[swap] = w[swap], w[t]
            sign = -sign
        for i in range(t + 1, n):
            for j in range(t + 1, n):
                w[i][j] = (w[i][j] * w[t][t] - w[i][t] * w[t][j]) // prev
            w[i][t] = 0
        prev = w[t][t]
    return sign * w[n - 1][n - 1]


def dual_basis(g) -> Matrix:
    """Rows A_i with <A_i, G_j> = delta_ij for a unimodular square G.

    Unimodularity of G makes the dual basis integral.
    """
    g = mat(g)
    n = len(g)
    d = det(g)
    if d not in (1, -1):
        raise NotUnimodular(f"|det| = {abs(d)}, expected 1")
    inv = _fraction_inverse(g)
    # A = (G^T)^{-1} = (G^{-1})^T, entries are exact integers here
    assert all(f.denominator == 1 for row in inv for f in row)
    return tuple(tuple(int(inv[j][i]) for j in range(n)) for i in range(n))


def is_part_of_basis(g) -> bool:
    """Do the rows of g extend to a Z-basis of Z^n?

    True iff g has full row rank and every invariant factor equals 1.
    """
    g = mat(g)
    if not g:
        return True
    if len(g) > len(g[0]):
        return False
    factors = invariant_factors(g)
    return len(factors) == len(g) and all(f == 1 for f in factors)


# --- exact rational helpers used by the cone machinery -----------------------


def _fraction_inverse(m: Matrix):
    """Inverse of a square matrix as rows of Fractions (Gauss-Jordan)."""
    n = len(m)
    w = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = next((i for i in range(col, n) if w[i][col]), None)
        if piv is None:
            raise ValueError("singular matrix")
        w[col], w[piv] = w[piv], w[col]
        inv = 1 / w[col][col]
        w[col] = [x * inv for x in w[col]]
        for i in range(n):
            if i != col and w[i][col]:
                f = w[i][col]
                w[i] = [x - f * y for x, y in zip(w[i], w[col])]
    return [row[n:] for row in w]


def rational_rank(rows) -> int:
    """Rank over Q of a list of vectors."""
    w = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(w[0]) if w else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(w)) if w[i][col]), None)
        if piv is None:
            continue
        w[rank], w[piv] = w[piv], w[rank]
        f = w[rank][col]
        w[rank] = [x / f for x in w[rank]]
        for i in range(len(w)):
            if i != rank and w[i][col]:
                g = w[i][col]
                w[i] = [x - g * y for x, y in zip(w[i], w[rank])]
        rank += 1
    return rank


def solve_combination(vectors, target):
    """Coefficients a with sum a_i * vectors[i] = target, or None.

    The vectors must be linearly independent; entries may be ints or
    Fractions.  Returns a tuple of Fractions when target is in the span.
    """
    k = len(vectors)
    if k == 0:
        return () if all(Fraction(x) == 0 for x in target) else None
    n = len(vectors[0])
    w = [[Fraction(vectors[j][i]) for j in range(k)] + [Fraction(target[i])]
         for i in range(n)]
    row = 0
    pivots = []
    for col in range(k):
        piv = next((i for i in range(row, n) if w[i][col]), None)
        if piv is None:
            raise ValueError("dependent vectors in solve_combination")
        w[row], w[piv] = w[piv], w[row]
        f = w[row][col]
        w[row] = [x / f for x in w[row]]
        for i in range(n):
            if i != row and w[i][col]:
                g = w[i][col]
                w[i] = [x - g * y for x, y in zip(w[i], w[row])]
        pivots.append(row)
        row += 1
    if any(w[i][k] for i in range(row, n)):
        return None
    return tuple(w[pivots[j]][k] for j in range(k))


def rational_kernel(m) -> tuple[Vector, ...]:
    """Primitive integer basis of { x : m x = 0 } over Q."""
    m = [list(r) for r in m]
    if not m:
        raise ValueError("empty matrix")
    ncols = len(m[0])
    w = [[Fraction(x) for x in r] for r in m]
    pivots = {}
    row = 0
    for col in range(ncols):
        piv = next((i for i in range(row, len(w)) if w[i][col]), None)
        if piv is None:
            continue
        w[row], w[piv] = w[piv], w[row]
        f = w[row][col]
        w[row] = [x / f for x in w[row]]
        for i in range(len(w)):
            if i != row and w[i][col]:
                g = w[i][col]
                w[i] = [x - g * y for x, y in zip(w[i], w[row])]
        pivots[col] = row
        row += 1
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        x = [Fraction(0)] * ncols
        x[free] = Fraction(1)
        for col, r in pivots.items():
            x[col] = -w[r][free]
        basis.append(clear_denominators(x))
    return tuple(basis)


def integer_kernel_basis(m) -> tuple[Vector, ...]:
    """Primitive basis of the integer kernel { x in Z^c : m x = 0 }.

    Comes from the Smith decomposition, so the basis spans a saturated
    sublattice.  Each vector is sign-normalized (first nonzero entry > 0).
    """
    m = mat(m)
    s, _, v = snf(m)
    k = min(len(s), len(s[0]))
    ncols = len(s[0])
    cols = transpose(v)
    out = []
    for i in range(ncols):
        if i >= k or s[i][i] == 0:
            out.append(sign_normalize(cols[i]))
    return tuple(out)


def clear_denominators(x) -> Vector:
    """Scale a rational vector to a primitive integer vector, same direction."""
    fr = [Fraction(t) for t in x]
    mult = lcm(*(f.denominator for f in fr)) if fr else 1
    ints = [int(f * mult) for f in fr]
    return primitive(ints)


def sign_normalize(x) -> Vector:
    """Flip the sign so the first nonzero entry is positive."""
    x = vec(x)
    lead = next((t for t in x if t), 0)
    return tuple(-t for t in x) if lead < 0 else x
