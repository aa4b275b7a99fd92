"""Exact linear algebra over the rationals.

Matrices are tuples of row tuples of Fraction; vectors are tuples of
Fraction.  Everything here is small and dense, so plain Gaussian
elimination is enough.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

Vec = tuple
Mat = tuple

Q = Fraction


def vec(entries) -> Vec:
    return tuple(Fraction(e) for e in entries)


def mat(rows) -> Mat:
    return tuple(vec(r) for r in rows)


def zeros(n: int) -> Vec:
    return (Fraction(0),) * n


def identity(n: int) -> Mat:
    return tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(n)) for i in range(n)
    )


def vadd(x: Vec, y: Vec) -> Vec:
    return tuple(a + b for a, b in zip(x, y, strict=True))


def vsub(x: Vec, y: Vec) -> Vec:
    return tuple(a - b for a, b in zip(x, y, strict=True))


def vneg(x: Vec) -> Vec:
    return tuple(-a for a in x)


def vscale(c, x: Vec) -> Vec:
    c = Fraction(c)
    return tuple(c * a for a in x)


def vdot(x: Vec, y: Vec) -> Fraction:
    return sum((a * b for a, b in zip(x, y, strict=True)), Fraction(0))


def is_zero_vec(x: Vec) -> bool:
    return all(a == 0 for a in x)


def mat_vec(m: Mat, x: Vec) -> Vec:
    return tuple(vdot(row, x) for row in m)


def mat_mul(a: Mat, b: Mat) -> Mat:
    bt = transpose(b)
    return tuple(tuple(vdot(row, col) for col in bt) for row in a)


def mat_add(a: Mat, b: Mat) -> Mat:
    return tuple(vadd(ra, rb) for ra, rb in zip(a, b, strict=True))


def mat_sub(a: Mat, b: Mat) -> Mat:
    return tuple(vsub(ra, rb) for ra, rb in zip(a, b, strict=True))


def mat_scale(c, a: Mat) -> Mat:
    return tuple(vscale(c, row) for row in a)


def transpose(m: Mat) -> Mat:
    return tuple(zip(*m)) if m else ()


def rref(m: Mat):
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    rows = [list(r) for r in m]
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    pivots = []
    r = 0
    for c in range(nc):
        pr = next((i for i in range(r, nr) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = Fraction(1) / rows[r][c]
        rows[r] = [inv * e for e in rows[r]]
        for i in range(nr):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [e - f * p for e, p in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return tuple(tuple(row) for row in rows), tuple(pivots)


def rank(m: Mat) -> int:
    return len(rref(m)[1])


def solve(m: Mat, b: Vec) -> Optional[Vec]:
    """One exact solution of m x = b, or None if inconsistent.

    Free variables are set to zero.
    """
    nr = len(m)
    nc = len(m[0]) if nr else 0
    aug = tuple(tuple(row) + (bi,) for row, bi in zip(m, b, strict=True))
    red, pivots = rref(aug)
    if nc in pivots:
        return None
    x = [Fraction(0)] * nc
    for i, c in enumerate(pivots):
        x[c] = red[i][nc]
    return tuple(x)


def nullspace(m: Mat) -> tuple:
    """Basis of the right kernel of m."""
    nr = len(m)
    nc = len(m[0]) if nr else 0
    if nr == 0:
        return tuple(identity(nc))
    red, pivots = rref(m)
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * nc
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -red[i][f]
        basis.append(tuple(v))
    return tuple(basis)


def inverse(m: Mat) -> Mat:
    n = len(m)
    aug = tuple(tuple(row) + tuple(identity(n)[i]) for i, row in enumerate(m))
    red, pivots = rref(aug)
    if pivots != tuple(range(n)):
        raise ValueError("matrix is singular")
    return tuple(row[n:] for row in red)


def solve_in_span(basis: Sequence[Vec], v: Vec) -> Optional[Vec]:
    """Coefficients of v in the given (independent) spanning set, or None."""
    m = transpose(tuple(basis))
    return solve(m, v)


def projection_onto_span(basis: Sequence[Vec]) -> Mat:
    """Orthogonal projection matrix onto span(basis) for the standard dot."""
    if not basis:
        raise ValueError("empty basis")
    n = len(basis[0])
    # Gram-based projector: P = B^T (B B^T)^{-1} B with B rows = basis.
    b = tuple(basis)
    gram = tuple(tuple(vdot(x, y) for y in b) for x in b)
    ginv = inverse(gram)
    bt = transpose(b)
    return mat_mul(mat_mul(bt, ginv), b)
