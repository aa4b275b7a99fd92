"""Pairwise strongly orthogonal root sets whose reflections compose to the
longest Weyl element, for each (possibly non-reduced) restricted type.

The classical sets are reconstructed from closed-form patterns; the
exceptional ones are the highlighted roots of the split rows of the
embedded subalgebra tables.  Every set is checked exactly by
verify_ortho_set, so a transcription error cannot propagate silently.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .linalg import (
    Mat,
    identity,
    inverse,
    mat_mul,
    mat_vec,
    solve_in_span,
    vadd,
    vdot,
    vscale,
    vsub,
)
from .realforms import RestrictedDatum, _cartan_bijection, _cartan_entry, restricted_w0
from .rootsys import build_root_system, reflection_matrix, zero

Q = Fraction


@dataclass(frozen=True)
class OrthoSet:
    system_type: tuple  # (family, rank), family may be "BC" or "A1s"
    roots: tuple


@dataclass(frozen=True)
class OrthoVerdict:
    ok: bool
    failures: tuple

    def __bool__(self):
        return self.ok


# exceptional sets, in simple-root coordinates (split rows of the tables)
_EXCEPTIONAL_XI = {
    ("G", 2): [(1, 0), (3, 2)],
    ("F", 4): [(0, 1, 0, 0), (0, 1, 2, 0), (0, 1, 2, 2), (2, 3, 4, 2)],
    ("E", 6): [
        (0, 0, 0, 1, 0, 0),
        (0, 0, 1, 1, 1, 0),
        (1, 0, 1, 1, 1, 1),
        (1, 2, 2, 3, 2, 1),
    ],
    ("E", 7): [
        (0, 1, 0, 0, 0, 0, 0),
        (0, 0, 1, 0, 0, 0, 0),
        (0, 1, 1, 2, 1, 0, 0),
        (0, 0, 0, 0, 1, 0, 0),
        (0, 1, 1, 2, 2, 2, 1),
        (0, 0, 0, 0, 0, 0, 1),
        (2, 2, 3, 4, 3, 2, 1),
    ],
    ("E", 8): [
        (0, 1, 0, 0, 0, 0, 0, 0),
        (0, 0, 1, 0, 0, 0, 0, 0),
        (0, 1, 1, 2, 1, 0, 0, 0),
        (0, 0, 0, 0, 1, 0, 0, 0),
        (0, 1, 1, 2, 2, 2, 1, 0),
        (0, 0, 0, 0, 0, 0, 1, 0),
        (2, 3, 4, 6, 5, 4, 3, 2),
        (2, 2, 3, 4, 3, 2, 1, 0),
    ],
}


def _unit(dim, i, c=1):
    v = [Q(0)] * dim
    v[i] = Q(c)
    return tuple(v)


@lru_cache(maxsize=None)
def restricted_standard(family: str, rank: int):
    """Standard realization of a restricted type: (roots, simple_roots)."""
    if family == "BC":
        b = build_root_system("B", rank)
        roots = set(b.roots)
        for i in range(rank):
            roots.add(_unit(rank, i, 2))
            roots.add(_unit(rank, i, -2))
        return frozenset(roots), b.simple_roots
    if family == "A1s":
        roots = set()
        for i in range(rank):
            roots.add(_unit(rank, i, 1))
            roots.add(_unit(rank, i, -1))
        return frozenset(roots), tuple(_unit(rank, i) for i in range(rank))
    s = build_root_system(family, rank)
    return s.roots, s.simple_roots


def ortho_set(family: str, rank: int) -> OrthoSet:
    """A strongly orthogonal set whose reflections compose to w0."""
    rank = int(rank)
    if family == "A":
        dim = rank + 1
        xs = []
        for i in range(1, (rank + 1) // 2 + 1):
            xs.append(vsub(_unit(dim, i - 1), _unit(dim, rank + 1 - i)))
        return OrthoSet(("A", rank), tuple(xs))
    if family == "B":
        xs = []
        for i in range(1, rank // 2 + 1):
            xs.append(vadd(_unit(rank, 2 * i - 2), _unit(rank, 2 * i - 1)))
            xs.append(vsub(_unit(rank, 2 * i - 2), _unit(rank, 2 * i - 1)))
        if rank % 2:
            xs.append(_unit(rank, rank - 1))
        return OrthoSet(("B", rank), tuple(xs))
    if family in ("C", "BC"):
        xs = tuple(_unit(rank, i, 2) for i in range(rank))
        return OrthoSet((family, rank), xs)
    if family == "D":
        if rank == 2:
            raise ValueError("use D2special via the so(1,3) path")
        xs = []
        pairs = rank // 2 if rank % 2 == 0 else (rank - 1) // 2
        for i in range(1, pairs + 1):
            xs.append(vadd(_unit(rank, 2 * i - 2), _unit(rank, 2 * i - 1)))
            xs.append(vsub(_unit(rank, 2 * i - 2), _unit(rank, 2 * i - 1)))
        return OrthoSet(("D", rank), tuple(xs))
    if family == "D2special":
        return OrthoSet(("D2special", 2), ((Q(1), Q(1)), (Q(1), Q(-1))))
    if family == "A1s":
        return OrthoSet(("A1s", rank), tuple(_unit(rank, i) for i in range(rank)))
    if (family, rank) in _EXCEPTIONAL_XI:
        sys = build_root_system(family, rank)
        xs = []
        for coeffs in _EXCEPTIONAL_XI[(family, rank)]:
            v = zero(sys.ambient_dim)
            for c, a in zip(coeffs, sys.simple_roots):
                v = vadd(v, vscale(c, a))
            xs.append(v)
        return OrthoSet((family, rank), tuple(xs))
    raise ValueError(f"unsupported restricted type {family}{rank}")


def _w0_of(roots, simples, dim) -> Mat:
    """Longest element of the reflection group of the given root set."""
    if not simples:
        return identity(dim)
    gram = tuple(
        tuple(2 * vdot(a, b) / vdot(b, b) for a in simples) for b in simples
    )
    ginv = inverse(gram)
    v0 = zero(dim)
    for j in range(len(simples)):
        coef = sum((ginv[j][i] for i in range(len(simples))), Q(0))
        v0 = vadd(v0, vscale(coef, simples[j]))
    v = tuple(-c for c in v0)
    word = []
    while True:
        for a in simples:
            if vdot(v, a) < 0:
                v = vsub(v, vscale(2 * vdot(v, a) / vdot(a, a), a))
                word.append(a)
                break
        else:
            break
    m = identity(dim)
    for a in reversed(word):
        m = mat_mul(reflection_matrix(a, dim), m)
    return m


def verify_ortho_set(xi, roots, simples=None, w0: Mat = None) -> OrthoVerdict:
    """Check strong orthogonality and the reflection-product identity.

    xi: candidate root list; roots: full restricted root set; simples/w0
    default to data derived from `roots` by lexicographic positivity.
    """
    roots = frozenset(tuple(Fraction(c) for c in v) for v in roots)
    xi = [tuple(Fraction(c) for c in v) for v in xi]
    failures = []
    for v in xi:
        if v not in roots:
            raise ValueError(f"{v} is not a restricted root")
    for i in range(len(xi)):
        for j in range(i + 1, len(xi)):
            a, b = xi[i], xi[j]
            if vadd(a, b) in roots or vsub(a, b) in roots:
                failures.append(f"pair not strongly orthogonal: {a}, {b}")
    dim = len(next(iter(roots)))
    if w0 is None:
        if simples is None:
            from .realforms import _indecomposable_positives

            simples = _indecomposable_positives(roots)
        w0 = _w0_of(roots, simples, dim)
    prod = identity(dim)
    for v in xi:
        prod = mat_mul(reflection_matrix(v, dim), prod)
    if prod != w0:
        failures.append("product of reflections differs from the longest element")
    return OrthoVerdict(not failures, tuple(failures))


def verify_ortho_set_standard(oset: OrthoSet) -> OrthoVerdict:
    fam, rank = oset.system_type
    roots, simples = restricted_standard(fam, rank)
    return verify_ortho_set(oset.roots, roots, simples)


def xi_for_datum(datum: RestrictedDatum) -> tuple:
    """The orthogonal set transported into the split-part coordinates of a
    catalogued real form, via a diagram matching of simple roots."""
    if datum.is_compact:
        return ()
    fam, rank = datum.restricted_type
    oset = ortho_set(fam, rank)
    _, std_simples = restricted_standard(fam, rank)
    dat_simples = datum.restricted_simples
    cm_std = [[_cartan_entry(a, b) for a in std_simples] for b in std_simples]
    cm_dat = [[_cartan_entry(a, b) for a in dat_simples] for b in dat_simples]
    sigma = _cartan_bijection(cm_std, cm_dat)
    if sigma is None:
        raise AssertionError(
            f"{datum.form}: restricted simple roots do not match type {fam}{rank}"
        )
    out = []
    dim = datum.complex_system.ambient_dim
    for v in oset.roots:
        coeffs = solve_in_span(std_simples, v)
        if coeffs is None:
            raise AssertionError("orthogonal set root outside the simple span")
        w = zero(dim)
        for c, idx in zip(coeffs, sigma):
            w = vadd(w, vscale(c, dat_simples[idx]))
        out.append(w)
    return tuple(out)


def verify_ortho_set_datum(xi, datum: RestrictedDatum) -> OrthoVerdict:
    return verify_ortho_set(
        xi,
        datum.restricted_root_set,
        datum.restricted_simples,
        restricted_w0(datum),
    )
