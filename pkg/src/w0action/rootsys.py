"""Root systems in Bourbaki epsilon-coordinates, over exact rationals.

Supported families: A, B, C, D (classical), E6/E7/E8, F4, G2, and the
special rank-2 presentation of so4 ("D2special") whose simple roots are
e1+e2 and e1-e2.  All vectors are tuples of Fraction; no floats anywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Optional

from .linalg import (
    Mat,
    Vec,
    identity,
    is_zero_vec,
    mat_mul,
    mat_vec,
    projection_onto_span,
    rref,
    solve,
    transpose,
    vadd,
    vdot,
    vneg,
    vscale,
    vsub,
    vec,
)

Q = Fraction

FAMILIES = ("A", "B", "C", "D", "E", "F", "G", "D2special")


class InvalidRootSystem(ValueError):
    pass


def _classical_roots(family: str, rank: int):
    n = rank
    roots = set()
    if family == "A":
        dim = n + 1
        for i in range(dim):
            for j in range(dim):
                if i != j:
                    v = [Q(0)] * dim
                    v[i], v[j] = Q(1), Q(-1)
                    roots.add(tuple(v))
        simples = []
        for i in range(n):
            v = [Q(0)] * dim
            v[i], v[i + 1] = Q(1), Q(-1)
            simples.append(tuple(v))
        return dim, roots, simples
    dim = n
    for i in range(n):
        for j in range(i + 1, n):
            for si in (1, -1):
                for sj in (1, -1):
                    v = [Q(0)] * dim
                    v[i], v[j] = Q(si), Q(sj)
                    roots.add(tuple(v))
    if family == "B":
        for i in range(n):
            for s in (1, -1):
                v = [Q(0)] * dim
                v[i] = Q(s)
                roots.add(tuple(v))
    elif family == "C":
        for i in range(n):
            for s in (1, -1):
                v = [Q(0)] * dim
                v[i] = Q(2 * s)
                roots.add(tuple(v))
    simples = []
    for i in range(n - 1):
        v = [Q(0)] * dim
        v[i], v[i + 1] = Q(1), Q(-1)
        simples.append(tuple(v))
    last = [Q(0)] * dim
    if family == "B":
        last[n - 1] = Q(1)
    elif family == "C":
        last[n - 1] = Q(2)
    elif family == "D":
        last[n - 2], last[n - 1] = Q(1), Q(1)
    simples.append(tuple(last))
    return dim, roots, simples


def _e8_halfroots(signs_len, fixed, parity):
    """Half-integer roots: fixed coordinates given, remaining run over signs."""
    out = []
    for signs in itertools.product((1, -1), repeat=signs_len):
        if sum(1 for s in signs if s < 0) % 2 == parity:
            out.append(signs)
    return out


def _exceptional_roots(family: str, rank: int):
    if family == "G":
        dim = 3
        roots = set()
        for i in range(3):
            for j in range(3):
                if i != j:
                    v = [Q(0)] * 3
                    v[i], v[j] = Q(1), Q(-1)
                    roots.add(tuple(v))
        for i, j, k in itertools.permutations(range(3)):
            if j < k:
                v = [Q(0)] * 3
                v[i], v[j], v[k] = Q(2), Q(-1), Q(-1)
                roots.add(tuple(v))
                roots.add(tuple(-x for x in v))
        a1 = (Q(1), Q(-1), Q(0))
        a2 = (Q(-2), Q(1), Q(1))
        return dim, roots, [a1, a2]
    if family == "F":
        dim = 4
        roots = set()
        for i in range(4):
            for s in (1, -1):
                v = [Q(0)] * 4
                v[i] = Q(s)
                roots.add(tuple(v))
        for i in range(4):
            for j in range(i + 1, 4):
                for si in (1, -1):
                    for sj in (1, -1):
                        v = [Q(0)] * 4
                        v[i], v[j] = Q(si), Q(sj)
                        roots.add(tuple(v))
        for signs in itertools.product((1, -1), repeat=4):
            roots.add(tuple(Q(s, 2) for s in signs))
        simples = [
            (Q(0), Q(1), Q(-1), Q(0)),
            (Q(0), Q(0), Q(1), Q(-1)),
            (Q(0), Q(0), Q(0), Q(1)),
            (Q(1, 2), Q(-1, 2), Q(-1, 2), Q(-1, 2)),
        ]
        return dim, roots, simples
    # E family, ambient dimension 8 per Bourbaki.
    dim = 8
    e8_simples = [
        (Q(1, 2), Q(-1, 2), Q(-1, 2), Q(-1, 2), Q(-1, 2), Q(-1, 2), Q(-1, 2), Q(1, 2)),
        (Q(1), Q(1), Q(0), Q(0), Q(0), Q(0), Q(0), Q(0)),
        (Q(-1), Q(1), Q(0), Q(0), Q(0), Q(0), Q(0), Q(0)),
        (Q(0), Q(-1), Q(1), Q(0), Q(0), Q(0), Q(0), Q(0)),
        (Q(0), Q(0), Q(-1), Q(1), Q(0), Q(0), Q(0), Q(0)),
        (Q(0), Q(0), Q(0), Q(-1), Q(1), Q(0), Q(0), Q(0)),
        (Q(0), Q(0), Q(0), Q(0), Q(-1), Q(1), Q(0), Q(0)),
        (Q(0), Q(0), Q(0), Q(0), Q(0), Q(-1), Q(1), Q(0)),
    ]
    roots = set()
    if rank == 8:
        for i in range(8):
            for j in range(i + 1, 8):
                for si in (1, -1):
                    for sj in (1, -1):
                        v = [Q(0)] * 8
                        v[i], v[j] = Q(si), Q(sj)
                        roots.add(tuple(v))
        for signs in itertools.product((1, -1), repeat=8):
            if sum(1 for s in signs if s < 0) % 2 == 0:
                roots.add(tuple(Q(s, 2) for s in signs))
        return dim, roots, e8_simples
    if rank == 7:
        for i in range(6):
            for j in range(i + 1, 6):
                for si in (1, -1):
                    for sj in (1, -1):
                        v = [Q(0)] * 8
                        v[i], v[j] = Q(si), Q(sj)
                        roots.add(tuple(v))
        for s in (1, -1):
            v = [Q(0)] * 8
            v[6], v[7] = Q(-s), Q(s)
            roots.add(tuple(v))
        for signs in itertools.product((1, -1), repeat=6):
            if sum(1 for s in signs if s < 0) % 2 == 1:
                for s78 in (1, -1):
                    v = [Q(s, 2) for s in signs] + [Q(-s78, 2), Q(s78, 2)]
                    roots.add(tuple(v))
        return dim, roots, e8_simples[:7]
    if rank == 6:
        for i in range(5):
            for j in range(i + 1, 5):
                for si in (1, -1):
                    for sj in (1, -1):
                        v = [Q(0)] * 8
                        v[i], v[j] = Q(si), Q(sj)
                        roots.add(tuple(v))
        for signs in itertools.product((1, -1), repeat=5):
            if sum(1 for s in signs if s < 0) % 2 == 0:
                for s in (1, -1):
                    v = [Q(x * s, 2) for x in signs] + [Q(-s, 2), Q(-s, 2), Q(s, 2)]
                    roots.add(tuple(v))
        return dim, roots, e8_simples[:6]
    raise InvalidRootSystem(f"E family requires rank in {{6,7,8}}, got {rank}")


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int
    ambient_dim: int
    roots: frozenset
    simple_roots: tuple
    positive_roots: tuple
    fundamental_weights: tuple
    weyl_vector: tuple
    # cached solver data (not part of equality)
    _simple_solver: Mat = field(compare=False, repr=False, default=None)
    _span_projector: Mat = field(compare=False, repr=False, default=None)

    @property
    def label(self):
        return (self.family, self.rank)

    def coroot_pairing(self, v: Vec, alpha: Vec) -> Fraction:
        """<v, alpha^vee> = 2 (v, alpha) / (alpha, alpha)."""
        return 2 * vdot(v, alpha) / vdot(alpha, alpha)

    def simple_coefficients(self, v: Vec) -> Optional[tuple]:
        """Coefficients of v in the simple-root basis, or None if off-span."""
        v = tuple(Fraction(c) for c in v)
        x = mat_vec(self._simple_solver, v)
        recon = zero(self.ambient_dim)
        for c, a in zip(x, self.simple_roots):
            recon = vadd(recon, vscale(c, a))
        return x if recon == v else None

    def project_to_root_span(self, v: Vec) -> Vec:
        return mat_vec(self._span_projector, v)

    def is_dominant(self, v: Vec) -> bool:
        return all(self.coroot_pairing(v, a) >= 0 for a in self.simple_roots)

    def is_integral(self, v: Vec) -> bool:
        return all(
            self.coroot_pairing(v, a).denominator == 1 for a in self.simple_roots
        )

    def fund_coordinates(self, v: Vec) -> tuple:
        return tuple(self.coroot_pairing(v, a) for a in self.simple_roots)

    def from_fund_coordinates(self, coords) -> Vec:
        coords = [Fraction(c) for c in coords]
        if len(coords) != self.rank:
            raise ValueError(
                f"expected {self.rank} fundamental coordinates, got {len(coords)}"
            )
        v = zero(self.ambient_dim)
        for c, w in zip(coords, self.fundamental_weights):
            v = vadd(v, vscale(c, w))
        return v


def zero(n: int) -> Vec:
    return (Q(0),) * n


_VALID_RANKS = {
    "A": lambda r: r >= 1,
    "B": lambda r: r >= 1,
    "C": lambda r: r >= 1,
    "D": lambda r: r >= 3,
    "E": lambda r: r in (6, 7, 8),
    "F": lambda r: r == 4,
    "G": lambda r: r == 2,
    "D2special": lambda r: r == 2,
}

_RANK_HINT = {
    "A": "rank >= 1",
    "B": "rank >= 1",
    "C": "rank >= 1",
    "D": "rank >= 3 (use D2special for the so4 presentation)",
    "E": "rank in {6, 7, 8}",
    "F": "rank = 4",
    "G": "rank = 2",
    "D2special": "rank = 2",
}


@lru_cache(maxsize=None)
def build_root_system(family: str, rank: int) -> RootSystem:
    """Construct the root system with Bourbaki conventions."""
    if family not in _VALID_RANKS:
        raise InvalidRootSystem(
            f"unknown family {family!r}; valid families: {', '.join(FAMILIES)}"
        )
    if not _VALID_RANKS[family](int(rank)):
        raise InvalidRootSystem(f"family {family}: {_RANK_HINT[family]}, got {rank}")
    rank = int(rank)
    if family == "D2special":
        dim = 2
        roots = {
            (Q(1), Q(1)),
            (Q(1), Q(-1)),
            (Q(-1), Q(-1)),
            (Q(-1), Q(1)),
        }
        simples = [(Q(1), Q(1)), (Q(1), Q(-1))]
    elif family in ("A", "B", "C", "D"):
        dim, roots, simples = _classical_roots(family, rank)
    else:
        dim, roots, simples = _exceptional_roots(family, rank)

    simples = tuple(tuple(s) for s in simples)
    # Solver for coefficients in the simple-root basis (least squares form).
    m = transpose(simples)  # dim x rank
    mt = tuple(simples)  # rank x dim
    gram = mat_mul(mt, m)
    from .linalg import inverse as _inv

    solver = mat_mul(_inv(gram), mt)  # rank x dim, exact on span
    projector = projection_onto_span(simples)

    positives = []
    for beta in roots:
        coeffs = mat_vec(solver, beta)
        if all(c >= 0 for c in coeffs):
            positives.append((sum(coeffs), beta))
    positives.sort(key=lambda t: (t[0], t[1]))
    positive_roots = tuple(b for _, b in positives)
    if 2 * len(positive_roots) != len(roots):
        raise InvalidRootSystem(f"positivity split failed for {family}{rank}")

    # Fundamental weights: solve <w_i, a_j^vee> = delta_ij inside span(simples).
    cartan = tuple(
        tuple(2 * vdot(ai, aj) / vdot(aj, aj) for ai in simples) for aj in simples
    )
    cinv = _inv(cartan)
    fundamentals = []
    for i in range(rank):
        w = zero(dim)
        for j in range(rank):
            w = vadd(w, vscale(cinv[j][i], simples[j]))
        fundamentals.append(w)
    rho = zero(dim)
    for beta in positive_roots:
        rho = vadd(rho, beta)
    rho = vscale(Q(1, 2), rho)

    return RootSystem(
        family=family,
        rank=rank,
        ambient_dim=dim,
        roots=frozenset(roots),
        simple_roots=simples,
        positive_roots=positive_roots,
        fundamental_weights=tuple(fundamentals),
        weyl_vector=rho,
        _simple_solver=solver,
        _span_projector=projector,
    )


def reflect(system: RootSystem, root: Vec, v: Vec) -> Vec:
    """Reflection of v in the hyperplane orthogonal to a root of the system."""
    root = tuple(Fraction(c) for c in root)
    if root not in system.roots:
        raise ValueError(f"{root} is not a root of {system.family}{system.rank}")
    return reflect_vector(root, v)


def reflect_vector(root: Vec, v: Vec) -> Vec:
    c = 2 * vdot(v, root) / vdot(root, root)
    return vsub(tuple(Fraction(x) for x in v), vscale(c, root))


def reflection_matrix(root: Vec, dim: int) -> Mat:
    cols = []
    for j in range(dim):
        e = [Q(0)] * dim
        e[j] = Q(1)
        cols.append(reflect_vector(root, tuple(e)))
    return transpose(tuple(cols))


class DominateResult(NamedTuple):
    vector: Vec
    sign: int
    regular: bool
    word: tuple  # simple reflection indices, applied in order to the input


def dominate(system: RootSystem, v: Vec) -> DominateResult:
    """Dominant Weyl conjugate by iterated simple reflections.

    sign is the determinant of the Weyl word used (for regular v this is
    the determinant of the unique reducing element).
    """
    v = tuple(Fraction(c) for c in v)
    sign = 1
    word = []
    while True:
        for i, a in enumerate(system.simple_roots):
            if system.coroot_pairing(v, a) < 0:
                v = reflect_vector(a, v)
                sign = -sign
                word.append(i)
                break
        else:
            break
    regular = all(system.coroot_pairing(v, a) > 0 for a in system.simple_roots)
    return DominateResult(v, sign, regular, tuple(word))


def apply_word(system: RootSystem, word, v: Vec) -> Vec:
    for i in word:
        v = reflect_vector(system.simple_roots[i], v)
    return v


@lru_cache(maxsize=None)
def longest_element_matrix(system: RootSystem) -> Mat:
    """Matrix of w0 on the ambient space (identity on the span complement)."""
    neg_rho = vneg(system.weyl_vector)
    res = dominate(system, neg_rho)
    # res.word maps -rho to rho, so w0 is the inverse word.
    m = identity(system.ambient_dim)
    for i in reversed(res.word):
        m = mat_mul(reflection_matrix(system.simple_roots[i], system.ambient_dim), m)
    return m


def weyl_dimension(system: RootSystem, lam: Vec) -> Fraction:
    """Weyl dimension formula for highest weight lam."""
    rho = system.weyl_vector
    num = Q(1)
    den = Q(1)
    lr = vadd(tuple(Fraction(c) for c in lam), rho)
    for beta in system.positive_roots:
        num *= vdot(lr, beta)
        den *= vdot(rho, beta)
    return num / den


# ---------------------------------------------------------------------------
# Dominant weights of an irreducible representation and Freudenthal tables
# ---------------------------------------------------------------------------


def _floor_frac(q: Fraction) -> int:
    return q.numerator // q.denominator


def _coset_align_down(hi: Fraction, anchor: Fraction) -> Fraction:
    """Largest value <= hi lying in anchor + Z."""
    return anchor + _floor_frac(hi - anchor)


def _dominant_candidates_chain(system: RootSystem, lam):
    """Dominant mu <= lam for the classical families, coordinatewise.

    mu runs in the coset lam + (root lattice); the caller re-checks the
    simple-root coefficients, so these enumerators only need to be complete.
    """
    dim = system.ambient_dim
    fam = system.family
    out = []

    if fam == "A":
        total = sum(lam, Q(0))
        prefix_lam = list(itertools.accumulate(lam))
        cur = []

        def rec_a(pos, musum):
            if pos == dim:
                if musum == total:
                    out.append(tuple(cur))
                return
            remaining = dim - pos
            hi = prefix_lam[pos] - musum
            if pos > 0:
                hi = min(hi, cur[-1])
            x = _coset_align_down(hi, lam[pos])
            # need total-musum distributable over `remaining` coords, each <= x
            while x * remaining >= total - musum:
                cur.append(x)
                rec_a(pos + 1, musum + x)
                cur.pop()
                x -= 1

        rec_a(0, Q(0))
        return out

    if fam in ("B", "C", "D"):
        prefix_lam = list(itertools.accumulate(lam))
        cur = []

        def leaf_ok(mu):
            v = [a - b for a, b in zip(lam, mu)]
            s = sum(v)
            if fam == "B":
                return True  # prefix conditions already enforced
            if fam == "C":
                return s >= 0 and s % 2 == 0
            d = sum(v[:-2]) + v[-2] - v[-1] if dim >= 2 else s
            return s >= 0 and s % 2 == 0 and d >= 0 and d % 2 == 0

        def rec_bcd(pos, musum):
            if pos == dim:
                if leaf_ok(cur):
                    out.append(tuple(cur))
                return
            last = pos == dim - 1
            hi = lam[0] if pos == 0 else cur[-1]
            if fam == "B" or (fam == "C" and not last):
                hi = min(hi, prefix_lam[pos] - musum)
            elif fam == "D" and pos <= dim - 3:
                hi = min(hi, prefix_lam[pos] - musum)
            lo = Q(0)
            if fam == "D" and last:
                lo = -cur[-1] if cur else Q(0)
            x = _coset_align_down(hi, lam[pos])
            while x >= lo:
                cur.append(x)
                rec_bcd(pos + 1, musum + x)
                cur.pop()
                x -= 1

        rec_bcd(0, Q(0))
        return out

    if fam == "F":
        # dominance in eps-coordinates: m1 >= m2+m3+m4, m2 >= m3 >= m4 >= 0;
        # the weight lattice has an all-integer and an all-half-integer coset.
        bounds = []
        for i in range(4):
            e = [Q(0)] * 4
            e[i] = Q(1)
            bounds.append(vdot(lam, dominate(system, tuple(e)).vector))
        for anchor in (Q(0), Q(1, 2)):
            m4 = _coset_align_down(bounds[3], anchor)
            while m4 >= 0:
                m3 = _coset_align_down(bounds[2], anchor)
                while m3 >= m4:
                    m2 = _coset_align_down(bounds[1], anchor)
                    while m2 >= m3:
                        m1 = _coset_align_down(bounds[0], anchor)
                        lo1 = m2 + m3 + m4
                        while m1 >= lo1:
                            out.append((m1, m2, m3, m4))
                            m1 -= 1
                        m2 -= 1
                    m3 -= 1
                m4 -= 1
        return out

    return None


def _dominant_candidates_generic(system: RootSystem, lam):
    """Dominant mu <= lam via bounded recursion on simple-root coefficients."""
    rank = system.rank
    simples = system.simple_roots
    # Upper bounds: c_i <= <lam, omega_i^vee> with fundamental coweights.
    cartan = tuple(
        tuple(system.coroot_pairing(aj, ai) for aj in simples) for ai in simples
    )
    from .linalg import inverse as _inv

    cinv = _inv(cartan)
    coweights = []
    for i in range(rank):
        w = zero(system.ambient_dim)
        for j in range(rank):
            w = vadd(w, vscale(cinv[i][j], vscale(2 / vdot(simples[j], simples[j]), simples[j])))
        coweights.append(w)
    bounds = []
    for w in coweights:
        b = vdot(lam, w)
        if b < 0:
            return []
        bounds.append(int(b))
    out = []
    current = list(lam)

    def rec(i):
        if i == rank:
            mu = tuple(current)
            if system.is_dominant(mu):
                out.append(mu)
            return
        a = simples[i]
        for c in range(bounds[i] + 1):
            rec(i + 1)
            for k in range(system.ambient_dim):
                current[k] -= a[k]
        for k in range(system.ambient_dim):
            current[k] += (bounds[i] + 1) * a[k]

    rec(0)
    return out


def dominant_weights(system: RootSystem, lam: Vec) -> tuple:
    """All dominant weights of V_lam (lam dominant integral), as vectors."""
    lam = tuple(Fraction(c) for c in lam)
    fam = system.family
    candidates = None
    if fam in ("A", "B", "C", "D", "F"):
        candidates = _dominant_candidates_chain(system, lam)
    if candidates is None:
        candidates = _dominant_candidates_generic(system, lam)
        return tuple(candidates)
    out = []
    for mu in candidates:
        c = system.simple_coefficients(vsub(lam, mu))
        if c is not None and all(x >= 0 and x.denominator == 1 for x in c):
            out.append(mu)
    return tuple(out)


def _int_scale(system: RootSystem, lam: Vec) -> int:
    """Common denominator clearing weights of V_lam and rho to integers."""
    k = 2
    for c in list(lam) + list(system.weyl_vector):
        d = Fraction(c).denominator
        k = k * d // _gcd(k, d)
    return k


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


@lru_cache(maxsize=256)
def _freudenthal_table_scaled(system: RootSystem, lam: Vec):
    """Freudenthal multiplicities over integer-scaled vectors.

    Returns (scale K, dict mapping K-scaled dominant weight tuples to
    multiplicities).  All arithmetic is plain int.
    """
    K = _int_scale(system, lam)

    def sc(v):
        out = []
        for c in v:
            x = Fraction(c) * K
            if x.denominator != 1:
                raise ArithmeticError("scaling failed to clear denominators")
            out.append(int(x))
        return tuple(out)

    rho = sc(system.weyl_vector)
    lam_s = sc(lam)
    simples = [sc(a) for a in system.simple_roots]
    s_norms = [sum(a * a for a in al) for al in simples]
    positives = [sc(b) for b in system.positive_roots]
    p_norms = [sum(b * b for b in bl) for bl in positives]
    dim = system.ambient_dim
    rng = range(dim)

    dom_cache = {}

    def dom(v):
        got = dom_cache.get(v)
        if got is not None:
            return got
        orig = v
        w = list(v)
        moved = True
        while moved:
            moved = False
            for a, aa in zip(simples, s_norms):
                num = 2 * sum(w[i] * a[i] for i in rng)
                if num < 0:
                    m = num // aa
                    if m * aa != num:
                        raise ArithmeticError("non-integral pairing in dominate")
                    for i in rng:
                        w[i] -= m * a[i]
                    moved = True
        res = tuple(w)
        dom_cache[orig] = res
        return res

    doms = [sc(m) for m in dominant_weights(system, lam)]

    def depth(mu_s):
        c = system.simple_coefficients(
            tuple(Fraction(a - b, K) for a, b in zip(lam_s, mu_s))
        )
        return sum(c)

    order = sorted(doms, key=lambda mu: (depth(mu), mu))
    lr = [a + b for a, b in zip(lam_s, rho)]
    lr2 = sum(a * a for a in lr)
    table = {}
    for mu in order:
        if mu == lam_s:
            table[mu] = 1
            continue
        mr = [a + b for a, b in zip(mu, rho)]
        denom = lr2 - sum(a * a for a in mr)
        total = 0
        for alpha, aa in zip(positives, p_norms):
            nu = list(mu)
            dot = sum(mu[i] * alpha[i] for i in rng)
            while True:
                for i in rng:
                    nu[i] += alpha[i]
                dot += aa
                m = table.get(dom(tuple(nu)))
                if not m:
                    break
                total += m * dot
        num = 2 * total
        if denom <= 0 or num % denom or num < 0:
            raise ArithmeticError("Freudenthal recursion produced a bad value")
        table[mu] = num // denom
    return K, table, dom


def _freudenthal_table(system: RootSystem, lam: Vec):
    """Multiplicities of all dominant weights of V_lam, in true coordinates."""
    K, table, _dom = _freudenthal_table_scaled(system, lam)
    return {tuple(Fraction(c, K) for c in mu): m for mu, m in table.items()}


def multiplicity_fn(system: RootSystem, lam: Vec):
    """Fast multiplicity lookup mu -> m for a fixed highest weight."""
    lam = tuple(Fraction(c) for c in lam)
    if not system.is_integral(lam) or not system.is_dominant(lam):
        raise ValueError("highest weight must be dominant integral")
    K, table, dom = _freudenthal_table_scaled(system, lam)

    def lookup(mu) -> int:
        ms = []
        for c in mu:
            x = Fraction(c) * K
            if x.denominator != 1:
                return 0
            ms.append(int(x))
        try:
            return table.get(dom(tuple(ms)), 0)
        except ArithmeticError:
            return 0  # outside the weight lattice

    return lookup


def weight_multiplicity(system: RootSystem, lam: Vec, mu: Vec) -> int:
    """Multiplicity of the weight mu in the irreducible V_lam."""
    return multiplicity_fn(system, lam)(mu)


def representation_dimension(system: RootSystem, lam: Vec) -> int:
    d = weyl_dimension(system, lam)
    if d.denominator != 1:
        raise ArithmeticError("Weyl dimension is not an integer")
    return int(d)


def weights_of(system: RootSystem, lam: Vec, max_size: int = 200000) -> dict:
    """Full weight support of V_lam with multiplicities (BFS from lam)."""
    lam = tuple(Fraction(c) for c in lam)
    K, table, dom = _freudenthal_table_scaled(system, lam)
    lam_s = tuple(int(Fraction(c) * K) for c in lam)
    simples = [tuple(int(Fraction(c) * K) for c in a) for a in system.simple_roots]
    seen = {lam_s: table[lam_s]}
    frontier = [lam_s]
    while frontier:
        nxt = []
        for v in frontier:
            for a in simples:
                w = tuple(x - y for x, y in zip(v, a))
                if w in seen:
                    continue
                m = table.get(dom(w))
                if m:
                    seen[w] = m
                    nxt.append(w)
        if len(seen) > max_size:
            raise MemoryError("weight support too large")
        frontier = nxt
    return {tuple(Fraction(c, K) for c in w): m for w, m in seen.items()}
