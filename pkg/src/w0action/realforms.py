"""Catalog of simple real Lie algebras and their restricted-root data.

Each catalog row stores the complex type, an involution of the weight
space (in Bourbaki epsilon-coordinates), and the expected restricted
type.  The restriction map onto the dual of the maximal split part is
the averaged projection (1 - theta)/2; restricted roots are the nonzero
projections of roots, counted with multiplicity.
"""

from __future__ import annotations

import difflib
import itertools
import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Optional

from .linalg import (
    Mat,
    Vec,
    identity,
    is_zero_vec,
    mat_mul,
    mat_scale,
    mat_sub,
    mat_vec,
    projection_onto_span,
    vadd,
    vdot,
    vscale,
    vsub,
)
from .rootsys import (
    RootSystem,
    build_root_system,
    longest_element_matrix,
    reflection_matrix,
    zero,
)

Q = Fraction


class UnknownRealForm(ValueError):
    pass


class BadParameters(ValueError):
    pass


# ---------------------------------------------------------------------------
# catalog loading and name parsing
# ---------------------------------------------------------------------------


@lru_cache(maxsize=1)
def _catalog(path: Optional[str] = None):
    if path is None:
        text = resources.files("w0action.data").joinpath("realforms.json").read_text()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    data = json.loads(text)
    if data.get("version") != 1:
        raise ValueError("unsupported realforms catalog version")
    return data["rows"]


def _normalize_name(name: str) -> str:
    s = name.strip().replace(" ", "")
    # accept ASCII stand-ins for the interpunct in sp(2·,...)
    s = re.sub(r"sp\(2[.*·]", "sp(2·", s)
    # tolerate the spelling without the comma after 2·
    s = re.sub(r"sp\(2·(\d)", r"sp(2·,\1", s)
    return s


_PATTERNS = [
    ("sl(n,R)", re.compile(r"^sl\((\d+),R\)$"), ("n",)),
    ("sl(m,H)", re.compile(r"^sl\((\d+),H\)$"), ("m",)),
    ("su(p,q)", re.compile(r"^su\((\d+),(\d+)\)$"), ("p", "q")),
    ("su(n)", re.compile(r"^su\((\d+)\)$"), ("n",)),
    ("so(p,q)", re.compile(r"^so\((\d+),(\d+)\)$"), ("p", "q")),
    ("so(n)", re.compile(r"^so\((\d+)\)$"), ("n",)),
    ("so*(2r)", re.compile(r"^so\*\((\d+)\)$"), ("t",)),
    ("sp(2·,n,R)", re.compile(r"^sp\(2·,(\d+),R\)$"), ("n",)),
    ("sp(2·,p,q)", re.compile(r"^sp\(2·,(\d+),(\d+)\)$"), ("p", "q")),
    ("sp(2·,n)", re.compile(r"^sp\(2·,(\d+)\)$"), ("n",)),
    ("complex", re.compile(r"^complex:([A-G])(\d+)$"), ("fam", "rank")),
]

_EXCEPTIONAL = {
    "EI", "EII", "EIII", "EIV", "EV", "EVI", "EVII", "EVIII", "EIX", "FI", "FII", "G",
}


def _parse_name(name: str):
    s = _normalize_name(name)
    if s in _EXCEPTIONAL:
        return s, {}
    if s in ("so(1,3)", "so(3,1)"):
        return "so(1,3)", {}
    for row_id, rx, keys in _PATTERNS:
        m = rx.match(s)
        if m:
            vals = {}
            for k, g in zip(keys, m.groups()):
                vals[k] = g if k == "fam" else int(g)
            if k == "rank":
                vals["rank"] = int(vals["rank"])
            return row_id, vals
    suggestions = _suggest(s)
    hint = f"; did you mean {suggestions}?" if suggestions else ""
    raise UnknownRealForm(f"unknown real form {name!r}{hint}")


def _suggest(s: str):
    samples = [
        "sl(3,R)", "sl(2,H)", "su(1,2)", "su(3)", "so(1,5)", "so(3,4)", "so(5)",
        "so*(8)", "sp(2·,2,R)", "sp(2·,1,1)", "sp(2·,2)",
        "complex:A2",
    ] + sorted(_EXCEPTIONAL)
    close = difflib.get_close_matches(s, samples, n=1, cutoff=0.4)
    return close[0] if close else None


def _row_by_id(row_id: str):
    for row in _catalog():
        if row["id"] == row_id:
            return row
    raise UnknownRealForm(f"catalog has no row {row_id!r}")


def _eval_formula(expr: str, params: dict):
    return eval(expr, {"__builtins__": {}}, dict(params))


@dataclass(frozen=True)
class RealFormId:
    name: str
    row_id: str
    params: tuple  # sorted (key, value) pairs

    @property
    def param_dict(self):
        return dict(self.params)

    def __str__(self):
        return self.name


def canonical_name(name: str) -> str:
    row_id, params = _parse_name(name)
    # normalize so(q,p) -> so(p,q) etc.
    for a, b in (("p", "q"),):
        if a in params and b in params and params[a] > params[b]:
            params[a], params[b] = params[b], params[a]
    row = _row_by_id(row_id)
    return row["pattern"].format(**params)


# ---------------------------------------------------------------------------
# the involution and the restricted datum
# ---------------------------------------------------------------------------


def _signed_permutation(dim, images) -> Mat:
    """Matrix with column j equal to images[j] (a signed basis vector)."""
    cols = []
    for j in range(dim):
        idx, sgn = images[j]
        col = [Q(0)] * dim
        col[idx] = Q(sgn)
        cols.append(tuple(col))
    return tuple(zip(*cols))


def _subsystem_longest(system: RootSystem, indices) -> Mat:
    """Longest element of the parabolic subsystem on the given simple roots
    (1-based Bourbaki indices), as an ambient matrix."""
    simples = [system.simple_roots[i - 1] for i in indices]
    dim = system.ambient_dim
    # regular dominant vector for the subsystem inside its span
    from .linalg import inverse

    gram = tuple(
        tuple(2 * vdot(a, b) / vdot(b, b) for a in simples) for b in simples
    )
    ginv = inverse(gram)
    v0 = zero(dim)
    for j in range(len(simples)):
        coef = sum((ginv[j][i] for i in range(len(simples))), Q(0))
        v0 = vadd(v0, vscale(coef, simples[j]))
    # v0 has pairing 1 with each subsystem simple root
    v = tuple(-c for c in v0)
    word = []
    while True:
        for a in simples:
            if 2 * vdot(v, a) / vdot(a, a) < 0:
                v = vsub(v, vscale(2 * vdot(v, a) / vdot(a, a), a))
                word.append(a)
                break
        else:
            break
    m = identity(dim)
    for a in reversed(word):
        m = mat_mul(reflection_matrix(a, dim), m)
    return m


def _theta_matrix(spec, system: RootSystem, params: dict) -> Mat:
    kind = spec[0]
    dim = system.ambient_dim
    if kind == "split":
        return mat_scale(-1, identity(dim))
    if kind == "compact":
        return identity(dim)
    if kind == "su":
        p, q = spec[1], spec[2]
        n = p + q
        images = []
        for j in range(n):
            i = j + 1
            if i <= p or i >= n + 1 - p:
                images.append((n - i, 1))  # eps_i -> eps_{n+1-i}
            else:
                images.append((j, 1))
        return _signed_permutation(dim, images)
    if kind == "neg_pair_swap":
        count = spec[1]
        images = []
        for j in range(dim):
            if j < 2 * count:
                partner = j + 1 if j % 2 == 0 else j - 1
                images.append((partner, -1))
            else:
                images.append((j, 1))
        return _signed_permutation(dim, images)
    if kind == "pos_pair_swap":
        count = spec[1]
        images = []
        for j in range(dim):
            if j < 2 * count:
                partner = j + 1 if j % 2 == 0 else j - 1
                images.append((partner, 1))
            else:
                images.append((j, 1))
        return _signed_permutation(dim, images)
    if kind == "diag_signs":
        p = spec[1]
        images = [(j, -1 if j < p else 1) for j in range(dim)]
        return _signed_permutation(dim, images)
    if kind == "w0":
        return longest_element_matrix(system)
    if kind == "minus_w_theta":
        return mat_scale(-1, _subsystem_longest(system, spec[1]))
    if kind == "minus_span_roots":
        roots = []
        for coeffs in spec[1]:
            v = zero(dim)
            for c, a in zip(coeffs, system.simple_roots):
                v = vadd(v, vscale(c, a))
            roots.append(v)
        p_span = projection_onto_span(roots)
        return mat_sub(identity(dim), mat_scale(2, p_span))
    raise ValueError(f"unknown theta spec {spec!r}")


def _lex_positive(v: Vec) -> bool:
    for c in v:
        if c != 0:
            return c > 0
    return False


@dataclass(frozen=True)
class RestrictedDatum:
    form: RealFormId
    complex_system: RootSystem
    theta: Mat
    projection: Mat
    restricted_roots: tuple  # sorted ((vector, multiplicity), ...)
    restricted_type: Optional[tuple]  # (family, rank) or None for compact
    restricted_simples: tuple
    is_compact: bool
    is_complex: bool

    @property
    def restricted_root_set(self):
        return frozenset(v for v, _ in self.restricted_roots)

    def project(self, v: Vec) -> Vec:
        return mat_vec(self.projection, v)


def _cartan_entry(a: Vec, b: Vec) -> Fraction:
    return 2 * vdot(a, b) / vdot(b, b)


def _indecomposable_positives(root_set):
    return _indecomposables(root_set, {v for v in root_set if _lex_positive(v)})


def _indecomposables(root_set, positives):
    pos = list(positives)
    posset = set(pos)
    simples = []
    for beta in pos:
        if any(tuple(x - y for x, y in zip(beta, g)) in posset for g in pos if g != beta):
            continue
        simples.append(beta)
    return tuple(sorted(simples))


def identify_simple_type(simples) -> tuple:
    """Match a set of simple roots to a family label via Cartan-matrix
    bijection; returns the canonical (family, rank)."""
    r = len(simples)
    cm = [[_cartan_entry(a, b) for a in simples] for b in simples]

    candidates = [("A", r)]
    if r >= 2:
        candidates += [("B", r), ("C", r)]
    if r >= 3:
        candidates += [("D", r)] if r >= 3 else []
    if r in (6, 7, 8):
        candidates.append(("E", r))
    if r == 4:
        candidates.append(("F", 4))
    if r == 2:
        candidates.append(("G", 2))

    for fam, rank in candidates:
        try:
            std = build_root_system(fam, rank)
        except Exception:
            continue
        scm = [
            [_cartan_entry(a, b) for a in std.simple_roots] for b in std.simple_roots
        ]
        if _cartan_bijection(cm, scm) is not None:
            return _canonical_type((fam, rank))
    raise ValueError("simple roots do not match any supported family")


def _cartan_bijection(cm, scm):
    """Permutation sigma with cm[i][j] == scm[sigma[i]][sigma[j]], or None."""
    r = len(cm)
    if len(scm) != r:
        return None
    assignment = [None] * r
    used = [False] * r

    def ok(i, cand):
        for j in range(i):
            cj = assignment[j]
            if cm[i][j] != scm[cand][cj] or cm[j][i] != scm[cj][cand]:
                return False
        return True

    def bt(i):
        if i == r:
            return True
        for cand in range(r):
            if not used[cand] and cm[i][i] == scm[cand][cand] and ok(i, cand):
                used[cand] = True
                assignment[i] = cand
                if bt(i + 1):
                    return True
                used[cand] = False
                assignment[i] = None
        return False

    return tuple(assignment) if bt(0) else None


def _canonical_type(t: tuple) -> tuple:
    fam, rank = t
    if (fam, rank) in (("B", 1), ("C", 1)):
        return ("A", 1)
    if (fam, rank) == ("C", 2):
        return ("B", 2)
    if (fam, rank) == ("D", 3):
        return ("A", 3)
    return (fam, rank)


def classify_restricted(root_set) -> tuple:
    """Type of a (possibly non-reduced) restricted root system."""
    roots = set(root_set)
    nonreduced = any(vscale(2, v) in roots for v in roots)
    simples = _indecomposable_positives(roots)
    fam, rank = identify_simple_type(simples)
    if nonreduced:
        return ("BC", rank)
    return (fam, rank)


def types_equivalent(t1: tuple, t2: tuple) -> bool:
    c1 = _canonical_type(t1) if t1[0] != "BC" else t1
    c2 = _canonical_type(t2) if t2[0] != "BC" else t2
    return c1 == c2


@lru_cache(maxsize=None)
def lookup(name: str):
    """Resolve a real form name to (RealFormId, RestrictedDatum)."""
    row_id, params = _parse_name(name)
    for a, b in (("p", "q"),):
        if a in params and b in params and params[a] > params[b]:
            params[a], params[b] = params[b], params[a]
    row = _row_by_id(row_id)
    if not _eval_formula(row["constraint"], params):
        raise BadParameters(
            f"{name}: parameters out of range; {row['constraint_text']}"
        )
    fam, rank = _eval_formula(row["complex"], params)
    system = build_root_system(fam, rank)
    theta_spec = _eval_formula(row["theta"], params)
    theta = _theta_matrix(theta_spec, system, params)
    dim = system.ambient_dim
    proj = mat_scale(Q(1, 2), mat_sub(identity(dim), theta))

    counts = {}
    pos_images = set()
    pos_set = set(system.positive_roots)
    for beta in system.roots:
        v = mat_vec(proj, beta)
        if not is_zero_vec(v):
            counts[v] = counts.get(v, 0) + 1
            if beta in pos_set:
                pos_images.add(v)
    restricted_roots = tuple(sorted(counts.items()))

    declared = _eval_formula(row["restricted"], params)
    is_compact = declared is None
    if is_compact and counts:
        raise AssertionError(f"{name}: compact form has nonzero restricted roots")

    simples = ()
    if counts:
        # prefer the positivity inherited from the ambient positive system;
        # fall back to lexicographic when the projection is two-sided
        if not any(tuple(-c for c in v) in pos_images for v in pos_images):
            simples = _indecomposables(counts.keys(), pos_images)
        else:
            simples = _indecomposables(
                counts.keys(), {v for v in counts if _lex_positive(v)}
            )

    form = RealFormId(
        name=row["pattern"].format(**params),
        row_id=row_id,
        params=tuple(sorted(params.items())),
    )
    return form, RestrictedDatum(
        form=form,
        complex_system=system,
        theta=theta,
        projection=proj,
        restricted_roots=restricted_roots,
        restricted_type=tuple(declared) if declared else None,
        restricted_simples=simples,
        is_compact=is_compact,
        is_complex=(row_id == "complex"),
    )


def restricted_w0(datum: RestrictedDatum) -> Mat:
    """The longest restricted Weyl element as an exact ambient matrix
    (identity on the orthogonal complement of the split part)."""
    dim = datum.complex_system.ambient_dim
    simples = datum.restricted_simples
    if not simples:
        return identity(dim)
    from .linalg import inverse

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


def catalog_rows():
    """All catalog row ids (for enumeration by callers)."""
    return tuple(row["id"] for row in _catalog())


def instantiate_all(max_rank: int = 8):
    """All catalogued absolutely simple forms with complex rank <= max_rank."""
    names = []
    for n in range(2, max_rank + 2):  # sl(n,R): rank n-1
        names.append(f"sl({n},R)")
    for p in range(1, max_rank + 1):
        for q in range(p, max_rank + 1):
            if p + q - 1 <= max_rank:
                names.append(f"su({p},{q})")
    for n in range(2, max_rank + 2):
        if n - 1 <= max_rank:
            names.append(f"su({n})")
    for m in range(2, max_rank + 1):
        if 2 * m - 1 <= max_rank:
            names.append(f"sl({m},H)")
    for n in range(3, 2 * max_rank + 2):
        if n == 4:
            continue
        rank = (n - 1) // 2 if n % 2 else n // 2
        if rank > max_rank:
            continue
        for p in range(1, n // 2 + 1):
            names.append(f"so({p},{n - p})")
        names.append(f"so({n})")
    for n in range(1, max_rank + 1):
        names.append(f"sp(2·,{n},R)")
        names.append(f"sp(2·,{n})")
    for p in range(1, max_rank + 1):
        for q in range(p, max_rank + 1):
            if p + q <= max_rank:
                names.append(f"sp(2·,{p},{q})")
    for r in range(3, max_rank + 1):
        names.append(f"so*({2 * r})")
    names += sorted(_EXCEPTIONAL)
    return names
