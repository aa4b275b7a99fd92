"""Construction of the reduction subalgebra: the reductive subalgebra
spanned by the zero restricted-root space together with the root spaces
over a strongly orthogonal set, split into summands that are each abelian,
compact, or a rank-one-restricted orthogonal algebra ("so1n")."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Optional

from .linalg import (
    Mat,
    inverse,
    is_zero_vec,
    mat_mul,
    mat_vec,
    transpose,
    vadd,
    vdot,
    vscale,
)
from .orthoset import verify_ortho_set_datum, xi_for_datum
from .realforms import (
    RestrictedDatum,
    _canonical_type,
    _cartan_bijection,
    _cartan_entry,
    identify_simple_type,
    lookup,
)
from .rootsys import build_root_system, zero
from .so1n import complex_type_of_so1n

Q = Fraction


class InternalConsistencyError(RuntimeError):
    """Catalog data contradicts the structure theory; never a user error."""


@dataclass(frozen=True)
class Summand:
    kind: str  # "so1n" | "compact" | "abelian"
    n: Optional[int] = None
    ctype: Optional[tuple] = None
    dim: Optional[int] = None
    simple_roots: tuple = ()
    highlighted: frozenset = frozenset()
    chart: Optional[Mat] = None  # ambient of g -> standard so(1,n) coordinates
    chart_inv: Optional[Mat] = None  # standard coordinates -> ambient of g

    @property
    def rank(self) -> int:
        if self.kind == "abelian":
            return 0
        return len(self.simple_roots)

    def key(self):
        if self.kind == "so1n":
            return ("so1n", self.n, tuple(sorted(self.simple_roots)),
                    tuple(sorted(self.highlighted)))
        if self.kind == "compact":
            return ("compact", _canonical_type(self.ctype),
                    tuple(sorted(self.simple_roots)))
        return ("abelian", self.dim)

    def describe(self) -> str:
        if self.kind == "so1n":
            return f"so(1,{self.n})"
        if self.kind == "compact":
            fam, r = self.ctype
            return f"compact {fam}{r}"
        return f"R^{self.dim}"


@dataclass(frozen=True)
class SummandDecomposition:
    form_name: str
    datum: RestrictedDatum
    xi: tuple
    summands: tuple  # so1n and compact summands
    abelian_dim: int

    @property
    def so1n_summands(self):
        return tuple(s for s in self.summands if s.kind == "so1n")

    @property
    def compact_summands(self):
        return tuple(s for s in self.summands if s.kind == "compact")

    def all_summands_with_abelian(self):
        out = list(self.summands)
        if self.abelian_dim:
            out.append(Summand(kind="abelian", dim=self.abelian_dim))
        return tuple(out)

    def describe(self) -> str:
        parts = [s.describe() for s in self.summands]
        if self.abelian_dim:
            parts.append(f"R^{self.abelian_dim}")
        return " + ".join(parts) if parts else "0"


def _components(simples):
    """Connected components of the non-orthogonality graph."""
    simples = list(simples)
    n = len(simples)
    seen = [False] * n
    comps = []
    for i in range(n):
        if seen[i]:
            continue
        stack = [i]
        seen[i] = True
        comp = []
        while stack:
            k = stack.pop()
            comp.append(simples[k])
            for j in range(n):
                if not seen[j] and vdot(simples[k], simples[j]) != 0:
                    seen[j] = True
                    stack.append(j)
        comps.append(tuple(sorted(comp)))
    return comps


def _line_key(v):
    """Canonical representative of the line through v (sign-normalized)."""
    for c in v:
        if c != 0:
            return v if c > 0 else tuple(-x for x in v)
    return None


@lru_cache(maxsize=None)
def _std_whites(n: int):
    """Indices of standard so(1,n) simple roots with nonzero restriction."""
    _, datum = lookup(f"so(1,{n})")
    std = datum.complex_system
    out = []
    for i, a in enumerate(std.simple_roots):
        if not is_zero_vec(datum.project(a)):
            out.append(i)
    return tuple(out), std


def _lsq_solver(rows):
    """(B B^T)^{-1} B for independent rows B: least-squares coefficients."""
    b = tuple(rows)
    gram = tuple(tuple(vdot(x, y) for y in b) for x in b)
    return mat_mul(inverse(gram), b)


def _so1n_chart(simples, highlighted, n):
    """Charts to and from the standard so(1,n) coordinates.

    The diagram matching is constrained to carry highlighted roots to the
    standard roots of nonzero restriction.
    """
    white_idx, std = _std_whites(n)
    std_simples = std.simple_roots
    k = len(simples)
    if len(std_simples) != k:
        raise InternalConsistencyError(
            f"so(1,{n}) summand rank mismatch: {k} != {len(std_simples)}"
        )
    cm = [[_cartan_entry(a, b) for a in simples] for b in simples]
    scm = [[_cartan_entry(a, b) for a in std_simples] for b in std_simples]
    hl = [i for i, s in enumerate(simples) if s in highlighted]

    assignment = [None] * k
    used = [False] * k

    def ok(i, cand):
        if (i in hl) != (cand in white_idx):
            return False
        for j in range(i):
            cj = assignment[j]
            if cm[i][j] != scm[cand][cj] or cm[j][i] != scm[cj][cand]:
                return False
        return True

    def bt(i):
        if i == k:
            return True
        for cand in range(k):
            if not used[cand] and cm[i][i] == scm[cand][cand] and ok(i, cand):
                used[cand] = True
                assignment[i] = cand
                if bt(i + 1):
                    return True
                used[cand] = False
                assignment[i] = None
        return False

    if not bt(0):
        raise InternalConsistencyError(
            f"so(1,{n}) summand does not match the standard diagram "
            f"with its highlighted root"
        )
    # F: ambient(g) -> ambient(std): v |-> sum_i coeff_i(v) * std_{sigma(i)}
    solver = _lsq_solver(simples)  # k x amb_g
    s_rows = tuple(std_simples[assignment[i]] for i in range(k))  # k x amb_std
    chart = mat_mul(transpose(s_rows), solver)
    solver_std = _lsq_solver(s_rows)  # k x amb_std
    chart_inv = mat_mul(transpose(tuple(simples)), solver_std)
    return chart, chart_inv


def classify_component(group, datum: RestrictedDatum) -> Summand:
    """Classify a merged Dynkin component of the subalgebra's simple roots.

    group: tuple of simple roots (possibly two orthogonal pieces merged on a
    shared restriction line).
    """
    simples = tuple(sorted(group))
    highlighted = frozenset(
        s for s in simples if not is_zero_vec(datum.project(s))
    )
    if not highlighted:
        ctype = identify_simple_type(simples)
        return Summand(kind="compact", ctype=ctype, simple_roots=simples,
                       highlighted=frozenset())
    lines = {_line_key(datum.project(s)) for s in highlighted}
    if len(lines) != 1:
        raise InternalConsistencyError(
            "summand touches more than one restricted-root line"
        )
    fam, rank = identify_simple_type(simples)
    if (fam, rank) == ("A", 1):
        n = 2
    elif fam == "A" and rank == 3:
        n = 5
    elif fam == "B":
        n = 2 * rank
    elif fam == "D":
        n = 2 * rank - 1
    elif fam == "A" and rank == 2:
        raise InternalConsistencyError("restricted rank-one summand of type A2")
    else:
        raise InternalConsistencyError(
            f"summand type {fam}{rank} is not an orthogonal algebra"
        )
    chart, chart_inv = _so1n_chart(simples, highlighted, n)
    return Summand(kind="so1n", n=n, simple_roots=simples,
                   highlighted=highlighted, chart=chart, chart_inv=chart_inv)


def _classify_merged_pair(group, datum: RestrictedDatum) -> Summand:
    """Two orthogonal rank-one pieces over one line: the so(1,3) case."""
    simples = tuple(sorted(group))
    highlighted = frozenset(simples)
    chart, chart_inv = _so1n_chart(simples, highlighted, 3)
    return Summand(kind="so1n", n=3, simple_roots=simples,
                   highlighted=highlighted, chart=chart, chart_inv=chart_inv)


@lru_cache(maxsize=None)
def build_s(name: str) -> SummandDecomposition:
    """Decompose the reduction subalgebra of a catalogued real form."""
    form, datum = lookup(name)
    if datum.is_complex:
        raise ValueError(
            f"{name}: complex forms reduce factorwise; use the product route"
        )
    sys = datum.complex_system

    if datum.is_compact:
        comps = _components(sys.simple_roots)
        summands = tuple(
            Summand(kind="compact", ctype=identify_simple_type(c),
                    simple_roots=tuple(sorted(c)), highlighted=frozenset())
            for c in comps
        )
        summands = tuple(sorted(summands, key=lambda s: s.key()))
        return SummandDecomposition(form.name, datum, (), summands, 0)

    xi = xi_for_datum(datum)
    images = {_line_key(v) for v in xi}
    pos_s = []
    for beta in sys.positive_roots:
        v = datum.project(beta)
        if is_zero_vec(v) or _line_key(v) in images:
            pos_s.append(beta)
    posset = set(pos_s)
    simples_s = tuple(
        b
        for b in pos_s
        if not any(
            tuple(x - y for x, y in zip(b, g)) in posset for g in pos_s if g != b
        )
    )
    comps = _components(simples_s)

    # merge components that share a restricted line (the so(1,3) pattern)
    by_line = {}
    plain = []
    for comp in comps:
        lines = {
            _line_key(datum.project(s))
            for s in comp
            if not is_zero_vec(datum.project(s))
        }
        if not lines:
            plain.append(("compact", comp))
        elif len(lines) == 1:
            by_line.setdefault(next(iter(lines)), []).append(comp)
        else:
            raise InternalConsistencyError(
                "component crosses several restricted lines"
            )
    summands = []
    for comp_kind, comp in plain:
        summands.append(classify_component(comp, datum))
    for line, comps_on_line in by_line.items():
        if len(comps_on_line) == 1:
            summands.append(classify_component(comps_on_line[0], datum))
        elif len(comps_on_line) == 2 and all(
            len(c) == 1 for c in comps_on_line
        ):
            group = comps_on_line[0] + comps_on_line[1]
            summands.append(_classify_merged_pair(group, datum))
        else:
            raise InternalConsistencyError(
                f"unexpected component pattern on line {line}"
            )
    summands = tuple(sorted(summands, key=lambda s: s.key()))
    abelian = sys.rank - sum(s.rank for s in summands)
    if abelian < 0:
        raise InternalConsistencyError("summand ranks exceed the rank")
    if len([s for s in summands if s.kind == "so1n"]) != len(xi):
        raise InternalConsistencyError(
            "number of so(1,n) summands differs from the orthogonal set size"
        )
    return SummandDecomposition(form.name, datum, xi, summands, abelian)


def verify_w0_compatibility(dec: SummandDecomposition) -> bool:
    """Product of restricted reflections over the highlighted lines equals
    the longest restricted element (the Weyl-level compatibility check)."""
    return verify_ortho_set_datum(dec.xi, dec.datum).ok


# ---------------------------------------------------------------------------
# golden tables
# ---------------------------------------------------------------------------


@lru_cache(maxsize=1)
def _golden_rows(path: Optional[str] = None):
    if path is None:
        text = (
            resources.files("w0action.data").joinpath("golden_tables.json").read_text()
        )
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    data = json.loads(text)
    if data.get("version") != 1:
        raise ValueError("unsupported golden tables version")
    return data["rows"]


def _bd(k: int) -> tuple:
    return ("B", (k - 1) // 2) if k % 2 else ("D", k // 2)


def _golden_env(params, i=None):
    env = dict(params)
    env["bd"] = _bd
    if i is not None:
        env["i"] = i
    return env


def _eval(expr, env):
    return eval(str(expr), {"__builtins__": {}}, env)


def _root_from_spec(spec, system, env):
    dim = system.ambient_dim
    if "eps" in spec:
        v = zero(dim)
        for coef, idx in spec["eps"]:
            j = _eval(idx, env) - 1
            e = [Q(0)] * dim
            e[j] = Q(_eval(coef, env))
            v = vadd(v, tuple(e))
        return [v]
    if "alpha" in spec:
        j = _eval(spec["alpha"], env) - 1
        return [system.simple_roots[j]]
    if "alpha_range" in spec:
        lo = _eval(spec["alpha_range"][0], env)
        hi = _eval(spec["alpha_range"][1], env)
        return [system.simple_roots[j - 1] for j in range(lo, hi + 1)]
    if "alpha_coeffs" in spec:
        v = zero(dim)
        for c, a in zip(spec["alpha_coeffs"], system.simple_roots):
            v = vadd(v, vscale(c, a))
        return [v]
    raise ValueError(f"bad root spec {spec!r}")


def expected_summands(name: str):
    """Expand the golden table row for a catalogued form into summand keys."""
    form, datum = lookup(name)
    if datum.is_complex:
        raise ValueError("complex forms are not rows of the tables")
    if form.row_id == "so(1,3)":
        raise ValueError("so(1,3) is outside the absolutely simple tables")
    params = form.param_dict
    system = datum.complex_system
    rows = [r for r in _golden_rows() if r["applies"] == form.row_id]
    rows = [
        r
        for r in rows
        if "when" not in r or _eval(r["when"], _golden_env(_derived(r, params)))
    ]
    if len(rows) != 1:
        raise ValueError(f"no unique golden row for {name}")
    row = rows[0]
    params = _derived(row, params)
    keys = []
    abelian = 0
    for tmpl in row["summands"]:
        count_expr = tmpl.get("count", "1")
        env0 = _golden_env(params)
        if "when" in tmpl and not _eval(tmpl["when"], env0):
            continue
        count = _eval(count_expr, env0)
        for i in range(1, count + 1):
            env = _golden_env(params, i)
            if tmpl["kind"] == "abelian":
                abelian += _eval(tmpl["dim"], env)
                continue
            roots = []
            for spec in tmpl["roots"]:
                roots.extend(_root_from_spec(spec, system, env))
            if tmpl["kind"] == "so1n":
                hl = frozenset(roots[j] for j in tmpl["highlight"])
                keys.append(
                    ("so1n", _eval(tmpl["n"], env), tuple(sorted(roots)),
                     tuple(sorted(hl)))
                )
            else:
                ctype = _canonical_type(tuple(_eval(tmpl["ctype"], env)))
                keys.append(("compact", ctype, tuple(sorted(roots))))
    return sorted(keys), abelian


def _derived(row, params):
    out = dict(params)
    for k, expr in row.get("derive", {}).items():
        out[k] = _eval(expr, _golden_env(out))
    return out


@dataclass(frozen=True)
class GoldenVerdict:
    form: str
    ok: bool
    diffs: tuple

    def __bool__(self):
        return self.ok


def golden_check(name: str) -> GoldenVerdict:
    """Compare the computed decomposition against the embedded table row."""
    expected, expected_abelian = expected_summands(name)
    dec = build_s(name)
    got = sorted(s.key() for s in dec.summands)
    diffs = []
    if got != expected:
        missing = [k for k in expected if k not in got]
        extra = [k for k in got if k not in expected]
        for k in missing:
            diffs.append(f"missing summand {k}")
        for k in extra:
            diffs.append(f"unexpected summand {k}")
    if dec.abelian_dim != expected_abelian:
        diffs.append(
            f"abelian dimension {dec.abelian_dim} != expected {expected_abelian}"
        )
    if not verify_w0_compatibility(dec):
        diffs.append("restricted reflections do not compose to w0")
    return GoldenVerdict(name, not diffs, tuple(diffs))
