"""Verification campaigns over the family catalog.

Four kinds of checks, each returning plain report objects that render to
deterministic one-record-per-line text plus a summary table:

- dimension/axiom sweeps (verify_family / verify_scope): instantiate every
  swept parameter point, complete the presentation, compare the dimension
  against the record's claim and re-run the six axiom checks;
- isomorphism-criterion comparisons (verify_iso_criteria): run the
  brute-force search on every ordered pair of built points and compare
  against the record's declared criterion;
- identity suites (verify_identity_suite): seeded random trials of the
  restricted p-th power identities inside catalog algebras, and of the
  toral-commutation / iterated-adjoint identities in their two- and
  three-generator witness algebras;
- Nichols dimension checks (verify_nichols_suite) over the fixed target
  list, plus fault-injected negative controls (negative_controls) that
  guard the axiom checker against vacuous passes.

Sweep policy: full over prime fields whenever the parameter space has at
most FULL_SWEEP_LIMIT points, full over extension fields only for families
with at most two field-valued parameters; otherwise the structural and
{0,1}-restricted parameters are swept fully and the remaining field-valued
tuple is sampled with a fixed default seed.  Record lines carry no timing,
so identical inputs render byte-identical output; wall-clock time lives on
the report objects only.
"""

from __future__ import annotations

import os
import random
import re
from dataclasses import dataclass
from math import prod
from time import perf_counter

from .catalog import (
    FamilySpec,
    ambiguity_condition,
    family,
    instantiate,
    iso_predicate,
    list_families,
    parameter_assignments,
)
from .freealg import FreeAlgebra
from .gf import Field
from .hopf import (
    AXIOM_NAMES,
    HopfAlgebra,
    HopfPresentation,
    SearchBudgetExceeded,
    build_hopf,
    check_axioms,
    iso_search,
)
from .nichols import make_braided, nichols_dims
from .rewrite import complete, make_system, normal_form

DEFAULT_SEED = 7
DEFAULT_SAMPLE = 50
FULL_SWEEP_LIMIT = 4096
ISO_NODE_BUDGET = 500_000
ISO_PAIR_LIMIT = 1024

Assignment = tuple[tuple[str, int], ...]


def field_label(f: Field) -> str:
    return f"GF({f.q})"


def _asg_key(fam: FamilySpec, f: Field, asg: dict) -> Assignment:
    return tuple((ps.name, asg[ps.name]) for ps in fam.active_params(f))


def _fmt_asg(params: Assignment) -> str:
    return ",".join(f"{k}={v}" for k, v in params) or "-"


# -- sweep planning -----------------------------------------------------------------


def parameter_space_size(fid: str, f: Field) -> int:
    fam = family(fid)
    return prod(len(ps.values(f)) for ps in fam.active_params(f)) if fam.params else 1


def sweep_assignments(
    fid: str,
    f: Field,
    sample: int | None = None,
    seed: int | None = None,
    fix: dict | None = None,
) -> tuple[str, list[dict]]:
    """Plan a sweep: ("full", points) or ("sample(n=..,seed=..)", points).

    sample=None applies the default policy.  A sample of n keeps the full
    grid over structural and {0,1} parameters and crosses it with n seeded
    tuples of the field-valued parameters.  fix pins named parameters to
    single values before planning.
    """
    fam = family(fid)
    active = fam.active_params(f)
    fix = fix or {}
    for name in fix:
        if name not in {ps.name for ps in active}:
            raise ValueError(f"{fid}: cannot fix unknown parameter {name!r}")
    domains = {ps.name: ([fix[ps.name]] if ps.name in fix else ps.values(f)) for ps in active}
    for name, dom in domains.items():
        full_dom = next(ps for ps in active if ps.name == name).values(f)
        if dom[0] not in full_dom:
            raise ValueError(f"{fid}: fixed value {name}={dom[0]} outside domain")
    total = prod(len(domains[ps.name]) for ps in active) if active else 1
    free = [ps for ps in active if ps.domain == "free" and ps.name not in fix]
    if sample is None:
        if total <= FULL_SWEEP_LIMIT and (f.k == 1 or len(free) <= 2):
            sample = 0  # full
        else:
            sample, seed = DEFAULT_SAMPLE, DEFAULT_SEED if seed is None else seed
    if sample == 0 or not free:
        if total > FULL_SWEEP_LIMIT:
            raise ValueError(f"{fid}: full sweep over {total} points exceeds {FULL_SWEEP_LIMIT}")
        points = [
            dict(asg)
            for asg in parameter_assignments(fid, f)
            if all(asg[n] == v[0] for n, v in domains.items() if len(v) == 1)
        ]
        return "full", points
    seed = DEFAULT_SEED if seed is None else seed
    grid_params = [ps for ps in active if ps not in free]
    grid: list[dict] = [{}]
    for ps in grid_params:
        grid = [{**g, ps.name: v} for g in grid for v in domains[ps.name]]
    free_space = prod(len(domains[ps.name]) for ps in free)
    rng = random.Random(seed)
    n = min(sample, free_space)
    picked: set[int] = set()
    while len(picked) < n:
        picked.add(rng.randrange(free_space))
    tuples = []
    for idx in sorted(picked):
        t, x = {}, idx
        for ps in free:
            dom = domains[ps.name]
            t[ps.name] = dom[x % len(dom)]
            x //= len(dom)
        tuples.append(t)
    points = [{**g, **t} for g in grid for t in tuples]
    return f"sample(n={n},seed={seed})", points


# -- dimension / axiom sweeps ---------------------------------------------------------


@dataclass(frozen=True)
class VerificationReport:
    """One swept parameter point: outcome ok(dim, axioms), collapse(reason),
    or budget_exceeded."""

    family_id: str
    field_label: str
    params: Assignment
    outcome: str  # "ok" | "collapse" | "budget_exceeded"
    dim: int | None
    axioms: tuple[str, ...]
    reason: str | None
    elapsed: float

    @property
    def ok(self) -> bool:
        return self.outcome == "ok"

    def record(self) -> str:
        head = f"{self.family_id}|{self.field_label}|{_fmt_asg(self.params)}|{self.outcome}"
        if self.outcome == "ok":
            return f"{head}|dim={self.dim}|axioms={len(self.axioms)}/{len(AXIOM_NAMES)}"
        return f"{head}|{(self.reason or '').replace('|', '/')}"


def _verify_point(fid: str, asg: dict, f: Field, degree_cap: int | None = None) -> VerificationReport:
    fam = family(fid)
    t0 = perf_counter()
    P = instantiate(fid, asg, f)
    H = build_hopf(P, degree_cap=degree_cap)
    key = _asg_key(fam, f, asg)
    lab = field_label(f)
    if not H.ok:
        outcome = "budget_exceeded" if H.kind in ("completion_cap_exceeded", "not_finite") else "collapse"
        return VerificationReport(
            fid, lab, key, outcome, None, (), f"{H.kind}: {H.message}", perf_counter() - t0
        )
    ax = check_axioms(H)
    if H.dim != P.claimed_dim:
        reason = f"dimension_mismatch: completed {H.dim} != claimed {P.claimed_dim}"
        return VerificationReport(fid, lab, key, "collapse", None, (), reason, perf_counter() - t0)
    if not ax.ok:
        reason = "axiom_failure: " + ",".join(ax.failing())
        return VerificationReport(fid, lab, key, "collapse", None, (), reason, perf_counter() - t0)
    return VerificationReport(
        fid, lab, key, "ok", H.dim, tuple(AXIOM_NAMES), None, perf_counter() - t0
    )


def _has_active_predicate(fam: FamilySpec, f: Field) -> bool:
    return fam.ambiguity is not None and (fam.ambiguity_when != "p2" or f.p == 2)


def _expectation(fam: FamilySpec, f: Field) -> str:
    """How swept points are judged: every point ok, match the declared
    parameter condition, or record outcomes without a per-point claim."""
    if fam.scope in ("T4.2", "T3.7"):
        return "all-ok"
    if _has_active_predicate(fam, f):
        return "predicate"
    return "recorded"


def point_passes(fam: FamilySpec, f: Field, report: VerificationReport) -> bool:
    if report.outcome == "budget_exceeded":
        return False
    exp = _expectation(fam, f)
    if exp == "all-ok":
        return report.ok
    if exp == "predicate":
        return report.ok == ambiguity_condition(fam.id, dict(report.params), f)
    return True


@dataclass(frozen=True)
class FamilySweep:
    family_id: str
    field_label: str
    mode: str  # "full" | "sample(...)"
    expectation: str  # "all-ok" | "predicate" | "recorded"
    reports: tuple[VerificationReport, ...]
    passed: bool

    @property
    def counts(self) -> tuple[int, int, int]:
        n_ok = sum(r.ok for r in self.reports)
        n_budget = sum(r.outcome == "budget_exceeded" for r in self.reports)
        return n_ok, len(self.reports) - n_ok - n_budget, n_budget

    @property
    def elapsed(self) -> float:
        return sum(r.elapsed for r in self.reports)


def verify_family(
    fid: str,
    f: Field,
    sample: int | None = None,
    seed: int | None = None,
    fix: dict | None = None,
    degree_cap: int | None = None,
) -> FamilySweep:
    """Sweep one family: one VerificationReport per parameter point, points
    ordered by parameter encoding."""
    fam = family(fid)
    mode, points = sweep_assignments(fid, f, sample=sample, seed=seed, fix=fix)
    reports = sorted(
        (_verify_point(fid, asg, f, degree_cap=degree_cap) for asg in points),
        key=lambda r: r.params,
    )
    passed = all(point_passes(fam, f, r) for r in reports)
    return FamilySweep(fid, field_label(f), mode, _expectation(fam, f), tuple(reports), passed)


@dataclass(frozen=True)
class Campaign:
    scope: str
    field_label: str
    sweeps: tuple[FamilySweep, ...]

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.sweeps)

    @property
    def elapsed(self) -> float:
        return sum(s.elapsed for s in self.sweeps)


def verify_scope(
    scope: str,
    f: Field,
    sample: int | None = None,
    seed: int | None = None,
    fix: dict | None = None,
) -> Campaign:
    """Sweep a scope ("T4.2", "T3.7", "lemmas", "all") or a single family id."""
    try:
        fids = list_families(scope)
    except ValueError:
        fids = [family(scope).id]
    sweeps = tuple(verify_family(fid, f, sample=sample, seed=seed, fix=fix) for fid in fids)
    return Campaign(scope, field_label(f), sweeps)


def render_records(campaign: Campaign) -> str:
    return "\n".join(r.record() for s in campaign.sweeps for r in s.reports)


def render_summary(campaign: Campaign) -> str:
    rows = [("family", "field", "mode", "points", "ok", "collapse", "budget", "expected", "status")]
    for s in campaign.sweeps:
        n_ok, n_coll, n_budget = s.counts
        rows.append(
            (
                s.family_id,
                s.field_label,
                s.mode,
                str(len(s.reports)),
                str(n_ok),
                str(n_coll),
                str(n_budget),
                s.expectation,
                "pass" if s.passed else "FAIL",
            )
        )
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    n_pass = sum(s.passed for s in campaign.sweeps)
    lines.append(f"{n_pass}/{len(campaign.sweeps)} families pass")
    return "\n".join(lines)


# -- isomorphism-criterion comparisons ------------------------------------------------


@dataclass(frozen=True)
class IsoPair:
    left: Assignment
    right: Assignment
    oracle: str  # "iso" | "none" | "budget"
    predicate: bool

    @property
    def agree(self) -> bool:
        return self.oracle != "budget" and (self.oracle == "iso") == self.predicate

    def record(self, fid: str, lab: str) -> str:
        pred = "iso" if self.predicate else "none"
        mark = "agree" if self.agree else "DISAGREE"
        return (
            f"{fid}|{lab}|{_fmt_asg(self.left)}|{_fmt_asg(self.right)}"
            f"|oracle={self.oracle}|criterion={pred}|{mark}"
        )


@dataclass(frozen=True)
class IsoComparisonReport:
    family_id: str
    field_label: str
    points: tuple[Assignment, ...]
    collapsed: tuple[Assignment, ...]
    pairs: tuple[IsoPair, ...]
    elapsed: float

    @property
    def agreement(self) -> bool:
        return bool(self.pairs) and all(p.agree for p in self.pairs)

    def records(self) -> str:
        return "\n".join(p.record(self.family_id, self.field_label) for p in self.pairs)

    def summary(self) -> str:
        n_agree = sum(p.agree for p in self.pairs)
        parts = [
            f"{self.family_id} {self.field_label}: {len(self.points)} points,"
            f" {len(self.pairs)} ordered pairs, {n_agree} agree",
        ]
        if self.collapsed:
            parts.append(f"{len(self.collapsed)} points collapsed and were excluded")
        parts.append(f"agreement: {'yes' if self.agreement else 'NO'}")
        return "\n".join(parts)


def verify_iso_criteria(fid: str, f: Field, node_budget: int = ISO_NODE_BUDGET) -> IsoComparisonReport:
    """Compare the brute-force search against the declared criterion on every
    ordered pair of built parameter points."""
    fam = family(fid)
    if fam.iso is None:
        raise ValueError(f"{fid}: no isomorphism criterion declared")
    t0 = perf_counter()
    asgs = list(parameter_assignments(fid, f))
    if len(asgs) ** 2 > ISO_PAIR_LIMIT:
        raise ValueError(f"{fid}: {len(asgs)}^2 ordered pairs exceed {ISO_PAIR_LIMIT}")
    built: list[tuple[dict, HopfAlgebra]] = []
    collapsed: list[Assignment] = []
    for asg in asgs:
        H = build_hopf(instantiate(fid, asg, f))
        if H.ok:
            built.append((asg, H))
        else:
            collapsed.append(_asg_key(fam, f, asg))
    pairs = []
    for a1, H1 in built:
        for a2, H2 in built:
            try:
                found = iso_search(H1, H2, limit=1, node_budget=node_budget)
                oracle = "iso" if found else "none"
            except SearchBudgetExceeded:
                oracle = "budget"
            pairs.append(
                IsoPair(
                    _asg_key(fam, f, a1),
                    _asg_key(fam, f, a2),
                    oracle,
                    iso_predicate(fid, a1, a2, f),
                )
            )
    return IsoComparisonReport(
        fid,
        field_label(f),
        tuple(_asg_key(fam, f, a) for a, _ in built),
        tuple(collapsed),
        tuple(pairs),
        perf_counter() - t0,
    )


# -- identity suites -------------------------------------------------------------------

IDENTITY_SUITES = ("jacobson", "lemma210", "lemma211")


@dataclass(frozen=True)
class IdentitySuiteReport:
    suite: str
    field_label: str
    trials: int
    seed: int
    checked: tuple[str, ...]
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        head = f"{self.suite} {self.field_label}: {self.trials} trials, identities {', '.join(self.checked)}"
        if self.ok:
            return head + " -- all pass"
        return head + "\n" + "\n".join(f"FAIL {w}" for w in self.failures)


def _vadd(f: Field, a: dict, b: dict) -> dict:
    out = dict(a)
    for k, c in b.items():
        s = f.add(out.get(k, 0), c)
        if s:
            out[k] = s
        elif k in out:
            del out[k]
    return out


def _vsub(f: Field, a: dict, b: dict) -> dict:
    return _vadd(f, a, {k: f.neg(c) for k, c in b.items()})


def _vscale(f: Field, c: int, a: dict) -> dict:
    return {k: f.mul(c, v) for k, v in a.items()} if c else {}


def _bracket(H: HopfAlgebra, a: dict, b: dict) -> dict:
    return _vsub(H.field, H.mult(a, b), H.mult(b, a))


def _vpow(H: HopfAlgebra, a: dict, e: int) -> dict:
    out = H.A.unit()
    for _ in range(e):
        out = H.mult(out, a)
    return out


def _random_vec(rng: random.Random, H: HopfAlgebra) -> dict:
    return {i: c for i in range(H.dim) if (c := rng.randrange(H.field.q))}


def _restricted_power_sum(H: HopfAlgebra, a: dict, b: dict) -> dict:
    """The correction terms for (a+b)^p: the t-degree-(i-1) component of
    (a) ad_R(t*a + b)^(p-1) carries weight 1/i, per the restricted power
    rule.  At p=2 the weight is trivial."""
    f = H.field
    p = f.p
    layers: list[dict] = [dict(a)] + [{} for _ in range(p - 1)]
    for _ in range(p - 1):
        layers = [
            _vadd(
                f,
                _bracket(H, layers[j], b),
                _bracket(H, layers[j - 1], a) if j else {},
            )
            for j in range(p)
        ]
    out: dict = {}
    for d in range(p - 1):
        out = _vadd(f, out, _vscale(f, f.inv((d + 1) % p), layers[d]))
    return out


def _jacobson_pool(f: Field) -> list[str]:
    """Deterministic family pool: first catalog family of each coradical
    class available in this characteristic."""
    scopes = ("T4.2", "T3.7") if f.p == 2 else ("T3.7",)
    seen: dict[str, str] = {}
    for scope in scopes:
        for fid in list_families(scope):
            grp = family(fid).group
            if grp not in seen:
                seen[grp] = fid
    return [seen[g] for g in sorted(seen)]


def _identity_jacobson(f: Field, trials: int, seed: int):
    rng = random.Random(seed)
    pool = _jacobson_pool(f)
    built: dict[tuple, HopfAlgebra] = {}
    failures: list[str] = []
    for t in range(trials):
        fid = pool[rng.randrange(len(pool))]
        asgs = list(parameter_assignments(fid, f))
        asg = asgs[rng.randrange(len(asgs))]
        key = (fid, tuple(sorted(asg.items())))
        if key not in built:
            H = build_hopf(instantiate(fid, asg, f))
            if not H.ok:  # fall back to the first point of the family
                H = build_hopf(instantiate(fid, asgs[0], f))
                key = (fid, tuple(sorted(asgs[0].items())))
            built[key] = H
        H = built[key]
        a, b = _random_vec(rng, H), _random_vec(rng, H)
        lhs = _vpow(H, _vadd(f, a, b), f.p)
        rhs = _vadd(f, _vadd(f, _vpow(H, a, f.p), _vpow(H, b, f.p)), _restricted_power_sum(H, a, b))
        if lhs != rhs:
            failures.append(f"power-sum: trial {t} in {key[0]} at {_fmt_asg(key[1])}")
        u = dict(b)
        for _ in range(f.p):
            u = _bracket(H, a, u)
        if u != _bracket(H, _vpow(H, a, f.p), b):
            failures.append(f"adjoint-power: trial {t} in {key[0]} at {_fmt_asg(key[1])}")
    return ("power-sum", "adjoint-power"), failures


def _nf_zero(ctx: FreeAlgebra, sys, poly: dict) -> bool:
    return normal_form(poly, sys) == {}


def _brk(ctx: FreeAlgebra, sys, u: dict, v: dict) -> dict:
    """Normal form of [u, v]; both (u) ad_R v and ad_L u (v) read this way."""
    return normal_form(ctx.sub(ctx.mul(u, v), ctx.mul(v, u)), sys)


def _identity_lemma210(f: Field, trials: int, seed: int):
    rng = random.Random(seed)
    p = f.p
    systems: dict[int, tuple] = {}
    failures: list[str] = []

    def system(n: int):
        if n not in systems:
            ctx = FreeAlgebra(f, ["g", "x"])
            sys = make_system(
                ctx, [ctx.parse_poly(f"g^{n} - 1"), ctx.parse_poly("g*x - x*g - g + g^2")]
            )
            complete(sys)
            systems[n] = (ctx, sys)
        return systems[n]

    for t in range(trials):
        n = p * rng.choice((1, 2, 3))
        ctx, sys = system(n)
        g, x = ctx.parse_poly("g"), ctx.parse_poly("x")
        i = rng.randrange(1, 3 * n)
        gi = ctx.parse_poly(f"g^{i}")
        lhs = ctx.mul(gi, x)
        rhs = ctx.add(
            ctx.mul(x, gi),
            ctx.sub(ctx.scale(i % p, gi), ctx.scale(i % p, ctx.parse_poly(f"g^{i + 1}"))),
        )
        if not _nf_zero(ctx, sys, ctx.sub(lhs, rhs)):
            failures.append(f"toral-shift: trial {t} n={n} i={i}")
        gp = ctx.parse_poly(f"g^{p}")
        if not _nf_zero(ctx, sys, ctx.sub(ctx.mul(gp, x), ctx.mul(x, gp))):
            failures.append(f"toral-center: trial {t} n={n}")
        u = g
        for _ in range(p - 1):
            u = _brk(ctx, sys, u, x)
        if not _nf_zero(ctx, sys, ctx.sub(u, ctx.sub(g, gp))):
            failures.append(f"adr-fold: trial {t} n={n}")
        if not _nf_zero(ctx, sys, ctx.sub(_brk(ctx, sys, u, x), _brk(ctx, sys, g, x))):
            failures.append(f"adr-return: trial {t} n={n}")
        v = g
        for _ in range(p - 1):
            v = _brk(ctx, sys, x, v)
        if not _nf_zero(ctx, sys, ctx.sub(v, ctx.sub(g, gp))):
            failures.append(f"adl-fold: trial {t} n={n}")
        xp = ctx.poly_pow(x, p)
        lhs3 = ctx.sub(ctx.mul(xp, g), ctx.mul(g, xp))
        if not _nf_zero(ctx, sys, ctx.sub(lhs3, _brk(ctx, sys, x, v))):
            failures.append(f"adl-power: trial {t} n={n}")
        if not _nf_zero(ctx, sys, ctx.sub(_brk(ctx, sys, x, v), _brk(ctx, sys, x, g))):
            failures.append(f"adl-return: trial {t} n={n}")
    checked = (
        "toral-shift",
        "toral-center",
        "adr-fold",
        "adr-return",
        "adl-fold",
        "adl-power",
        "adl-return",
    )
    return checked, failures


def _identity_lemma211(f: Field, trials: int, seed: int):
    rng = random.Random(seed)
    p = f.p
    systems: dict[tuple, tuple] = {}
    failures: list[str] = []

    def system(mu: int, l1: int, l2: int, l3: int):
        key = (mu, l1, l2, l3)
        if key not in systems:
            ctx = FreeAlgebra(f, ["g", "x", "y"])
            rels = [
                f"g^{p} - 1",
                f"g*x - x*g - {l1}*(g - g^2)",
                f"g*y - y*g - {l2}*(g - g^{mu + 1})",
                f"x^{p} - {l1}*x",
                f"y^{p} - {l2}*y",
                f"x*y - y*x + {f.mul(mu % p, l1)}*y - {l2}*x - {l3}*(1 - g^{mu + 1})",
            ]
            sys = make_system(ctx, [ctx.parse_poly(t) for t in rels])
            complete(sys)
            systems[key] = (ctx, sys)
        return systems[key]

    for t in range(trials):
        mu = rng.randrange(1, p) if p > 2 else 1
        l1, l2 = rng.randrange(2), rng.randrange(2)
        l3 = rng.randrange(f.q)
        n = rng.randrange(2, 2 * p + 2)
        ctx, sys = system(mu, l1, l2, l3)
        x, y = ctx.parse_poly("x"), ctx.parse_poly("y")
        gmu = ctx.parse_poly(f"g^{mu + 1}")
        adr = [ctx.parse_poly("x")]
        for _ in range(max(n, p)):
            adr.append(_brk(ctx, sys, adr[-1], y))
        gr = [gmu]
        for _ in range(max(n, p)):
            gr.append(_brk(ctx, sys, gr[-1], y))
        rhs = ctx.scale(f.pow(l2, n - 1), adr[1])
        for i in range(n - 1):
            rhs = ctx.sub(rhs, ctx.scale(f.mul(l3, f.pow(l2, i)), gr[n - 1 - i]))
        if not _nf_zero(ctx, sys, ctx.sub(adr[n], rhs)):
            failures.append(f"adr-chain: trial {t} mu={mu} l=({l1},{l2},{l3}) n={n}")
        if not _nf_zero(ctx, sys, ctx.sub(adr[p], ctx.scale(f.pow(l2, p - 1), adr[1]))):
            failures.append(f"adr-restricted: trial {t} mu={mu} l=({l1},{l2},{l3})")
        c = f.neg(f.mul(mu % p, l1))
        adl = [ctx.parse_poly("y")]
        for _ in range(max(n, p)):
            adl.append(_brk(ctx, sys, x, adl[-1]))
        gl = [gmu]
        for _ in range(max(n, p)):
            gl.append(_brk(ctx, sys, x, gl[-1]))
        rhs2 = ctx.scale(f.pow(c, n - 1), adl[1])
        for i in range(n - 1):
            rhs2 = ctx.sub(rhs2, ctx.scale(f.mul(l3, f.pow(c, i)), gl[n - 1 - i]))
        if not _nf_zero(ctx, sys, ctx.sub(adl[n], rhs2)):
            failures.append(f"adl-chain: trial {t} mu={mu} l=({l1},{l2},{l3}) n={n}")
        if not _nf_zero(ctx, sys, ctx.sub(adl[p], ctx.scale(f.pow(c, p - 1), adl[1]))):
            failures.append(f"adl-restricted: trial {t} mu={mu} l=({l1},{l2},{l3})")
    return ("adr-chain", "adr-restricted", "adl-chain", "adl-restricted"), failures


def verify_identity_suite(
    suite: str, f: Field, trials: int = 100, seed: int = DEFAULT_SEED
) -> IdentitySuiteReport:
    """Run one of the identity suites: "jacobson" (restricted p-th power
    identities on random elements of catalog algebras), "lemma210" (toral
    commutation and adjoint folding in the two-generator witness algebra),
    or "lemma211" (iterated adjoint chains in the three-generator witness
    algebra)."""
    if suite == "jacobson":
        checked, failures = _identity_jacobson(f, trials, seed)
    elif suite == "lemma210":
        checked, failures = _identity_lemma210(f, trials, seed)
    elif suite == "lemma211":
        checked, failures = _identity_lemma211(f, trials, seed)
    else:
        raise ValueError(f"unknown identity suite {suite!r}")
    return IdentitySuiteReport(suite, field_label(f), trials, seed, checked, tuple(failures))


# -- Nichols dimension suite -----------------------------------------------------------


@dataclass(frozen=True)
class NicholsCheck:
    spec: str
    expected: str  # "=N" exact total, ">N" lower bound
    graded: tuple[int, ...]
    total: int
    closed: bool
    ok: bool

    def record(self, lab: str) -> str:
        status = "ok" if self.ok else "FAIL"
        seq = ",".join(str(d) for d in self.graded)
        return (
            f"nichols|{lab}|{self.spec}|expected{self.expected}|total={self.total}"
            f"|closed={'yes' if self.closed else 'no'}|graded={seq}|{status}"
        )


@dataclass(frozen=True)
class NicholsSuiteReport:
    field_label: str
    checks: tuple[NicholsCheck, ...]
    elapsed: float

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def records(self) -> str:
        return "\n".join(c.record(self.field_label) for c in self.checks)


NICHOLS_TARGETS = {
    2: [
        ("diagonal:1", "=2"),
        ("diagonal:1,1;1,1", "=4"),
        ("diagonal:1,1,1;1,1,1;1,1,1", "=8"),
        ("jordan:1,2", "=16"),
        ("yd-cyclic:1,2,2+yd-cyclic:0,1,2", ">8"),
    ],
    3: [
        ("jordan:1,2", "=9"),
    ],
}


def verify_nichols_suite(f: Field) -> NicholsSuiteReport:
    """Graded-dimension checks on the fixed target list for this
    characteristic; "=N" targets must close exactly, ">N" targets are
    honest lower bounds."""
    if f.p not in NICHOLS_TARGETS:
        raise ValueError(f"no Nichols targets for characteristic {f.p}")
    t0 = perf_counter()
    checks = []
    for spec, expected in NICHOLS_TARGETS[f.p]:
        graded, total, closed = nichols_dims(make_braided(spec, f))
        bound = int(expected[1:])
        ok = (closed and total == bound) if expected[0] == "=" else total > bound
        checks.append(NicholsCheck(spec, expected, tuple(graded), total, closed, ok))
    return NicholsSuiteReport(field_label(f), tuple(checks), perf_counter() - t0)


# -- fault-injected negative controls ----------------------------------------------------

FAULT_MODES = ("coideal", "counit")


def inject_fault(P: HopfPresentation, mode: str) -> HopfPresentation:
    """Perturb one relation so the ideal is no longer a bi-ideal.

    "coideal" shifts the first power relation of a skew generator by the
    counit-neutral term 1 - g (wrong coproduct tail); "counit" shifts the
    last relation by 1 (the counit no longer kills it).
    """
    texts = list(P.relation_texts)
    if mode == "counit":
        texts[-1] = f"({texts[-1]}) - 1"
    elif mode == "coideal":
        prims = {g.name for g in P.gens if g.kind == "skewprim"}
        g0 = next(g.name for g in P.gens if g.kind == "grouplike")
        idx = next(
            i
            for i, t in enumerate(texts)
            if "^" in t.split()[0] and t.split()[0].split("^")[0] in prims
        )
        texts[idx] = f"({texts[idx]}) - 1 + {g0}"
    else:
        raise ValueError(f"unknown fault mode {mode!r}")
    return HopfPresentation(P.field, P.gens, texts, claimed_dim=P.claimed_dim)


@dataclass(frozen=True)
class ControlReport:
    coradical_class: str
    family_id: str
    params: Assignment
    outcomes: tuple[tuple[str, str], ...]  # (mode, collapse kind or "OK")

    @property
    def ok(self) -> bool:
        return all(kind != "OK" for _, kind in self.outcomes)

    def record(self, lab: str) -> str:
        body = " ".join(f"{m}->{k}" for m, k in self.outcomes)
        return f"control|{lab}|{self.coradical_class}|{self.family_id}|{body}|{'ok' if self.ok else 'FAIL'}"


def coradical_class_representatives(f: Field) -> dict[str, str]:
    """First catalog family of each coradical class instantiable over f."""
    scopes = ("T4.2", "T3.7", "lemmas") if f.p == 2 else ("T3.7", "lemmas")
    seen: dict[str, str] = {}
    for scope in scopes:
        for fid in list_families(scope):
            grp = family(fid).group
            if grp not in seen:
                seen[grp] = fid
    return seen


def negative_controls(f: Field, modes: tuple[str, ...] = FAULT_MODES) -> list[ControlReport]:
    """Fault-inject one representative family per coradical class; a control
    passes when no injected variant builds a verified Hopf algebra."""
    out = []
    for grp, fid in coradical_class_representatives(f).items():
        asg = next(parameter_assignments(fid, f))
        P = instantiate(fid, asg, f)
        outcomes = []
        for mode in modes:
            H = build_hopf(inject_fault(P, mode))
            if H.ok and check_axioms(H).ok:
                outcomes.append((mode, "OK"))
            elif H.ok:
                outcomes.append((mode, "axiom_failure"))
            else:
                outcomes.append((mode, H.kind))
        out.append(ControlReport(grp, fid, _asg_key(family(fid), f, asg), tuple(outcomes)))
    return out


# -- figures -------------------------------------------------------------------------


def _slug(text: str) -> str:
    return re.sub(r"[^A-Za-z0-9.-]+", "_", text).strip("_")


def render_campaign_figure(campaign: Campaign, outdir: str) -> str:
    """Stacked ok/collapse/budget bar per family; returns the PNG path."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    sweeps = campaign.sweeps
    names = [s.family_id for s in sweeps]
    ok = [s.counts[0] for s in sweeps]
    coll = [s.counts[1] for s in sweeps]
    budget = [s.counts[2] for s in sweeps]
    fig, axis = plt.subplots(figsize=(8, max(2.0, 0.22 * len(sweeps) + 1)))
    ypos = range(len(sweeps))
    axis.barh(ypos, ok, color="#2a9d4e", label="ok")
    axis.barh(ypos, coll, left=ok, color="#e0a13c", label="collapse")
    axis.barh(ypos, budget, left=[a + b for a, b in zip(ok, coll)], color="#c23b3b", label="budget")
    axis.set_yticks(list(ypos), names, fontsize=6)
    axis.invert_yaxis()
    axis.set_xlabel("parameter points")
    axis.set_title(f"{campaign.scope} over {campaign.field_label}")
    axis.legend(loc="lower right", fontsize=7)
    fig.tight_layout()
    os.makedirs(outdir, exist_ok=True)
    path = os.path.join(outdir, f"verify-{_slug(campaign.scope)}-{_slug(campaign.field_label)}.png")
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def render_iso_figure(report: IsoComparisonReport, outdir: str) -> str:
    """Oracle/criterion agreement matrix over ordered parameter pairs."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    idx = {pt: i for i, pt in enumerate(report.points)}
    n = len(report.points)
    # 0 both-none, 1 both-iso, 2 disagree, 3 budget
    grid = [[0] * n for _ in range(n)]
    for pr in report.pairs:
        if pr.oracle == "budget":
            val = 3
        elif not pr.agree:
            val = 2
        else:
            val = 1 if pr.oracle == "iso" else 0
        grid[idx[pr.left]][idx[pr.right]] = val
    from matplotlib.colors import ListedColormap

    cmap = ListedColormap(["#eef0f2", "#2a9d4e", "#c23b3b", "#9a9a9a"])
    fig, axis = plt.subplots(figsize=(max(3.0, 0.3 * n), max(2.6, 0.3 * n)))
    axis.imshow(grid, cmap=cmap, vmin=0, vmax=3)
    labels = [_fmt_asg(pt) for pt in report.points]
    axis.set_xticks(range(n), labels, rotation=90, fontsize=6)
    axis.set_yticks(range(n), labels, fontsize=6)
    axis.set_title(
        f"{report.family_id} {report.field_label}"
        f" -- agreement: {'yes' if report.agreement else 'NO'}",
        fontsize=9,
    )
    fig.tight_layout()
    os.makedirs(outdir, exist_ok=True)
    path = os.path.join(
        outdir, f"iso-criteria-{_slug(report.family_id)}-{_slug(report.field_label)}.png"
    )
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def render_nichols_figure(spec: str, graded, f: Field, outdir: str) -> str:
    """Bar chart of graded dimensions for one braided-space spec."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, axis = plt.subplots(figsize=(5, 3))
    axis.bar(range(len(graded)), graded, color="#33658a")
    axis.set_xlabel("degree")
    axis.set_ylabel("dimension")
    axis.set_title(f"{spec} over {field_label(f)}", fontsize=9)
    axis.set_xticks(range(len(graded)))
    fig.tight_layout()
    os.makedirs(outdir, exist_ok=True)
    path = os.path.join(outdir, f"nichols-{_slug(spec)}-{_slug(field_label(f))}.png")
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
