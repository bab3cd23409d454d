"""Static catalog of presentation families, loaded from ``families.toml``.

Each record describes one family of pointed Hopf algebra presentations:
generators with coalgebra tags, relation templates, parameter domains, the
expected dimension, and optional predicate strings (a parameter constraint
under which the rewriting system is confluent, and an isomorphism criterion
on parameter pairs).  The data file lives next to this module and is parsed
once on first use; every lookup after that is pure.

Template and predicate language
-------------------------------
Relation templates contain ``{expr}`` slots.  An ``expr`` is evaluated with
the family's parameters in scope: structural parameters (``mu``, ``n``) are
plain ints, field-valued parameters are wrapped elements with overloaded
``+ - * **`` arithmetic, and ``p`` is the field characteristic.  Bare ints
coerce into the prime subfield, so ``mu*lam2`` is a field product.  The
result is spliced into the relation text as a raw coefficient or exponent,
and the filled text must parse under the presentation grammar (which has no
bracket shorthand, so commutators are written out, e.g. ``gx - xg``).

Predicate strings use the same names plus, for isomorphism criteria, the
second parameter set under ``_``-suffixed names (``lam_`` is the right-hand
``lam``).  The names ``I01`` (raw 0 and 1) and ``SUB`` (the prime subfield,
computed as the roots of X^p - X) support the existential clauses; ``any``
and ``all`` are available.  Every evaluation is exact field arithmetic.

Families whose source display shows no commutator relations (commutative
``k[...]`` displays, bare ``k<...>`` displays, and tensor factors) carry the
full set of vanishing commutators explicitly; per-record notes flag typo
repairs and other encoding decisions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from .gf import Field, roots_univariate
from .hopf import GenSpec, HopfPresentation

_SLOT = re.compile(r"\{([^{}]+)\}")

_SCOPES = ("T4.2", "T3.7", "lemmas")

# Listing order of the lemma-level records.
_LEMMA_ORDER = ("L3.5", "L3.9", "L3.10-mu0", "L3.10-munz", "L3.11")


class Fx:
    """A field element with operator arithmetic, for predicate evaluation.

    Wraps a raw element of a specific field; ints coerce into the prime
    subfield (``n`` means ``n mod p``), so predicate text can mix parameters
    with small integer constants and structural ints.
    """

    __slots__ = ("f", "v")

    def __init__(self, f: Field, v: int):
        self.f = f
        self.v = v

    def _raw(self, other) -> int:
        if isinstance(other, Fx):
            if other.f is not self.f:
                raise ValueError("elements of different fields")
            return other.v
        if isinstance(other, int):
            return other % self.f.p
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        w = self._raw(other)
        return NotImplemented if w is NotImplemented else Fx(self.f, self.f.add(self.v, w))

    __radd__ = __add__

    def __sub__(self, other):
        w = self._raw(other)
        return NotImplemented if w is NotImplemented else Fx(self.f, self.f.sub(self.v, w))

    def __rsub__(self, other):
        w = self._raw(other)
        return NotImplemented if w is NotImplemented else Fx(self.f, self.f.sub(w, self.v))

    def __mul__(self, other):
        w = self._raw(other)
        return NotImplemented if w is NotImplemented else Fx(self.f, self.f.mul(self.v, w))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = Fx(self.f, 1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        w = self._raw(other)
        return NotImplemented if w is NotImplemented else self.v == w

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def __hash__(self):
        return hash((id(self.f), self.v))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"Fx({self.v})"


@dataclass(frozen=True)
class ParamSpec:
    name: str
    domain: str  # "free" | "I01" | "int:<list or lo..hi>"
    when: str  # "any" | "p2" | "podd"

    def values(self, f: Field) -> list:
        """Domain of this parameter over ``f``: raw elements, or ints for

        structural (``int:``) domains.  Bounds may reference ``p``.
        """
        if self.domain == "free":
            return list(range(f.q))
        if self.domain == "I01":
            return [0, 1]
        if self.domain.startswith("int:"):
            body = self.domain[4:]
            if ".." in body:
                lo, hi = body.split("..")
                return list(range(_int_bound(lo, f.p), _int_bound(hi, f.p) + 1))
            return [int(tok) for tok in body.split(",")]
        raise ValueError(f"unknown parameter domain {self.domain!r}")

    def active(self, f: Field) -> bool:
        return (
            self.when == "any"
            or (self.when == "p2" and f.p == 2)
            or (self.when == "podd" and f.p != 2)
        )

    def structural(self) -> bool:
        return self.domain.startswith("int:")


def _int_bound(tok: str, p: int) -> int:
    tok = tok.strip()
    if tok == "p-1":
        return p - 1
    return int(tok)


@dataclass(frozen=True)
class FamilySpec:
    id: str
    item: int
    scope: str  # "T4.2" | "T3.7" | "lemmas"
    group: str
    gens: tuple[tuple[str, str, str | None], ...]  # (name, kind, tag template)
    relations: tuple[str, ...]
    relations_p2: tuple[str, ...]
    relations_podd: tuple[str, ...]
    params: tuple[ParamSpec, ...]
    claimed_dim: str  # expression in p and structural parameters
    ambiguity: str | None
    ambiguity_when: str  # "any" | "p2"
    iso: str | None
    notes: str

    def active_params(self, f: Field) -> tuple[ParamSpec, ...]:
        return tuple(ps for ps in self.params if ps.active(f))

    def relation_templates(self, f: Field) -> tuple[str, ...]:
        extra = self.relations_p2 if f.p == 2 else self.relations_podd
        return self.relations + extra


def _data_text() -> str:
    return resources.files("hopfbench").joinpath("families.toml").read_text(encoding="utf-8")


_CATALOG: dict[str, FamilySpec] | None = None


def _parse_gen(text: str) -> tuple[str, str, str | None]:
    parts = text.split()
    if len(parts) == 2 and parts[1] == "G":
        return (parts[0], "grouplike", None)
    if len(parts) == 3 and parts[1] == "P":
        return (parts[0], "skewprim", parts[2])
    raise ValueError(f"bad generator entry {text!r}")


def _parse_param(text: str) -> ParamSpec:
    parts = text.split()
    when = "any"
    if parts and parts[-1].startswith("@"):
        when = {"@p2": "p2", "@podd": "podd"}[parts[-1]]
        parts = parts[:-1]
    if len(parts) != 2:
        raise ValueError(f"bad parameter entry {text!r}")
    return ParamSpec(parts[0], parts[1], when)


def _scope_of(fid: str) -> str:
    if fid.startswith("T4.2-"):
        return "T4.2"
    if fid.startswith("T3.7-"):
        return "T3.7"
    if fid.startswith("L3."):
        return "lemmas"
    raise ValueError(f"unrecognized family id {fid!r}")


def _load() -> dict[str, FamilySpec]:
    global _CATALOG
    if _CATALOG is not None:
        return _CATALOG
    raw = tomllib.loads(_data_text())
    out: dict[str, FamilySpec] = {}
    for rec in raw["family"]:
        fid = rec["id"]
        if fid in out:
            raise ValueError(f"duplicate family id {fid!r}")
        spec = FamilySpec(
            id=fid,
            item=rec["item"],
            scope=_scope_of(fid),
            group=rec["group"],
            gens=tuple(_parse_gen(g) for g in rec["gens"]),
            relations=tuple(rec["rels"]),
            relations_p2=tuple(rec.get("rels_p2", ())),
            relations_podd=tuple(rec.get("rels_podd", ())),
            params=tuple(_parse_param(s) for s in rec.get("params", ())),
            claimed_dim=str(rec["dim"]),
            ambiguity=rec.get("ambiguity"),
            ambiguity_when=rec.get("ambiguity_when", "any"),
            iso=rec.get("iso"),
            notes=rec.get("notes", ""),
        )
        out[fid] = spec
    _CATALOG = out
    return out


def family(fid: str) -> FamilySpec:
    cat = _load()
    if fid not in cat:
        raise ValueError(f"unknown family id {fid!r}")
    return cat[fid]


def list_families(scope: str = "all") -> list[str]:
    """Ids in ``scope`` ("T4.2", "T3.7", "lemmas", or "all"), ordered by

    source item number (lemmas in their fixed order; "all" concatenates the
    three scopes).
    """
    if scope != "all" and scope not in _SCOPES:
        raise ValueError(f"unknown scope {scope!r}")
    cat = _load()
    scopes = _SCOPES if scope == "all" else (scope,)
    out: list[str] = []
    for sc in scopes:
        ids = [s.id for s in cat.values() if s.scope == sc]
        if sc == "lemmas":
            ids.sort(key=_LEMMA_ORDER.index)
        else:
            ids.sort(key=lambda i: cat[i].item)
        out.extend(ids)
    return out


def _eval_ns(f: Field):
    return {
        "__builtins__": {},
        "any": any,
        "all": all,
        "p": f.p,
        "I01": [Fx(f, 0), Fx(f, 1)],
        "SUB": [Fx(f, r) for r in sorted(roots_univariate([0, f.neg(1)] + [0] * (f.p - 2) + [1], f))],
    }


def _check_params(spec: FamilySpec, params: dict, f: Field) -> dict:
    """Validate ``params`` against the active domains; return name -> value

    (ints for structural parameters, raw field elements otherwise).
    """
    active = spec.active_params(f)
    want = {ps.name for ps in active}
    got = set(params)
    if got != want:
        missing = sorted(want - got)
        extra = sorted(got - want)
        detail = []
        if missing:
            detail.append(f"missing {missing}")
        if extra:
            detail.append(f"unexpected {extra}")
        raise ValueError(f"{spec.id}: parameter set mismatch ({'; '.join(detail)})")
    out = {}
    for ps in active:
        v = params[ps.name]
        if not isinstance(v, int) or v not in ps.values(f):
            raise ValueError(f"{spec.id}: parameter {ps.name}={v!r} outside domain {ps.domain}")
        out[ps.name] = v
    return out


def _param_ns(spec: FamilySpec, params: dict, f: Field, suffix: str = "") -> dict:
    ns = {}
    for ps in spec.active_params(f):
        v = params[ps.name]
        ns[ps.name + suffix] = v if ps.structural() else Fx(f, v)
    return ns


def _fill(template: str, ns: dict) -> str:
    def sub(m: re.Match) -> str:
        val = eval(m.group(1), ns)  # noqa: S307 - trusted package data
        if isinstance(val, Fx):
            return str(val.v)
        if isinstance(val, bool) or not isinstance(val, int):
            raise ValueError(f"slot {m.group(1)!r} did not evaluate to an element or int")
        return str(val)

    return _SLOT.sub(sub, template)


def _check_char(spec: FamilySpec, f: Field):
    if spec.scope == "T4.2" and f.p != 2:
        raise ValueError(f"{spec.id}: family requires characteristic 2, got {f.p}")


def instantiate(fid: str, params: dict, f: Field) -> HopfPresentation:
    """The family's presentation over ``f`` at the given parameter values.

    Parameter values are raw field elements (structural parameters plain
    ints); the set of names must match the family's declared parameters
    exactly.  Raises ``ValueError`` on out-of-domain values or a
    characteristic mismatch.
    """
    spec = family(fid)
    _check_char(spec, f)
    vals = _check_params(spec, params, f)
    ns = {**_eval_ns(f), **_param_ns(spec, vals, f)}
    rels = [_fill(t, ns) for t in spec.relation_templates(f)]
    gens = [
        GenSpec(name, kind, _fill(tag, ns) if tag is not None else None)
        for (name, kind, tag) in spec.gens
    ]
    dim = eval(spec.claimed_dim, ns)  # noqa: S307 - trusted package data
    return HopfPresentation(f, gens, rels, claimed_dim=int(dim))


def parameter_assignments(fid: str, f: Field):
    """All in-domain parameter assignments for the family over ``f``,

    in deterministic lexicographic order.  Yields dicts.
    """
    spec = family(fid)
    active = spec.active_params(f)
    if not active:
        yield {}
        return
    domains = [ps.values(f) for ps in active]
    idx = [0] * len(domains)
    while True:
        yield {ps.name: dom[i] for ps, dom, i in zip(active, domains, idx)}
        j = len(domains) - 1
        while j >= 0:
            idx[j] += 1
            if idx[j] < len(domains[j]):
                break
            idx[j] = 0
            j -= 1
        if j < 0:
            return


def ambiguity_condition(fid: str, params: dict, f: Field) -> bool:
    """Evaluate the family's declared parameter constraint over ``f``.

    Raises ``ValueError`` if the family declares no constraint (or none for
    this characteristic).
    """
    spec = family(fid)
    _check_char(spec, f)
    if spec.ambiguity is None or (spec.ambiguity_when == "p2" and f.p != 2):
        raise ValueError(f"{fid}: no ambiguity condition declared")
    vals = _check_params(spec, params, f)
    ns = {**_eval_ns(f), **_param_ns(spec, vals, f)}
    return bool(eval(spec.ambiguity, ns))  # noqa: S307 - trusted package data


def iso_predicate(fid: str, params1: dict, params2: dict, f: Field) -> bool:
    """Evaluate the family's isomorphism criterion on a parameter pair.

    Raises ``ValueError`` if the family declares no criterion.
    """
    spec = family(fid)
    _check_char(spec, f)
    if spec.iso is None:
        raise ValueError(f"{fid}: no isomorphism criterion declared")
    v1 = _check_params(spec, params1, f)
    v2 = _check_params(spec, params2, f)
    ns = {**_eval_ns(f), **_param_ns(spec, v1, f), **_param_ns(spec, v2, f, suffix="_")}
    return bool(eval(spec.iso, ns))  # noqa: S307 - trusted package data


def describe(fid: str) -> str:
    """A readable dump of one record: the CLI's ``catalog show`` body."""
    spec = family(fid)
    lines = [
        f"id: {spec.id}",
        f"item: {spec.item}",
        f"scope: {spec.scope}",
        f"group: {spec.group}",
        f"claimed dimension: {spec.claimed_dim}",
    ]
    for name, kind, tag in spec.gens:
        lines.append(f"gen: {name} {'grouplike' if kind == 'grouplike' else f'skew-primitive tag {tag}'}")
    for t in spec.relations:
        lines.append(f"rel: {t}")
    for t in spec.relations_p2:
        lines.append(f"rel (char 2): {t}")
    for t in spec.relations_podd:
        lines.append(f"rel (odd char): {t}")
    for ps in spec.params:
        guard = "" if ps.when == "any" else f" ({'char 2' if ps.when == 'p2' else 'odd char'})"
        lines.append(f"param: {ps.name} in {ps.domain}{guard}")
    if spec.ambiguity:
        guard = " (char 2)" if spec.ambiguity_when == "p2" else ""
        lines.append(f"ambiguity{guard}: {spec.ambiguity}")
    if spec.iso:
        lines.append(f"iso: {spec.iso}")
    if spec.notes:
        lines.append(f"notes: {spec.notes}")
    return "\n".join(lines)
