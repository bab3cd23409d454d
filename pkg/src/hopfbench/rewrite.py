"""Noncommutative rewriting: normal forms, ambiguities, completion.

A rule ``lead -> tail`` stands for the relation lead - tail, with lead a
single monic word that is deglex-greater than every word of tail.  A system
is confluent when every overlap and inclusion ambiguity between rule leads
resolves to zero; completion adds the (monicized) obstructions as new rules,
smallest superword first, inter-reducing after every addition.

If completion ever derives that the empty word reduces to 0 (the relation
1 = 0), the quotient is the zero ring; the system is flagged unit_collapsed
and every polynomial then has normal form 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .freealg import FreeAlgebra, Word


@dataclass
class Rule:
    lead: Word
    tail: dict


@dataclass
class Ambiguity:
    kind: str  # "overlap" or "inclusion"
    i: int
    j: int
    superword: Word
    pos: int  # overlap: start of lead_j in the superword; inclusion: start of lead_j in lead_i


class RewriteSystem:
    def __init__(self, ctx: FreeAlgebra, rules: list[Rule] | None = None):
        self.ctx = ctx
        self.rules: list[Rule] = rules or []
        self.unit_collapsed = False

    def copy(self) -> "RewriteSystem":
        out = RewriteSystem(self.ctx, [Rule(r.lead, dict(r.tail)) for r in self.rules])
        out.unit_collapsed = self.unit_collapsed
        return out

    def add_relation(self, poly: dict):
        """Monicize a relation polynomial into a rule and insert it."""
        if not poly or self.unit_collapsed:
            return
        ctx = self.ctx
        lead = ctx.leading_word(poly)
        if lead == ():
            self.unit_collapsed = True
            self.rules = []
            return
        c = poly[lead]
        rest = dict(poly)
        del rest[lead]
        tail = ctx.scale(ctx.field.neg(ctx.field.inv(c)), rest)
        self.rules.append(Rule(lead, tail))
        self.rules.sort(key=lambda r: ctx.deglex_key(r.lead))

    def leads(self) -> list[Word]:
        return [r.lead for r in self.rules]

    def __repr__(self):
        ctx = self.ctx
        lines = [f"{ctx.format_word(r.lead)} -> {ctx.format_poly(r.tail)}" for r in self.rules]
        return "RewriteSystem[" + "; ".join(lines) + "]"


def make_system(ctx: FreeAlgebra, relations: list[dict]) -> RewriteSystem:
    sys = RewriteSystem(ctx)
    for r in relations:
        sys.add_relation(r)
    return sys


def _find_match(w: Word, rules: list[Rule]):
    n = len(w)
    for pos in range(n):
        for rule in rules:
            L = len(rule.lead)
            if pos + L <= n and w[pos : pos + L] == rule.lead:
                return pos, rule
    return None


def normal_form(f: dict, sys: RewriteSystem) -> dict:
    """Reduce a polynomial to its normal form, largest word first."""
    if sys.unit_collapsed:
        return {}
    ctx = sys.ctx
    fld = ctx.field
    rules = sys.rules
    pending = dict(f)
    out: dict = {}
    key = ctx.deglex_key
    while pending:
        w = max(pending, key=key)
        c = pending.pop(w)
        if not c:
            continue
        m = _find_match(w, rules)
        if m is None:
            s = fld.add(out.get(w, 0), c)
            if s:
                out[w] = s
            elif w in out:
                del out[w]
            continue
        pos, rule = m
        pre, post = w[:pos], w[pos + len(rule.lead) :]
        for tw, tc in rule.tail.items():
            nw = pre + tw + post
            s = fld.add(pending.get(nw, 0), fld.mul(c, tc))
            if s:
                pending[nw] = s
            elif nw in pending:
                del pending[nw]
    return out


def find_ambiguities(sys: RewriteSystem) -> list[Ambiguity]:
    """All overlap and inclusion ambiguities between rule leads, sorted by
    superword (deglex), then kind, then rule indices."""
    ctx = sys.ctx
    out = []
    leads = sys.leads()
    for i, li in enumerate(leads):
        for j, lj in enumerate(leads):
            # proper overlap: a proper suffix of li equals a proper prefix of lj
            for olap in range(1, min(len(li), len(lj))):
                if li[-olap:] == lj[:olap]:
                    out.append(Ambiguity("overlap", i, j, li + lj[olap:], len(li) - olap))
            # inclusion: lj a subword of li (proper, or a duplicate lead)
            if i != j and len(lj) < len(li):
                for pos in range(len(li) - len(lj) + 1):
                    if li[pos : pos + len(lj)] == lj:
                        out.append(Ambiguity("inclusion", i, j, li, pos))
            elif i < j and li == lj:
                out.append(Ambiguity("inclusion", i, j, li, 0))
    out.sort(key=lambda a: (ctx.deglex_key(a.superword), a.kind, a.i, a.j, a.pos))
    return out


def resolve_ambiguity(amb: Ambiguity, sys: RewriteSystem) -> dict:
    """Normal form of the difference of the two one-step reductions of the
    ambiguity's superword.  Zero means the ambiguity is resolvable."""
    ctx = sys.ctx
    ri, rj = sys.rules[amb.i], sys.rules[amb.j]
    w = amb.superword
    if amb.kind == "overlap":
        suffix = w[len(ri.lead) :]
        prefix = w[: amb.pos]
        p1 = ctx.mul(ri.tail, ctx.monomial(suffix))
        p2 = ctx.mul(ctx.monomial(prefix), rj.tail)
    else:
        pre = w[: amb.pos]
        post = w[amb.pos + len(rj.lead) :]
        p1 = dict(ri.tail)
        p2 = ctx.mul(ctx.mul(ctx.monomial(pre), rj.tail), ctx.monomial(post))
    return normal_form(ctx.sub(p1, p2), sys)


def _inter_reduce(sys: RewriteSystem):
    """Bring the rule set to reduced form: no lead divisible by another lead,
    every tail in normal form with respect to the whole system."""
    ctx = sys.ctx
    changed = True
    while changed and not sys.unit_collapsed:
        changed = False
        for idx, rule in enumerate(list(sys.rules)):
            others = RewriteSystem(ctx, sys.rules[:idx] + sys.rules[idx + 1 :])
            if _find_match(rule.lead, others.rules) is not None:
                poly = ctx.sub(ctx.monomial(rule.lead), rule.tail)
                sys.rules.pop(idx)
                reduced = normal_form(poly, sys)
                if reduced:
                    sys.add_relation(reduced)
                changed = True
                break
            tail = normal_form(rule.tail, sys)
            if tail != rule.tail:
                rule.tail = tail
                changed = True


def complete(sys: RewriteSystem, degree_cap: int | None = None, max_rounds: int = 2000):
    """Knuth-Bendix/Buchberger completion.

    Returns (completed_system, status) with status "confluent" or
    "cap_exceeded".  The input system is not modified.  degree_cap bounds the
    length of any added rule's lead; the default is 2 + twice the longest
    input lead.  A derivation of 1 -> 0 short-circuits: the result is the
    (confluent) zero-ring system with unit_collapsed set.
    """
    sys = sys.copy()
    if degree_cap is None:
        degree_cap = 2 + 2 * max((len(r.lead) for r in sys.rules), default=1)
    _inter_reduce(sys)
    for _ in range(max_rounds):
        if sys.unit_collapsed:
            return sys, "confluent"
        obstruction = None
        for amb in find_ambiguities(sys):
            obst = resolve_ambiguity(amb, sys)
            if obst:
                obstruction = obst
                break
        if obstruction is None:
            return sys, "confluent"
        lead = sys.ctx.leading_word(obstruction)
        if len(lead) > degree_cap:
            return sys, "cap_exceeded"
        sys.add_relation(obstruction)
        _inter_reduce(sys)
    return sys, "cap_exceeded"


def enumerate_basis(sys: RewriteSystem, cap: int = 10000):
    """Irreducible words of a (confluent) system in ascending deglex.

    Returns (words, finite).  finite is False when more than cap words exist;
    the returned list then holds the first words found.  For the zero ring
    (unit_collapsed) the basis is empty.
    """
    if sys.unit_collapsed:
        return [], True
    leads = sys.leads()
    if () in leads:
        return [], True
    nletters = len(sys.ctx.names)
    words: list[Word] = [()]
    level: list[Word] = [()]
    while level:
        nxt = []
        for w in level:
            for a in range(nletters):
                wa = w + (a,)
                ok = True
                for L in leads:
                    if len(L) <= len(wa) and wa[len(wa) - len(L) :] == L:
                        ok = False
                        break
                if ok:
                    nxt.append(wa)
                    words.append(wa)
                    if len(words) > cap:
                        return words, False
        level = nxt
    return words, True
