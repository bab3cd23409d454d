"""Pointed Hopf algebras from generator/relation presentations.

A presentation declares a field, generators in ascending precedence order —
each either grouplike (Delta g = g (x) g) or skew-primitive with a coaction
tag word gamma in the grouplike generators (Delta x = x (x) 1 + gamma (x) x)
— and a list of relation polynomials.

build_hopf completes the relations, enumerates the basis, checks that the
relation ideal is a coideal killed by the counit, builds Delta / counit /
antipode data on the whole basis, and verifies both antipode identities
element by element.  Any failure yields a CollapseReport describing what
broke instead of a HopfAlgebra.

Text file format (one declaration per line, '#' comments):

    field 2 1
    gen g grouplike
    gen h grouplike
    gen x skewprim g^2
    rel g^4 + 1
    rel gx + xg + g + g^3
    rel x^2

Generator declaration order fixes the monomial order (last = largest).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .findim import FinAlgebra, from_confluent, generated_subspace_dim, mult_element, tensor_square
from .freealg import FreeAlgebra
from .gf import Field, make_field, rank_nullspace
from .rewrite import complete, enumerate_basis, make_system, normal_form


@dataclass
class GenSpec:
    name: str
    kind: str  # "grouplike" | "skewprim"
    coaction: str | None = None  # tag word text, for skewprim


class HopfPresentation:
    def __init__(self, fld: Field, gens: list[GenSpec], relations: list[str], claimed_dim: int | None = None):
        self.field = fld
        self.gens = gens
        self.relation_texts = list(relations)
        self.claimed_dim = claimed_dim
        self.ctx = FreeAlgebra(fld, [g.name for g in gens])
        group_names = {g.name for g in gens if g.kind == "grouplike"}
        for g in gens:
            if g.kind == "skewprim":
                w = self.ctx.parse_word(g.coaction or "1")
                if any(self.ctx.names[i] not in group_names for i in w):
                    raise ValueError(f"coaction tag of {g.name} uses non-grouplike letters")
            elif g.kind != "grouplike":
                raise ValueError(f"unknown generator kind {g.kind!r}")
        self.relations = [self.ctx.parse_poly(t) for t in self.relation_texts]

    def to_text(self) -> str:
        lines = [f"field {self.field.p} {self.field.k}"]
        for g in self.gens:
            if g.kind == "grouplike":
                lines.append(f"gen {g.name} grouplike")
            else:
                lines.append(f"gen {g.name} skewprim {g.coaction}")
        for r in self.relations:
            lines.append(f"rel {self.ctx.format_poly(r)}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "HopfPresentation":
        fld = None
        gens: list[GenSpec] = []
        rels: list[str] = []
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if parts[0] == "field":
                fld = make_field(int(parts[1]), int(parts[2]))
            elif parts[0] == "gen":
                if parts[2] == "grouplike":
                    gens.append(GenSpec(parts[1], "grouplike"))
                elif parts[2] == "skewprim":
                    gens.append(GenSpec(parts[1], "skewprim", parts[3]))
                else:
                    raise ValueError(f"bad gen line: {raw!r}")
            elif parts[0] == "rel":
                rels.append(line[len("rel") :].strip())
            else:
                raise ValueError(f"unrecognized line: {raw!r}")
        if fld is None:
            raise ValueError("missing field line")
        return cls(fld, gens, rels)


@dataclass
class CollapseReport:
    kind: str  # completion_cap_exceeded | unit_collapse | not_finite |
    #            dimension_drop | dimension_mismatch | non_coideal | antipode_failure
    message: str
    detail: dict = dc_field(default_factory=dict)
    ok = False


class HopfAlgebra:
    """A verified finite-dimensional Hopf algebra on an explicit basis."""

    ok = True

    def __init__(self, presentation: HopfPresentation, A: FinAlgebra):
        self.presentation = presentation
        self.A = A
        self.field = A.field
        self.dim = A.dim
        self.T = tensor_square(A)
        self.delta: list[dict] = []  # per basis index, flat pair dict
        self.eps: list[int] = []
        self.S: list[dict] = []  # antipode column per basis index
        self.gen_vectors: dict[str, dict] = {}
        self.gen_delta: dict[str, dict] = {}

    # -- small linear helpers -------------------------------------------------

    def flatten(self, u: dict, v: dict) -> dict:
        d = self.dim
        fld = self.field
        out = {}
        for a, ca in u.items():
            base = a * d
            for b, cb in v.items():
                c = fld.mul(ca, cb)
                if c:
                    out[base + b] = c
        return out

    def mult(self, u: dict, v: dict) -> dict:
        return mult_element(u, v, self.A)

    def tmult(self, U: dict, V: dict) -> dict:
        return mult_element(U, V, self.T)

    def _combine(self, columns, vec: dict) -> dict:
        fld = self.field
        out: dict = {}
        for i, c in vec.items():
            for k, d in columns[i].items():
                s = fld.add(out.get(k, 0), fld.mul(c, d))
                if s:
                    out[k] = s
                elif k in out:
                    del out[k]
        return out

    def delta_of(self, vec: dict) -> dict:
        return self._combine(self.delta, vec)

    def antipode_of(self, vec: dict) -> dict:
        return self._combine(self.S, vec)

    def eps_of(self, vec: dict) -> int:
        fld = self.field
        out = 0
        for i, c in vec.items():
            out = fld.add(out, fld.mul(c, self.eps[i]))
        return out

    def element(self, text: str) -> dict:
        return self.A.word_vector(text)

    def group_elements(self) -> list[dict]:
        """Closure of the grouplike generators under multiplication."""
        seen = {}
        unit = self.A.unit()
        seen[_veckey(unit)] = unit
        frontier = [unit]
        gls = [self.gen_vectors[g.name] for g in self.presentation.gens if g.kind == "grouplike"]
        while frontier:
            new = []
            for v in frontier:
                for g in gls:
                    w = self.mult(v, g)
                    k = _veckey(w)
                    if k not in seen:
                        seen[k] = w
                        new.append(w)
            frontier = new
        return [seen[k] for k in sorted(seen)]


def _veckey(v: dict):
    return tuple(sorted(v.items()))


def _invert_grouplike(H_or_A, vec: dict):
    """Inverse of an invertible element by power cycling, or None."""
    A = H_or_A.A if isinstance(H_or_A, HopfAlgebra) else H_or_A
    unit = A.unit()
    prev = unit
    cur = vec
    for _ in range(A.dim + 1):
        if cur == unit:
            return prev
        prev, cur = cur, mult_element(cur, vec, A)
    return None


def build_hopf(P: HopfPresentation, degree_cap: int | None = None):
    """Construct and verify the Hopf algebra of a presentation.

    Returns a HopfAlgebra, or a CollapseReport when the presentation fails:
    completion blow-up, collapse of the dimension (against P.claimed_dim when
    set), a relation ideal that is not a coideal or not killed by the counit,
    or a missing antipode.
    """
    ctx = P.ctx
    fld = P.field
    sys = make_system(ctx, P.relations)
    comp, status = complete(sys, degree_cap)
    if status == "cap_exceeded":
        return CollapseReport("completion_cap_exceeded", "completion exceeded the degree cap", {"cap": degree_cap})
    if comp.unit_collapsed:
        return CollapseReport("unit_collapse", "relations force 1 = 0")
    cap = 4 * P.claimed_dim if P.claimed_dim else 20000
    words, finite = enumerate_basis(comp, cap)
    if not finite:
        return CollapseReport("not_finite", f"basis exceeds cap {cap}", {"cap": cap})
    if P.claimed_dim is not None and len(words) != P.claimed_dim:
        kind = "dimension_drop" if len(words) < P.claimed_dim else "dimension_mismatch"
        return CollapseReport(kind, f"dimension {len(words)} != claimed {P.claimed_dim}",
                              {"dim": len(words), "claimed": P.claimed_dim})

    # counit on relations
    group_letters = {ctx.index[g.name] for g in P.gens if g.kind == "grouplike"}

    def eps_word(w):
        return 1 if all(a in group_letters for a in w) else 0

    for t, rel in zip(P.relation_texts, P.relations):
        val = 0
        for w, c in rel.items():
            if eps_word(w):
                val = fld.add(val, c)
        if val != 0:
            return CollapseReport("non_coideal", f"counit does not kill relation {t}", {"relation": t, "eps": val})

    A = from_confluent(comp, cap)
    H = HopfAlgebra(P, A)

    # generator images and their coproducts
    for g in P.gens:
        v = A.word_vector(g.name)
        H.gen_vectors[g.name] = v
        if g.kind == "grouplike":
            H.gen_delta[g.name] = H.flatten(v, v)
        else:
            tag = A.word_vector(g.coaction or "1")
            H.gen_delta[g.name] = _add_flat(H, H.flatten(v, A.unit()), H.flatten(tag, v))

    # coideal check: Delta(r) must vanish in A (x) A
    unit_flat = H.flatten(A.unit(), A.unit())
    for t, rel in zip(P.relation_texts, P.relations):
        acc: dict = {}
        for w, c in rel.items():
            term = unit_flat
            for a in w:
                term = H.tmult(term, H.gen_delta[ctx.names[a]])
            acc = _add_flat(H, acc, _scale_flat(H, c, term))
        if acc:
            return CollapseReport("non_coideal", f"coproduct does not preserve the ideal at relation {t}",
                                  {"relation": t})

    # Delta and eps on the whole basis by prefix extension
    H.delta = [None] * A.dim
    H.eps = [0] * A.dim
    H.delta[A.unit_index] = unit_flat
    H.eps[A.unit_index] = 1
    for j, w in enumerate(A.basis):
        if not w:
            continue
        jp = A.index[w[:-1]]
        name = ctx.names[w[-1]]
        H.delta[j] = H.tmult(H.delta[jp], H.gen_delta[name])
        H.eps[j] = eps_word(w)

    # antipode on generators, extended as an algebra anti-endomorphism
    s_letter: dict[str, dict] = {}
    for g in P.gens:
        v = H.gen_vectors[g.name]
        if g.kind == "grouplike":
            inv = _invert_grouplike(H, v)
            if inv is None:
                return CollapseReport("antipode_failure", f"grouplike generator {g.name} is not invertible",
                                      {"generator": g.name})
            s_letter[g.name] = inv
        else:
            tag = A.word_vector(g.coaction or "1")
            taginv = _invert_grouplike(H, tag)
            if taginv is None:
                return CollapseReport("antipode_failure", f"coaction tag of {g.name} is not invertible",
                                      {"generator": g.name})
            img = H.mult(taginv, v)
            s_letter[g.name] = {i: fld.neg(c) for i, c in img.items()}

    H.S = [None] * A.dim
    H.S[A.unit_index] = A.unit()
    for j, w in enumerate(A.basis):
        if not w:
            continue
        jp = A.index[w[:-1]]
        name = ctx.names[w[-1]]
        H.S[j] = H.mult(s_letter[name], H.S[jp])

    # verify both convolution identities on every basis element
    for i in range(A.dim):
        target = {A.unit_index: H.eps[i]} if H.eps[i] else {}
        left: dict = {}
        right: dict = {}
        d = A.dim
        for key, c in H.delta[i].items():
            a, b = divmod(key, d)
            left = _acc(H, left, c, H.mult(H.S[a], {b: 1}))
            right = _acc(H, right, c, H.mult({a: 1}, H.S[b]))
        if left != target or right != target:
            side = "left" if left != target else "right"
            return CollapseReport("antipode_failure", f"antipode identity fails ({side}) on basis element {i}",
                                  {"index": i, "label": A.labels[i]})
    return H


def _add_flat(H, a: dict, b: dict) -> dict:
    fld = H.field
    out = dict(a)
    for k, c in b.items():
        s = fld.add(out.get(k, 0), c)
        if s:
            out[k] = s
        elif k in out:
            del out[k]
    return out


def _scale_flat(H, c, a: dict) -> dict:
    if c == 1:
        return a
    fld = H.field
    return {k: fld.mul(c, v) for k, v in a.items()} if c else {}


def _acc(H, acc: dict, c, vec: dict) -> dict:
    fld = H.field
    for i, v in vec.items():
        s = fld.add(acc.get(i, 0), fld.mul(c, v))
        if s:
            acc[i] = s
        elif i in acc:
            del acc[i]
    return acc


@dataclass
class AxiomReport:
    ok: bool
    checks: dict  # name -> (ok, witness or None)

    def failing(self):
        return [n for n, (ok, _) in self.checks.items() if not ok]


AXIOM_NAMES = [
    "coassociativity",
    "counit",
    "comult_multiplicative",
    "counit_multiplicative",
    "antipode_left",
    "antipode_right",
]


def check_axioms(H: HopfAlgebra, sample_seed: int = 0, exhaustive_pair_limit: int = 32) -> AxiomReport:
    """Re-verify the six Hopf axiom groups on the built structure maps.

    Everything per-basis-element is checked exhaustively.  Multiplicativity
    of the coproduct is checked on all pairs up to exhaustive_pair_limit
    dimensions; above that on every (basis element, generator) pair plus a
    seeded random sample of 200 full pairs.
    """
    import random

    fld = H.field
    d = H.dim
    checks: dict[str, tuple[bool, str | None]] = {}

    # coassociativity and counit, element by element
    co_ok, co_wit = True, None
    cu_ok, cu_wit = True, None
    for i in range(d):
        lhs: dict = {}
        rhs: dict = {}
        lvec: dict = {}
        rvec: dict = {}
        for key, c in H.delta[i].items():
            a, b = divmod(key, d)
            for k2, c2 in H.delta[a].items():
                kk = k2 * d + b
                s = fld.add(lhs.get(kk, 0), fld.mul(c, c2))
                if s:
                    lhs[kk] = s
                elif kk in lhs:
                    del lhs[kk]
            for k2, c2 in H.delta[b].items():
                kk = a * d * d + k2
                s = fld.add(rhs.get(kk, 0), fld.mul(c, c2))
                if s:
                    rhs[kk] = s
                elif kk in rhs:
                    del rhs[kk]
            if H.eps[a]:
                lvec = _acc(H, lvec, fld.mul(c, H.eps[a]), {b: 1})
            if H.eps[b]:
                rvec = _acc(H, rvec, fld.mul(c, H.eps[b]), {a: 1})
        if co_ok and lhs != rhs:
            co_ok, co_wit = False, f"basis element {i} ({H.A.labels[i]})"
        if cu_ok and (lvec != {i: 1} or rvec != {i: 1}):
            cu_ok, cu_wit = False, f"basis element {i} ({H.A.labels[i]})"
    checks["coassociativity"] = (co_ok, co_wit)
    checks["counit"] = (cu_ok, cu_wit)

    # comultiplicativity
    dm_ok, dm_wit = True, None
    unit_flat = H.flatten(H.A.unit(), H.A.unit())
    if H.delta[H.A.unit_index] != unit_flat:
        dm_ok, dm_wit = False, "unit"
    if d <= exhaustive_pair_limit:
        pairs = [(i, j) for i in range(d) for j in range(d)]
        gen_pairs = []
    else:
        pairs = []
        rng = random.Random(sample_seed)
        pairs = [(rng.randrange(d), rng.randrange(d)) for _ in range(200)]
        gen_pairs = [(i, H.gen_vectors[g.name]) for g in H.presentation.gens for i in range(d)]
    for i, j in pairs:
        if not dm_ok:
            break
        prod = H.A.get_mult(i, j)
        if H.delta_of(prod) != H.tmult(H.delta[i], H.delta[j]):
            dm_ok, dm_wit = False, f"pair ({i}, {j})"
    for i, gvec in gen_pairs:
        if not dm_ok:
            break
        prod = H.mult({i: 1}, gvec)
        dg = H.delta_of(gvec)
        if H.delta_of(prod) != H.tmult(H.delta[i], dg):
            dm_ok, dm_wit = False, f"(basis {i}, generator)"
    checks["comult_multiplicative"] = (dm_ok, dm_wit)

    # counit multiplicativity (full)
    em_ok, em_wit = True, None
    if H.eps[H.A.unit_index] != 1:
        em_ok, em_wit = False, "unit"
    for i in range(d):
        if not em_ok:
            break
        ei = H.eps[i]
        for j in range(d):
            val = H.eps_of(H.A.get_mult(i, j))
            if val != fld.mul(ei, H.eps[j]):
                em_ok, em_wit = False, f"pair ({i}, {j})"
                break
    checks["counit_multiplicative"] = (em_ok, em_wit)

    # antipode identities (full)
    sl_ok, sl_wit = True, None
    sr_ok, sr_wit = True, None
    for i in range(d):
        target = {H.A.unit_index: H.eps[i]} if H.eps[i] else {}
        left: dict = {}
        right: dict = {}
        for key, c in H.delta[i].items():
            a, b = divmod(key, d)
            left = _acc(H, left, c, H.mult(H.S[a], {b: 1}))
            right = _acc(H, right, c, H.mult({a: 1}, H.S[b]))
        if sl_ok and left != target:
            sl_ok, sl_wit = False, f"basis element {i} ({H.A.labels[i]})"
        if sr_ok and right != target:
            sr_ok, sr_wit = False, f"basis element {i} ({H.A.labels[i]})"
    checks["antipode_left"] = (sl_ok, sl_wit)
    checks["antipode_right"] = (sr_ok, sr_wit)

    return AxiomReport(all(ok for ok, _ in checks.values()), checks)


def compute_antipode(H: HopfAlgebra):
    """Dense antipode matrix M with M[i][j] = coefficient of basis i in
    S(basis j)."""
    M = [[0] * H.dim for _ in range(H.dim)]
    for j in range(H.dim):
        for i, c in H.S[j].items():
            M[i][j] = c
    return M


def skew_primitive_space(H: HopfAlgebra, g, h) -> list[dict]:
    """Basis of { v : Delta v = v (x) g + h (x) v } for grouplike g, h.

    g and h may be element vectors or word texts.  The difference g - h
    always lies in this space.
    """
    if isinstance(g, str):
        g = H.element(g)
    if isinstance(h, str):
        h = H.element(h)
    d = H.dim
    fld = H.field
    # unknowns x_j; equation Delta(sum x_j e_j) - (sum x_j e_j) (x) g - h (x) (sum x_j e_j) = 0
    cols = []
    keys: dict[int, int] = {}
    for j in range(d):
        col = dict(H.delta[j])
        for a, ca in g.items():
            k = j * d + a
            s = fld.sub(col.get(k, 0), ca)
            if s:
                col[k] = s
            elif k in col:
                del col[k]
        for a, ca in h.items():
            k = a * d + j
            s = fld.sub(col.get(k, 0), ca)
            if s:
                col[k] = s
            elif k in col:
                del col[k]
        cols.append(col)
        for k in col:
            if k not in keys:
                keys[k] = len(keys)
    rows = [[0] * d for _ in range(len(keys))]
    for j, col in enumerate(cols):
        for k, c in col.items():
            rows[keys[k]][j] = c
    _, null = rank_nullspace(rows, fld, ncols=d)
    return [{j: c for j, c in enumerate(v) if c} for v in null]


def grouplikes(H: HopfAlgebra, mode: str = "verify", elements=None):
    """Verify given elements as grouplike, or enumerate all grouplikes.

    verify: returns [(element, ok)] checking Delta v = v (x) v and eps v = 1.
    enumerate: exhaustive scan of the whole vector space; only feasible when
    q^dim is small (GF(2) with dim <= 22 or so), otherwise raises.
    """
    fld = H.field
    d = H.dim
    if mode == "verify":
        out = []
        for el in elements or []:
            v = H.element(el) if isinstance(el, str) else el
            ok = H.delta_of(v) == H.flatten(v, v) and H.eps_of(v) == 1
            out.append((v, ok))
        return out
    if mode != "enumerate":
        raise ValueError(f"unknown mode {mode!r}")
    if fld.q**d > 1 << 20:
        raise ValueError(f"enumeration over {fld.q}^{d} vectors is not feasible")
    if fld.q == 2:
        dbits = []
        for i in range(d):
            b = 0
            for k in H.delta[i]:
                b |= 1 << k
            dbits.append(b)
        found = []
        deltas = [0] * (1 << d)
        for v in range(1, 1 << d):
            low = v & -v
            i = low.bit_length() - 1
            deltas[v] = deltas[v ^ low] ^ dbits[i]
            # eps(v) must be 1
            e = 0
            w = v
            while w:
                lw = w & -w
                e ^= H.eps[lw.bit_length() - 1]
                w ^= lw
            if e != 1:
                continue
            vv = 0
            w = v
            while w:
                lw = w & -w
                vv |= v << ((lw.bit_length() - 1) * d)
                w ^= lw
            if deltas[v] == vv:
                found.append({i for i in range(d) if (v >> i) & 1})
        return [{i: 1 for i in sorted(s)} for s in found]
    # small non-GF(2) spaces: plain exhaustive scan
    found = []
    total = fld.q**d
    for idx in range(1, total):
        v = {}
        x = idx
        for j in range(d):
            c = x % fld.q
            if c:
                v[j] = c
            x //= fld.q
        if H.eps_of(v) == 1 and H.delta_of(v) == H.flatten(v, v):
            found.append(v)
    return found


def bosonize(group: dict, action: dict, coaction: dict, nichols_relations: list[str]) -> HopfPresentation:
    """Assemble the smash-product presentation of a group algebra with a
    braided vector space.

    group: {"field": Field, "gens": [names], "relations": [poly texts]}
    action: {(group gen, module gen): poly text in module gens} — the left
        action g.x; identity pairs may be omitted.
    coaction: {module gen: group word text}; tags must be central in the
        group, and each action image must stay inside one tag's span.
    nichols_relations: relation texts in the module generators.

    The result has relations: group relations, then g x - (g.x) g for every
    pair, then the module relations.
    """
    fld = group["field"]
    gnames = list(group["gens"])
    xnames = list(coaction)
    ctx = FreeAlgebra(fld, gnames + xnames)

    # group-only system for centrality checks
    gctx = FreeAlgebra(fld, gnames)
    gsys, status = complete(make_system(gctx, [gctx.parse_poly(t) for t in group["relations"]]))
    if status != "confluent":
        raise ValueError("group relations do not complete")
    for x, tag in coaction.items():
        tagp = gctx.parse_poly(tag)
        for g in gnames:
            gp = gctx.parse_poly(g)
            comm = gctx.sub(gctx.mul(tagp, gp), gctx.mul(gp, tagp))
            if normal_form(comm, gsys):
                raise ValueError(f"coaction tag {tag} of {x} is not central")

    # compatibility: g.x must mix only module generators with the same tag
    for (g, x), img in action.items():
        mctx = FreeAlgebra(fld, xnames)
        poly = mctx.parse_poly(img)
        for w in poly:
            if len(w) != 1:
                raise ValueError(f"action image {img!r} is not linear")
            y = xnames[w[0]]
            if coaction[y] != coaction[x]:
                raise ValueError(f"action of {g} on {x} leaves its coaction tag")

    rels = list(group["relations"])
    for g in gnames:
        for x in xnames:
            img = action.get((g, x), x)
            rels.append(f"{g}{x} - ({img})({g})")
    rels.extend(nichols_relations)

    gens = [GenSpec(g, "grouplike") for g in gnames]
    gens += [GenSpec(x, "skewprim", coaction[x]) for x in xnames]
    return HopfPresentation(fld, gens, rels)


@dataclass
class HopfMorphism:
    images: dict  # generator name -> element vector of the target
    source: HopfAlgebra
    target: HopfAlgebra

    def apply_word(self, w) -> dict:
        out = self.target.A.unit()
        names = self.source.presentation.ctx.names
        for a in w:
            out = self.target.mult(out, self.images[names[a]])
        return out

    def matrix(self):
        """Dense matrix of the morphism on the source basis."""
        cols = [self.apply_word(w) for w in self.source.A.basis]
        M = [[0] * self.source.dim for _ in range(self.target.dim)]
        for j, col in enumerate(cols):
            for i, c in col.items():
                M[i][j] = c
        return M


class SearchBudgetExceeded(RuntimeError):
    """iso_search visited more assignment nodes than its budget allows."""


def iso_search(
    H1: HopfAlgebra, H2: HopfAlgebra, limit: int | None = None, node_budget: int | None = None
) -> list[HopfMorphism]:
    """All Hopf algebra isomorphisms H1 -> H2 found by exhausting generator
    images: grouplike generators range over the grouplikes of H2, skew
    generators over the matching skew-primitive space, relations pruned
    incrementally, bijectivity certified by the generated-subspace dimension.

    node_budget caps the number of partial-assignment nodes visited
    (deterministic, independent of wall time); exceeding it raises
    SearchBudgetExceeded.
    """
    if H1.field is not H2.field or H1.dim != H2.dim:
        return []
    fld = H1.field
    P = H1.presentation
    ctx = P.ctx
    gens = P.gens
    n = len(gens)
    glikes = H2.group_elements()
    skew_cache: dict = {}
    nodes = 0

    # relations become checkable once all their letters are assigned
    max_letter = []
    for rel in P.relations:
        m = -1
        for w in rel:
            for a in w:
                m = max(m, a)
        max_letter.append(m)
    rel_at_depth = [[] for _ in range(n + 1)]
    for ridx, m in enumerate(max_letter):
        rel_at_depth[max(m + 1, 1) if m >= 0 else 0].append(ridx)

    found: list[HopfMorphism] = []
    images: dict[str, dict] = {}

    def phi_poly(poly: dict) -> dict:
        out: dict = {}
        for w, c in poly.items():
            term = H2.A.unit()
            for a in w:
                term = H2.mult(term, images[ctx.names[a]])
            out = _acc(H2, out, c, term)
        return out

    def candidates(depth: int):
        g = gens[depth]
        if g.kind == "grouplike":
            return list(glikes)
        tagw = ctx.parse_word(g.coaction or "1")
        tag = H2.A.unit()
        for a in tagw:
            tag = H2.mult(tag, images[ctx.names[a]])
        key = _veckey(tag)
        if key not in skew_cache:
            skew_cache[key] = skew_primitive_space(H2, H2.A.unit(), tag)
        basis = skew_cache[key]
        combos = []
        total = fld.q ** len(basis)
        for idx in range(total):
            v: dict = {}
            x = idx
            for bvec in basis:
                c = x % fld.q
                x //= fld.q
                if c:
                    v = _acc(H2, v, c, bvec)
            combos.append(v)
        return combos

    def dfs(depth: int):
        nonlocal nodes
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            raise SearchBudgetExceeded(f"iso_search exceeded {node_budget} nodes")
        if limit is not None and len(found) >= limit:
            return
        if depth == n:
            vecs = [images[g.name] for g in gens]
            if generated_subspace_dim(vecs, H2.A) == H2.dim:
                found.append(HopfMorphism(dict(images), H1, H2))
            return
        for cand in candidates(depth):
            images[gens[depth].name] = cand
            ok = True
            for ridx in rel_at_depth[depth + 1]:
                if phi_poly(P.relations[ridx]):
                    ok = False
                    break
            if ok:
                dfs(depth + 1)
            if limit is not None and len(found) >= limit:
                break
        images.pop(gens[depth].name, None)

    dfs(0)
    return found
