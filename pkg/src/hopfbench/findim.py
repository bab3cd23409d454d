"""Finite-dimensional quotient algebras with exact structure constants.

A FinAlgebra is a based algebra: a list of basis labels, a unit index, and a
product table sending a pair of basis indices to a sparse vector (dict index
-> field element).  Algebras built from a confluent rewriting system carry an
eager table computed from normal forms; derived algebras (tensor squares) fill
their table lazily and memoize, since only a small corner of a dim^2 x dim^2
table is ever touched.

Elements are sparse dicts {basis index: field element}.
"""

from __future__ import annotations

from .freealg import FreeAlgebra
from .gf import Field, RowSpan
from .rewrite import RewriteSystem, enumerate_basis, normal_form


class FinAlgebra:
    def __init__(self, field: Field, dim: int, unit_index: int, labels=None):
        self.field = field
        self.dim = dim
        self.unit_index = unit_index
        self.labels = labels
        self._table: dict[tuple[int, int], dict] = {}
        self._mult_fn = None
        # set when built from a rewriting system
        self.ctx: FreeAlgebra | None = None
        self.sys: RewriteSystem | None = None
        self.basis = None
        self.index = None

    # -- construction -------------------------------------------------------

    @classmethod
    def lazy(cls, field: Field, dim: int, unit_index: int, mult_fn, labels=None):
        A = cls(field, dim, unit_index, labels)
        A._mult_fn = mult_fn
        return A

    def get_mult(self, i: int, j: int) -> dict:
        key = (i, j)
        got = self._table.get(key)
        if got is None:
            if self._mult_fn is None:
                raise KeyError(f"no product entry for {key}")
            got = self._mult_fn(i, j)
            self._table[key] = got
        return got

    # -- element helpers ------------------------------------------------------

    def unit(self) -> dict:
        return {self.unit_index: 1}

    def nf_vector(self, poly: dict) -> dict:
        """Image of a free-algebra polynomial in this quotient, as a sparse
        element vector.  Only available on algebras built from a system."""
        assert self.sys is not None
        red = normal_form(poly, self.sys)
        return {self.index[w]: c for w, c in red.items()}

    def word_vector(self, text: str) -> dict:
        assert self.ctx is not None
        return self.nf_vector(self.ctx.parse_poly(text))

    def format_element(self, vec: dict) -> str:
        if self.ctx is not None and self.basis is not None:
            poly = {self.basis[i]: c for i, c in vec.items()}
            return self.ctx.format_poly(poly)
        if not vec:
            return "0"
        return " + ".join(f"{vec[i]}*e{i}" for i in sorted(vec))


def from_confluent(sys: RewriteSystem, cap: int = 10000) -> FinAlgebra:
    """Build the quotient algebra of a confluent system with finite basis.

    Structure constants are filled eagerly: first the right-multiplication
    action of each letter on each basis word (one normal form per pair), then
    general products by peeling the right factor letter by letter — the basis
    is closed under prefixes, so each entry extends an already-known one.
    """
    ctx = sys.ctx
    fld = ctx.field
    words, finite = enumerate_basis(sys, cap)
    if not finite:
        raise ValueError(f"basis is not finite within cap {cap}")
    index = {w: i for i, w in enumerate(words)}
    dim = len(words)
    if dim == 0:
        raise ValueError("zero ring has no unital basis")
    A = FinAlgebra(fld, dim, index[()], labels=[ctx.format_word(w) for w in words])
    A.ctx = ctx
    A.sys = sys
    A.basis = words
    A.index = index

    nletters = len(ctx.names)
    rmul = [[None] * nletters for _ in range(dim)]
    for i, w in enumerate(words):
        for a in range(nletters):
            red = normal_form({w + (a,): 1}, sys)
            rmul[i][a] = {index[u]: c for u, c in red.items()}

    table = A._table
    for i in range(dim):
        table[(i, A.unit_index)] = {i: 1}
    # basis is in ascending deglex, so a word's prefix appears before it
    for j, w in enumerate(words):
        if not w:
            continue
        jp = index[w[:-1]]
        a = w[-1]
        for i in range(dim):
            prev = table[(i, jp)]
            out: dict = {}
            for t, c in prev.items():
                for s, d in rmul[t][a].items():
                    v = fld.add(out.get(s, 0), fld.mul(c, d))
                    if v:
                        out[s] = v
                    elif s in out:
                        del out[s]
            table[(i, j)] = out
    A._rmul = rmul
    return A


def mult_element(a: dict, b: dict, A: FinAlgebra) -> dict:
    """Product of two sparse elements through the structure constants."""
    fld = A.field
    out: dict = {}
    for i, ca in a.items():
        for j, cb in b.items():
            c = fld.mul(ca, cb)
            for t, d in A.get_mult(i, j).items():
                v = fld.add(out.get(t, 0), fld.mul(c, d))
                if v:
                    out[t] = v
                elif t in out:
                    del out[t]
    return out


def tensor_square(A: FinAlgebra) -> FinAlgebra:
    """A tensor A with componentwise product, basis indexed i*dim + j."""
    dim = A.dim
    fld = A.field

    def mult_fn(x: int, y: int) -> dict:
        x1, x2 = divmod(x, dim)
        y1, y2 = divmod(y, dim)
        left = A.get_mult(x1, y1)
        right = A.get_mult(x2, y2)
        out = {}
        for t1, c1 in left.items():
            base = t1 * dim
            for t2, c2 in right.items():
                c = fld.mul(c1, c2)
                if c:
                    out[base + t2] = c
        return out

    T = FinAlgebra.lazy(fld, dim * dim, A.unit_index * dim + A.unit_index, mult_fn)
    T.component = A
    return T


def generated_subspace_dim(gens: list[dict], A: FinAlgebra) -> int:
    """Dimension of the unital subalgebra generated by the given elements.

    Closure by right multiplication: every product of generators is reached
    from the unit one factor at a time.
    """
    span = RowSpan(A.field, A.dim)
    span.insert(A.unit())
    frontier = [A.unit()]
    while frontier:
        new = []
        for v in frontier:
            for g in gens:
                w = mult_element(v, g, A)
                if span.insert(w):
                    new.append(w)
        frontier = new
    return span.rank
