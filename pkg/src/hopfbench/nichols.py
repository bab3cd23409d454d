"""Braided vector spaces and exact Nichols-algebra dimensions.

A braided vector space is a pair (V, c) with c an invertible solution of the
braid equation on V x V.  The quotient of the tensor algebra by the kernels
of the quantum symmetrizers is graded, and its graded dimensions are the
ranks of those symmetrizer matrices; this module computes them exactly over
the finite fields of ``gf``.

Spec strings accepted by :func:`make_braided`:

    diagonal:q11,q12;q21,q22     entries are raw field encodings, rows ';'-split
    jordan:s,m                   unipotent-type braiding on m basis vectors
    yd-cyclic:i,r,ps             indecomposable module over the cyclic group
                                 of order ps (a power of the field characteristic),
                                 dimension r, degree tag the i-th power of the
                                 generator
    bashev:k,l,lambda            two-dimensional indecomposable over C2 x C2
                                 (characteristic 2), degree tag g^k h^l,
                                 second generator acting by y -> y + lambda*x

``yd-cyclic`` parts may be joined with '+' to form direct sums over the same
group, e.g. ``yd-cyclic:1,2,2+yd-cyclic:0,1,2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .gf import Field, matrix_rank

SYMMETRIZER_BUDGET = 10_000


@dataclass(frozen=True)
class YdModuleData:
    """Action/coaction data over an abelian p-group with trivial character.

    ``actions`` holds one m x m matrix per group generator (row-major, entries
    raw field encodings); ``tags`` assigns each basis vector its degree as a
    tuple of exponents over the group generators; ``orders`` are the generator
    orders.  Compatibility requires commuting actions, action order dividing
    the group order, and each action matrix preserving the tag grading.
    """

    field: Field
    actions: tuple
    tags: tuple
    orders: tuple

    @property
    def dim(self) -> int:
        return len(self.tags)


class BraidedSpace:
    """dim m, field, and the braiding as an m^2 x m^2 matrix on V x V.

    Basis of V x V ordered row-major: e_i x e_j at index i*m + j.  Columns
    are also kept sparsely (index -> coefficient) for fast application.
    """

    def __init__(self, fld: Field, m: int, c_rows, label: str = ""):
        self.field = fld
        self.m = m
        self.c = tuple(tuple(row) for row in c_rows)
        self.label = label
        d = m * m
        if len(self.c) != d or any(len(r) != d for r in self.c):
            raise ValueError("braiding matrix must be m^2 x m^2")
        cols = []
        for j in range(d):
            col = {i: self.c[i][j] for i in range(d) if self.c[i][j]}
            cols.append(col)
        self.c_cols = tuple(cols)
        if matrix_rank([list(r) for r in self.c], fld) != d:
            raise ValueError("braiding is not invertible")
        if not check_braid_equation(self):
            raise ValueError("braid equation fails")

    def __repr__(self):
        return f"BraidedSpace(m={self.m}, q={self.field.q}, {self.label or 'custom'})"


def _mat_identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _apply_c_at(V: BraidedSpace, vec: dict, pos: int, n: int) -> dict:
    """Apply id x..x c x..x id at tensor positions (pos, pos+1), 1-indexed."""
    m, f = V.m, V.field
    stride = m ** (n - pos - 1)
    out: dict = {}
    for idx, coeff in vec.items():
        pair = (idx // stride) % (m * m)
        base = idx - pair * stride
        for npair, cc in V.c_cols[pair].items():
            t = base + npair * stride
            v = f.add(out.get(t, 0), f.mul(coeff, cc))
            if v:
                out[t] = v
            elif t in out:
                del out[t]
    return out


def check_braid_equation(V: BraidedSpace) -> bool:
    """(c x id)(id x c)(c x id) = (id x c)(c x id)(id x c) on V^{x3}, exactly."""
    n = 3
    d = V.m**n
    for j in range(d):
        v = {j: 1}
        lhs = _apply_c_at(V, _apply_c_at(V, _apply_c_at(V, v, 1, n), 2, n), 1, n)
        rhs = _apply_c_at(V, _apply_c_at(V, _apply_c_at(V, v, 2, n), 1, n), 2, n)
        if lhs != rhs:
            return False
    return True


# -- constructors ---------------------------------------------------------------


def _diagonal(qmat, fld: Field) -> BraidedSpace:
    m = len(qmat)
    if any(len(r) != m for r in qmat):
        raise ValueError("diagonal braiding needs a square q-matrix")
    if any(e == 0 for r in qmat for e in r):
        raise ValueError("diagonal q-entries must be nonzero")
    d = m * m
    c = [[0] * d for _ in range(d)]
    for i in range(m):
        for j in range(m):
            c[j * m + i][i * m + j] = qmat[i][j]
    return BraidedSpace(fld, m, c, label="diagonal")


def _jordan(s: int, m: int, fld: Field) -> BraidedSpace:
    if s == 0:
        raise ValueError("jordan parameter s must be nonzero")
    if m < 2:
        raise ValueError("jordan type needs m > 1")
    d = m * m
    c = [[0] * d for _ in range(d)]
    for i in range(m):
        # c(x_i x x_1) = s x_1 x x_i
        c[0 * m + i][i * m + 0] = s
        for j in range(1, m):
            # c(x_i x x_j) = (s x_j + x_{j-1}) x x_i
            c[j * m + i][i * m + j] = s
            c[(j - 1) * m + i][i * m + j] = 1
    return BraidedSpace(fld, m, c, label=f"jordan({s},{m})")


def _mat_mul(A, B, f: Field):
    n = len(A)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        for t in range(n):
            a = Ai[t]
            if not a:
                continue
            Bt = B[t]
            oi = out[i]
            for j in range(n):
                if Bt[j]:
                    oi[j] = f.add(oi[j], f.mul(a, Bt[j]))
    return out


def yd_check(data: YdModuleData) -> None:
    """Validate the compatibility requirements; raise ValueError if broken."""
    f, m = data.field, data.dim
    mats = [list(map(list, A)) for A in data.actions]
    if len(mats) != len(data.orders):
        raise ValueError("one action matrix per group generator required")
    for A, order in zip(mats, data.orders):
        P = _mat_identity(m)
        for _ in range(order):
            P = _mat_mul(P, A, f)
        if P != _mat_identity(m):
            raise ValueError("action order does not divide the group order")
        for i in range(m):
            for j in range(m):
                if A[i][j] and data.tags[i] != data.tags[j]:
                    raise ValueError("action does not preserve the degree grading")
    for a in range(len(mats)):
        for b in range(a + 1, len(mats)):
            if _mat_mul(mats[a], mats[b], f) != _mat_mul(mats[b], mats[a], f):
                raise ValueError("action matrices must commute")


def _from_yd(data: YdModuleData) -> BraidedSpace:
    yd_check(data)
    f, m = data.field, data.dim
    # action of the tag of each basis vector
    tag_act = []
    for tag in data.tags:
        P = _mat_identity(m)
        for A, e in zip(data.actions, tag):
            for _ in range(e):
                P = _mat_mul(P, [list(r) for r in A], f)
        tag_act.append(P)
    d = m * m
    c = [[0] * d for _ in range(d)]
    for a in range(m):
        P = tag_act[a]
        for b in range(m):
            # c(e_a x e_b) = (tag(a) . e_b) x e_a
            for t in range(m):
                if P[t][b]:
                    c[t * m + a][a * m + b] = P[t][b]
    return BraidedSpace(f, m, c, label="yd")


def yd_cyclic(i: int, r: int, ps: int, fld: Field) -> YdModuleData:
    """Indecomposable module over the cyclic group of order ps: dimension r,
    generator acting by v_n -> v_n + v_{n-1}, every vector tagged by power i."""
    p = fld.p
    n = ps
    while n % p == 0:
        n //= p
    if n != 1 or ps < 2:
        raise ValueError("group order must be a power of the characteristic")
    if not (1 <= r <= ps) or not (0 <= i < ps):
        raise ValueError("need 1 <= r <= ps and 0 <= i < ps")
    A = [[0] * r for _ in range(r)]
    for j in range(r):
        A[j][j] = 1
        if j + 1 < r:
            A[j][j + 1] = 1
    return YdModuleData(fld, (tuple(map(tuple, A)),), tuple((i,) for _ in range(r)), (ps,))


def bashev_module(k: int, l: int, lam: int, fld: Field) -> YdModuleData:
    """Two-dimensional indecomposable over C2 x C2 in characteristic 2;
    both basis vectors tagged g^k h^l, actions x -> x, y -> y + x and
    y -> y + lambda*x."""
    if fld.p != 2:
        raise ValueError("this module family lives in characteristic 2")
    if k not in (0, 1) or l not in (0, 1):
        raise ValueError("tags k, l must be 0 or 1")
    if lam >= fld.q:
        raise ValueError("lambda must be a raw field encoding")
    Ag = ((1, 1), (0, 1))
    Ah = ((1, lam), (0, 1))
    return YdModuleData(fld, (Ag, Ah), ((k, l), (k, l)), (2, 2))


def _direct_sum_yd(parts) -> YdModuleData:
    fld = parts[0].field
    orders = parts[0].orders
    if any(p.orders != orders or p.field is not fld for p in parts):
        raise ValueError("direct summands must share the same group")
    m = sum(p.dim for p in parts)
    ngen = len(orders)
    mats = [[[0] * m for _ in range(m)] for _ in range(ngen)]
    tags = []
    off = 0
    for part in parts:
        for gi in range(ngen):
            A = part.actions[gi]
            for i in range(part.dim):
                for j in range(part.dim):
                    mats[gi][off + i][off + j] = A[i][j]
        tags.extend(part.tags)
        off += part.dim
    return YdModuleData(fld, tuple(tuple(map(tuple, M)) for M in mats), tuple(tags), orders)


def _parse_ints(text: str, what: str):
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise ValueError(f"bad {what} parameters: {text!r}") from None


def make_braided(spec, fld: Field) -> BraidedSpace:
    """Build a braided space from a spec string or YdModuleData; the braid
    equation and invertibility are verified at construction."""
    if isinstance(spec, YdModuleData):
        return _from_yd(spec)
    if not isinstance(spec, str):
        raise TypeError("spec must be a string or YdModuleData")
    parts = spec.split("+")
    if len(parts) > 1:
        datas = []
        for part in parts:
            kind, _, rest = part.partition(":")
            if kind != "yd-cyclic":
                raise ValueError("'+'-sums are supported for yd-cyclic parts only")
            i, r, ps = _parse_ints(rest, kind)
            datas.append(yd_cyclic(i, r, ps, fld))
        V = _from_yd(_direct_sum_yd(datas))
        V.label = spec
        return V
    kind, _, rest = spec.partition(":")
    if kind == "diagonal":
        qmat = [_parse_ints(row, kind) for row in rest.split(";")]
        for row in qmat:
            for e in row:
                if e >= fld.q:
                    raise ValueError("q-entries must be raw field encodings")
        return _diagonal(qmat, fld)
    if kind == "jordan":
        s, m = _parse_ints(rest, kind)
        if s >= fld.q:
            raise ValueError("s must be a raw field encoding")
        return _jordan(s, m, fld)
    if kind == "yd-cyclic":
        i, r, ps = _parse_ints(rest, kind)
        V = _from_yd(yd_cyclic(i, r, ps, fld))
        V.label = spec
        return V
    if kind == "bashev":
        k, l, lam = _parse_ints(rest, kind)
        V = _from_yd(bashev_module(k, l, lam, fld))
        V.label = spec
        return V
    raise ValueError(f"unknown braided-space spec {spec!r}")


# -- Matsumoto lifts and the symmetrizer ------------------------------------------


def reduced_word(perm) -> tuple:
    """Canonical reduced word for the permutation (one-line, 0-indexed):
    adjacent descents are swapped leftmost-first, and the recorded swaps,
    reversed, express the permutation with length = inversion count."""
    arr = list(perm)
    rec = []
    changed = True
    while changed:
        changed = False
        for i in range(len(arr) - 1):
            if arr[i] > arr[i + 1]:
                arr[i], arr[i + 1] = arr[i + 1], arr[i]
                rec.append(i)
                changed = True
    return tuple(reversed(rec))


def perm_of_word(word, n) -> tuple:
    """Compose adjacent transpositions (function composition, leftmost outermost).

    Swapping positions is right multiplication, so scanning the word forward
    builds s_{i1} o s_{i2} o ... o s_{ik}."""
    perm = list(range(n))
    for i in word:
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    return tuple(perm)


def braid_lift(V: BraidedSpace, n: int, word, vec: dict) -> dict:
    """Apply the braid-monoid lift c_{i1} o ... o c_{ik} of the word (0-indexed
    letters) to a sparse vector on V^{x n}."""
    out = vec
    for i in reversed(word):
        out = _apply_c_at(V, out, i + 1, n)
    return out


def _symmetrizer_columns(V: BraidedSpace, n: int, prev_cols):
    """One ladder step: columns of sum over the left-coset representatives
    applied to (previous symmetrizer x id)."""
    m = V.m
    d = m**n
    cols = []
    for col in range(d):
        a, last = divmod(col, m)
        v = {b * m + last: coeff for b, coeff in prev_cols[a].items()}
        acc = dict(v)
        w = v
        for j in range(n - 1, 0, -1):
            w = _apply_c_at(V, w, j, n)
            for t, coeff in w.items():
                s = V.field.add(acc.get(t, 0), coeff)
                if s:
                    acc[t] = s
                elif t in acc:
                    del acc[t]
        cols.append(acc)
    return cols


def _ladder(V: BraidedSpace, n_max: int, budget: int):
    """Yield (n, columns of the degree-n symmetrizer) for n = 1..n_max."""
    if V.m**n_max > budget:
        raise ValueError(f"budget exceeded: {V.m}^{n_max} > {budget}")
    cols = [{i: 1} for i in range(V.m)]
    yield 1, cols
    for n in range(2, n_max + 1):
        cols = _symmetrizer_columns(V, n, cols)
        yield n, cols


def quantum_symmetrizer(V: BraidedSpace, n: int, budget: int = SYMMETRIZER_BUDGET):
    """Dense matrix (row-major on V^{x n}) of the sum of braid lifts of all
    permutations via the length-preserving section."""
    if n < 1:
        raise ValueError("degree must be >= 1")
    for k, cols in _ladder(V, n, budget):
        if k == n:
            d = V.m**n
            M = [[0] * d for _ in range(d)]
            for j, col in enumerate(cols):
                for i, coeff in col.items():
                    M[i][j] = coeff
            return M
    raise AssertionError("unreachable")


def symmetrizer_literal(V: BraidedSpace, n: int):
    """Independent route: sum the lift of every permutation separately."""
    d = V.m**n
    f = V.field
    M = [[0] * d for _ in range(d)]
    for perm in permutations(range(n)):
        word = reduced_word(perm)
        for j in range(d):
            for i, coeff in braid_lift(V, n, word, {j: 1}).items():
                M[i][j] = f.add(M[i][j], coeff)
    return M


def _default_nmax(m: int) -> int:
    if m <= 2:
        return 8
    nmax = 2
    while m ** (nmax + 1) <= SYMMETRIZER_BUDGET:
        nmax += 1
    return min(nmax, 6)


def nichols_dims(V: BraidedSpace, n_max: int | None = None, budget: int = SYMMETRIZER_BUDGET):
    """Graded dimensions as symmetrizer ranks.

    Returns (graded, total, closed): graded[n] = rank of the degree-n
    symmetrizer with graded[0] = 1; closed means a zero rank was reached and
    every later rank up to n_max is also zero, in which case total is exact;
    otherwise total is only a lower bound.
    """
    if n_max is None:
        n_max = _default_nmax(V.m)
    graded = [1]
    for n, cols in _ladder(V, n_max, budget):
        d = V.m**n
        rows = []
        for col in cols:
            row = [0] * d
            for i, coeff in col.items():
                row[i] = coeff
            rows.append(row)
        graded.append(matrix_rank(rows, V.field, ncols=d))
    closed = False
    for n in range(1, n_max + 1):
        if graded[n] == 0:
            closed = all(graded[t] == 0 for t in range(n, n_max + 1))
            break
    return graded, sum(graded), closed
