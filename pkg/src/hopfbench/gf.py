"""Arithmetic in small finite fields GF(p^k) and exact linear algebra over them.

Field elements are plain Python ints in ``range(p**k)``.  The base-p digits of
an element, least significant digit first, are the coefficients of its residue
polynomial in the distinguished generator ``t``.  Constants embed as
themselves: the element ``c`` for ``0 <= c < p`` is the constant polynomial
``c``.  For GF(4) this convention gives ``t == 2`` and ``t*t == t + 1 == 3``.

Supported fields: p in {2, 3, 5}, 1 <= k <= 8, p**k <= 6561, with a fixed
table of irreducible moduli (one per field, never chosen at runtime).
"""

from __future__ import annotations

import numpy as np

# Irreducible modulus for each supported (p, k), as little-endian coefficient
# tuples; the last entry (degree-k coefficient) is always 1.
_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 6): (2, 2, 1, 0, 2, 0, 1),
    (3, 7): (1, 0, 2, 0, 0, 0, 0, 1),
    (3, 8): (2, 2, 2, 0, 1, 2, 0, 0, 1),
    (5, 1): (3, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (5, 4): (2, 4, 4, 0, 1),
    (5, 5): (3, 4, 0, 0, 0, 1),
}

_FIELD_CACHE: dict[tuple[int, int], "Field"] = {}


class Field:
    """GF(p^k) with int-encoded elements and log/exp multiplication tables.

    Parameters
    ----------
    p : int
        Field characteristic (2, 3 or 5).
    k : int
        Extension degree over the prime field.
    """

    def __init__(self, p: int, k: int):
        if (p, k) not in _MODULI:
            raise ValueError(f"unsupported field GF({p}^{k})")
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = _MODULI[(p, k)]
        self.zero = 0
        self.one = 1
        self._exp, self._log = self._build_tables()

    # -- encoding helpers --------------------------------------------------

    def digits(self, a: int) -> list[int]:
        """Base-p digit vector of element a, least significant first."""
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return out

    def from_digits(self, ds) -> int:
        a = 0
        for d in reversed(ds):
            a = a * self.p + (d % self.p)
        return a

    def from_int(self, n: int) -> int:
        """Embed an ordinary integer as the constant n mod p."""
        return n % self.p

    def elements(self):
        return range(self.q)

    # -- raw polynomial product (used only to bootstrap the tables) --------

    def _mul_raw(self, a: int, b: int) -> int:
        p, k = self.p, self.k
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        # reduce by the modulus: t^k = -(lower part of modulus)
        for i in range(len(prod) - 1, k - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(k):
                    prod[i - k + j] = (prod[i - k + j] - c * self.modulus[j]) % p
        return self.from_digits(prod[:k])

    def _build_tables(self):
        q = self.q
        if q == 2:
            return [1], {1: 0}
        # find a multiplicative generator by scanning
        for g in range(2, q):
            seen = 1
            x = g
            order = 1
            while x != 1:
                x = self._mul_raw(x, g)
                order += 1
                if order > q:  # pragma: no cover - would mean a bad modulus
                    raise ArithmeticError("modulus is not irreducible")
            if order == q - 1:
                break
        else:  # pragma: no cover
            raise ArithmeticError("no generator found")
        exp = [0] * (2 * (q - 1))
        log = {}
        x = 1
        for i in range(q - 1):
            exp[i] = x
            exp[i + q - 1] = x
            log[x] = i
            x = self._mul_raw(x, g)
        return exp, log

    # -- arithmetic --------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p = self.p
        out = 0
        mult = 1
        while a or b:
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        p = self.p
        out = 0
        mult = 1
        while a:
            out += (-a % p) * mult
            a //= p
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if a == 0:
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def __repr__(self):
        return f"Field({self.p}, {self.k})"


def make_field(p: int, k: int) -> Field:
    """Return the cached GF(p^k) instance."""
    key = (p, k)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = Field(p, k)
    return _FIELD_CACHE[key]


def field_arith(op: str, a: int, b: int | None, f: Field) -> int:
    """Dispatch a single arithmetic operation by name.

    op is one of add / mul / neg / inv / pow; b is ignored for the unary
    operations and is the (ordinary integer) exponent for pow.
    """
    if op == "add":
        return f.add(a, b)
    if op == "mul":
        return f.mul(a, b)
    if op == "neg":
        return f.neg(a)
    if op == "inv":
        return f.inv(a)
    if op == "pow":
        return f.pow(a, b)
    raise ValueError(f"unknown op {op!r}")


# ---------------------------------------------------------------------------
# linear algebra
# ---------------------------------------------------------------------------


def _rref_bits(rows: list[int], ncols: int):
    """Reduced row echelon form over GF(2) with rows stored as bitmask ints.

    Bit j of a row is the entry in column j.  Pivot selection: first row from
    the top with a nonzero entry in the current column.  Returns the nonzero
    rows and the list of pivot columns.
    """
    rows = [r for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        bit = 1 << c
        pr = None
        for i in range(r, len(rows)):
            if rows[i] & bit:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        for i in range(len(rows)):
            if i != r and (rows[i] & bit):
                rows[i] ^= rows[r]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def _rref_modp_numpy(rows, ncols: int, p: int):
    """RREF over the prime field GF(p) using numpy int64 arithmetic."""
    a = np.array(rows, dtype=np.int64) % p
    nrows = a.shape[0]
    pivots = []
    r = 0
    for c in range(ncols):
        col = a[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        col = a[:, c].copy()
        col[r] = 0
        mask = col != 0
        if mask.any():
            a[mask] = (a[mask] - np.outer(col[mask], a[r])) % p
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return [[int(x) for x in a[i]] for i in range(r)], pivots


def _rref_generic(rows, ncols: int, f: Field):
    """RREF over an arbitrary supported field, first-nonzero pivot rule."""
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(rows)):
            if rows[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = f.inv(rows[r][c])
        if inv != 1:
            rows[r] = [f.mul(inv, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                t = rows[i][c]
                ri, rr = rows[i], rows[r]
                rows[i] = [f.sub(ri[j], f.mul(t, rr[j])) for j in range(ncols)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank_nullspace(M, f: Field, ncols: int | None = None):
    """Rank and a nullspace basis of a matrix over f.

    M is a list of rows (lists of field elements).  Returns
    ``(rank, nullspace_basis)`` where the basis vectors are lists of length
    ncols.  Different implementations may return different bases for the same
    matrix; compare spans, not vectors.
    """
    if ncols is None:
        ncols = len(M[0]) if M else 0
    if not M or ncols == 0:
        basis = []
        for j in range(ncols):
            v = [0] * ncols
            v[j] = 1
            basis.append(v)
        return 0, basis

    if f.q == 2:
        bitrows = []
        for row in M:
            b = 0
            for j, x in enumerate(row):
                if x:
                    b |= 1 << j
            bitrows.append(b)
        red, pivots = _rref_bits(bitrows, ncols)
        red = [[(r >> j) & 1 for j in range(ncols)] for r in red]
    elif f.k == 1 and len(M) * ncols >= 4096:
        red, pivots = _rref_modp_numpy(M, ncols, f.p)
    else:
        red, pivots = _rref_generic(M, ncols, f)

    rank = len(pivots)
    pivot_set = set(pivots)
    basis = []
    for fc in range(ncols):
        if fc in pivot_set:
            continue
        v = [0] * ncols
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = f.neg(red[i][fc])
        basis.append(v)
    return rank, basis


def matrix_rank(M, f: Field, ncols: int | None = None, blowup: bool | None = None) -> int:
    """Rank only; for extension fields on large matrices this expands each
    entry to its k x k multiplication matrix over GF(p) and divides the
    prime-field rank by k, which is much faster than generic elimination.
    blowup forces (True) or suppresses (False) that expansion; default picks
    by size."""
    if ncols is None:
        ncols = len(M[0]) if M else 0
    if not M or ncols == 0:
        return 0
    if blowup is None:
        blowup = len(M) * ncols >= 65536
    if f.k > 1 and blowup:
        k = f.k
        # multiplication-by-t matrix over GF(p)
        reps = {}

        def rep(a):
            if a not in reps:
                cols = []
                for j in range(k):
                    tj = f.pow(f.p, j)  # t encodes as the integer p
                    cols.append(f.digits(f.mul(a, tj)))
                reps[a] = cols  # cols[j][i] = entry (i, j)
            return reps[a]

        big = []
        for row in M:
            blocks = [rep(a) for a in row]
            for i in range(k):
                r = []
                for cols in blocks:
                    r.extend(cols[j][i] for j in range(k))
                big.append(r)
        sub = make_field(f.p, 1)
        r, _ = rank_nullspace(big, sub, ncols * k)
        assert r % k == 0
        return r // k
    r, _ = rank_nullspace(M, f, ncols)
    return r


class RowSpan:
    """Incrementally maintained echelon span of row vectors over a field.

    insert() returns True when the vector enlarged the span.  Over GF(2) the
    rows are kept as bitmask ints, so this scales to thousands of columns.
    """

    def __init__(self, f: Field, ncols: int):
        self.f = f
        self.ncols = ncols
        self._rows: dict[int, object] = {}  # pivot column -> reduced row
        self._bits = f.q == 2

    @property
    def rank(self) -> int:
        return len(self._rows)

    def _to_internal(self, vec):
        if self._bits:
            b = 0
            if isinstance(vec, dict):
                for j, x in vec.items():
                    if x:
                        b |= 1 << j
            else:
                for j, x in enumerate(vec):
                    if x:
                        b |= 1 << j
            return b
        if isinstance(vec, dict):
            v = [0] * self.ncols
            for j, x in vec.items():
                v[j] = x
            return v
        return list(vec)

    def _reduce(self, v):
        f = self.f
        if self._bits:
            while v:
                pc = (v & -v).bit_length() - 1
                row = self._rows.get(pc)
                if row is None:
                    return v, pc
                v ^= row
            return 0, -1
        j = 0
        while j < self.ncols:
            if v[j] != 0:
                row = self._rows.get(j)
                if row is None:
                    return v, j
                c = v[j]
                v = [f.sub(v[t], f.mul(c, row[t])) for t in range(self.ncols)]
            j += 1
        return None, -1

    def insert(self, vec) -> bool:
        v = self._to_internal(vec)
        v, pc = self._reduce(v)
        if self._bits:
            if v == 0:
                return False
            self._rows[pc] = v
            return True
        if v is None:
            return False
        inv = self.f.inv(v[pc])
        if inv != 1:
            v = [self.f.mul(inv, x) for x in v]
        self._rows[pc] = v
        return True

    def contains(self, vec) -> bool:
        v = self._to_internal(vec)
        v, _ = self._reduce(v)
        return (v == 0) if self._bits else (v is None)


def roots_univariate(coeffs, f: Field) -> list[int]:
    """All roots in f of the polynomial with the given little-endian
    coefficient list, by exhaustive evaluation (fields here are tiny)."""
    roots = []
    for x in f.elements():
        acc = 0
        for c in reversed(coeffs):
            acc = f.add(f.mul(acc, x), c)
        if acc == 0:
            roots.append(x)
    return roots
