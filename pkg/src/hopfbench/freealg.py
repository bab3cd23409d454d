"""Free associative algebra over a finite field.

Words are tuples of letter indices into an alphabet.  The alphabet lists
generator names in ascending precedence: the LAST name is the largest letter.
Monomial order is deglex — longer words are larger, equal lengths compare
positionally left to right by letter precedence.

Polynomials are dicts mapping words to nonzero field elements.  The text
syntax accepted by parse_poly is sums of terms like ``2*g^3hx + x^2 + 1``:
integer coefficients, juxtaposition or ``*`` for products, ``^`` for powers,
parentheses and unary minus.  Extra names (parameters standing for field
constants) can be supplied through an environment dict.
"""

from __future__ import annotations

from .gf import Field

Word = tuple  # of int letter indices


class FreeAlgebra:
    def __init__(self, field: Field, names: list[str]):
        if len(set(names)) != len(names):
            raise ValueError("duplicate generator names")
        self.field = field
        self.names = list(names)
        self.index = {n: i for i, n in enumerate(names)}

    # -- words --------------------------------------------------------------

    def letter(self, name: str) -> Word:
        return (self.index[name],)

    def parse_word(self, text: str) -> Word:
        poly = self.parse_poly(text)
        if len(poly) != 1 or set(poly.values()) != {1}:
            raise ValueError(f"not a single word: {text!r}")
        return next(iter(poly))

    def format_word(self, w: Word) -> str:
        if not w:
            return "1"
        out = []
        i = 0
        while i < len(w):
            j = i
            while j < len(w) and w[j] == w[i]:
                j += 1
            name = self.names[w[i]]
            out.append(name if j - i == 1 else f"{name}^{j - i}")
            i = j
        return "".join(out)

    def deglex_key(self, w: Word):
        return (len(w), w)

    # -- polynomials ----------------------------------------------------------

    def zero(self) -> dict:
        return {}

    def one(self) -> dict:
        return {(): 1}

    def monomial(self, w: Word, c: int = 1) -> dict:
        return {tuple(w): c} if c else {}

    def add(self, a: dict, b: dict) -> dict:
        f = self.field
        out = dict(a)
        for w, c in b.items():
            s = f.add(out.get(w, 0), c)
            if s:
                out[w] = s
            elif w in out:
                del out[w]
        return out

    def neg(self, a: dict) -> dict:
        f = self.field
        return {w: f.neg(c) for w, c in a.items()}

    def sub(self, a: dict, b: dict) -> dict:
        return self.add(a, self.neg(b))

    def scale(self, c: int, a: dict) -> dict:
        f = self.field
        if c == 0:
            return {}
        if c == 1:
            return dict(a)
        return {w: f.mul(c, x) for w, x in a.items()}

    def mul(self, a: dict, b: dict) -> dict:
        f = self.field
        out: dict = {}
        for wa, ca in a.items():
            for wb, cb in b.items():
                w = wa + wb
                s = f.add(out.get(w, 0), f.mul(ca, cb))
                if s:
                    out[w] = s
                elif w in out:
                    del out[w]
        return out

    def poly_pow(self, a: dict, e: int) -> dict:
        out = self.one()
        for _ in range(e):
            out = self.mul(out, a)
        return out

    def leading_word(self, a: dict) -> Word:
        return max(a, key=self.deglex_key)

    # -- text I/O -------------------------------------------------------------

    def parse_poly(self, text: str, env: dict | None = None) -> dict:
        return _Parser(self, text, env or {}).parse()

    def format_poly(self, a: dict) -> str:
        if not a:
            return "0"
        parts = []
        for w in sorted(a, key=self.deglex_key, reverse=True):
            c = a[w]
            if not w:
                parts.append(str(c))
            elif c == 1:
                parts.append(self.format_word(w))
            else:
                parts.append(f"{c}*{self.format_word(w)}")
        return " + ".join(parts)


def compare_deglex(w1, w2, alphabet) -> str:
    """Compare two words in deglex.  Words may be index tuples or text; the
    alphabet may be a FreeAlgebra or a list of names in ascending precedence.
    Returns "less", "equal" or "greater"."""
    if not isinstance(alphabet, FreeAlgebra):
        from .gf import make_field

        alphabet = FreeAlgebra(make_field(2, 1), list(alphabet))
    if isinstance(w1, str):
        w1 = alphabet.parse_word(w1)
    if isinstance(w2, str):
        w2 = alphabet.parse_word(w2)
    k1, k2 = alphabet.deglex_key(tuple(w1)), alphabet.deglex_key(tuple(w2))
    if k1 < k2:
        return "less"
    if k1 > k2:
        return "greater"
    return "equal"


def nc_combine(op: str, f, g, ctx: FreeAlgebra) -> dict:
    """Linear combination dispatch: op "add" adds two polynomials, op "scale"
    multiplies the polynomial g by the field constant f."""
    if op == "add":
        return ctx.add(f, g)
    if op == "scale":
        return ctx.scale(f, g)
    raise ValueError(f"unknown op {op!r}")


def nc_mul(f: dict, g: dict, ctx: FreeAlgebra) -> dict:
    return ctx.mul(f, g)


class _Parser:
    """Recursive-descent parser for polynomial text.

    Multiplication binds tighter than +/-, powers tighter than products, and
    adjacent factors multiply (so ``g^3hx`` works).  Names are matched
    greedily, longest first, against the alphabet plus the environment.
    """

    def __init__(self, ctx: FreeAlgebra, text: str, env: dict):
        self.ctx = ctx
        self.text = text
        self.env = env
        self.pos = 0
        names = list(ctx.names) + list(env)
        self.names = sorted(names, key=len, reverse=True)

    def parse(self) -> dict:
        out = self._expr()
        self._skip()
        if self.pos != len(self.text):
            raise ValueError(f"trailing input at {self.pos}: {self.text!r}")
        return out

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def _peek(self):
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _expr(self) -> dict:
        ch = self._peek()
        neg = False
        if ch in "+-":
            self.pos += 1
            neg = ch == "-"
        out = self._term()
        if neg:
            out = self.ctx.neg(out)
        while True:
            ch = self._peek()
            if ch == "+":
                self.pos += 1
                out = self.ctx.add(out, self._term())
            elif ch == "-":
                self.pos += 1
                out = self.ctx.sub(out, self._term())
            else:
                return out

    def _term(self) -> dict:
        out = self._factor()
        while True:
            ch = self._peek()
            if ch == "*":
                self.pos += 1
                out = self.ctx.mul(out, self._factor())
            elif ch and (ch.isalnum() or ch == "("):
                out = self.ctx.mul(out, self._factor())
            else:
                return out

    def _factor(self) -> dict:
        base = self._atom()
        if self._peek() == "^":
            self.pos += 1
            e = self._int()
            base = self.ctx.poly_pow(base, e)
        return base

    def _int(self) -> int:
        self._skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ValueError(f"expected integer at {start} in {self.text!r}")
        return int(self.text[start : self.pos])

    def _atom(self) -> dict:
        ch = self._peek()
        if ch == "(":
            self.pos += 1
            out = self._expr()
            if self._peek() != ")":
                raise ValueError(f"unbalanced parens in {self.text!r}")
            self.pos += 1
            return out
        if ch == "-":
            self.pos += 1
            return self.ctx.neg(self._factor())
        if ch.isdigit():
            n = self._int()
            if n >= self.ctx.field.q:
                raise ValueError(f"coefficient {n} out of range for field of order {self.ctx.field.q}")
            return self.ctx.monomial((), n)
        for name in self.names:
            if self.text.startswith(name, self.pos):
                self.pos += len(name)
                if name in self.ctx.index:
                    return self.ctx.monomial(self.ctx.letter(name))
                c = self.env[name]
                return self.ctx.monomial((), c) if c else {}
        raise ValueError(f"unexpected input at {self.pos} in {self.text!r}")
