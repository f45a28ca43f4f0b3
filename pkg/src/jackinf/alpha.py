"""Exact arithmetic in the field Q(alpha) of rational functions of one parameter.

``AlphaPoly`` is a dense polynomial with ``Fraction`` coefficients.  ``AlphaRat``
is the field element; internally it keeps an integer-coefficient numerator and
denominator so that the hot loops only touch Python ints, and exposes the
canonical (gcd-reduced, monic denominator) form through ``num``/``den``.

The symbol used for computations is looked up through :func:`alpha`, which can
be temporarily replaced by a rational constant with :func:`specialized`.
"""

from __future__ import annotations

import contextlib
import contextvars
import math
import re
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

__all__ = [
    "AlphaPoly",
    "AlphaRat",
    "AlphaZeroDivisionError",
    "AlphaPoleError",
    "ALPHA",
    "alpha",
    "alpha_key",
    "specialized",
    "eval_alpha",
    "arith",
    "as_alpha",
]


class AlphaZeroDivisionError(ZeroDivisionError):
    """Division by the zero element of Q(alpha)."""


class AlphaPoleError(ArithmeticError):
    """Evaluation of an element of Q(alpha) at one of its poles."""


# ---------------------------------------------------------------------------
# integer polynomial helpers; tuples of ints, lowest degree first, no trailing 0

_P = (1 << 61) - 1


def _trim(c: list) -> tuple:
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


def _padd(a: tuple, b: tuple) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] += v
    return _trim(out)


def _psub(a: tuple, b: tuple) -> tuple:
    out = list(a) + [0] * (len(b) - len(a))
    for i, v in enumerate(b):
        out[i] -= v
    return _trim(out)


def _pmul(a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return ()
    if len(a) == 1:
        s = a[0]
        return tuple(s * v for v in b)
    if len(b) == 1:
        s = b[0]
        return tuple(s * v for v in a)
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def _content(a: tuple) -> int:
    return math.gcd(*a) if a else 0


def _prim(a: tuple) -> tuple:
    """Primitive part with positive leading coefficient."""
    c = _content(a)
    if a[-1] < 0:
        c = -c
    return tuple(v // c for v in a) if c != 1 else a


def _prem(a: tuple, b: tuple) -> tuple:
    """Pseudo-remainder of a by b."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while r and len(r) - 1 >= db:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [lb * v for v in r]
        for i, v in enumerate(b):
            r[i + shift] -= lr * v
        r = list(_trim(r))
    return tuple(r)


def _mod_is_coprime(a: tuple, b: tuple) -> bool:
    """True if gcd(a, b) mod a large prime is constant (implies coprime over Q)."""
    if a[-1] % _P == 0 or b[-1] % _P == 0:
        return False
    x = [v % _P for v in a]
    y = [v % _P for v in b]
    while len(y) > 1:
        inv = pow(y[-1], _P - 2, _P)
        dy = len(y) - 1
        while len(x) - 1 >= dy:
            f = x[-1] * inv % _P
            shift = len(x) - 1 - dy
            for i, v in enumerate(y):
                x[i + shift] = (x[i + shift] - f * v) % _P
            while x and not x[-1]:
                x.pop()
            if not x:
                return False
        x, y = y, x
    return bool(y) and len(y) == 1


def _pgcd(a: tuple, b: tuple) -> tuple:
    """Primitive gcd over Q[alpha] of two nonzero integer polynomials."""
    if len(a) == 1 or len(b) == 1:
        return (1,)
    if a == b:
        return _prim(a)
    if _mod_is_coprime(a, b):
        return (1,)
    a, b = _prim(a), _prim(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a, b = b, (_prim(r) if r else ())
    return a if len(a) > 1 else (1,)


def _pdivexact(a: tuple, b: tuple) -> tuple:
    """Quotient a / b, where b is primitive and divides a over Q."""
    if b == (1,):
        return a
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c, rem = divmod(r[k + db], lb)
        if rem:
            raise ArithmeticError("inexact integer polynomial division")
        q[k] = c
        if c:
            for i, v in enumerate(b):
                r[i + k] -= c * v
    if any(r[:db]):
        raise ArithmeticError("inexact integer polynomial division")
    return tuple(q)


def _fracs_to_ints(coeffs: Sequence[Fraction]) -> tuple[tuple, int]:
    """Scale rational coefficients to integers; returns (ints, scale)."""
    m = 1
    for c in coeffs:
        m = m * c.denominator // math.gcd(m, c.denominator)
    return tuple(int(c * m) for c in coeffs), m


# ---------------------------------------------------------------------------


class AlphaPoly:
    """Dense polynomial in alpha with rational coefficients (lowest degree first)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [Fraction(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def x(cls) -> AlphaPoly:
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = AlphaPoly([other])
        if not isinstance(other, AlphaPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"AlphaPoly({[str(c) for c in self.coeffs]})"

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return AlphaPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return AlphaPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return AlphaPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return AlphaPoly(out)

    __rmul__ = __mul__

    def divmod(self, other: AlphaPoly) -> tuple[AlphaPoly, AlphaPoly]:
        """Polynomial long division."""
        other = _as_poly(other)
        if other.is_zero():
            raise AlphaZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        d = other.degree
        q = [Fraction(0)] * max(len(r) - d, 0)
        inv = 1 / other.lc
        for k in range(len(r) - 1 - d, -1, -1):
            c = r[k + d] * inv
            q[k] = c
            if c:
                for i, v in enumerate(other.coeffs):
                    r[i + k] -= c * v
        return AlphaPoly(q), AlphaPoly(r[:d])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self) -> AlphaPoly:
        if self.is_zero():
            return self
        inv = 1 / self.lc
        return AlphaPoly(c * inv for c in self.coeffs)

    def gcd(self, other: AlphaPoly) -> AlphaPoly:
        """Monic gcd by the Euclidean algorithm."""
        a, b = self, _as_poly(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def __call__(self, r) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * r + c
        return acc

    def to_json(self) -> list:
        return [[k, _qstr(c)] for k, c in enumerate(self.coeffs) if c]

    @classmethod
    def from_json(cls, data) -> AlphaPoly:
        out: dict[int, Fraction] = {}
        for k, c in data:
            out[int(k)] = out.get(int(k), Fraction(0)) + Fraction(c)
        if not out:
            return cls()
        return cls(out.get(k, 0) for k in range(max(out) + 1))


def _as_poly(v) -> AlphaPoly:
    if isinstance(v, AlphaPoly):
        return v
    if isinstance(v, (int, Fraction)):
        return AlphaPoly([v])
    raise TypeError(f"cannot coerce {type(v).__name__} to AlphaPoly")


def _qstr(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------


class AlphaRat:
    """Element of Q(alpha).

    Stored as coprime integer polynomials ``_n / _d`` with the joint integer
    content removed and ``lc(_d) > 0``; this representation is unique, so
    equality and hashing are structural.
    """

    __slots__ = ("_n", "_d")

    def __init__(self, value: Union[int, Fraction, AlphaRat, AlphaPoly] = 0):
        if isinstance(value, AlphaRat):
            self._n, self._d = value._n, value._d
        elif isinstance(value, AlphaPoly):
            n, m = _fracs_to_ints(value.coeffs)
            self._n, self._d = AlphaRat._norm_content(n, (m,))
        else:
            q = Fraction(value)
            self._n = (q.numerator,) if q else ()
            self._d = (q.denominator,)

    @classmethod
    def _raw(cls, n: tuple, d: tuple) -> AlphaRat:
        obj = object.__new__(cls)
        obj._n = n
        obj._d = d
        return obj

    @staticmethod
    def _norm_content(n: tuple, d: tuple) -> tuple[tuple, tuple]:
        if not n:
            return (), (1,)
        c = math.gcd(_content(n), _content(d))
        if d[-1] < 0:
            c = -c
        if c != 1:
            n = tuple(v // c for v in n)
            d = tuple(v // c for v in d)
        return n, d

    @classmethod
    def _make(cls, n: tuple, d: tuple) -> AlphaRat:
        """Fully normalize an arbitrary integer fraction n/d."""
        if not d:
            raise AlphaZeroDivisionError("zero denominator")
        if n:
            g = _pgcd(n, d)
            if g != (1,):
                n, d = _pdivexact(n, g), _pdivexact(d, g)
        return cls._raw(*cls._norm_content(n, d))

    @classmethod
    def from_polys(cls, num: AlphaPoly, den: AlphaPoly = None) -> AlphaRat:
        num = _as_poly(num)
        den = _as_poly(1 if den is None else den)
        if den.is_zero():
            raise AlphaZeroDivisionError("zero denominator")
        n, a = _fracs_to_ints(num.coeffs)
        d, b = _fracs_to_ints(den.coeffs)
        return cls._make(_pmul(n, (b,)), _pmul(d, (a,)))

    @classmethod
    def gen(cls) -> AlphaRat:
        return cls._raw((0, 1), (1,))

    # -- canonical presentation -------------------------------------------

    @property
    def num(self) -> AlphaPoly:
        lc = self._d[-1]
        return AlphaPoly(Fraction(v, lc) for v in self._n)

    @property
    def den(self) -> AlphaPoly:
        lc = self._d[-1]
        return AlphaPoly(Fraction(v, lc) for v in self._d)

    def normalize(self) -> AlphaRat:
        return AlphaRat._make(self._n, self._d)

    def is_zero(self) -> bool:
        return not self._n

    def __bool__(self):
        return bool(self._n)

    def is_constant(self) -> bool:
        return len(self._n) <= 1 and len(self._d) == 1

    def is_polynomial(self) -> bool:
        return len(self._d) == 1

    def to_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return Fraction(self._n[0], self._d[0]) if self._n else Fraction(0)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, AlphaRat):
            if isinstance(other, (int, Fraction)):
                other = AlphaRat(other)
            else:
                return NotImplemented
        if not other._n:
            return self
        if not self._n:
            return other
        n1, d1, n2, d2 = self._n, self._d, other._n, other._d
        if d1 == d2:
            return AlphaRat._make(_padd(n1, n2), d1)
        if len(d1) == 1 and len(d2) == 1:
            a, b = d1[0], d2[0]
            n = _padd(_pmul(n1, (b,)), _pmul(n2, (a,)))
            return AlphaRat._raw(*AlphaRat._norm_content(n, (a * b,)))
        g = _pgcd(d1, d2)
        e1 = _pdivexact(d1, g)
        e2 = _pdivexact(d2, g)
        n = _padd(_pmul(n1, e2), _pmul(n2, e1))
        return AlphaRat._make(n, _pmul(d1, e2))

    __radd__ = __add__

    def __neg__(self):
        return AlphaRat._raw(tuple(-v for v in self._n), self._d)

    def __sub__(self, other):
        if not isinstance(other, AlphaRat):
            if isinstance(other, (int, Fraction)):
                other = AlphaRat(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, AlphaRat):
            if isinstance(other, int):
                if not other or not self._n:
                    return ZERO
                return AlphaRat._raw(*AlphaRat._norm_content(_pmul(self._n, (other,)), self._d))
            if isinstance(other, Fraction):
                if not other or not self._n:
                    return ZERO
                return AlphaRat._raw(*AlphaRat._norm_content(
                    _pmul(self._n, (other.numerator,)), _pmul(self._d, (other.denominator,))))
            return NotImplemented
        if not self._n or not other._n:
            return ZERO
        n1, d1, n2, d2 = self._n, self._d, other._n, other._d
        g1 = _pgcd(n1, d2)
        g2 = _pgcd(n2, d1)
        if g1 != (1,):
            n1, d2 = _pdivexact(n1, g1), _pdivexact(d2, g1)
        if g2 != (1,):
            n2, d1 = _pdivexact(n2, g2), _pdivexact(d1, g2)
        return AlphaRat._raw(*AlphaRat._norm_content(_pmul(n1, n2), _pmul(d1, d2)))

    __rmul__ = __mul__

    def inverse(self) -> AlphaRat:
        if not self._n:
            raise AlphaZeroDivisionError("division by zero in Q(alpha)")
        n, d = self._d, self._n
        if d[-1] < 0:
            n = tuple(-v for v in n)
            d = tuple(-v for v in d)
        return AlphaRat._raw(n, d)

    def __truediv__(self, other):
        if not isinstance(other, AlphaRat):
            if isinstance(other, (int, Fraction)):
                other = AlphaRat(other)
            else:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, AlphaRat):
            return self._n == other._n and self._d == other._d
        if isinstance(other, (int, Fraction)):
            return self == AlphaRat(other)
        return NotImplemented

    def __hash__(self):
        if self.is_constant():
            return hash(self.to_fraction())
        return hash((self._n, self._d))

    # -- evaluation ---------------------------------------------------------

    def __call__(self, r) -> Fraction:
        return eval_alpha(self, r)

    # -- presentation -------------------------------------------------------

    def __repr__(self):
        return f"AlphaRat('{self}')"

    def __str__(self):
        n, d = self._n, self._d
        if not n:
            return "0"
        if d == (1,):
            return _ipoly_str(n)
        ns = _ipoly_str(n)
        if _nterms(n) > 1:
            ns = f"({ns})"
        ds = _ipoly_str(d)
        if len(d) > 1 or d[0] < 0:
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data) -> AlphaRat:
        if isinstance(data, (int, str)):
            return cls.parse(str(data))
        return cls.from_polys(AlphaPoly.from_json(data["num"]), AlphaPoly.from_json(data["den"]))

    @classmethod
    def parse(cls, text: str) -> AlphaRat:
        """Parse expressions like ``2/(α+1)``, ``a^2-1``, ``3/2``."""
        return _Parser(text).parse()


def _nterms(p: tuple) -> int:
    return sum(1 for v in p if v)


def _ipoly_str(p: tuple, var: str = "α") -> str:
    parts = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if a == 1 else f"{a}{mono}"
        parts.append((sign, body))
    s = "".join(f"{sg}{b}" for sg, b in parts)
    return s[1:] if s.startswith("+") else s


ZERO = AlphaRat(0)
ONE = AlphaRat(1)
ALPHA = AlphaRat.gen()


# ---------------------------------------------------------------------------
# expression parser used by the CLI and JSON readers

_TOKEN = re.compile(r"\s*(?:(\d+)|(α|alpha|a)|(\*\*|[-+*/^()]))")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse {self.text!r} at position {pos}")
            num, var, op = m.groups()
            if num is not None:
                self.toks.append(("num", int(num)))
            elif var is not None:
                self.toks.append(("var", None))
            else:
                self.toks.append(("op", "^" if op == "**" else op))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def parse(self) -> AlphaRat:
        if not self.toks:
            raise ValueError("empty expression")
        v = self.expr()
        if self.i != len(self.toks):
            raise ValueError(f"trailing input in {self.text!r}")
        return v

    def expr(self):
        v = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            _, op = self.take()
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.unary()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "*/":
                self.take()
                w = self.unary()
                v = v * w if val == "*" else v / w
            elif kind in ("num", "var") or (kind == "op" and val == "("):
                v = v * self.power()
            else:
                return v

    def unary(self):
        kind, val = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            v = self.unary()
            return -v if val == "-" else v
        return self.power()

    def power(self):
        v = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            neg = False
            if self.peek() == ("op", "-"):
                self.take()
                neg = True
            kind, e = self.take()
            if kind != "num":
                raise ValueError(f"integer exponent expected in {self.text!r}")
            v = v ** (-e if neg else e)
        return v

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return AlphaRat(val)
        if kind == "var":
            return ALPHA
        if (kind, val) == ("op", "("):
            v = self.expr()
            if self.take() != ("op", ")"):
                raise ValueError(f"unbalanced parentheses in {self.text!r}")
            return v
        raise ValueError(f"unexpected token in {self.text!r}")


# ---------------------------------------------------------------------------


def as_alpha(v) -> AlphaRat:
    if isinstance(v, AlphaRat):
        return v
    if isinstance(v, AlphaPoly):
        return AlphaRat(v)
    if isinstance(v, str):
        return AlphaRat.parse(v)
    return AlphaRat(v)


def arith(op: str, a, b) -> AlphaRat:
    """Field operation by name: ``add``, ``sub``, ``mul`` or ``div``."""
    a, b = as_alpha(a), as_alpha(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def eval_alpha(a, r) -> Fraction:
    """Exact value of ``a`` at alpha = r."""
    a = as_alpha(a)
    r = Fraction(r)
    d = Fraction(0)
    for c in reversed(a._d):
        d = d * r + c
    if d == 0:
        raise AlphaPoleError(f"{a} has a pole at alpha = {r}")
    n = Fraction(0)
    for c in reversed(a._n):
        n = n * r + c
    return n / d


# ---------------------------------------------------------------------------
# the value used for alpha throughout the library

_alpha_var: contextvars.ContextVar = contextvars.ContextVar("jackinf_alpha", default=None)


def alpha() -> AlphaRat:
    """The current value of alpha: the symbol, or a rational inside :func:`specialized`."""
    v = _alpha_var.get()
    return ALPHA if v is None else v


def alpha_key():
    """Cache key distinguishing symbolic and specialized computations."""
    v = _alpha_var.get()
    return None if v is None else v.to_fraction()


@contextlib.contextmanager
def specialized(r) -> Iterator[AlphaRat]:
    """Run computations with alpha replaced by the rational ``r``."""
    value = AlphaRat(Fraction(r))
    token = _alpha_var.set(value)
    try:
        yield value
    finally:
        _alpha_var.reset(token)
