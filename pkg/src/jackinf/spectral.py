"""Rational functions of the spectral variable u with coefficients in Q(alpha),
and their expansions in inverse Pochhammer symbols 1/(u)_k."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .alpha import AlphaPoleError, AlphaRat, AlphaZeroDivisionError, as_alpha

__all__ = ["UPoly", "UPolyRat", "PochhammerExpansion", "pochhammer", "rising_tail", "expand_pochhammer"]

_ZERO = AlphaRat(0)
_ONE = AlphaRat(1)


class UPoly:
    """Dense polynomial in u over Q(alpha), lowest degree first."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Iterable = ()):
        c = [as_alpha(v) for v in coeffs]
        while c and not c[-1]:
            c.pop()
        self.c: tuple[AlphaRat, ...] = tuple(c)

    @classmethod
    def u(cls) -> UPoly:
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def is_zero(self) -> bool:
        return not self.c

    def __eq__(self, other):
        if not isinstance(other, UPoly):
            other = UPoly([other])
        return self.c == other.c

    __hash__ = None

    def __add__(self, other):
        if not isinstance(other, UPoly):
            other = UPoly([other])
        n = max(len(self.c), len(other.c))
        return UPoly(
            (self.c[i] if i < len(self.c) else _ZERO) + (other.c[i] if i < len(other.c) else _ZERO)
            for i in range(n)
        )

    __radd__ = __add__

    def __neg__(self):
        return UPoly(-v for v in self.c)

    def __sub__(self, other):
        if not isinstance(other, UPoly):
            other = UPoly([other])
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, UPoly):
            s = as_alpha(other)
            return UPoly(v * s for v in self.c)
        if not self.c or not other.c:
            return UPoly()
        out = [_ZERO] * (len(self.c) + len(other.c) - 1)
        for i, x in enumerate(self.c):
            if x:
                for j, y in enumerate(other.c):
                    out[i + j] = out[i + j] + x * y
        return UPoly(out)

    __rmul__ = __mul__

    def divmod(self, other: UPoly) -> tuple[UPoly, UPoly]:
        if other.is_zero():
            raise AlphaZeroDivisionError("division by the zero polynomial in u")
        r = list(self.c)
        d = other.degree
        q = [_ZERO] * max(len(r) - d, 0)
        inv = other.c[-1].inverse()
        for k in range(len(r) - 1 - d, -1, -1):
            f = r[k + d] * inv
            q[k] = f
            if f:
                for i, v in enumerate(other.c):
                    r[i + k] = r[i + k] - f * v
        return UPoly(q), UPoly(r[:d])

    def monic(self) -> UPoly:
        if self.is_zero():
            return self
        inv = self.c[-1].inverse()
        return UPoly(v * inv for v in self.c)

    def gcd(self, other: UPoly) -> UPoly:
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1].monic()
        return a.monic()

    def __call__(self, u0) -> AlphaRat:
        u0 = as_alpha(u0)
        acc = _ZERO
        for v in reversed(self.c):
            acc = acc * u0 + v
        return acc

    def __str__(self):
        if not self.c:
            return "0"
        parts = []
        for k in range(len(self.c) - 1, -1, -1):
            v = self.c[k]
            if not v:
                continue
            mono = "" if k == 0 else ("u" if k == 1 else f"u^{k}")
            vs = str(v)
            if mono:
                if vs == "1":
                    vs = ""
                elif vs == "-1":
                    vs = "-"
                elif "+" in vs or "-" in vs[1:] or "/" in vs:
                    vs = f"({vs})*"
                else:
                    vs = f"{vs}*"
            parts.append(vs + mono)
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"UPoly({self})"

    def to_json(self) -> list:
        return [[k, v.to_json()] for k, v in enumerate(self.c) if v]


def linear(shift) -> UPoly:
    """u + shift."""
    return UPoly([shift, 1])


def pochhammer(n: int) -> UPoly:
    """(u)_n = u (u+1) ... (u+n-1)."""
    return rising_tail(0, n)


def rising_tail(k: int, n: int) -> UPoly:
    """(u+k)(u+k+1)...(u+n-1); the empty product is 1."""
    out = UPoly([1])
    for j in range(k, n):
        out = out * linear(j)
    return out


class UPolyRat:
    """Reduced ratio num/den of polynomials in u, den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, reduce: bool = True):
        num = num if isinstance(num, UPoly) else UPoly([num])
        den = UPoly([1]) if den is None else (den if isinstance(den, UPoly) else UPoly([den]))
        if den.is_zero():
            raise AlphaZeroDivisionError("zero denominator in u")
        if num.is_zero():
            num, den = UPoly(), UPoly([1])
        elif reduce:
            g = num.gcd(den)
            if g.degree > 0:
                num = num.divmod(g)[0]
                den = den.divmod(g)[0]
            lc = den.c[-1]
            if lc != _ONE:
                inv = lc.inverse()
                num, den = num * inv, den * inv
        self.num = num
        self.den = den

    def __eq__(self, other):
        if not isinstance(other, UPolyRat):
            other = UPolyRat(other)
        return self.num == other.num and self.den == other.den

    __hash__ = None

    def __add__(self, other):
        if not isinstance(other, UPolyRat):
            other = UPolyRat(other)
        if self.den == other.den:
            return UPolyRat(self.num + other.num, self.den)
        return UPolyRat(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return UPolyRat(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        if not isinstance(other, UPolyRat):
            other = UPolyRat(other)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, UPolyRat):
            if isinstance(other, UPoly):
                other = UPolyRat(other)
            else:
                return UPolyRat(self.num * as_alpha(other), self.den, reduce=False)
        return UPolyRat(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, UPolyRat):
            other = UPolyRat(other)
        if other.num.is_zero():
            raise AlphaZeroDivisionError("division by zero rational function")
        return UPolyRat(self.num * other.den, self.den * other.num)

    def __call__(self, u0) -> AlphaRat:
        """Value at u = u0 (an element of Q(alpha)); the form is already reduced."""
        d = self.den(u0)
        if not d:
            raise AlphaPoleError(f"pole of {self} at u = {u0}")
        return self.num(u0) / d

    def __str__(self):
        if self.den == UPoly([1]):
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"UPolyRat({self})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}


@dataclass(frozen=True)
class PochhammerExpansion:
    """Coefficients e_0..e_l of sum_k e_k / (u)_k."""

    coeffs: tuple

    def to_rational(self) -> UPolyRat:
        n = len(self.coeffs) - 1
        num = UPoly()
        for k, e in enumerate(self.coeffs):
            num = num + rising_tail(k, n) * e
        return UPolyRat(num, pochhammer(n))

    def __getitem__(self, k: int) -> AlphaRat:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else _ZERO


def expand_pochhammer(v: UPolyRat, ell: int) -> PochhammerExpansion:
    """Write v as sum_{k<=ell} e_k / (u)_k.

    Requires den(v) | (u)_ell and a numerator of degree at most ell after
    bringing v over (u)_ell.
    """
    if ell < 0:
        raise ValueError("ell must be non-negative")
    q, r = pochhammer(ell).divmod(v.den)
    if not r.is_zero():
        raise ValueError(f"denominator of {v} does not divide (u)_{ell}")
    num = v.num * q
    if num.degree > ell:
        raise ValueError(f"numerator degree of {v} exceeds {ell}")
    coeffs = []
    rem = num
    for k in range(ell + 1):
        deg = ell - k
        e = rem.c[deg] if deg < len(rem.c) else _ZERO
        coeffs.append(e)
        if e:
            rem = rem - rising_tail(k, ell) * e
    if not rem.is_zero():
        raise ArithmeticError("Pochhammer expansion left a remainder")
    return PochhammerExpansion(tuple(coeffs))
