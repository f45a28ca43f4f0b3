"""The algebra of symmetric functions over Q(alpha).

Elements are sparse maps from partitions to coefficients, tagged with the
basis they are written in: monomial ``"m"`` or power sum ``"p"``.  Arithmetic
happens in the power-sum basis, where the p_n are free commuting generators;
the monomial basis is a presentation basis reached through per-weight
transition tables.
"""

from __future__ import annotations

import math
import threading
from collections import Counter, defaultdict
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Optional

from .alpha import AlphaRat, alpha, alpha_key, as_alpha
from .partitions import (
    Partition,
    _mk,
    c_int,
    enumerate_partitions,
    partitions_upto,
    refinement_count,
    z_int,
)

__all__ = [
    "SymFun",
    "p",
    "m",
    "one",
    "p_to_m",
    "m_to_p",
    "mul",
    "inner_product",
    "adjoint_apply",
    "pstar_on_p",
    "deriv_p",
    "kernel_truncated",
    "kernel_closed_form",
    "kernel_lemma_check",
    "p_in_m_table",
    "m_in_p_table",
]

_ZERO = AlphaRat(0)
_ONE = AlphaRat(1)


class SymFun:
    """A finite linear combination of m_lambda or p_lambda."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str = "p", terms: Optional[Mapping] = None):
        if basis not in ("m", "p"):
            raise ValueError(f"basis must be 'm' or 'p', got {basis!r}")
        self.basis = basis
        clean: dict[Partition, AlphaRat] = {}
        for lam, c in (terms or {}).items():
            c = as_alpha(c)
            if c:
                lam = Partition(lam)
                c = clean.get(lam, _ZERO) + c
                if c:
                    clean[lam] = c
                else:
                    clean.pop(lam, None)
        self.terms = clean

    @classmethod
    def _trusted(cls, basis: str, terms: dict) -> SymFun:
        obj = object.__new__(cls)
        obj.basis = basis
        obj.terms = terms
        return obj

    # -- conversions ---------------------------------------------------------

    def to_p(self) -> SymFun:
        return self if self.basis == "p" else m_to_p(self)

    def to_m(self) -> SymFun:
        return self if self.basis == "m" else p_to_m(self)

    def in_basis(self, basis: str) -> SymFun:
        return self.to_p() if basis == "p" else self.to_m()

    # -- structure -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Largest weight in the support (-1 for the zero function)."""
        return max((sum(lam) for lam in self.terms), default=-1)

    def low_degree(self) -> int:
        return min((sum(lam) for lam in self.terms), default=-1)

    def component(self, n: int) -> SymFun:
        return SymFun._trusted(self.basis, {lam: c for lam, c in self.terms.items() if sum(lam) == n})

    def weights(self) -> list[int]:
        return sorted({sum(lam) for lam in self.terms})

    def coeff(self, lam) -> AlphaRat:
        return self.terms.get(Partition(lam), _ZERO)

    def map_coeffs(self, fn: Callable) -> SymFun:
        return SymFun(self.basis, {lam: fn(c) for lam, c in self.terms.items()})

    def sorted_terms(self) -> list:
        """Terms in reverse-lexicographic order of partitions, lower weights first."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), tuple(-x for x in t[0])))

    # -- arithmetic ------------------------------------------------------------

    def _coerce(self, other) -> SymFun:
        if isinstance(other, SymFun):
            return other
        return SymFun._trusted(self.basis, {Partition(): as_alpha(other)} if other else {})

    def __add__(self, other):
        other = self._coerce(other)
        a, b = self, other
        if a.basis != b.basis:
            a, b = a.to_p(), b.to_p()
        return SymFun._trusted(a.basis, _add_terms(a.terms, b.terms, _ONE))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        a, b = self, other
        if a.basis != b.basis:
            a, b = a.to_p(), b.to_p()
        return SymFun._trusted(a.basis, _add_terms(a.terms, b.terms, -_ONE))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return SymFun._trusted(self.basis, {lam: -c for lam, c in self.terms.items()})

    def scale(self, c) -> SymFun:
        c = as_alpha(c)
        if not c:
            return SymFun(self.basis)
        return SymFun._trusted(self.basis, {lam: v * c for lam, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SymFun):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if isinstance(other, SymFun):
            if self.basis == other.basis:
                return self.terms == other.terms
            return self.to_p().terms == other.to_p().terms
        if isinstance(other, (int, Fraction, AlphaRat)):
            return self == self._coerce(other)
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        return f"SymFun({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for lam, c in self.sorted_terms():
            label = f"{self.basis}[{','.join(map(str, lam))}]" if lam else "1"
            cs = str(c)
            if label == "1":
                parts.append(cs)
            elif cs == "1":
                parts.append(label)
            elif cs == "-1":
                parts.append(f"-{label}")
            else:
                if any(ch in cs[1:] for ch in "+-/"):
                    cs = f"({cs})"
                parts.append(f"{cs}*{label}")
        s = " + ".join(parts)
        return s.replace("+ -", "- ")

    # -- JSON --------------------------------------------------------------------

    def to_json(self, text: bool = False) -> dict:
        terms = [
            {"partition": list(lam), "coeff": str(c) if text else c.to_json()}
            for lam, c in self.sorted_terms()
        ]
        return {"basis": self.basis, "terms": terms}

    @classmethod
    def from_json(cls, data) -> SymFun:
        basis = data.get("basis", "p")
        terms: dict = {}
        for t in data.get("terms", []):
            lam = Partition(t["partition"])
            c = AlphaRat.from_json(t.get("coeff", 1))
            terms[lam] = terms.get(lam, _ZERO) + c
        return cls(basis, terms)


def _add_terms(a: dict, b: dict, sign: AlphaRat) -> dict:
    out = dict(a)
    neg = sign != _ONE
    for lam, c in b.items():
        if neg:
            c = -c
        v = out.get(lam)
        if v is None:
            out[lam] = c
        else:
            v = v + c
            if v:
                out[lam] = v
            else:
                del out[lam]
    return out


def p(*parts) -> SymFun:
    """p_lambda; ``p(2, 1)`` or ``p((2, 1))``."""
    lam = Partition(parts[0] if len(parts) == 1 and not isinstance(parts[0], int) else parts)
    return SymFun._trusted("p", {lam: _ONE})


def m(*parts) -> SymFun:
    """m_lambda; ``m(2, 1)`` or ``m((2, 1))``."""
    lam = Partition(parts[0] if len(parts) == 1 and not isinstance(parts[0], int) else parts)
    return SymFun._trusted("m", {lam: _ONE})


def one() -> SymFun:
    return SymFun._trusted("p", {Partition(): _ONE})


# ---------------------------------------------------------------------------
# basis transition tables, one per weight, filled once

_table_lock = threading.Lock()
_p_in_m: dict[int, dict] = {}
_m_in_p: dict[int, dict] = {}


def p_in_m_table(n: int) -> dict:
    """{mu: {lam: R_lam_mu}}: p_mu = sum_lam R_lam_mu m_lam over partitions of n."""
    tab = _p_in_m.get(n)
    if tab is None:
        parts = enumerate_partitions(n)
        tab = {}
        for mu in parts:
            row = {}
            for lam in parts:
                if lam < mu:
                    break
                r = refinement_count(lam, mu)
                if r:
                    row[lam] = r
            tab[mu] = row
        with _table_lock:
            tab = _p_in_m.setdefault(n, tab)
    return tab


def m_in_p_table(n: int) -> dict:
    """{lam: {nu: coefficient}}: m_lam = sum_nu coefficient * p_nu over partitions of n.

    Obtained by back-substitution along reverse-lex order: p_lam equals
    c_lam m_lam plus monomials strictly above lam, whose expansions are
    already known.
    """
    tab = _m_in_p.get(n)
    if tab is None:
        fwd = p_in_m_table(n)
        tab = {}
        for lam in enumerate_partitions(n):
            row = fwd[lam]
            acc: dict = {lam: Fraction(1)}
            for kappa, r in row.items():
                if kappa == lam:
                    continue
                for nu, v in tab[kappa].items():
                    w = acc.get(nu, 0) - r * v
                    if w:
                        acc[nu] = w
                    else:
                        acc.pop(nu, None)
            diag = Fraction(row[lam])
            tab[lam] = {nu: v / diag for nu, v in acc.items()}
        with _table_lock:
            tab = _m_in_p.setdefault(n, tab)
    return tab


def _convert(f: SymFun, table: Callable[[int], dict], basis: str) -> SymFun:
    out: dict = {}
    for lam, c in f.terms.items():
        for nu, r in table(sum(lam))[lam].items():
            v = out.get(nu)
            w = c * r
            if v is None:
                out[nu] = w
            else:
                v = v + w
                if v:
                    out[nu] = v
                else:
                    del out[nu]
    return SymFun._trusted(basis, out)


def p_to_m(f: SymFun) -> SymFun:
    if f.basis != "p":
        raise ValueError("p_to_m expects a power-sum expansion")
    return _convert(f, p_in_m_table, "m")


def m_to_p(f: SymFun) -> SymFun:
    if f.basis != "m":
        raise ValueError("m_to_p expects a monomial expansion")
    return _convert(f, m_in_p_table, "p")


# ---------------------------------------------------------------------------
# ring structure in the power-sum basis


def pmerge(a: tuple, b: tuple) -> Partition:
    if not a:
        return b if isinstance(b, Partition) else Partition(b)
    if not b:
        return a if isinstance(a, Partition) else Partition(a)
    return _mk(tuple(sorted(a + b, reverse=True)))


def mul(f: SymFun, g: SymFun) -> SymFun:
    """Product in the algebra, returned in the power-sum basis."""
    f, g = f.to_p(), g.to_p()
    out: dict = {}
    for lam, a in f.terms.items():
        for mu, b in g.terms.items():
            nu = pmerge(lam, mu)
            c = a * b
            v = out.get(nu)
            if v is None:
                out[nu] = c
            else:
                v = v + c
                if v:
                    out[nu] = v
                else:
                    del out[nu]
    return SymFun._trusted("p", out)


def deriv_p(n: int, lam: tuple) -> tuple[int, Optional[Partition]]:
    """d/dp_n applied to p_lam: (multiplicity of n, lam with one n removed)."""
    k = lam.count(n)
    if not k:
        return 0, None
    i = lam.index(n)
    return k, _mk(lam[:i] + lam[i + 1:])


_pstar_cache: dict = {}


def pstar_on_p(nu, lam) -> tuple[AlphaRat, Optional[Partition]]:
    """p_nu^* applied to p_lam, where p_n^* = alpha n d/dp_n.

    Returns (coefficient, remaining partition), or (0, None) when nu is not a
    sub-multiset of lam.
    """
    key = (alpha_key(), nu, lam)
    hit = _pstar_cache.get(key)
    if hit is not None:
        return hit
    cn, cl = Counter(nu), Counter(lam)
    res: tuple = (_ZERO, None)
    if all(cl[n] >= k for n, k in cn.items()):
        coeff = 1
        for n, k in cn.items():
            coeff *= n ** k * math.perm(cl[n], k)
        rest = cl - cn
        out = _mk(tuple(sorted(rest.elements(), reverse=True)))
        res = (alpha() ** len(nu) * coeff, out)
    _pstar_cache[key] = res
    return res


def adjoint_apply(f: SymFun, g: SymFun) -> SymFun:
    """f^*(g): the adjoint of multiplication by f, applied to g."""
    f, g = f.to_p(), g.to_p()
    out: dict = {}
    for nu, a in f.terms.items():
        for lam, b in g.terms.items():
            c, rest = pstar_on_p(nu, lam)
            if rest is None:
                continue
            w = a * b * c
            v = out.get(rest)
            if v is None:
                out[rest] = w
            else:
                v = v + w
                if v:
                    out[rest] = v
                else:
                    del out[rest]
    return SymFun._trusted("p", out)


def inner_product(f: SymFun, g: SymFun) -> AlphaRat:
    """<p_lam, p_mu> = alpha^{l(lam)} z_lam delta_{lam,mu}, extended bilinearly."""
    f, g = f.to_p(), g.to_p()
    if len(g.terms) < len(f.terms):
        f, g = g, f
    a = alpha()
    acc = _ZERO
    for lam, c in f.terms.items():
        d = g.terms.get(lam)
        if d is not None:
            acc = acc + c * d * (a ** len(lam) * z_int(lam))
    return acc


# ---------------------------------------------------------------------------
# the reproducing kernel, as a truncated bivariate series in p(x), p(y)

Bivariate = dict  # {(lam_x, lam_y): AlphaRat}


def _biv_mul(a: Bivariate, b: Bivariate, max_x: int) -> Bivariate:
    out: Bivariate = {}
    for (l1, m1), c1 in a.items():
        w1 = sum(l1)
        for (l2, m2), c2 in b.items():
            if w1 + sum(l2) > max_x:
                continue
            key = (pmerge(l1, l2), pmerge(m1, m2))
            v = out.get(key, _ZERO) + c1 * c2
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return out


def _biv_exp(s: Bivariate, max_x: int) -> Bivariate:
    """exp(s) truncated at x-degree max_x, for s without constant term."""
    result: Bivariate = {(Partition(), Partition()): _ONE}
    power: Bivariate = dict(result)
    for k in range(1, max_x + 1):
        power = _biv_mul(power, s, max_x)
        if not power:
            break
        inv = Fraction(1, math.factorial(k))
        for key, c in power.items():
            v = result.get(key, _ZERO) + c * inv
            if v:
                result[key] = v
            else:
                result.pop(key, None)
    return result


def _log_kernel(d: int, sign: int = 1) -> Bivariate:
    a = alpha()
    return {(_mk((n,)), _mk((n,))): (a * n).inverse() * sign for n in range(1, d + 1)}


def kernel_truncated(d: int) -> Bivariate:
    """Coefficients of p_lam(x) p_mu(y) in exp(sum_n p_n(x) p_n(y) / (alpha n)),
    for x-degree at most d."""
    if d < 0:
        raise ValueError("truncation degree must be non-negative")
    return _biv_exp(_log_kernel(d), d)


def kernel_closed_form(d: int) -> Bivariate:
    """The diagonal expansion sum_lam p_lam(x) p_lam(y) / (alpha^l z_lam)."""
    a = alpha()
    return {(lam, lam): (a ** len(lam) * z_int(lam)).inverse() for lam in partitions_upto(d)}


def kernel_lemma_check(f: SymFun, d: int) -> bool:
    """Check f^*(Pi) / Pi == f(y), exactly up to x-degree d - deg f."""
    f = f.to_p()
    if f.is_zero():
        return True
    deg = f.degree()
    if deg > d:
        raise ValueError("truncation degree must be at least deg(f)")
    window = d - deg
    pi = kernel_truncated(d)
    applied: Bivariate = {}
    for (lx, ly), c in pi.items():
        image = adjoint_apply(f, SymFun._trusted("p", {lx: c}))
        for lam, v in image.terms.items():
            if sum(lam) > window:
                continue
            key = (lam, ly)
            w = applied.get(key, _ZERO) + v
            if w:
                applied[key] = w
            else:
                applied.pop(key, None)
    ratio = _biv_mul(applied, _biv_exp(_log_kernel(window, -1), window), window)
    expected = {(Partition(), lam): c for lam, c in f.terms.items()}
    return ratio == expected
