"""Finite-N computations: symmetric polynomials in x_1..x_N, the
determinantal operator S_N(u), stability under x_N = 0, and exact
checks of the determinantal identity behind the main theorem.
"""

from __future__ import annotations

import itertools
import json
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Optional, Sequence

from .alpha import AlphaRat, alpha
from .jack import jack_P
from .partitions import Partition, c_int, partitions_upto
from .symfun import SymFun

__all__ = [
    "MultiPoly",
    "NonExactDivisionError",
    "vandermonde",
    "monomial_poly",
    "restrict",
    "apply_S_N",
    "S_N_coefficient",
    "check_eigen_S_N",
    "check_stability_A_N",
    "PsiInstance",
    "random_instance",
    "detid_sides",
    "detid_check",
    "pair_sum",
    "pair_sum_symmetrized",
    "detid_series_sides",
    "detid_check_series",
    "kernel_from_determinant",
    "detid_term_count",
    "detid_term_count_formula",
    "cancelling_sum",
    "perm_sign",
]


class NonExactDivisionError(ArithmeticError):
    """A polynomial division that was required to be exact left a remainder."""


class MultiPoly:
    """Sparse polynomial in ``nvars`` variables: {exponent tuple: coefficient}.

    Coefficients may be ints, Fractions or AlphaRats; zero coefficients are
    never stored.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Optional[dict] = None):
        self.nvars = nvars
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != nvars or any(v < 0 for v in e):
                raise ValueError(f"bad exponent vector {e} for {nvars} variables")
            if c:
                clean[e] = clean[e] + c if e in clean else c
                if not clean[e]:
                    del clean[e]
        self.terms = clean

    @classmethod
    def _trusted(cls, nvars: int, terms: dict) -> MultiPoly:
        obj = object.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        return obj

    @classmethod
    def const(cls, nvars: int, c=1) -> MultiPoly:
        return cls._trusted(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def var(cls, nvars: int, i: int, power: int = 1) -> MultiPoly:
        e = [0] * nvars
        e[i] = power
        return cls._trusted(nvars, {tuple(e): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        return self == MultiPoly.const(self.nvars, other)

    __hash__ = None

    def _combine(self, other: MultiPoly, sign: int) -> MultiPoly:
        if other.nvars != self.nvars:
            raise ValueError("variable count mismatch")
        out = dict(self.terms)
        for e, c in other.terms.items():
            if sign < 0:
                c = -c
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return MultiPoly._trusted(self.nvars, out)

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.const(self.nvars, other)
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.const(self.nvars, other)
        return self._combine(other, -1)

    def __rsub__(self, other):
        return MultiPoly.const(self.nvars, other) - self

    def __neg__(self):
        return MultiPoly._trusted(self.nvars, {e: -c for e, c in self.terms.items()})

    def mul(self, other: MultiPoly, keep: Optional[Callable[[tuple], bool]] = None) -> MultiPoly:
        """Product, optionally dropping exponents for which ``keep`` is false."""
        if not isinstance(other, MultiPoly):
            if not other:
                return MultiPoly(self.nvars)
            return MultiPoly._trusted(self.nvars, {e: c * other for e, c in self.terms.items()})
        if other.nvars != self.nvars:
            raise ValueError("variable count mismatch")
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if keep is not None and not keep(e):
                    continue
                v = out.get(e)
                w = c1 * c2
                if v is None:
                    out[e] = w
                else:
                    v = v + w
                    if v:
                        out[e] = v
                    else:
                        del out[e]
        return MultiPoly._trusted(self.nvars, out)

    def __mul__(self, other):
        return self.mul(other)

    def __rmul__(self, other):
        return self.mul(other)

    def __pow__(self, k: int) -> MultiPoly:
        out = MultiPoly.const(self.nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def divexact(self, other: MultiPoly) -> MultiPoly:
        """Quotient by ``other``; raises NonExactDivisionError on a remainder.

        Lexicographic division: if the division is exact, the leading
        monomial of the remainder is always divisible by that of ``other``.
        """
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead = max(other.terms)
        lc = other.terms[lead]
        rem = dict(self.terms)
        quo: dict = {}
        while rem:
            top = max(rem)
            shift = tuple(a - b for a, b in zip(top, lead))
            if any(v < 0 for v in shift):
                raise NonExactDivisionError("polynomial division is not exact")
            q = rem[top] / lc if not isinstance(lc, int) or lc != 1 else rem[top]
            quo[shift] = q
            for e, c in other.terms.items():
                t = tuple(a + b for a, b in zip(e, shift))
                v = rem.get(t)
                w = q * c
                v = -w if v is None else v - w
                if v:
                    rem[t] = v
                else:
                    rem.pop(t, None)
        return MultiPoly._trusted(self.nvars, quo)

    def set_zero(self, i: int) -> MultiPoly:
        """Substitute x_i = 0, dropping that variable."""
        return MultiPoly._trusted(
            self.nvars - 1, {e[:i] + e[i + 1:]: c for e, c in self.terms.items() if e[i] == 0}
        )

    def is_symmetric(self, nsym: Optional[int] = None) -> bool:
        """Symmetric under permutations of the first ``nsym`` variables."""
        n = self.nvars if nsym is None else nsym
        for i in range(n - 1):
            for e, c in self.terms.items():
                f = list(e)
                f[i], f[i + 1] = f[i + 1], f[i]
                if self.terms.get(tuple(f)) != c:
                    return False
        return True

    def __call__(self, *vals):
        acc = 0
        for e, c in self.terms.items():
            t = c
            for v, k in zip(vals, e):
                if k:
                    t = t * v ** k
            acc = acc + t
        return acc

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(f"x{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k)
            cs = str(c)
            if mono:
                parts.append(mono if cs == "1" else f"({cs})*{mono}")
            else:
                parts.append(f"({cs})")
        return " + ".join(parts)

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {self})"


def perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _signed_perms(n: int) -> list[tuple[tuple, int]]:
    return [(s, perm_sign(s)) for s in itertools.permutations(range(n))]


def vandermonde(n: int, nvars: Optional[int] = None, offset: int = 0) -> MultiPoly:
    """prod_{i<j} (x_i - x_j) over variables offset..offset+n-1."""
    nvars = n if nvars is None else nvars
    out = MultiPoly.const(nvars, 1)
    for i in range(n):
        for j in range(i + 1, n):
            out = out * (MultiPoly.var(nvars, offset + i) - MultiPoly.var(nvars, offset + j))
    return out


def _distinct_perms(items: tuple) -> Iterator[tuple]:
    if not items:
        yield ()
        return
    for v in sorted(set(items), reverse=True):
        i = items.index(v)
        for rest in _distinct_perms(items[:i] + items[i + 1:]):
            yield (v,) + rest


def monomial_poly(lam, n: int, nvars: Optional[int] = None, offset: int = 0, coeff=1) -> MultiPoly:
    """m_lam(x_1..x_n); zero when l(lam) > n."""
    lam = Partition(lam)
    nvars = n if nvars is None else nvars
    if len(lam) > n:
        return MultiPoly(nvars)
    padded = tuple(lam) + (0,) * (n - len(lam))
    terms = {}
    for e in _distinct_perms(padded):
        full = [0] * nvars
        full[offset:offset + n] = e
        terms[tuple(full)] = coeff
    return MultiPoly._trusted(nvars, terms)


def restrict(f: SymFun, n: int) -> MultiPoly:
    """Image of f under x_{n+1} = x_{n+2} = ... = 0."""
    out = MultiPoly(n)
    for lam, c in f.to_m().terms.items():
        if len(lam) <= n:
            out = out + monomial_poly(lam, n, coeff=c)
    return out


# ---------------------------------------------------------------------------
# the determinantal operator S_N(u)


def _linear_product(consts: Iterable) -> list:
    """Coefficients (in u) of prod (u + c)."""
    poly = [AlphaRat(1)]
    for c in consts:
        nxt = [AlphaRat(0)] * (len(poly) + 1)
        for k, v in enumerate(poly):
            nxt[k] = nxt[k] + v * c
            nxt[k + 1] = nxt[k + 1] + v
        poly = nxt
    return poly


def apply_S_N(f: MultiPoly) -> list[MultiPoly]:
    """S_N(u) f as a list of u-coefficients (index = power of u).

    Expands the alternated sum over permutations; on a monomial x^e the
    factor x_i^{N-s(i)} (u + s(i) - 1 - alpha x_i d_i) contributes
    (u + s(i) - 1 - alpha e_i) and shifts e_i.  The sum is divided by the
    Vandermonde polynomial, which must be exact.
    """
    n = f.nvars
    a = alpha()
    acc: list[dict] = [dict() for _ in range(n + 1)]
    for sigma, sign in _signed_perms(n):
        shift = [n - 1 - s for s in sigma]  # N - sigma(i) with 1-based sigma
        for e, c in f.terms.items():
            consts = [a * (-e[i]) + sigma[i] for i in range(n)]  # sigma(i) - 1 - alpha e_i
            poly = _linear_product(consts)
            ne = tuple(e[i] + shift[i] for i in range(n))
            for k, v in enumerate(poly):
                if not v:
                    continue
                w = v * c if sign > 0 else -(v * c)
                d = acc[k]
                old = d.get(ne)
                if old is None:
                    d[ne] = w
                else:
                    old = old + w
                    if old:
                        d[ne] = old
                    else:
                        del d[ne]
    delta = vandermonde(n)
    return [MultiPoly._trusted(n, d).divexact(delta) for d in acc]


def S_N_coefficient(k: int, f: MultiPoly) -> MultiPoly:
    """The coefficient of u^k in S_N(u), applied to f."""
    out = apply_S_N(f)
    return out[k] if k < len(out) else MultiPoly(f.nvars)


def _trim_u(polys: list[MultiPoly]) -> list[MultiPoly]:
    polys = list(polys)
    while polys and polys[-1].is_zero():
        polys.pop()
    return polys


def _upoly_times(consts: list, f: MultiPoly) -> list[MultiPoly]:
    return [f.mul(c) for c in _linear_product(consts)]


def check_eigen_S_N(lam, n: int) -> bool:
    """S_N(u) P_lam = prod_{i<=N} (u + i - 1 - alpha lam_i) P_lam in N variables."""
    lam = Partition(lam)
    if len(lam) > n:
        raise ValueError("l(lam) must not exceed N")
    a = alpha()
    f = restrict(jack_P(lam).body, n)
    lhs = apply_S_N(f)
    rhs = _upoly_times([a * (-lam.part(i)) + (i - 1) for i in range(1, n + 1)], f)
    return _trim_u(lhs) == _trim_u(rhs)


def check_stability_A_N(f: SymFun, n: int) -> bool:
    """rho_N A_N(u) = A_{N-1}(u) rho_N on restrict(f, N).

    With A_N = S_N / (u)_N this is rho_N S_N(u) F = (u + N - 1) S_{N-1}(u) rho_N F.
    """
    if n < 1:
        raise ValueError("N must be at least 1")
    F = restrict(f, n)
    left = [c.set_zero(n - 1) for c in apply_S_N(F)]
    lowered = apply_S_N(F.set_zero(n - 1))
    right = [MultiPoly(n - 1) for _ in range(len(lowered) + 1)]
    for k, c in enumerate(lowered):
        right[k] = right[k] + c.mul(AlphaRat(n - 1))
        right[k + 1] = right[k + 1] + c
    return _trim_u(left) == _trim_u(right)


# ---------------------------------------------------------------------------
# the determinantal identity, numeric instances


@dataclass(frozen=True)
class PsiInstance:
    """Psi(x_i, y_l) = x_i / (x_i - psi_l) for given rational x and psi values."""

    xvals: tuple
    psivals: tuple

    def __post_init__(self):
        xs = tuple(Fraction(v) for v in self.xvals)
        ps = tuple(Fraction(v) for v in self.psivals)
        object.__setattr__(self, "xvals", xs)
        object.__setattr__(self, "psivals", ps)
        if not xs:
            raise ValueError("at least one x value is required")
        if len(set(xs)) != len(xs) or any(v == 0 for v in xs):
            raise ValueError("x values must be distinct and nonzero")
        if any(x == q for x in xs for q in ps):
            raise ValueError("x values must avoid the psi values")

    @property
    def N(self) -> int:
        return len(self.xvals)

    @property
    def M(self) -> int:
        return len(self.psivals)

    def psi(self) -> list[list[Fraction]]:
        return [[x / (x - q) for q in self.psivals] for x in self.xvals]

    def check_kk(self) -> bool:
        """(x_i - x_j) Psi_il Psi_jl == x_i Psi_jl - x_j Psi_il for all i, j, l."""
        P = self.psi()
        xs = self.xvals
        return all(
            (xs[i] - xs[j]) * P[i][l] * P[j][l] == xs[i] * P[j][l] - xs[j] * P[i][l]
            for i in range(self.N)
            for j in range(self.N)
            for l in range(self.M)
        )

    def to_json(self) -> dict:
        return {"x": [str(v) for v in self.xvals], "psi": [str(v) for v in self.psivals]}

    @classmethod
    def from_json(cls, data) -> PsiInstance:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(tuple(data["x"]), tuple(data.get("psi", [])))


def random_instance(n: int, m: int, seed: int) -> PsiInstance:
    rng = random.Random(seed)

    def rat():
        while True:
            v = Fraction(rng.randint(-12, 12), rng.randint(1, 6))
            if v:
                return v

    xs: list = []
    while len(xs) < n:
        v = rat()
        if v not in xs:
            xs.append(v)
    ps: list = []
    while len(ps) < m:
        v = rat()
        if v not in xs:
            ps.append(v)
    return PsiInstance(tuple(xs), tuple(ps))


def _qmul(a: list, b: list) -> list:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _qadd(a: list, b: list, scale=1) -> list:
    out = list(a) + [Fraction(0)] * (len(b) - len(a))
    for i, v in enumerate(b):
        out[i] += scale * v
    return out


def _qtrim(a: list) -> list:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _qrising(k: int, n: int) -> list:
    out = [Fraction(1)]
    for j in range(k, n):
        out = _qmul(out, [Fraction(j), Fraction(1)])
    return out


def pair_sum(P: list[list], k: int) -> Fraction:
    """Sum over all sets of k cells with distinct rows and distinct columns of prod P."""
    N = len(P)
    M = len(P[0]) if P else 0
    cells = [(i, l) for i in range(N) for l in range(M)]
    total = Fraction(0)
    for chosen in itertools.combinations(cells, k):
        rows = {c[0] for c in chosen}
        cols = {c[1] for c in chosen}
        if len(rows) == k and len(cols) == k:
            total += math.prod((P[i][l] for i, l in chosen), start=Fraction(1))
    return total


def pair_sum_symmetrized(P: list[list], k: int) -> Fraction:
    """The same sum written over i_1<..<i_k, j_1<..<j_k and sigma in S_k."""
    N = len(P)
    M = len(P[0]) if P else 0
    total = Fraction(0)
    for iset in itertools.combinations(range(N), k):
        for jset in itertools.combinations(range(M), k):
            for sigma in itertools.permutations(range(k)):
                total += math.prod((P[iset[r]][jset[sigma[r]]] for r in range(k)), start=Fraction(1))
    return total


def detid_sides(inst: PsiInstance, symmetrized: bool = False) -> tuple[list, list]:
    """Both sides of the determinantal identity as coefficient lists in u."""
    N = inst.N
    P = inst.psi()
    xs = inst.xvals
    s = [sum(row, Fraction(0)) for row in P]
    # entry (i, j), j 1-based: x_i^{N-j} (u + j - 1 + s_i)
    entries = [[[xs[i] ** (N - j) * (j - 1 + s[i]), xs[i] ** (N - j)] for j in range(1, N + 1)] for i in range(N)]
    lhs: list = []
    for sigma, sign in _signed_perms(N):
        prod = [Fraction(1)]
        for i in range(N):
            prod = _qmul(prod, entries[i][sigma[i]])
        lhs = _qadd(lhs, prod, sign)
    delta = math.prod((xs[i] - xs[j] for i in range(N) for j in range(i + 1, N)), start=Fraction(1))
    summer = pair_sum_symmetrized if symmetrized else pair_sum
    rhs: list = []
    for k in range(N + 1):
        sk = summer(P, k)
        if sk:
            rhs = _qadd(rhs, _qrising(k, N), delta * sk)
    return _qtrim(lhs), _qtrim(rhs)


def detid_check(inst: PsiInstance) -> bool:
    lhs, rhs = detid_sides(inst)
    return lhs == rhs


# ---------------------------------------------------------------------------
# the determinantal identity as truncated formal series


def _series_layout(n: int) -> tuple[int, Callable[[int], int], Callable[[int], int], int]:
    nvars = 2 * n + 1
    return nvars, (lambda i: i), (lambda l: n + l), 2 * n


def detid_series_sides(n: int, d: int) -> tuple[MultiPoly, MultiPoly]:
    """Determinant with Psi(x, y) = xy/(xy-1) = -sum_{k>=1} (xy)^k, and the
    expected right side Delta sum_k (u+k)..(u+N-1) (-1)^k sum_{l(lam)=k} c_lam m_lam(x) m_lam(y).

    Variables are x_1..x_N, y_1..y_N, u; everything is cut at total y-degree d.
    """
    if n < 1 or d < 1:
        raise ValueError("N and D must be positive")
    nvars, xi, yl, uidx = _series_layout(n)
    ys = range(n, 2 * n)

    def keep(e):
        return sum(e[j] for j in ys) <= d

    U = MultiPoly.var(nvars, uidx)
    one = Fraction(1)
    s = []
    for i in range(n):
        acc = MultiPoly(nvars)
        for l in range(n):
            for k in range(1, d + 1):
                e = [0] * nvars
                e[xi(i)] = k
                e[yl(l)] = k
                acc = acc + MultiPoly._trusted(nvars, {tuple(e): -one})
        s.append(acc)
    entries = [
        [MultiPoly.var(nvars, xi(i), n - j) * (U + (j - 1) + s[i]) for j in range(1, n + 1)]
        for i in range(n)
    ]
    lhs = MultiPoly(nvars)
    for sigma, sign in _signed_perms(n):
        prod = MultiPoly.const(nvars, one)
        for i in range(n):
            prod = prod.mul(entries[i][sigma[i]], keep)
        lhs = lhs + prod if sign > 0 else lhs - prod
    rhs = MultiPoly(nvars)
    for k in range(n + 1):
        inner = _kernel_piece(n, d, k, nvars)
        if inner.is_zero():
            continue
        rising = MultiPoly.const(nvars, one)
        for j in range(k, n):
            rising = rising * (U + j)
        rhs = rhs + inner * rising * ((-1) ** k)
    rhs = rhs * vandermonde(n, nvars)
    return lhs, rhs


def _kernel_piece(n: int, d: int, k: int, nvars: int) -> MultiPoly:
    """sum_{l(lam)=k, |lam|<=d} c_lam m_lam(x) m_lam(y) in the series layout."""
    out = MultiPoly(nvars)
    for lam in partitions_upto(d, k):
        if len(lam) != k:
            continue
        mx = monomial_poly(lam, n, nvars, 0, Fraction(c_int(lam)))
        my = monomial_poly(lam, n, nvars, n)
        out = out + mx * my
    return out


def detid_check_series(n: int, d: int) -> bool:
    lhs, rhs = detid_series_sides(n, d)
    return lhs == rhs


def kernel_from_determinant(n: int, d: int) -> list[MultiPoly]:
    """Divide the truncated determinant by Delta and expand in u against
    (u+k)..(u+N-1); returns the coefficients e_0..e_N, so that
    det / (Delta (u)_N) = sum_k e_k / (u)_k."""
    lhs, _ = detid_series_sides(n, d)
    nvars, _, _, uidx = _series_layout(n)
    q = lhs.divexact(vandermonde(n, nvars))
    by_u: dict[int, MultiPoly] = {}
    for e, c in q.terms.items():
        k = e[uidx]
        base = e[:uidx] + (0,) + e[uidx + 1:]
        by_u.setdefault(k, MultiPoly(nvars))
        by_u[k] = by_u[k] + MultiPoly._trusted(nvars, {base: c})
    coeffs = []
    for k in range(n + 1):
        deg = n - k
        ek = by_u.get(deg, MultiPoly(nvars))
        coeffs.append(ek)
        if ek.is_zero():
            continue
        rising = [Fraction(1)]
        for j in range(k, n):
            rising = _qmul(rising, [Fraction(j), Fraction(1)])
        for t, v in enumerate(rising):
            if v:
                by_u[t] = by_u.get(t, MultiPoly(nvars)) - ek * v
    if any(not p.is_zero() for p in by_u.values()):
        raise ArithmeticError("quotient is not a polynomial of degree <= N in u")
    return coeffs


# ---------------------------------------------------------------------------
# the cancelling sum in the induction step


def _quadruples(n: int, k: int) -> Iterator[tuple]:
    """(i, s, sigma, r) with i outside {0..k-1}, sigma(i) = 1, 2 <= r <= sigma(i_s) - 1.

    sigma is a tuple of 1-based values indexed by 0-based positions; the
    fixed indices are i_s = s for s = 0..k-1.
    """
    for sigma0 in itertools.permutations(range(n)):
        sigma = tuple(v + 1 for v in sigma0)
        i = sigma.index(1)
        if i < k:
            continue
        for s in range(k):
            for r in range(2, sigma[s]):
                yield i, s, sigma, r


def detid_term_count_formula(n: int, k: int) -> Fraction:
    return Fraction(math.factorial(n - 1) * (n - 2) * (n - k) * k, 2)


def detid_term_count(n: int, k: int) -> int:
    """Enumerated number of quadruples in the cancelling sum; checked against
    (N-1)! (N-2) (N-k) k / 2."""
    if n < 2 or not 1 <= k <= n - 1:
        raise ValueError("need N >= 2 and 1 <= k <= N - 1")
    count = sum(1 for _ in _quadruples(n, k))
    if count != detid_term_count_formula(n, k):
        raise ArithmeticError(f"term count {count} differs from closed form for N={n}, k={k}")
    return count


def cancelling_sum(n: int, k: int) -> MultiPoly:
    """The cancelling sum itself as a polynomial in x_1..x_N (expected to vanish)."""
    out: dict = {}
    for i, s, sigma, r in _quadruples(n, k):
        sign = perm_sign(tuple(v - 1 for v in sigma))
        e = [n - sigma[j] for j in range(n)]
        e[i] = n - r
        e[s] = n - sigma[s] + r - 1
        key = tuple(e)
        v = out.get(key, 0) + sign
        if v:
            out[key] = v
        else:
            out.pop(key, None)
    return MultiPoly._trusted(n, out)
