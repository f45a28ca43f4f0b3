"""Partition combinatorics: conjugation, dominance, multiplicity statistics,
refinement counts and enumeration."""

from __future__ import annotations

import math
from collections import Counter
from functools import lru_cache
from typing import Iterable, Optional

from .alpha import AlphaRat

__all__ = [
    "Partition",
    "conjugate",
    "dominance_leq",
    "z_of",
    "c_of",
    "refinement_count",
    "enumerate_partitions",
    "partitions_upto",
    "append_one",
    "parse_partition",
    "format_partition",
    "add_box",
    "remove_box",
    "addable_rows",
    "removable_rows",
]


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Zeros are dropped and the parts are sorted, so ``Partition([1, 0, 3])``
    is ``(3, 1)``.  Being a tuple, it hashes and compares like one; plain
    tuple comparison is the lexicographic order used for enumeration.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        if isinstance(parts, Partition):
            return parts
        ps = []
        for p in parts:
            if int(p) != p or p < 0:
                raise ValueError(f"partition parts must be non-negative integers, got {p!r}")
            if p:
                ps.append(int(p))
        ps.sort(reverse=True)
        return super().__new__(cls, ps)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """1-based part, zero beyond the length."""
        return self[i - 1] if i <= len(self) else 0

    def multiplicities(self) -> Counter:
        return Counter(self)

    def __repr__(self):
        return f"Partition({tuple(self)!r})"

    def __str__(self):
        return format_partition(self)


def _mk(parts) -> Partition:
    """Wrap an already weakly decreasing positive tuple without re-sorting."""
    return tuple.__new__(Partition, parts)


def conjugate(lam) -> Partition:
    lam = Partition(lam)
    if not lam:
        return lam
    return _mk(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def dominance_leq(mu, lam) -> bool:
    """True iff mu <= lam in the dominance order; False for unequal weights."""
    if sum(mu) != sum(lam):
        return False
    s = t = 0
    for i in range(max(len(mu), len(lam))):
        s += mu[i] if i < len(mu) else 0
        t += lam[i] if i < len(lam) else 0
        if s > t:
            return False
    return True


def c_int(lam) -> int:
    return math.prod(math.factorial(k) for k in Counter(lam).values())


def z_int(lam) -> int:
    return math.prod(i ** k * math.factorial(k) for i, k in Counter(lam).items())


def z_of(lam) -> AlphaRat:
    """z_lambda = prod_i i^{k_i} k_i! as an element of Q(alpha)."""
    return AlphaRat(z_int(lam))


def c_of(lam) -> AlphaRat:
    """c_lambda = prod_i k_i!, the product of factorials of the multiplicities."""
    return AlphaRat(c_int(lam))


def refinement_count(lam, mu) -> int:
    """Number of maps theta from the parts of mu to the rows of lam whose
    fibre sums reproduce lam exactly."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        return 0
    return _refine(tuple(mu), tuple(lam))


@lru_cache(maxsize=None)
def _refine(mu: tuple, remaining: tuple) -> int:
    if not mu:
        return 1 if not any(remaining) else 0
    head, rest = mu[0], mu[1:]
    total = 0
    for i, cap in enumerate(remaining):
        if cap >= head:
            total += _refine(rest, remaining[:i] + (cap - head,) + remaining[i + 1:])
    return total


def enumerate_partitions(n: int, k: Optional[int] = None) -> list[Partition]:
    """Partitions of n in reverse lexicographic order, optionally of length exactly k."""
    if n < 0 or (k is not None and k < 0):
        raise ValueError("n and k must be non-negative")
    return list(_enum(n, k))


@lru_cache(maxsize=None)
def _enum(n: int, k: Optional[int]) -> tuple:
    out = []

    def rec(rem, cap, acc):
        if rem == 0:
            if k is None or len(acc) == k:
                out.append(_mk(tuple(acc)))
            return
        if k is not None and len(acc) >= k:
            return
        for p in range(min(rem, cap), 0, -1):
            acc.append(p)
            rec(rem - p, p, acc)
            acc.pop()

    rec(n, n, [])
    return tuple(out)


def partitions_upto(n: int, k: Optional[int] = None) -> list[Partition]:
    out = []
    for m in range(n + 1):
        out.extend(_enum(m, k))
    return out


def append_one(mu) -> Partition:
    return _mk(tuple(Partition(mu)) + (1,))


def add_box(mu, i: int) -> Partition:
    """Increase part i (1-based) of mu by one; raises if the result is not a partition."""
    mu = Partition(mu)
    if i < 1 or i > len(mu) + 1 or (i > 1 and mu.part(i - 1) <= mu.part(i)):
        raise ValueError(f"cannot add a box to row {i} of {mu}")
    parts = list(mu) + [0]
    parts[i - 1] += 1
    return Partition(parts)


def remove_box(lam, i: int) -> Partition:
    """Decrease part i (1-based) of lam by one; raises if the result is not a partition."""
    lam = Partition(lam)
    if i < 1 or i > len(lam) or lam.part(i) <= lam.part(i + 1):
        raise ValueError(f"cannot remove a box from row {i} of {lam}")
    parts = list(lam)
    parts[i - 1] -= 1
    return Partition(parts)


def addable_rows(mu) -> list[int]:
    mu = Partition(mu)
    return [i for i in range(1, len(mu) + 2) if i == 1 or mu.part(i - 1) > mu.part(i)]


def removable_rows(lam) -> list[int]:
    lam = Partition(lam)
    return [i for i in range(1, len(lam) + 1) if lam.part(i) > lam.part(i + 1)]


def parse_partition(text: str) -> Partition:
    """Parse ``"3,1,1"``; ``"-"`` (or an empty string) is the empty partition."""
    text = text.strip()
    if text in ("-", "", "()", "[]"):
        return Partition()
    text = text.strip("()[]")
    try:
        parts = [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise ValueError(f"malformed partition {text!r}") from exc
    if any(p <= 0 for p in parts) or parts != sorted(parts, reverse=True):
        raise ValueError(f"malformed partition {text!r}: parts must be positive and weakly decreasing")
    return Partition(parts)


def format_partition(lam) -> str:
    return ",".join(map(str, lam)) if lam else "-"
