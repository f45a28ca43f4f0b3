"""Jack symmetric functions P_lambda and the Pieri coefficients for p_1."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Optional, Sequence

from .alpha import AlphaRat, alpha, alpha_key
from .partitions import (
    Partition,
    add_box,
    addable_rows,
    conjugate,
    dominance_leq,
    enumerate_partitions,
    remove_box,
    removable_rows,
)
from .symfun import SymFun, inner_product, m_in_p_table

__all__ = [
    "JackExpansion",
    "jack_P",
    "jack_norm",
    "gram_schmidt",
    "pieri_up_coeff",
    "pieri_down_coeff",
    "to_jack_basis",
    "from_jack_basis",
]

_ZERO = AlphaRat(0)
_ONE = AlphaRat(1)


@dataclass(frozen=True)
class JackExpansion:
    label: Partition
    body: SymFun  # monomial basis, coefficient of m_label is 1
    p_body: SymFun  # the same element in the power-sum basis

    def to_json(self, basis: str = "m", text: bool = False) -> dict:
        f = self.body if basis == "m" else self.p_body
        return {"label": list(self.label), **f.to_json(text=text)}


def _m_as_p(lam: Partition) -> dict:
    return {nu: AlphaRat(c) for nu, c in m_in_p_table(sum(lam))[lam].items()}


def gram_schmidt(order: Sequence, dominance_only: bool = True) -> dict:
    """Orthogonalize the monomial functions of one weight along ``order``.

    ``order`` must list the partitions of a weight in a linear extension of
    dominance, smallest first.  With ``dominance_only`` the projections are
    taken only against strictly dominated partitions (the others vanish);
    otherwise against every earlier entry.  Returns {lam: JackExpansion}.
    """
    out: dict = {}
    norms: dict = {}
    done: list = []
    for lam in order:
        lam = Partition(lam)
        m_body = {lam: _ONE}
        p_body = _m_as_p(lam)
        m_lam_p = SymFun._trusted("p", dict(p_body))
        for mu in done:
            if dominance_only and not dominance_leq(mu, lam):
                continue
            proj = inner_product(m_lam_p, out[mu].p_body)
            if not proj:
                continue
            c = proj / norms[mu]
            for nu, v in out[mu].body.terms.items():
                w = m_body.get(nu, _ZERO) - c * v
                if w:
                    m_body[nu] = w
                else:
                    m_body.pop(nu, None)
            for nu, v in out[mu].p_body.terms.items():
                w = p_body.get(nu, _ZERO) - c * v
                if w:
                    p_body[nu] = w
                else:
                    p_body.pop(nu, None)
        exp = JackExpansion(lam, SymFun._trusted("m", m_body), SymFun._trusted("p", p_body))
        out[lam] = exp
        norms[lam] = inner_product(exp.p_body, exp.p_body)
        done.append(lam)
    return out


_cache: dict = {}
_norm_cache: dict = {}
_lock = threading.Lock()


def _weight(n: int) -> dict:
    key = (alpha_key(), n)
    tab = _cache.get(key)
    if tab is None:
        tab = gram_schmidt(list(reversed(enumerate_partitions(n))))
        with _lock:
            tab = _cache.setdefault(key, tab)
    return tab


def jack_P(lam) -> JackExpansion:
    """The Jack symmetric function P_lam, unitriangular in the monomial basis."""
    lam = Partition(lam)
    return _weight(lam.size)[lam]


def jack_norm(lam) -> AlphaRat:
    """<P_lam, P_lam>."""
    lam = Partition(lam)
    key = (alpha_key(), lam)
    v = _norm_cache.get(key)
    if v is None:
        f = jack_P(lam).p_body
        v = _norm_cache.setdefault(key, inner_product(f, f))
    return v


def to_jack_basis(f: SymFun) -> dict:
    """Coefficients {lam: c} with f = sum c P_lam.

    Peels off the reverse-lex largest monomial repeatedly; valid because
    P_lam is m_lam plus dominated (hence lex-smaller) monomials.
    """
    rest = dict(f.to_m().terms)
    out: dict = {}
    while rest:
        lam = max(rest, key=lambda t: (sum(t), t))
        c = rest[lam]
        out[lam] = c
        for nu, v in jack_P(lam).body.terms.items():
            w = rest.get(nu, _ZERO) - c * v
            if w:
                rest[nu] = w
            else:
                rest.pop(nu, None)
    return out


def from_jack_basis(coeffs: dict) -> SymFun:
    out = SymFun("m")
    for lam, c in coeffs.items():
        out = out + jack_P(lam).body.scale(c)
    return out


# ---------------------------------------------------------------------------
# Pieri coefficients


def pieri_up_coeff(mu, i: int) -> AlphaRat:
    """Coefficient of P_lam in p_1 P_mu, where lam adds a box to row i of mu."""
    lam = add_box(mu, i)
    a = alpha()
    li = lam.part(i)
    out = _ONE
    for j in range(1, i):
        d = li - lam.part(j)
        out = out * (a * d - i + j - 1) / (a * (d - 1) - i + j)
        out = out * (a * (d - 1) - i + j + 1) / (a * d - i + j)
    return out


def pieri_down_coeff(lam, i: int) -> AlphaRat:
    """Coefficient of P_mu in dP_lam/dp_1, where mu removes a box from row i of lam."""
    lam = Partition(lam)
    remove_box(lam, i)
    a = alpha()
    conj = conjugate(lam)
    li = lam.part(i)
    out = _ONE
    for j in range(1, li):
        cj = conj.part(j)
        out = out * (a * (li - j - 1) + cj - i + 1) / (a * (li - j) + cj - i)
        out = out * (a * (li - j + 1) + cj - i) / (a * (li - j) + cj - i + 1)
    return out


def pieri_up(mu) -> dict:
    """{lam: coefficient} for p_1 P_mu."""
    return {add_box(mu, i): pieri_up_coeff(mu, i) for i in addable_rows(mu)}


def pieri_down(lam) -> dict:
    """{mu: coefficient} for dP_lam/dp_1."""
    return {remove_box(lam, i): pieri_down_coeff(lam, i) for i in removable_rows(lam)}
