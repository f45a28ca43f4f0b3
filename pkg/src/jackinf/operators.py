"""Operators on symmetric functions in the collective variables p_n.

A^(k) are the coefficients of the stable limit of S_N(u)/(u)_N, written as
(-1)^k sum_{l(lam)=k} c_lam m_lam m_lam^*.  B^(k) and C^(k) are the
coefficients of the step-operator series; H1, H2 the first two
Calogero-Sutherland Hamiltonians; a_n the Heisenberg generators.

Every operator is a function SymFun -> SymFun acting linearly on the
power-sum expansion.  Images of single basis elements p_mu are memoized.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .alpha import AlphaRat, alpha, alpha_key
from .jack import jack_P, pieri_down_coeff, pieri_up_coeff, to_jack_basis
from .partitions import (
    Partition,
    _mk,
    add_box,
    addable_rows,
    append_one,
    c_int,
    enumerate_partitions,
    partitions_upto,
    remove_box,
    removable_rows,
)
from .spectral import PochhammerExpansion, UPoly, UPolyRat, expand_pochhammer, linear
from .symfun import SymFun, deriv_p, m_in_p_table, pmerge, pstar_on_p

__all__ = [
    "apply_A",
    "apply_B",
    "apply_C",
    "apply_H1",
    "apply_H2",
    "heisenberg_a",
    "mul_p1",
    "d_dp1",
    "eigenvalue_A_series",
    "eigenvalue_A_k",
    "skip_product",
    "skip_product_at_step",
    "matrix_element_B",
    "matrix_element_C",
    "step_up",
    "step_down",
    "step_point",
    "series_action",
    "graded_matrix",
    "matmul",
    "mat_sub",
    "is_zero_matrix",
    "operator_by_name",
]

_ZERO = AlphaRat(0)
_ONE = AlphaRat(1)


def _accumulate(out: dict, lam, c) -> None:
    v = out.get(lam)
    if v is None:
        out[lam] = c
    else:
        v = v + c
        if v:
            out[lam] = v
        else:
            del out[lam]


def _linear(image: Callable[[Partition], dict]) -> Callable[[SymFun], SymFun]:
    def apply(f: SymFun) -> SymFun:
        out: dict = {}
        for mu, c in f.to_p().terms.items():
            for nu, v in image(mu).items():
                _accumulate(out, nu, v * c)
        return SymFun._trusted("p", out)

    return apply


# ---------------------------------------------------------------------------
# m_left m_right^* on a single power sum

_image_cache: dict = {}


def _mm_star(left: Partition, right: Partition, mu: Partition) -> dict:
    """m_left * m_right^*(p_mu) in the power-sum basis."""
    n = sum(right)
    if n > sum(mu):
        return {}
    lowered: dict = {}
    for nu, r in m_in_p_table(n)[right].items():
        c, rest = pstar_on_p(nu, mu)
        if rest is not None:
            _accumulate(lowered, rest, c * r)
    out: dict = {}
    if not lowered:
        return out
    left_p = m_in_p_table(sum(left))[left]
    for rest, c in lowered.items():
        for kappa, r in left_p.items():
            _accumulate(out, pmerge(kappa, rest), c * r)
    return out


def _cached_image(kind: str, k: int, mu: Partition, build: Callable[[], dict]) -> dict:
    key = (alpha_key(), kind, k, mu)
    hit = _image_cache.get(key)
    if hit is None:
        hit = _image_cache.setdefault(key, build())
    return hit


def _sum_images(terms: Iterable[tuple[int, Partition, Partition]], mu: Partition) -> dict:
    out: dict = {}
    for coef, left, right in terms:
        for nu, v in _mm_star(left, right, mu).items():
            _accumulate(out, nu, v * coef)
    return out


@lru_cache(maxsize=None)
def _length_k_upto(k: int, n: int) -> tuple:
    return tuple(lam for lam in partitions_upto(n, k))


def _A_image(k: int, mu: Partition) -> dict:
    sign = -1 if k % 2 else 1

    def build():
        return _sum_images(((sign * c_int(lam), lam, lam) for lam in _length_k_upto(k, sum(mu))), mu)

    return _cached_image("A", k, mu, build)


def _B_image(k: int, mu: Partition) -> dict:
    sign = -1 if (k - 1) % 2 else 1

    def build():
        terms = []
        for nu in _length_k_upto(k - 1, sum(mu)):
            nu1 = append_one(nu)
            terms.append((sign * c_int(nu1), nu1, nu))
        return _sum_images(terms, mu)

    return _cached_image("B", k, mu, build)


def _C_image(k: int, mu: Partition) -> dict:
    sign = -1 if (k - 1) % 2 else 1

    def build():
        terms = []
        for nu in _length_k_upto(k - 1, max(sum(mu) - 1, 0)):
            nu1 = append_one(nu)
            terms.append((sign * c_int(nu1), nu, nu1))
        return _sum_images(terms, mu)

    return _cached_image("C", k, mu, build)


def _check_k(k: int, lo: int = 1) -> None:
    if int(k) != k or k < lo:
        raise ValueError(f"operator index must be an integer >= {lo}, got {k!r}")


def apply_A(k: int, f: SymFun) -> SymFun:
    """A^(k) f; degree preserving, zero on P_lam with l(lam) < k."""
    _check_k(k)
    return _linear(lambda mu: _A_image(k, mu))(f)


def apply_B(k: int, f: SymFun) -> SymFun:
    """B^(k) f = (-1)^(k-1) sum_{l(nu)=k-1} c_{nu+1} m_{nu+1} m_nu^* f; raises degree by one."""
    _check_k(k)
    return _linear(lambda mu: _B_image(k, mu))(f)


def apply_C(k: int, f: SymFun) -> SymFun:
    """C^(k) f = (-1)^(k-1) sum_{l(nu)=k-1} c_{nu+1} m_nu m_{nu+1}^* f; lowers degree by one."""
    _check_k(k)
    return _linear(lambda mu: _C_image(k, mu))(f)


# ---------------------------------------------------------------------------
# Hamiltonians and the Heisenberg algebra, directly in the p_n


def _h1_image(mu: Partition) -> dict:
    return {mu: alpha() * sum(mu)} if mu else {}


def apply_H1(f: SymFun) -> SymFun:
    """sum_n alpha n p_n d/dp_n."""
    return _linear(_h1_image)(f)


def _h2_image(mu: Partition) -> dict:
    def build():
        a = alpha()
        out: dict = {}
        # splitting: alpha (m+n) p_m p_n d/dp_{m+n}
        for s in set(mu):
            k, rest = deriv_p(s, mu)
            for mm in range(1, s):
                _accumulate(out, pmerge(rest, (mm, s - mm)), a * (s * k))
        # joining: alpha^2 m n p_{m+n} d^2/dp_m dp_n
        for mm in set(mu):
            k1, r1 = deriv_p(mm, mu)
            for nn in set(r1):
                k2, r2 = deriv_p(nn, r1)
                _accumulate(out, pmerge(r2, (mm + nn,)), a * a * (mm * nn * k1 * k2))
        # diagonal: (alpha - 1) alpha n^2 p_n d/dp_n
        diag = sum(n * n for n in mu)
        if diag:
            _accumulate(out, mu, (a - 1) * a * diag)
        return out

    return _cached_image("H2", 0, mu, build)


def apply_H2(f: SymFun) -> SymFun:
    return _linear(_h2_image)(f)


def heisenberg_a(n: int, f: SymFun) -> SymFun:
    """a_n: multiplication by p_{-n} for n < 0, alpha n d/dp_n for n > 0."""
    if n == 0 or int(n) != n:
        raise ValueError("a_n is defined for nonzero integers n")
    if n < 0:
        return _linear(lambda mu: {pmerge(mu, (-n,)): _ONE})(f)
    a = alpha()

    def image(mu):
        k, rest = deriv_p(n, mu)
        return {rest: a * (n * k)} if k else {}

    return _linear(image)(f)


def mul_p1(f: SymFun) -> SymFun:
    return heisenberg_a(-1, f)


def d_dp1(f: SymFun) -> SymFun:
    def image(mu):
        k, rest = deriv_p(1, mu)
        return {rest: AlphaRat(k)} if k else {}

    return _linear(image)(f)


# ---------------------------------------------------------------------------
# eigenvalues and matrix elements


def eigenvalue_A_series(lam) -> UPolyRat:
    """prod_{i <= l(lam)} (u + i - 1 - alpha lam_i) / (u + i - 1)."""
    lam = Partition(lam)
    a = alpha()
    num = UPoly([1])
    den = UPoly([1])
    for i, li in enumerate(lam, start=1):
        num = num * linear(-a * li + (i - 1))
        den = den * linear(i - 1)
    return UPolyRat(num, den)


def eigenvalue_A_k(lam, k: int) -> AlphaRat:
    """Eigenvalue of A^(k) on P_lam, from the Pochhammer expansion of the series."""
    _check_k(k)
    lam = Partition(lam)
    return expand_pochhammer(eigenvalue_A_series(lam), len(lam))[k]


def skip_product(lam, i: int) -> UPolyRat:
    """1/(u+i-1) * prod_{j != i, j <= l(lam)} (u+j-1-alpha lam_j)/(u+j-1)."""
    lam = Partition(lam)
    a = alpha()
    num = UPoly([1])
    den = linear(i - 1)
    for j in range(1, len(lam) + 1):
        if j != i:
            num = num * linear(-a * lam.part(j) + (j - 1))
            den = den * linear(j - 1)
    return UPolyRat(num, den)


def skip_product_at_step(lam, i: int) -> AlphaRat:
    """The product skip_product(lam, i) evaluated at u = alpha lam_i - i + 1, written out."""
    lam = Partition(lam)
    a = alpha()
    li = lam.part(i)
    out = _ONE
    for j in range(1, len(lam) + 1):
        out = out / (a * li - i + j)
        if j != i:
            out = out * (a * li - a * lam.part(j) - i + j)
    return out


def _up_row(lam: Partition, mu: Partition) -> int:
    for i in addable_rows(mu):
        if add_box(mu, i) == lam:
            return i
    raise ValueError(f"{lam} is not obtained from {mu} by adding one box")


def matrix_element_B(lam, mu) -> UPolyRat:
    """B_{lam mu}(u): coefficient of P_lam in B(u) P_mu."""
    lam, mu = Partition(lam), Partition(mu)
    i = _up_row(lam, mu)
    return skip_product(lam, i) * pieri_up_coeff(mu, i)


def matrix_element_C(mu, lam) -> UPolyRat:
    """C_{mu lam}(u): coefficient of P_mu in C(u) P_lam."""
    lam, mu = Partition(lam), Partition(mu)
    i = _up_row(lam, mu)
    return skip_product(lam, i) * (alpha() * pieri_down_coeff(lam, i))


def step_point(lam, i: int) -> AlphaRat:
    lam = Partition(lam)
    return alpha() * lam.part(i) - i + 1


def step_up(lam, i: int) -> tuple[Partition, AlphaRat]:
    """(mu, B_{lam mu}(alpha lam_i - i + 1)) where mu removes the box in row i of lam."""
    lam = Partition(lam)
    mu = remove_box(lam, i)
    return mu, matrix_element_B(lam, mu)(step_point(lam, i))


def step_down(lam, i: int) -> tuple[Partition, AlphaRat]:
    """(mu, C_{mu lam}(alpha lam_i - i + 1)) where mu removes the box in row i of lam."""
    lam = Partition(lam)
    mu = remove_box(lam, i)
    return mu, matrix_element_C(mu, lam)(step_point(lam, i))


def series_action(kind: str, lam) -> dict:
    """Jack-basis components of A(u), B(u) or C(u) applied to P_lam.

    Each coefficient operator X^(k) is applied to P_lam through its closed
    form, the image is expanded in Jack functions, and the coefficients are
    summed against 1/(u)_k.  Returns {nu: UPolyRat}.  The number of terms is
    bounded by l(lam) + 1, and the next coefficient is checked to vanish.
    """
    lam = Partition(lam)
    apply = {"A": apply_A, "B": apply_B, "C": apply_C}[kind]
    kmax = len(lam) + 1
    f = jack_P(lam).p_body
    per_k: list = []
    for k in range(1, kmax + 2):
        per_k.append(to_jack_basis(apply(k, f)) if not f.is_zero() else {})
    if per_k[-1]:
        raise ArithmeticError(f"{kind}^({kmax + 1}) P_{lam} unexpectedly nonzero")
    labels = set()
    for d in per_k:
        labels.update(d)
    if kind == "A":
        labels.add(lam)
    out = {}
    for nu in labels:
        e0 = _ONE if (kind == "A" and nu == lam) else _ZERO
        coeffs = (e0,) + tuple(d.get(nu, _ZERO) for d in per_k[:-1])
        r = PochhammerExpansion(coeffs).to_rational()
        if not r.num.is_zero():
            out[nu] = r
    return out


# ---------------------------------------------------------------------------
# graded matrices


def graded_matrix(op: Callable[[SymFun], SymFun], n: int, target: int = None) -> tuple[list, list]:
    """Matrix of ``op`` from the weight-n power sums to weight ``target`` ones.

    Columns are indexed by the source basis; entry [r][c] is the coefficient
    of p_{rows[r]} in op(p_{cols[c]}).
    """
    target = n if target is None else target
    cols = enumerate_partitions(n)
    rows = enumerate_partitions(target) if target >= 0 else []
    index = {lam: r for r, lam in enumerate(rows)}
    mat = [[_ZERO] * len(cols) for _ in rows]
    for c, mu in enumerate(cols):
        image = op(SymFun._trusted("p", {mu: _ONE}))
        for nu, v in image.terms.items():
            if nu not in index:
                raise ValueError(f"operator image leaves weight {target}: {nu}")
            mat[index[nu]][c] = v
    return rows, mat


def matmul(a: list, b: list) -> list:
    if not a or not b:
        return [[_ZERO] * (len(b[0]) if b else 0) for _ in a]
    inner = len(b)
    cols = len(b[0])
    out = []
    for row in a:
        nz = [(t, v) for t, v in enumerate(row) if v]
        acc_row = []
        for c in range(cols):
            acc = _ZERO
            for t, v in nz:
                w = b[t][c]
                if w:
                    acc = acc + v * w
            acc_row.append(acc)
        out.append(acc_row)
    return out


def mat_sub(a: list, b: list) -> list:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def is_zero_matrix(a: list) -> bool:
    return all(not v for row in a for v in row)


def operator_by_name(name: str) -> Callable[[SymFun], SymFun]:
    """``A3``, ``B1``, ``C2``, ``H1``, ``H2``, ``a+2``, ``a-1``."""
    name = name.strip()
    if name in ("H1", "H2"):
        return apply_H1 if name == "H1" else apply_H2
    if name[:1] in "ABC" and name[1:].isdigit() and int(name[1:]) >= 1:
        k = int(name[1:])
        fn = {"A": apply_A, "B": apply_B, "C": apply_C}[name[0]]
        return lambda f: fn(k, f)
    if name[:1] == "a" and len(name) > 2 and name[1] in "+-" and name[2:].isdigit() and int(name[2:]):
        n = int(name[1:])
        return lambda f: heisenberg_a(n, f)
    raise ValueError(f"unknown operator {name!r}")
