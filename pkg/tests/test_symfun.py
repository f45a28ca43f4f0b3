"""The algebra of symmetric functions: basis changes, products, the Jack
inner product, adjoints and the reproducing kernel."""

from fractions import Fraction

from hypothesis import given, strategies as st

from jackinf.alpha import ALPHA, AlphaRat
from jackinf.finite import MultiPoly, restrict
from jackinf.partitions import Partition, enumerate_partitions, partitions_upto
from jackinf.symfun import (
    SymFun,
    adjoint_apply,
    inner_product,
    kernel_closed_form,
    kernel_lemma_check,
    kernel_truncated,
    m,
    m_to_p,
    mul,
    one,
    p,
    p_to_m,
)

from conftest import partitions

a = ALPHA


def power_sum_poly(lam, n: int) -> MultiPoly:
    """p_lam(x_1..x_n) built directly from x_i^k."""
    out = MultiPoly.const(n, 1)
    for k in lam:
        out = out * sum((MultiPoly.var(n, i, k) for i in range(n)), MultiPoly(n))
    return out


@st.composite
def symfuns(draw, max_weight: int = 6, basis: str = "p") -> SymFun:
    lams = draw(st.lists(partitions(max_weight), min_size=0, max_size=3))
    coeffs = draw(st.lists(st.integers(-3, 3), min_size=len(lams), max_size=len(lams)))
    shift = draw(st.integers(0, 2))
    return SymFun(basis, {lam: AlphaRat(c) * (a + shift) for lam, c in zip(lams, coeffs)})


class TestWorkedValues:
    def test_p_to_m(self):
        assert p_to_m(p(2)) == m(2)
        assert p_to_m(p(1, 1)).terms == m(2).terms | {Partition((1, 1)): AlphaRat(2)}
        assert p_to_m(one()).terms == {Partition(): 1}

    def test_m_to_p(self):
        assert m_to_p(m(2)).terms == p(2).terms
        assert m_to_p(m(1, 1)) == (p(1, 1) - p(2)).scale(Fraction(1, 2))
        assert m_to_p(m()).terms == {Partition(): 1}

    def test_products(self):
        assert mul(p(2), p(1)) == p(2, 1)
        assert p_to_m(mul(m(1), m(1))) == m(2) + m(1, 1).scale(2)
        f = p(3, 1) + p(2).scale(a)
        assert mul(f, one()) == f

    def test_inner_products(self):
        assert inner_product(p(1), p(1)) == a
        assert inner_product(p(2), p(1, 1)) == 0
        assert inner_product(p(1, 1), p(1, 1)) == 2 * a * a
        assert inner_product(m(1, 1), m(1, 1)) == a * (a + 1) / 2

    def test_adjoints(self):
        assert adjoint_apply(p(1), p(1)) == SymFun("p", {(): a})
        assert adjoint_apply(p(2), p(2, 1)) == p(1).scale(2 * a)
        assert adjoint_apply(p(3), p(1, 1)).is_zero()

    def test_kernel(self):
        assert kernel_truncated(0) == {(Partition(), Partition()): 1}
        k1 = kernel_truncated(1)
        assert k1[(Partition((1,)), Partition((1,)))] == 1 / a
        k2 = kernel_truncated(2)
        assert k2[(Partition((2,)), Partition((2,)))] == 1 / (2 * a)
        assert k2[(Partition((1, 1)), Partition((1, 1)))] == 1 / (2 * a * a)
        assert len(k2) == 4

    def test_kernel_lemma_examples(self):
        assert kernel_lemma_check(p(1), 3)
        assert kernel_lemma_check(one(), 0)
        assert kernel_lemma_check(p(2, 1), 5)

    def test_json_round_trip(self):
        f = m(2) + m(1, 1).scale(2 / (a + 1))
        data = f.to_json()
        assert data["basis"] == "m"
        assert [t["partition"] for t in data["terms"]] == [[2], [1, 1]]
        assert SymFun.from_json(data) == f
        assert f.to_json(text=True)["terms"][1]["coeff"] == "2/(α+1)"


class TestInvariants:
    def test_p_to_m_against_polynomials(self):
        for lam in partitions_upto(6):
            n = max(sum(lam), 1)
            assert restrict(p(*lam), n) == power_sum_poly(lam, n)

    def test_transitions_are_inverse(self):
        for n in range(9):
            for lam in enumerate_partitions(n):
                assert m_to_p(p_to_m(p(*lam))).terms == p(*lam).terms
                assert p_to_m(m_to_p(m(*lam))).terms == m(*lam).terms

    def test_kernel_matches_closed_form(self):
        for d in range(7):
            assert kernel_truncated(d) == kernel_closed_form(d)

    def test_kernel_lemma_for_power_sums(self):
        for lam in partitions_upto(6):
            assert kernel_lemma_check(p(*lam), 6)

    def test_gram_matrix_is_diagonal(self):
        for n in range(6):
            ps = enumerate_partitions(n)
            for x in ps:
                for y in ps:
                    v = inner_product(p(*x), p(*y))
                    assert (v != 0) == (x == y)

    @given(symfuns(), symfuns(), symfuns(basis="m"))
    def test_adjointness(self, f, g, h):
        assert inner_product(mul(f, g), h) == inner_product(g, adjoint_apply(f, h))

    @given(symfuns(), symfuns(basis="m"))
    def test_symmetry(self, f, g):
        assert inner_product(f, g) == inner_product(g, f)

    @given(symfuns(4), symfuns(4, "m"), symfuns(4))
    def test_ring_laws(self, f, g, h):
        assert mul(f, g) == mul(g, f)
        assert mul(mul(f, g), h) == mul(f, mul(g, h))
        assert mul(f, g + h) == mul(f, g) + mul(f, h)

    @given(symfuns(5, "m"))
    def test_basis_change_preserves_element(self, f):
        assert f.to_p() == f
        assert f.to_p().to_m().terms == f.terms
