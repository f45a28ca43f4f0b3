"""Operators on symmetric functions: worked values, eigenvalues, matrix elements, step
operators, Hamiltonians and the Heisenberg algebra."""

import itertools

import pytest
from hypothesis import given, strategies as st

from jackinf.alpha import ALPHA, AlphaRat
from jackinf.jack import jack_P
from jackinf.operators import (
    apply_A,
    apply_B,
    apply_C,
    apply_H1,
    apply_H2,
    d_dp1,
    eigenvalue_A_k,
    eigenvalue_A_series,
    graded_matrix,
    heisenberg_a,
    is_zero_matrix,
    skip_product,
    skip_product_at_step,
    matrix_element_B,
    matrix_element_C,
    mat_sub,
    matmul,
    mul_p1,
    operator_by_name,
    series_action,
    step_down,
    step_point,
    step_up,
)
from jackinf.partitions import Partition, add_box, addable_rows, enumerate_partitions, partitions_upto, removable_rows
from jackinf.spectral import UPoly, UPolyRat
from jackinf.symfun import SymFun, inner_product, m, one, p

from conftest import partitions

a = ALPHA
u = UPoly.u()


def const(c) -> SymFun:
    return SymFun("p", {(): c})


@st.composite
def symfuns(draw, max_weight: int = 5) -> SymFun:
    lams = draw(st.lists(partitions(max_weight), min_size=1, max_size=3))
    coeffs = draw(st.lists(st.integers(-3, 3), min_size=len(lams), max_size=len(lams)))
    return SymFun("p", dict(zip(lams, coeffs)))


class TestWorkedValues:
    def test_A(self):
        assert apply_A(1, p(1)) == p(1).scale(-a)
        assert apply_A(2, p(1)).is_zero()
        assert apply_A(2, p(1, 1)) == (p(1, 1) - p(2)).scale(a * a)

    def test_B(self):
        assert apply_B(1, p(2)) == p(2, 1)
        assert apply_B(2, p(1)) == m(1, 1).scale(-2 * a)
        assert apply_B(2, one()).is_zero()

    def test_C(self):
        assert apply_C(1, p(1)) == const(a)
        assert apply_C(2, m(1, 1)) == p(1).scale(-a * (a + 1))
        assert apply_C(2, p(1)).is_zero()

    def test_hamiltonians(self):
        assert apply_H1(p(1)) == p(1).scale(a)
        assert apply_H1(p(2, 1)) == p(2, 1).scale(3 * a)
        assert apply_H1(one()).is_zero()
        assert apply_H2(p(1)) == p(1).scale(a * (a - 1))
        assert apply_H2(p(2)) == p(1, 1).scale(2 * a) + p(2).scale(4 * a * (a - 1))
        assert apply_H2(one()).is_zero()

    def test_heisenberg(self):
        assert heisenberg_a(-2, one()) == p(2)
        assert heisenberg_a(1, p(1)) == const(a)
        f = p(2)
        assert heisenberg_a(1, heisenberg_a(-1, f)) - heisenberg_a(-1, heisenberg_a(1, f)) == f.scale(a)
        with pytest.raises(ValueError):
            heisenberg_a(0, f)

    def test_eigenvalue_series(self):
        assert eigenvalue_A_series(()) == UPolyRat(UPoly([1]))
        assert eigenvalue_A_series((1,)) == UPolyRat(u - a, u)
        assert eigenvalue_A_series((1, 1)) == UPolyRat((u - a) * (u + 1 - a), u * (u + 1))

    def test_eigenvalue_coefficients(self):
        assert eigenvalue_A_k((1,), 1) == -a
        assert eigenvalue_A_k((1,), 2) == 0
        assert eigenvalue_A_k((1, 1), 2) == a * (a + 1)

    def test_matrix_elements_B(self):
        assert matrix_element_B((1,), ()) == UPolyRat(UPoly([1]), u)
        assert matrix_element_B((2,), (1,)) == UPolyRat(UPoly([1]), u)
        want = UPolyRat((u - a) * (2 * a / (a + 1)), u * (u + 1))
        assert matrix_element_B((1, 1), (1,)) == want

    def test_matrix_elements_C(self):
        assert matrix_element_C((), (1,)) == UPolyRat(UPoly([a]), u)
        assert matrix_element_C((1,), (1, 1)) == UPolyRat((u - a) * a, u * (u + 1))
        assert matrix_element_C((1,), (2,)) == UPolyRat(UPoly([2 * a / (a + 1)]), u)

    def test_matrix_elements_reject_unrelated(self):
        with pytest.raises(ValueError):
            matrix_element_B((2, 1), (1,))
        with pytest.raises(ValueError):
            matrix_element_C((1,), (3,))

    def test_step_up(self):
        assert step_up((1,), 1) == (Partition(), 1 / a)
        assert step_up((2,), 1) == (Partition((1,)), 1 / (2 * a))
        assert step_up((1, 1), 2) == (Partition((1,)), -2 / (a * a - 1))

    def test_step_down(self):
        assert step_down((1,), 1) == (Partition(), AlphaRat(1))
        assert step_down((1, 1), 2) == (Partition((1,)), -1 / (a - 1))
        assert step_down((2,), 1) == (Partition((1,)), 1 / (a + 1))

    def test_operator_names(self):
        assert operator_by_name("A1")(p(1)) == p(1).scale(-a)
        assert operator_by_name("a-2")(one()) == p(2)
        assert operator_by_name("a+1")(p(1)) == const(a)
        for bad in ["A0", "Q1", "a0", "a+", "H3"]:
            with pytest.raises(ValueError):
                operator_by_name(bad)


class TestStructure:
    def test_eigen_equation(self):
        for lam in partitions_upto(6):
            P = jack_P(lam).p_body
            for k in range(1, 5):
                assert apply_A(k, P) == P.scale(eigenvalue_A_k(lam, k))
                if k > len(lam):
                    assert apply_A(k, P).is_zero()

    def test_step_coefficients_match_skip_products(self):
        for lam in partitions_upto(5):
            for i in removable_rows(lam):
                point = step_point(lam, i)
                assert skip_product(lam, i)(point) == skip_product_at_step(lam, i)

    def test_degree_behaviour(self):
        for lam in partitions_upto(5):
            f = p(*lam)
            for k in range(1, 4):
                assert all(sum(nu) == sum(lam) for nu in apply_A(k, f).terms)
                assert all(sum(nu) == sum(lam) + 1 for nu in apply_B(k, f).terms)
                assert all(sum(nu) == sum(lam) - 1 for nu in apply_C(k, f).terms)

    def test_commutator_definitions(self):
        for lam in partitions_upto(4):
            f = p(*lam)
            for k in range(1, 4):
                assert mul_p1(apply_A(k, f)) - apply_A(k, mul_p1(f)) == apply_B(k, f).scale(a)
                assert apply_A(k, d_dp1(f)) - d_dp1(apply_A(k, f)) == apply_C(k, f)

    def test_series_matrix_elements(self):
        for mu in partitions_upto(4):
            want = {add_box(mu, i): matrix_element_B(add_box(mu, i), mu) for i in addable_rows(mu)}
            assert series_action("B", mu) == want
            assert series_action("A", mu) == {mu: eigenvalue_A_series(mu)}

    def test_hs_identities(self):
        for lam in partitions_upto(6):
            f = p(*lam)
            a1 = apply_A(1, f)
            assert -a1 == apply_H1(f)
            assert apply_A(1, a1 + f) - apply_A(2, f).scale(2) == apply_H2(f)

    def test_commuting_matrices(self):
        for n in range(1, 6):
            mats = [graded_matrix(lambda f, k=k: apply_A(k, f), n)[1] for k in range(1, 4)]
            for x, y in itertools.combinations(mats, 2):
                assert is_zero_matrix(mat_sub(matmul(x, y), matmul(y, x)))

    @given(symfuns(), symfuns(), st.integers(1, 3))
    def test_self_adjoint(self, f, g, k):
        assert inner_product(apply_A(k, f), g) == inner_product(f, apply_A(k, g))

    @given(symfuns(4), symfuns(5), st.integers(1, 3))
    def test_B_C_adjoint_pair(self, f, g, k):
        assert inner_product(apply_B(k, f), g) == inner_product(f, apply_C(k, g))

    def test_heisenberg_relations(self):
        idx = [v for v in range(-3, 4) if v]
        for mm, nn in itertools.product(idx, repeat=2):
            for lam in partitions_upto(4):
                f = p(*lam)
                comm = heisenberg_a(mm, heisenberg_a(nn, f)) - heisenberg_a(nn, heisenberg_a(mm, f))
                assert comm == (f.scale(a * mm) if mm + nn == 0 else SymFun("p"))
