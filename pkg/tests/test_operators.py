from fractions import Fraction

import pytest

from superint.algebra import const, frac_equal, var
from superint.operators import (F1, W0, W2, NonNilpotentGrading, NonPolynomialResult, apply_ps, apply_x,
                                crosscheck_ps_vs_x, differentiation_check, eigencheck, euler_x, exp_ps, grad_sum_x,
                                hermite_ode_check, jacobi_operator_fit, l0, mp_multivariate_difference_check,
                                mp_single_difference_check, pieri_check, rodrigues_check, staircase_check,
                                w2_x_calogero, w2_x_printed, w_representation_check, wilson_difference_check, xvars)
from superint.partitions import Partition, partitions_up_to
from superint.symfun import schur, to_schur


def test_l0_counts_degree():
    for R in partitions_up_to(4):
        img = apply_ps(l0(), schur(R))
        assert to_schur(img) == ({R: const(R.size)} if R.size else {})


def test_w2_lowers_degree_by_two():
    # W2 S_[2] = N(N+1), the content product of [2]
    img = apply_ps(W2(), schur([2], 2))
    assert img.degree() == 0
    assert frac_equal(img.coeff(Partition()), const(6))


def test_exp_needs_nilpotent_grading():
    with pytest.raises(NonNilpotentGrading):
        exp_ps(l0(), const(1), schur([1]))
    f = exp_ps(W2(), const(Fraction(-1, 2)), schur([2], 1))
    # H_2(x) = x^2 - 1 at N = 1
    assert frac_equal(f.coeff(Partition()), const(-1))


def test_non_polynomial_image_detected():
    x1 = var("x1")
    with pytest.raises(NonPolynomialResult):
        apply_x(w2_x_calogero(), x1, 2)


def test_xvars_bounds():
    assert xvars(2) == ["x1", "x2"]
    with pytest.raises(ValueError):
        xvars(7)


@pytest.mark.parametrize("N", [1, 2, 3])
def test_crosschecks(N):
    assert crosscheck_ps_vs_x(W2(), w2_x_calogero(), N, 5).passed
    assert crosscheck_ps_vs_x(l0(), euler_x(), N, 5).passed
    assert crosscheck_ps_vs_x(F1(), grad_sum_x(), N, 5).passed


def test_printed_x_form_has_wrong_coupling():
    assert not crosscheck_ps_vs_x(W2(), w2_x_printed(), 2, 4).passed
    # at N=1 there is no pair term, so both forms agree
    assert crosscheck_ps_vs_x(W2(), w2_x_printed(), 1, 4).passed


def test_calogero_eigencheck():
    for N in (1, 2, 3):
        for R in partitions_up_to(3, N):
            rep = eigencheck("gaussian-hermite", R, N)
            assert rep.passed and rep.notes["eigenfunction"]


def test_w_representation():
    for N in (1, 2, 3):
        for R in partitions_up_to(4, N):
            assert w_representation_check(R, N).passed


def test_jacobi_fit_first_reading():
    u, v = var("u"), var("v")
    fit = jacobi_operator_fit(2, "first")
    assert fit is not None
    assert frac_equal(fit["l0"], u + v)
    assert frac_equal(fit["F2"], const(-1))
    assert frac_equal(fit["F1"], -u)
    assert jacobi_operator_fit(2, "printed") is None


def test_jacobi_printed_weights_not_diagonal():
    rep = eigencheck("selberg-jacobi", Partition([1]), 2, "first")
    assert not (rep.passed and rep.notes["eigenfunction"])


def test_jacobi_fitted_eigenvalue_matches_printed():
    fit = jacobi_operator_fit(2, "first")
    for R in partitions_up_to(3, 2):
        rep = eigencheck("selberg-jacobi", R, 2, "first", coeffs=fit)
        assert rep.passed and rep.notes["eigenfunction"], R


def test_w0_reading_validated():
    with pytest.raises(ValueError):
        W0("second")


def test_pieri_and_differentiation():
    for N in (1, 2):
        for R in partitions_up_to(3, N):
            assert pieri_check(R, N).passed
            assert differentiation_check(R, N).passed


@pytest.mark.parametrize("n", range(0, 7))
def test_single_variable_hermite(n):
    assert rodrigues_check(n).passed
    assert hermite_ode_check(n).passed


def test_printed_ode_fails_beyond_constant():
    assert hermite_ode_check(0, printed=True).passed
    assert not hermite_ode_check(2, printed=True).passed


def test_staircase_signs():
    for N in (2, 3):
        assert staircase_check(N).passed
        assert staircase_check(N, plus_one=True).passed
    # the printed sign (-1)^{(N-2)(N+1)/2} is -1 at N=4, but the bialternant has leading coefficient +1
    rep = staircase_check(4)
    assert not rep.passed
    assert frac_equal(rep.discrepancy, const(-1))


@pytest.mark.parametrize("n", range(0, 5))
def test_difference_equations(n):
    assert mp_single_difference_check(n).passed
    assert wilson_difference_check(n).passed


def test_mp_multivariate_difference():
    for R in partitions_up_to(2, 2):
        assert mp_multivariate_difference_check(R, 2, leading_N=False).passed
    rep = mp_multivariate_difference_check(Partition([1]), 2, leading_N=True)
    assert not rep.passed
    assert frac_equal(rep.discrepancy, const(2))
