import pytest

from superint.algebra import const, frac_equal, var
from superint.detquotient import (ShapeTooLong, andreief_expectation, andreief_norm, bialternant, inverse_expansion,
                                  lambdas, multivariate, orthogonality_check, vandermonde)
from superint.models import hermite, jacobi, monomial_family, mp, wilson
from superint.partitions import Partition, partitions_up_to, subpartitions
from superint.symfun import eval_special, schur, xvalues


def test_lambdas():
    assert lambdas(Partition([2, 1]), 3) == [4, 2, 0]
    with pytest.raises(ShapeTooLong):
        lambdas(Partition([1, 1, 1]), 2)


def test_single_hermite():
    t = var("t")
    assert frac_equal(hermite().single(2, t), t ** 2 - 1)
    assert frac_equal(hermite().single(3, t), t ** 3 - 3 * t)


def test_monomial_bialternant_is_schur():
    xs = [var("x1"), var("x2"), var("x3")]
    F = monomial_family(hermite())
    for R in partitions_up_to(4, 3):
        assert frac_equal(bialternant(F, R, xs), eval_special(schur(R, 3), xvalues(xs)))


def test_vandermonde_sign():
    a, b = var("a"), var("b")
    assert frac_equal(vandermonde([a, b]), a - b)


@pytest.mark.parametrize("N", [1, 2, 3])
def test_forward_then_inverse_is_identity(N):
    F = jacobi()
    for R in partitions_up_to(3, N):
        fwd = multivariate(F, R, N)
        # Theta -> P -> Theta composes to the identity matrix
        for Q in subpartitions(R, N):
            acc = const(0)
            for S in subpartitions(R, N):
                if S.contains(Q) and R.contains(S):
                    acc = acc + fwd[S] * inverse_expansion(F, S, N)[Q]
            assert frac_equal(acc, const(1 if Q == R else 0)), (R, Q)


def test_hermite_expansion_values():
    exp = multivariate(hermite(), Partition([2]), 2)
    assert frac_equal(exp[Partition([2])], const(1))
    assert frac_equal(exp[Partition()], const(-3))


@pytest.mark.parametrize("family", [hermite, jacobi])
def test_orthogonality_symbolic(family):
    F = family()
    for N in (1, 2):
        shapes = partitions_up_to(3, N)
        for i, R in enumerate(shapes):
            for Q in shapes[i + 1:]:
                assert orthogonality_check(F, R, Q, N).passed


def test_orthogonality_mp_and_wilson():
    for F in (mp(), wilson()):
        shapes = partitions_up_to(2, 2)
        for i, R in enumerate(shapes):
            for Q in shapes[i + 1:]:
                assert andreief_norm(F, R, Q, 2).is_zero(), (F, R, Q)


@pytest.mark.parametrize("family", [hermite, jacobi, wilson])
def test_moment_consistency(family):
    # <Theta_R> = Cinv[R, empty] * P_empty, and P_empty is the product of diagonal coefficients
    F = family()
    for N in (1, 2):
        p_empty = multivariate(F, Partition(), N)[Partition()]
        for R in partitions_up_to(3, N):
            lhs = andreief_expectation(monomial_family(F), R, N)
            assert frac_equal(lhs, inverse_expansion(F, R, N)[Partition()] * p_empty)


def test_norm_nonzero():
    assert not andreief_norm(hermite(), Partition([1]), Partition([1]), 2).is_zero()
