import json
from fractions import Fraction

import pytest

from superint.algebra import const, frac_equal, var
from superint.partitions import Partition, partitions_up_to
from superint.silab import (ALPHA_N3_EXAMPLES, NoConsistentVariant, alpha_example_check,
                            alpha_generic_point, alpha_wilson, beta_hermite_expectation, beta_hermite_normalizations,
                            beta_hermite_orthogonality, ctilde, ctilde_observation_check, ctilde_printed_check,
                            hermite_expansion_check, jacobi_norm_check, monic, noninteracting_formula,
                            resolve_conventions, rows_disconnected, single_row_formula, two_row_formula, verify_si,
                            verify_strong_si)


def test_gaussian_si_small():
    for N in (1, 2, 3):
        for R in partitions_up_to(4, N):
            assert verify_si("gaussian-hermite", R, N).passed


def test_gaussian_odd_size_vanishes():
    assert verify_si("gaussian-hermite", Partition([2, 1]), 2).lhs.is_zero()


def test_strong_si_small():
    for R in partitions_up_to(3, 2):
        for Q in partitions_up_to(3, 2):
            assert verify_strong_si(R, Q, 2).passed


def test_selberg_symbolic():
    for R in partitions_up_to(3, 2):
        assert verify_si("selberg-jacobi", R, 2).passed


def test_selberg_specialized_params():
    params = {"u": const(Fraction(1, 3)), "v": const(2)}
    assert verify_si("selberg-jacobi", Partition([2, 1]), 2, params=params).passed


def test_shape_longer_than_N_rejected():
    with pytest.raises(ValueError):
        verify_si("gaussian-hermite", Partition([1, 1, 1]), 2)


def test_hermite_expansion_signs():
    rep = resolve_conventions("gaussian-hermite")
    assert rep.notes["variant"] == {"forward_sign": "(-1)^((|R|-|Q|)/2)", "inverse_sign": "none"}
    assert all(r.passed for r in hermite_expansion_check(Partition([2, 2]), 2))


def test_mp_resolution():
    rep = resolve_conventions("meixner-pollaczek")
    assert rep.notes["variant"] == {"sign": "printed", "box": "u/(1-u)", "line": 1}
    assert frac_equal(rep.notes["paper_literal_R1_N1"], const(-1))
    orth = resolve_conventions("meixner-pollaczek", convention="orthogonal")
    assert orth.notes["variant"]["box"] == "1/(1-u)"
    assert frac_equal(orth.notes["paper_literal_R1_N1"], -1 / var("u"))


def test_mp_paper_literal_fails_at_first_box():
    rep = verify_si("meixner-pollaczek", Partition([1]), 1, "paper-literal")
    assert not rep.passed
    assert frac_equal(rep.discrepancy, const(-1))


def test_wilson_resolution():
    rep = resolve_conventions("wilson")
    assert rep.notes["variant"] == {"shift": "N-1"}
    assert not verify_si("wilson", Partition([1]), 1, "paper-literal").passed
    assert verify_si("wilson", Partition([2, 1]), 2).passed


def test_no_variant_error_carries_near_misses():
    err = NoConsistentVariant("x", {"a": 1})
    assert err.near_misses == {"a": 1}


def test_ctilde_depends_on_sum_only():
    c = ctilde(Partition([2, 1]), Partition([1]), 2)
    assert frac_equal(c, c.compose({"u": var("u") + var("v"), "v": const(0)}))


def test_ctilde_printed_values_off_by_constants():
    r1 = ctilde_printed_check((3, 2), (1,), 2)
    assert not r1.passed and frac_equal(r1.discrepancy, const(Fraction(1, 24)))
    r2 = ctilde_printed_check((6, 3), (2,), 2)
    assert not r2.passed
    assert frac_equal(r2.lhs / r2.rhs, (var("u") + var("v") + 4) / 2520)


def test_ctilde_skew_observation():
    rep = ctilde_observation_check((6, 3), (2,), 2)
    assert rep.passed and rep.notes["shift"] == 5
    s = var("s")
    want = (s - 1) * s * (s + 1) * (s + 2) * (s + 3) * (17 * s ** 2 + 62 * s + 60) / 2520
    assert frac_equal(rep.notes["skew"], want)


def test_ctilde_negative_case():
    rep = ctilde_observation_check((4, 3, 2), (2, 1), 3)
    assert not rep.passed
    u, v = var("u"), var("v")
    num = rep.lhs.compose({"s": u + v + rep.notes["shift"]})
    assert frac_equal(num, 61 * u ** 2 + 122 * u * v + 990 * u + 61 * v ** 2 + 990 * v + 3944)


def test_jacobi_norm_ratio_depends_on_R():
    reps = jacobi_norm_check(1, 2)
    assert reps[0].passed
    assert not all(r.passed for r in reps)


def test_alpha_generic_point_is_seeded():
    assert alpha_generic_point(7) == alpha_generic_point(7)
    assert alpha_generic_point(7) != alpha_generic_point(8)


def test_alpha_independent_of_point():
    for seed in (1, 2, 3):
        rec = alpha_wilson((3, 1), (1,), 2, seed)
        assert frac_equal(rec.monic, alpha_wilson((3, 1), (1,), 2, 99).monic)


def test_alpha_record_json():
    rec = alpha_wilson((2,), (1,), 2)
    doc = json.loads(json.dumps(rec.to_json()))
    assert doc["monic"] == "(z+4)" or doc["monic"] == "z+4"
    assert doc["factored"] == [["z+4", 1]]


def test_alpha_too_many_rows():
    with pytest.raises(ValueError):
        alpha_wilson((1, 1, 1), (), 2)


def test_monic_split():
    z = var("z")
    k, m = monic(6 * (z + 1) * (z + 2))
    assert k == 6 and frac_equal(m, (z + 1) * (z + 2))


def test_single_row_observed_form():
    for N in (2, 3):
        for r in range(1, 5):
            for q in range(0, r + 1):
                rec = alpha_wilson((r,), (q,) if q else (), N)
                assert frac_equal(rec.monic, monic(single_row_formula(r, q, N, "observed"))[1])


def test_single_row_printed_form_misses():
    rec = alpha_wilson((3,), (2,), 2)
    assert not frac_equal(rec.monic, monic(single_row_formula(3, 2, 2, "printed"))[1])


def test_two_row_branches():
    assert two_row_formula((3, 2), (2, 2), 2, "printed") is None
    assert two_row_formula((3, 2), (2, 2), 2, "swapped") is not None


def test_disconnected_rows_formula():
    for R, Q in (((4, 1), (1,)), ((3, 3), (3, 1)), ((2, 2), (2,))):
        assert rows_disconnected(R, Q)
        rec = alpha_wilson(R, Q, 2)
        assert frac_equal(rec.monic, monic(noninteracting_formula(R, Q, 2, "N-i"))[1])


def test_n3_examples_listed():
    assert len(ALPHA_N3_EXAMPLES) == 7
    reps = alpha_example_check()
    assert all(r.passed for r in reps if r.rhs is not None)
    blank = [r for r in reps if r.rhs is None]
    z = var("z")
    assert frac_equal(blank[0].lhs, z * (z + 4) * (z + 8))


def test_alpha_transposition():
    rep = resolve_conventions("wilson-alpha")
    assert rep.notes["variant"] == {"transposed": False}


def test_beta_hermite():
    assert beta_hermite_expectation((2,), normalized=True).passed
    assert not beta_hermite_expectation((2,)).passed
    assert beta_hermite_orthogonality((2,), (1, 1)).passed
    with pytest.raises(ValueError):
        beta_hermite_expectation((1,), N=3)


def test_beta_hermite_golden(golden):
    ref = golden("beta_hermite_normalization.json")
    from superint.display import format_scalar
    got = {k: (None if v is None else format_scalar(v)) for k, v in beta_hermite_normalizations(4).items()}
    assert got == ref["kappa"]


def test_jacobi_norm_observed_form():
    from superint.silab import jacobi_norm_observed_check
    for N in (1, 2):
        assert all(r.passed for r in jacobi_norm_observed_check(N, 3))
