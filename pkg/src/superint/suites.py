"""Named verification suites and the JSON report archive they produce."""
from __future__ import annotations

from typing import Callable, Dict, List, Optional, Tuple

from .algebra import var
from .models import MP_DEFAULT_MOMENTS, PAPER_LITERAL, resolved_variant
from .operators import (F1, W2, W2_beta, crosscheck_ps_vs_x, differentiation_check, eigencheck, euler_x,
                        grad_sum_x, hermite_ode_check, jacobi_operator_fit, l0,
                        mp_multivariate_difference_check, mp_single_difference_check, pieri_check,
                        rodrigues_check, staircase_check, w2_x_calogero, w2_x_printed, w_representation_check,
                        wilson_difference_check)
from .partitions import partitions_up_to, subpartitions, xi
from .report import Report
from .silab import (_variants, alpha_conjecture_suite, alpha_example_check, beta_hermite_expectation,
                    beta_hermite_normalizations, beta_hermite_orthogonality, ctilde, ctilde_observation_check,
                    ctilde_printed_check, jacobi_norm_check, jacobi_norm_observed_check, verify_si, verify_strong_si)
from .symfun import delta, eval_special, schur

__all__ = ["SUITES", "DEFAULTS", "run_suite", "archive"]

DEFAULT_SEED = 20240601


def _si_cases(model: str, max_size: int, nv: int, variant: str, params=None, convention=MP_DEFAULT_MOMENTS) -> List[Report]:
    cfs = _variants(model) if variant == "sweep" else [resolved_variant(model, convention) if variant == "resolved" else PAPER_LITERAL[model]]
    out = []
    for cf in cfs:
        for N in range(1, nv + 1):
            for R in partitions_up_to(max_size, N):
                out.append(verify_si(model, R, N, cf, params, convention))
    return out


def _gaussian(max_size, nv, seed, variant, params):
    return _si_cases("gaussian-hermite", max_size, nv, variant)


def _selberg(max_size, nv, seed, variant, params):
    return _si_cases("selberg-jacobi", max_size, nv, variant, params)


def _mp(max_size, nv, seed, variant, params):
    params = dict(params or {})
    convention = str(params.pop("moments", MP_DEFAULT_MOMENTS))
    return _si_cases("meixner-pollaczek", max_size, nv, variant, params, convention)


def _wilson(max_size, nv, seed, variant, params):
    return _si_cases("wilson", max_size, nv, variant, params)


def _strong(max_size, nv, seed, variant, params):
    out = []
    for N in range(1, nv + 1):
        shapes = partitions_up_to(max_size, N)
        for R in shapes:
            for Q in shapes:
                out.append(verify_strong_si(R, Q, N))
    return out


def _jacobi_coeffs(max_size, nv, seed, variant, params):
    out = [ctilde_printed_check((3, 2), (1,), 2), ctilde_printed_check((6, 3), (2,), 2)]
    for R, Q, N in (((6, 3), (2,), 2), ((4, 3, 2), (2, 1), 3), ((3, 2), (1,), 2)):
        out.append(ctilde_observation_check(R, Q, N))
    # c~_{R,0} = S_R{delta_1} / xi_R(u+v+2N), and u+v-only dependence everywhere
    s = var("u") + var("v")
    for N in range(1, nv + 1):
        for R in partitions_up_to(max_size, N):
            rhs = eval_special(schur(R), delta(1)) / xi(R, s + 2 * N)
            out.append(Report("jacobi:ctilde-empty", "selberg-jacobi", R, N, ctilde(R, (), N), rhs))
            for Q in subpartitions(R, N):
                ctilde(R, Q, N)
    for N in range(1, nv + 1):
        out.extend(jacobi_norm_check(N, max_size))
        out.extend(jacobi_norm_observed_check(N, max_size))
    return out


def _alpha(max_size, nv, seed, variant, params):
    out = []
    for N in range(2, max(nv, 2) + 1):
        out.extend(alpha_conjecture_suite(max_size, N, seed))
    out.extend(alpha_example_check(seed))
    return out


def _operators(max_size, nv, seed, variant, params):
    out = []
    for N in range(1, nv + 1):
        degree = max_size + 2
        for ps, xs in ((W2(), w2_x_calogero()), (W2(), w2_x_printed()), (l0(), euler_x()), (F1(), grad_sum_x()),
                       (W2_beta(), w2_x_calogero("beta"))):
            out.append(crosscheck_ps_vs_x(ps, xs, N, degree))
        for R in partitions_up_to(max_size, N):
            out.append(eigencheck("gaussian-hermite", R, N))
            out.append(w_representation_check(R, N))
    for N in range(1, nv + 1):
        fits = {reading: jacobi_operator_fit(N, reading) for reading in ("first", "printed")}
        for R in partitions_up_to(min(max_size, 3), N):
            for reading in ("first", "printed"):
                rep = eigencheck("selberg-jacobi", R, N, reading)
                rep.identity = "eigen:jacobi:printed-weights"
                out.append(rep)
            if fits["first"] is not None:
                rep = eigencheck("selberg-jacobi", R, N, "first", coeffs=fits["first"])
                rep.identity = "eigen:jacobi:fitted-weights"
                rep.notes["weights"] = fits["first"]
                out.append(rep)
        out.append(Report("jacobi:reading", "selberg-jacobi", None, N, None, None,
                          equal=fits["first"] is not None and fits["printed"] is None,
                          notes={"fitted_first": fits["first"], "fitted_printed": fits["printed"]}))
    for n in range(0, 7):
        out.append(mp_single_difference_check(n))
    for n in range(0, 6):
        out.append(wilson_difference_check(n))
    for R in partitions_up_to(3, 2):
        for lead in (True, False):
            rep = mp_multivariate_difference_check(R, 2, lead)
            rep.identity += ":leading-N" if lead else ":no-leading-N"
            out.append(rep)
    return out


def _appendix_b(max_size, nv, seed, variant, params):
    out = []
    for N in range(1, nv + 1):
        for R in partitions_up_to(max_size, N):
            out.append(pieri_check(R, N))
            out.append(differentiation_check(R, N))
    for n in range(0, 7):
        out.append(rodrigues_check(n))
        out.append(hermite_ode_check(n))
        out.append(hermite_ode_check(n, printed=True))
    for N in range(2, max(nv, 2) + 2):
        out.append(staircase_check(N))
        out.append(staircase_check(N, plus_one=True))
    return out


def _beta_hermite(max_size, nv, seed, variant, params):
    out = []
    shapes = partitions_up_to(max_size, 2)
    for R in shapes:
        out.append(beta_hermite_expectation(R, normalized=True))
    for i, R in enumerate(shapes):
        for Q in shapes[i:]:
            out.append(beta_hermite_orthogonality(R, Q))
    kappa = beta_hermite_normalizations(max_size)
    out.append(Report("beta-hermite:normalization", "beta-hermite", None, 2, None, None,
                      equal=_uniform_box_weight(kappa), notes={"kappa": kappa}))
    return out


def _uniform_box_weight(kappa: Dict[str, Optional[object]]) -> bool:
    """kappa_R = gamma^{|R|}: a content product with the same weight on every box."""
    two = kappa.get("2")
    if two is None:
        return False
    for key, k in kappa.items():
        if k is None:
            continue
        size = sum(int(x) for x in key.split(",") if x) if key else 0
        if k != two ** (size // 2) or size % 2:
            return False
    return True


SUITES: Dict[str, Callable] = {
    "gaussian": _gaussian,
    "strong-si": _strong,
    "selberg": _selberg,
    "jacobi-coeffs": _jacobi_coeffs,
    "mp": _mp,
    "wilson": _wilson,
    "alpha-lab": _alpha,
    "operators": _operators,
    "appendix-b": _appendix_b,
    "beta-hermite": _beta_hermite,
}

# (max_size, nv) when not given on the command line
DEFAULTS: Dict[str, Tuple[int, int]] = {
    "gaussian": (8, 5),
    "strong-si": (5, 4),
    "selberg": (6, 4),
    "jacobi-coeffs": (4, 3),
    "mp": (5, 3),
    "wilson": (4, 3),
    "alpha-lab": (6, 3),
    "operators": (4, 3),
    "appendix-b": (4, 3),
    "beta-hermite": (4, 2),
}


def run_suite(name: str, max_size: Optional[int] = None, nv: Optional[int] = None, seed: int = DEFAULT_SEED,
              variant: str = "resolved", params: Optional[dict] = None) -> List[Report]:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    d_size, d_nv = DEFAULTS[name]
    reports = SUITES[name](d_size if max_size is None else max_size, d_nv if nv is None else nv,
                           seed, variant, params)
    return sorted(reports, key=lambda r: r.key())


def archive(name: str, reports: List[Report], seed: int, variant: str) -> dict:
    cases = [r.to_json() for r in reports]
    passed = sum(1 for r in reports if r.equal is True)
    failed = sum(1 for r in reports if r.equal is False)
    return {"suite": name, "seed": seed, "variant": variant, "cases": cases,
            "summary": {"pass": passed, "fail": failed, "info": len(reports) - passed - failed}}
