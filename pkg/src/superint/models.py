"""Hermite, shifted Jacobi, Meixner-Pollaczek and Wilson data.

Meixner-Pollaczek phases are written with ``w = e^{i phi}``; the usual
``u = e^{-2 i phi}`` is ``w^{-2}``.  Helpers convert between the two.
Wilson polynomials live in the base variable ``y = x^2``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Dict, Optional

from .algebra import PARAMETERS, GaussianRational, I, ParamPoly, ParamScalar, as_scalar, const, pochhammer, var
from .detquotient import Basis, Family, MomentFunctional
from .partitions import Partition, xi
from .symfun import allN, delta, eval_special, schur

__all__ = [
    "jacobi_norm_observed",
    "MP_DEFAULT_MOMENTS",
    "resolved_variant",
    "hermite_coeff",
    "jacobi_coeff",
    "mp_coeff",
    "wilson_coeff",
    "rising",
    "hermite",
    "jacobi",
    "mp",
    "mp_theta",
    "wilson",
    "monomial_family",
    "moment_functional",
    "u_to_w",
    "w_to_u",
    "ClosedForm",
    "closed_form_expectation",
    "jacobi_norm_formula",
    "MODELS",
]

MODELS = ("gaussian-hermite", "selberg-jacobi", "meixner-pollaczek", "wilson")


def rising(x, n: int) -> ParamScalar:
    """Pochhammer symbol extended to negative ``n`` via ``Gamma(x+n)/Gamma(x)``."""
    if n >= 0:
        return pochhammer(x, n)
    x = as_scalar(x)
    out = const(1)
    for k in range(1, -n + 1):
        out = out / (x - k)
    return out


def _p(params, key, default):
    v = (params or {}).get(key, default)
    return as_scalar(v)


# -- single-variable coefficients ------------------------------------------------------

def hermite_coeff(n: int, m: int) -> ParamScalar:
    """Coefficient of ``x^m`` in the monic (probabilists') Hermite ``H_n``."""
    if m > n or m < 0 or (n - m) % 2:
        return const(0)
    k = (n - m) // 2
    return const(Fraction(-1, 2) ** k * Fraction(factorial(n), factorial(k) * factorial(m)))


def jacobi_coeff(n: int, m: int, u=None, v=None) -> ParamScalar:
    u = var("u") if u is None else as_scalar(u)
    v = var("v") if v is None else as_scalar(v)
    if m > n or m < 0:
        return const(0)
    return ((-1) ** (n - m) * comb(n, m)) * pochhammer(1 + u + m, n - m) / pochhammer(1 + u + v + m + n, n - m)


def mp_coeff(n: int, m: int, lam=None, w=None) -> ParamScalar:
    """Coefficient of ``theta_m = (lam + i x)_m`` in ``q_n(x | lam, phi)``, with ``w = e^{i phi}``."""
    lam = var("lam") if lam is None else as_scalar(lam)
    w = var("w") if w is None else as_scalar(w)
    if m > n or m < 0:
        return const(0)
    u = w ** -2
    two = 2 * lam
    pre = pochhammer(two, n) * w ** n / factorial(n)
    return pre * pochhammer(-n, m) * (1 - u) ** m / (pochhammer(two, m) * factorial(m))


def wilson_coeff(n: int, m: int, a=None, b=None, c=None, d=None, normalized: bool = False) -> ParamScalar:
    """Coefficient of ``theta_m(x|a) = (a-ix)_m (a+ix)_m`` in ``W_n`` (optionally over ``(z+n-1)_n``)."""
    a, b, c, d = (var(k) if x is None else as_scalar(x) for k, x in zip("abcd", (a, b, c, d)))
    if m > n or m < 0:
        return const(0)
    z = a + b + c + d
    out = pochhammer(-n, m) * pochhammer(n + z - 1, m) / factorial(m)
    out = out * pochhammer(a + b + m, n - m) * pochhammer(a + c + m, n - m) * pochhammer(a + d + m, n - m)
    if normalized:
        out = out / pochhammer(z + n - 1, n)
    return out


# -- families -----------------------------------------------------------------------------

def _monomial_basis() -> Basis:
    return Basis("monomial")


def _gaussian_moment(k: int) -> ParamScalar:
    if k % 2:
        return const(0)
    out = 1
    for j in range(1, k, 2):
        out *= j
    return const(out)


@lru_cache(maxsize=None)
def hermite() -> Family:
    basis = _monomial_basis()
    return Family("gaussian-hermite", basis, hermite_coeff, MomentFunctional(basis, _gaussian_moment))


def _key(x) -> str:
    return "/".join(as_scalar(x).expanded())


_FAMILIES: Dict[tuple, Family] = {}


def _cached(key, build):
    fam = _FAMILIES.get(key)
    if fam is None:
        fam = _FAMILIES.setdefault(key, build())
    return fam


def jacobi(u=None, v=None) -> Family:
    u = var("u") if u is None else as_scalar(u)
    v = var("v") if v is None else as_scalar(v)

    def build():
        basis = _monomial_basis()
        moments = MomentFunctional(basis, lambda n: pochhammer(u + 1, n) / pochhammer(u + v + 2, n))
        return Family("selberg-jacobi", basis, lambda n, m: jacobi_coeff(n, m, u, v), moments,
                      params={"u": _key(u), "v": _key(v)})

    return _cached(("jacobi", _key(u), _key(v)), build)


def _mp_basis(lam: ParamScalar) -> Basis:
    return Basis("pochhammer-mp", scale=I, root=lambda m: lam + m)


MP_CONVENTIONS = ("printed-moments", "orthogonal")
#: the Theta-expectation functional used unless another is asked for
MP_DEFAULT_MOMENTS = "printed-moments"


def _mp_moment(lam: ParamScalar, u: ParamScalar, convention: str = "orthogonal"):
    """``L(theta_n)``: ``(2 lam)_n / (1-u)^n`` makes ``q_n`` orthogonal; the other
    choice is the ratio of the printed single moments, ``(-1)^n (u/(u-1))^n (2 lam)_n``."""
    if convention == "orthogonal":
        return lambda n: pochhammer(2 * lam, n) / (1 - u) ** n
    if convention == "printed-moments":
        return lambda n: (-1) ** n * (u / (u - 1)) ** n * pochhammer(2 * lam, n)
    raise ValueError(f"unknown MP moment convention {convention!r}")


def mp(lam=None, w=None) -> Family:
    """Meixner-Pollaczek family with phase ``w = e^{i phi}``; moments written through ``u = w^{-2}``."""
    lam = var("lam") if lam is None else as_scalar(lam)
    w = var("w") if w is None else as_scalar(w)

    def build():
        basis = _mp_basis(lam)
        moments = MomentFunctional(basis, _mp_moment(lam, w ** -2))
        return Family("meixner-pollaczek", basis, lambda n, m: mp_coeff(n, m, lam, w), moments,
                      params={"lam": _key(lam), "w": _key(w)})

    return _cached(("mp", _key(lam), _key(w)), build)


def mp_theta(lam=None, u=None, convention: str = MP_DEFAULT_MOMENTS) -> Family:
    """The ``theta_n = (lam + i x)_n`` family with moments in ``u`` (no phase square roots needed)."""
    lam = var("lam") if lam is None else as_scalar(lam)
    u = var("u") if u is None else as_scalar(u)

    def build():
        basis = _mp_basis(lam)
        return Family("meixner-pollaczek-theta", basis, lambda n, m: const(1 if n == m else 0),
                      MomentFunctional(basis, _mp_moment(lam, u, convention)),
                      params={"lam": _key(lam), "u": _key(u), "moments": convention})

    return _cached(("mp-theta", _key(lam), _key(u), convention), build)


def wilson(a=None, b=None, c=None, d=None, normalized: bool = True) -> Family:
    a, b, c, d = (var(k) if x is None else as_scalar(x) for k, x in zip("abcd", (a, b, c, d)))

    def build():
        basis = Basis("pochhammer-wilson", scale=1, root=lambda m: (a + m) ** 2, base="y")
        z = a + b + c + d
        moments = MomentFunctional(
            basis, lambda n: pochhammer(a + b, n) * pochhammer(a + c, n) * pochhammer(a + d, n) / pochhammer(z, n))
        return Family("wilson" if normalized else "wilson-unnormalized", basis,
                      lambda n, m: wilson_coeff(n, m, a, b, c, d, normalized), moments,
                      params={k: _key(x) for k, x in zip("abcd", (a, b, c, d))})

    return _cached(("wilson", normalized) + tuple(_key(x) for x in (a, b, c, d)), build)


def monomial_family(F: Family) -> Family:
    """``t^n`` (or ``theta_n``) with the moments of ``F``: its multivariate members are ``Theta_R``."""
    return F.theta_family()


def moment_functional(model: str, **params) -> MomentFunctional:
    if model == "gaussian-hermite":
        return hermite().moments
    if model == "selberg-jacobi":
        return jacobi(params.get("u"), params.get("v")).moments
    if model == "meixner-pollaczek":
        return mp_theta(params.get("lam"), params.get("u"), params.get("convention", MP_DEFAULT_MOMENTS)).moments
    if model == "wilson":
        return wilson(*(params.get(k) for k in "abcd")).moments
    raise KeyError(model)


def u_to_w(x) -> ParamScalar:
    w = var("w")
    return as_scalar(x).compose({"u": w ** -2})


def w_to_u(x) -> Optional[ParamScalar]:
    """Rewrite through ``u = w^{-2}`` when only even powers of ``w`` occur; None otherwise."""
    x = as_scalar(x)
    out_num, out_den = _even_substitute(x.num), _even_substitute(x.den)
    if out_num is None or out_den is None:
        return None
    return out_num / out_den


def _even_substitute(p):
    wi = PARAMETERS.index("w")
    ui = PARAMETERS.index("u")
    terms = p.terms()
    if any(e[wi] % 2 for e in terms):
        return None
    top = max((e[wi] for e in terms), default=0)
    out = {}
    for e, c in terms.items():
        e = list(e)
        # w^e = u^{-e/2}; scale by u^{top/2} to stay polynomial
        e[ui] += (top - e[wi]) // 2
        e[wi] = 0
        out[tuple(e)] = out.get(tuple(e), GaussianRational(0)) + c
    return as_scalar(ParamPoly.from_terms(out)) / var("u") ** (top // 2)


# -- closed forms ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ClosedForm:
    """A superintegrability right-hand side with its convention flags.

    mp: ``sign`` in {"printed", "negated", "none"}, ``box`` in {"u/(u-1)", "1/(1-u)", "u/(1-u)"},
    ``line`` in {1, 2} (line 2 omits the ``S_R{delta_1}`` factor).
    wilson: ``shift`` in {"N-1", "N"} for the numerator content products.
    """

    model: str
    variant: tuple = ()

    def flag(self, name, default=None):
        return dict(self.variant).get(name, default)

    @classmethod
    def make(cls, model: str, **flags) -> "ClosedForm":
        return cls(model, tuple(sorted(flags.items())))


PAPER_LITERAL = {
    "gaussian-hermite": ClosedForm.make("gaussian-hermite"),
    "selberg-jacobi": ClosedForm.make("selberg-jacobi"),
    "meixner-pollaczek": ClosedForm.make("meixner-pollaczek", sign="printed", box="u/(u-1)", line=1),
    "wilson": ClosedForm.make("wilson", shift="N"),
}

RESOLVED = {
    "gaussian-hermite": ClosedForm.make("gaussian-hermite"),
    "selberg-jacobi": ClosedForm.make("selberg-jacobi"),
    "meixner-pollaczek": ClosedForm.make("meixner-pollaczek", sign="printed", box="u/(1-u)", line=1),
    "wilson": ClosedForm.make("wilson", shift="N-1"),
}

# the MP box factor tracks the moment functional: the two functionals differ by u -> 1/u
_MP_RESOLVED = {
    "printed-moments": RESOLVED["meixner-pollaczek"],
    "orthogonal": ClosedForm.make("meixner-pollaczek", sign="printed", box="1/(1-u)", line=1),
}


def resolved_variant(model: str, convention: str = MP_DEFAULT_MOMENTS) -> ClosedForm:
    if model == "meixner-pollaczek":
        return _MP_RESOLVED[convention]
    return RESOLVED[model]


def _s1(R) -> ParamScalar:
    return eval_special(schur(R), delta(1))


def closed_form_expectation(cf: ClosedForm, R, N, params: Optional[dict] = None) -> ParamScalar:
    R = Partition(R)
    N = as_scalar(N)
    size = R.size
    if cf.model == "gaussian-hermite":
        return eval_special(schur(R), delta(2)) * xi(R, N)
    if cf.model == "selberg-jacobi":
        u, v = _p(params, "u", var("u")), _p(params, "v", var("v"))
        return _s1(R) * xi(R, N) * xi(R, u + N) / xi(R, u + v + 2 * N)
    if cf.model == "meixner-pollaczek":
        lam, u = _p(params, "lam", var("lam")), _p(params, "u", var("u"))
        box = {"u/(u-1)": u / (u - 1), "1/(1-u)": 1 / (1 - u), "u/(1-u)": u / (1 - u)}[cf.flag("box", "u/(1-u)")]
        sign = cf.flag("sign", "printed")
        if sign == "none":
            phase = const(1)
        else:
            # (-1)^{N(N+7)/4} is only an integer power for some N; read it as i^{N(N+7)/2}
            if not N.is_constant():
                raise ValueError("the MP phase needs a concrete N")
            n = int(N.constant_value().re)
            phase = I ** ((n * (n + 7) // 2) % 4)
            if sign == "negated":
                phase = -phase
            elif sign != "printed":
                raise ValueError(f"unknown MP sign {sign!r}")
        body = xi(R, N) * xi(R, 2 * lam + N - 1) * box ** size
        if cf.flag("line", 1) == 1:
            body = body * _s1(R)
        return phase * body
    if cf.model == "wilson":
        a, b, c, d = (_p(params, k, var(k)) for k in "abcd")
        s = N - 1 if cf.flag("shift", "N-1") == "N-1" else N
        z = a + b + c + d
        out = eval_special(schur(R), allN(N))
        for e in (a + b, a + c, a + d):
            out = out * xi(R, s + e)
        return out / xi(R, 2 * (N - 1) + z)
    raise KeyError(cf.model)


def jacobi_norm_formula(R, N: int, u=None, v=None) -> ParamScalar:
    """The printed multivariate Jacobi norm (negative Pochhammer lengths via Gamma ratios)."""
    R = Partition(R)
    u = var("u") if u is None else as_scalar(u)
    v = var("v") if v is None else as_scalar(v)
    out = const(1)
    for i in range(1, N + 1):
        r = R.part(i)
        out = out * rising(2 * N + u + v + 1 - i, 2 * r - i + 1) * rising(N + u + v + r - i + 1, N + r - i)
    return out


def jacobi_norm_observed(R, N: int, u=None, v=None) -> ParamScalar:
    """``xi_R(N) xi_R(u+N) xi_R(v+N)`` over the printed product, which matches the Andreief norm."""
    R = Partition(R)
    u = var("u") if u is None else as_scalar(u)
    v = var("v") if v is None else as_scalar(v)
    return xi(R, N) * xi(R, u + N) * xi(R, v + N) / jacobi_norm_formula(R, N, u, v)
