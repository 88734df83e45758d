"""Symmetric functions in the power-sum basis.

A :class:`SymPoly` maps power-sum indices ``lambda`` (so ``p_lambda = prod p_{lambda_i}``)
to exact coefficients.  Schur functions come from the Jacobi-Trudi determinant,
Jack polynomials from Gram-Schmidt in dominance order, and skew functions from
the coproduct ``p_k -> p_k + q_k``.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct
from math import comb
from collections import Counter
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from .algebra import ParamScalar, as_scalar, const, var
from .partitions import (
    NotContained,
    Partition,
    bracket,
    hooks,
    partitions_of,
    z_lambda,
)

__all__ = [
    "ArityMismatch",
    "SymPoly",
    "JackParams",
    "power_sum",
    "schur",
    "skew_schur",
    "monomial",
    "jack",
    "skew_jack",
    "hall_pair",
    "skew",
    "to_monomial",
    "to_schur",
    "eval_special",
    "delta",
    "allN",
    "xvalues",
    "hook_formula",
]


class ArityMismatch(ValueError):
    """Two different concrete ``N`` meet, or the x values do not match ``nvars``."""


def _merge(a: Partition, b: Partition) -> Partition:
    return Partition(sorted(a + b, reverse=True))


class SymPoly:
    """Finite linear combination of power-sum products.

    ``nvars`` is an int (concrete ``N``) or None, meaning ``N`` is the formal
    parameter ``N``; it only matters where ``p_0 = N`` or x-values enter.
    """

    __slots__ = ("terms", "nvars")

    def __init__(self, terms: Optional[Mapping] = None, nvars: Optional[int] = None):
        clean: Dict[Partition, ParamScalar] = {}
        for lam, c in (terms or {}).items():
            c = as_scalar(c)
            if not c.is_zero():
                clean[Partition(lam)] = c
        self.terms = clean
        self.nvars = nvars

    @classmethod
    def one(cls, nvars=None) -> "SymPoly":
        return cls({Partition(): const(1)}, nvars)

    @property
    def p0(self) -> ParamScalar:
        return var("N") if self.nvars is None else const(self.nvars)

    def with_nvars(self, nvars) -> "SymPoly":
        return SymPoly(self.terms, nvars)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((lam.size for lam in self.terms), default=-1)

    def homogeneous_part(self, d: int) -> "SymPoly":
        return SymPoly({l: c for l, c in self.terms.items() if l.size == d}, self.nvars)

    def is_homogeneous(self) -> bool:
        return len({l.size for l in self.terms}) <= 1

    def coeff(self, lam) -> ParamScalar:
        return self.terms.get(Partition(lam), const(0))

    def items(self) -> List[Tuple[Partition, ParamScalar]]:
        return sorted(self.terms.items())

    def _nv(self, other: "SymPoly"):
        if self.nvars is not None and other.nvars is not None and self.nvars != other.nvars:
            raise ArityMismatch(f"cannot combine N={self.nvars} with N={other.nvars}")
        return self.nvars if self.nvars is not None else other.nvars

    def __add__(self, other):
        if not isinstance(other, SymPoly):
            other = SymPoly({Partition(): as_scalar(other)}, self.nvars)
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out[lam] + c if lam in out else c
        return SymPoly(out, self._nv(other))

    __radd__ = __add__

    def __neg__(self):
        return SymPoly({l: -c for l, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        return self + (-other if isinstance(other, SymPoly) else -as_scalar(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, SymPoly):
            k = as_scalar(other)
            return SymPoly({l: c * k for l, c in self.terms.items()}, self.nvars)
        out: Dict[Partition, ParamScalar] = {}
        for la, ca in self.terms.items():
            for lb, cb in other.terms.items():
                lam = _merge(la, lb)
                c = ca * cb
                out[lam] = out[lam] + c if lam in out else c
        return SymPoly(out, self._nv(other))

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, other):
        return self * (1 / as_scalar(other))

    def __pow__(self, n: int):
        out = SymPoly.one(self.nvars)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, SymPoly):
            other = SymPoly({Partition(): as_scalar(other)})
        keys = set(self.terms) | set(other.terms)
        return all(self.coeff(k) == other.coeff(k) for k in keys)

    def __hash__(self):
        return hash(tuple(sorted((l, hash(c)) for l, c in self.terms.items())))

    def map_coefficients(self, f: Callable[[ParamScalar], ParamScalar]) -> "SymPoly":
        return SymPoly({l: f(c) for l, c in self.terms.items()}, self.nvars)

    def substitute(self, values: Callable[[int], ParamScalar]) -> ParamScalar:
        """Replace every ``p_k`` by ``values(k)``."""
        cache: Dict[int, ParamScalar] = {}
        total = const(0)
        for lam, c in self.terms.items():
            term = c
            for k in lam:
                if k not in cache:
                    cache[k] = as_scalar(values(k))
                term = term * cache[k]
            total = total + term
        return total

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for lam, c in self.items():
            mono = "*".join(f"p{k}" for k in lam)
            parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    __repr__ = __str__


def power_sum(k: int, nvars=None) -> SymPoly:
    if k == 0:
        return SymPoly.one(nvars) * (var("N") if nvars is None else nvars)
    return SymPoly({Partition((k,)): 1}, nvars)


# -- Schur ---------------------------------------------------------------------

def _fraction_poly(terms: Mapping[Partition, Fraction], nvars=None) -> SymPoly:
    return SymPoly({l: const(c) for l, c in terms.items() if c}, nvars)


@lru_cache(maxsize=None)
def _h_fraction(n: int) -> Tuple[Tuple[Partition, Fraction], ...]:
    """Complete homogeneous ``h_n = sum_lambda p_lambda / z_lambda``."""
    if n < 0:
        return ()
    return tuple((lam, Fraction(1, z_lambda(lam))) for lam in partitions_of(n))


def _fmul(a: Dict[Partition, Fraction], b: Dict[Partition, Fraction]) -> Dict[Partition, Fraction]:
    out: Dict[Partition, Fraction] = {}
    for la, ca in a.items():
        for lb, cb in b.items():
            lam = _merge(la, lb)
            out[lam] = out.get(lam, 0) + ca * cb
    return out


def _fdet(matrix: List[List[Dict[Partition, Fraction]]]) -> Dict[Partition, Fraction]:
    """Laplace expansion along the first row (matrices here are at most 8x8 and sparse)."""
    n = len(matrix)
    if n == 0:
        return {Partition(): Fraction(1)}
    out: Dict[Partition, Fraction] = {}
    for k in range(n):
        entry = matrix[0][k]
        if not entry:
            continue
        minor = [row[:k] + row[k + 1:] for row in matrix[1:]]
        sub = _fmul(entry, _fdet(minor))
        sign = -1 if k % 2 else 1
        for lam, c in sub.items():
            out[lam] = out.get(lam, 0) + sign * c
    return {l: c for l, c in out.items() if c}


@lru_cache(maxsize=None)
def _jacobi_trudi(R: Partition, Q: Partition) -> Tuple[Tuple[Partition, Fraction], ...]:
    n = len(R)
    matrix = [[dict(_h_fraction(R.part(i) - Q.part(j) - i + j)) if R.part(i) - Q.part(j) - i + j >= 0 else {}
               for j in range(1, n + 1)] for i in range(1, n + 1)]
    return tuple(sorted(_fdet(matrix).items()))


_LOCK = threading.Lock()


def schur(R, nvars=None) -> SymPoly:
    """Schur function ``S_R`` in the power-sum basis (Jacobi-Trudi)."""
    R = Partition(R)
    with _LOCK:
        terms = _jacobi_trudi(R, Partition())
    return _fraction_poly(dict(terms), nvars)


# -- pairing and coproduct ---------------------------------------------------------

class JackParams:
    """Jack deformation parameter ``beta`` (``alpha = 1/beta``)."""

    __slots__ = ("beta",)

    def __init__(self, beta=None):
        self.beta = var("beta") if beta is None else as_scalar(beta)
        if self.beta.is_zero():
            raise ValueError("beta must be nonzero")

    @property
    def alpha(self) -> ParamScalar:
        return 1 / self.beta

    def key(self) -> str:
        return "/".join(self.beta.expanded())


def _alpha(jp: Optional[JackParams]) -> ParamScalar:
    return const(1) if jp is None else jp.alpha


def hall_pair(f: SymPoly, g: SymPoly, jp: Optional[JackParams] = None) -> ParamScalar:
    """``<p_lambda, p_mu> = delta z_lambda alpha^{l(lambda)}`` (alpha = 1 when undeformed)."""
    a = _alpha(jp)
    total = const(0)
    for lam, c in f.terms.items():
        if lam in g.terms:
            total = total + c * g.terms[lam] * z_lambda(lam) * a ** len(lam)
    return total


def _sub_multisets(lam: Partition):
    """Yield ``(kept, removed, multiplicity)`` for the expansion of ``prod (p_k + q_k)``."""
    counts = sorted(Counter(lam).items(), reverse=True)
    for choice in iproduct(*[range(m + 1) for _, m in counts]):
        kept, removed, mult = [], [], 1
        for (k, m), r in zip(counts, choice):
            removed += [k] * r
            kept += [k] * (m - r)
            mult *= comb(m, r)
        yield Partition(kept), Partition(removed), mult


def skew(f: SymPoly, g: SymPoly, jp: Optional[JackParams] = None) -> SymPoly:
    """``<f(p + q), g(q)>_q``: the skewing of ``f`` by the dual of ``g``."""
    a = _alpha(jp)
    out: Dict[Partition, ParamScalar] = {}
    for lam, c in f.terms.items():
        for kept, removed, mult in _sub_multisets(lam):
            if removed not in g.terms:
                continue
            w = c * g.terms[removed] * (mult * z_lambda(removed)) * a ** len(removed)
            out[kept] = out[kept] + w if kept in out else w
    return SymPoly(out, f.nvars)


def skew_schur(R, Q, nvars=None) -> SymPoly:
    """``S_{R/Q}`` via the coproduct; raises NotContained unless Q is inside R."""
    R, Q = Partition(R), Partition(Q)
    if not R.contains(Q):
        raise NotContained(f"{Q!r} is not contained in {R!r}")
    return skew(schur(R, nvars), schur(Q, nvars))


# -- monomial basis -----------------------------------------------------------------

def _p_in_m(lam: Partition, mu: Partition) -> int:
    """Coefficient of ``m_mu`` in ``p_lambda``: ways to distribute the parts of lambda into rows of mu."""
    target = list(mu)

    def rec(k: int, remaining: Tuple[int, ...]) -> int:
        if k == len(lam):
            return int(all(r == 0 for r in remaining))
        total = 0
        for i, r in enumerate(remaining):
            if r >= lam[k]:
                total += rec(k + 1, remaining[:i] + (r - lam[k],) + remaining[i + 1:])
        return total

    return rec(0, tuple(target))


@lru_cache(maxsize=None)
def _monomial_fraction(mu: Partition) -> Tuple[Tuple[Partition, Fraction], ...]:
    """``m_mu`` in the power-sum basis, by triangular inversion of ``p -> m``."""
    n = mu.size
    # p_lambda involves m_nu only for coarsenings nu of lambda, which come earlier
    # in reverse-lexicographic order; solve from the top.
    diag = _p_in_m(mu, mu)
    result = {mu: Fraction(1, diag)}
    for nu in partitions_of(n):
        if nu == mu:
            break
        a = _p_in_m(mu, nu)
        if a:
            for lam, c in _monomial_fraction(nu):
                result[lam] = result.get(lam, 0) - Fraction(a, diag) * c
    return tuple(sorted((l, c) for l, c in result.items() if c))


def monomial(mu, nvars=None) -> SymPoly:
    mu = Partition(mu)
    with _LOCK:
        terms = _monomial_fraction(mu)
    return _fraction_poly(dict(terms), nvars)


def to_monomial(f: SymPoly) -> Dict[Partition, ParamScalar]:
    """Coefficients of ``f`` in the monomial basis."""
    out: Dict[Partition, ParamScalar] = {}
    for lam, c in f.terms.items():
        for mu in partitions_of(lam.size):
            a = _p_in_m(lam, mu)
            if a:
                out[mu] = out[mu] + c * a if mu in out else c * a
    return {mu: c for mu, c in out.items() if not c.is_zero()}


def to_schur(f: SymPoly) -> Dict[Partition, ParamScalar]:
    out = {}
    for d in sorted({lam.size for lam in f.terms}):
        part = f.homogeneous_part(d)
        for R in partitions_of(d):
            c = hall_pair(part, schur(R))
            if not c.is_zero():
                out[R] = c
    return out


# -- Jack -----------------------------------------------------------------------------

_JACK_CACHE: Dict[Tuple[str, int], Dict[Partition, SymPoly]] = {}


def _jack_degree(n: int, jp: JackParams) -> Dict[Partition, SymPoly]:
    key = (jp.key(), n)
    with _LOCK:
        hit = _JACK_CACHE.get(key)
    if hit is not None:
        return hit
    done: Dict[Partition, SymPoly] = {}
    norms: Dict[Partition, ParamScalar] = {}
    # reverse-lex increasing from [1^n] is a linear extension of dominance
    for R in reversed(partitions_of(n)):
        m = monomial(R)
        P = m
        for Q, PQ in done.items():
            P = P - PQ * (hall_pair(m, PQ, jp) / norms[Q])
        done[R] = P
        norms[R] = hall_pair(P, P, jp)
    with _LOCK:
        _JACK_CACHE.setdefault(key, done)
    return done


def jack(R, jp: Optional[JackParams] = None, nvars=None) -> SymPoly:
    """Jack polynomial in the P-normalization (coefficient of ``m_R`` is 1)."""
    R = Partition(R)
    jp = jp or JackParams()
    return _jack_degree(R.size, jp)[R].with_nvars(nvars)


def skew_jack(R, Q, jp: Optional[JackParams] = None, nvars=None) -> SymPoly:
    """``P_{R/Q}`` defined by ``P_R(x, y) = sum_Q P_{R/Q}(x) P_Q(y)``."""
    R, Q = Partition(R), Partition(Q)
    if not R.contains(Q):
        raise NotContained(f"{Q!r} is not contained in {R!r}")
    jp = jp or JackParams()
    PQ = jack(Q, jp)
    dual = PQ / hall_pair(PQ, PQ, jp)
    return skew(jack(R, jp), dual, jp).with_nvars(nvars)


# -- special loci -----------------------------------------------------------------------

class _Locus:
    def __init__(self, kind: str, value):
        self.kind, self.value = kind, value


def delta(s: int) -> _Locus:
    """``p_k = delta_{k,s}``."""
    return _Locus("delta", int(s))


def allN(z) -> _Locus:
    """``p_k = z`` for every k."""
    return _Locus("allN", as_scalar(z))


def xvalues(values: Sequence) -> _Locus:
    """``p_k = sum_i x_i^k``."""
    return _Locus("x", [as_scalar(v) for v in values])


def eval_special(f: SymPoly, locus: _Locus) -> ParamScalar:
    if locus.kind == "delta":
        s = locus.value
        return f.substitute(lambda k: 1 if k == s else 0)
    if locus.kind == "allN":
        z = locus.value
        return f.substitute(lambda k: z)
    xs = locus.value
    if f.nvars is not None and f.nvars != len(xs):
        raise ArityMismatch(f"polynomial has {f.nvars} variables, got {len(xs)} values")

    def p(k):
        total = const(0)
        for x in xs:
            total = total + x ** k
        return total

    return f.substitute(p)


def hook_formula(R, s: int) -> Fraction:
    """Unsigned ``prod 1/[[h]]_{s,0}`` over the hooks of R."""
    out = Fraction(1)
    for h in hooks(R):
        out /= bracket(h, s, 0)
    return out
