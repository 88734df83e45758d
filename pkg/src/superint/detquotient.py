"""Determinant-over-Vandermonde families and the Andreief moment oracle.

A single-variable family ``P_n = sum_m c[n,m] phi_m`` over a base basis ``phi``
lifts to ``P_R = det(P_{R_j+N-j}(t_i)) / Delta(t)``.  Expanding the determinant
multilinearly gives ``P_R = sum_Q det(c[lambda_j, mu_k]) Theta_Q`` with
``lambda_j = R_j+N-j`` and ``mu_k = Q_k+N-k``; this minor formula is the
reference expansion.  Expectations under ``prod mu(t_i) Delta(t)^2`` reduce by
Andreief's identity to determinants of single-variable moments.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from .algebra import ParamScalar, as_scalar, const, det
from .partitions import Partition, subpartitions
from .report import Report

__all__ = [
    "ShapeTooLong",
    "NonInvertibleDiagonal",
    "SingularNormalization",
    "Basis",
    "MomentFunctional",
    "Family",
    "MultiExpansion",
    "multivariate",
    "inverse_expansion",
    "andreief_expectation",
    "andreief_bilinear",
    "andreief_norm",
    "orthogonality_check",
    "bialternant",
    "vandermonde",
    "lambdas",
]


class ShapeTooLong(ValueError):
    """The partition has more rows than there are variables."""


class NonInvertibleDiagonal(ZeroDivisionError):
    """A diagonal coefficient ``c[n,n]`` vanishes."""


class SingularNormalization(ZeroDivisionError):
    """The normalizing Hankel determinant vanishes."""


def lambdas(R: Partition, N: int) -> List[int]:
    R = Partition(R)
    if len(R) > N:
        raise ShapeTooLong(f"{R!r} has more than {N} rows")
    return [R.part(j) + N - j for j in range(1, N + 1)]


class Basis:
    """Graded base basis with ``phi_{m+1} = phi_m * (scale*t + root(m))``.

    ``t`` is the base variable: ``x`` itself, or ``x^2`` for even families.
    """

    def __init__(self, name: str, scale=1, root: Callable[[int], ParamScalar] = lambda m: const(0),
                 base: str = "x"):
        self.name = name
        self.scale = as_scalar(scale)
        self.root = root
        self.base = base
        self._mul: Dict[int, Dict[int, ParamScalar]] = {}
        self._mono: Dict[int, List[ParamScalar]] = {0: [const(1)]}
        self._lock = threading.Lock()

    def factor(self, m: int) -> Tuple[ParamScalar, ParamScalar]:
        """``(scale, root(m))`` such that ``phi_{m+1} = phi_m (scale*t + root(m))``."""
        return self.scale, as_scalar(self.root(m))

    def mul_t(self, m: int) -> Dict[int, ParamScalar]:
        """``t * phi_m`` in the phi basis."""
        hit = self._mul.get(m)
        if hit is None:
            s, r = self.factor(m)
            hit = {m + 1: 1 / s}
            if not r.is_zero():
                hit[m] = -r / s
            with self._lock:
                self._mul[m] = hit
        return hit

    def times_t(self, f: Mapping[int, ParamScalar], k: int = 1) -> Dict[int, ParamScalar]:
        for _ in range(k):
            out: Dict[int, ParamScalar] = {}
            for m, c in f.items():
                for m2, c2 in self.mul_t(m).items():
                    out[m2] = out[m2] + c * c2 if m2 in out else c * c2
            f = {m: c for m, c in out.items() if not c.is_zero()}
        return dict(f)

    def monomial_coeffs(self, m: int) -> List[ParamScalar]:
        """Coefficients of ``t^k`` in ``phi_m``."""
        hit = self._mono.get(m)
        if hit is None:
            prev = self.monomial_coeffs(m - 1)
            s, r = self.factor(m - 1)
            hit = [const(0)] * (m + 1)
            for k, c in enumerate(prev):
                hit[k] = hit[k] + c * r
                hit[k + 1] = hit[k + 1] + c * s
            with self._lock:
                self._mono[m] = hit
        return hit

    def monomial_in_basis(self, k: int) -> Dict[int, ParamScalar]:
        """``t^k`` in the phi basis."""
        return self.times_t({0: const(1)}, k)

    def product(self, f: Mapping[int, ParamScalar], g: Mapping[int, ParamScalar]) -> Dict[int, ParamScalar]:
        """Product of two phi-expansions, again in the phi basis."""
        out: Dict[int, ParamScalar] = {}
        for m, cg in g.items():
            for k, ck in enumerate(self.monomial_coeffs(m)):
                if ck.is_zero():
                    continue
                for n, c in self.times_t(f, k).items():
                    w = c * ck * cg
                    out[n] = out[n] + w if n in out else w
        return {n: c for n, c in out.items() if not c.is_zero()}

    def poly(self, m: int, t: ParamScalar) -> ParamScalar:
        """``phi_m`` evaluated at ``t`` (any ParamScalar)."""
        out = const(1)
        for k in range(m):
            s, r = self.factor(k)
            out = out * (s * t + r)
        return out


class MomentFunctional:
    """Normalized linear functional given on the phi basis (``L(phi_0) = 1``)."""

    def __init__(self, basis: Basis, values: Callable[[int], ParamScalar]):
        self.basis = basis
        self._values = values
        self._cache: Dict[int, ParamScalar] = {}

    def phi(self, m: int) -> ParamScalar:
        hit = self._cache.get(m)
        if hit is None:
            hit = as_scalar(self._values(m))
            self._cache[m] = hit
        return hit

    def __call__(self, f: Mapping[int, ParamScalar]) -> ParamScalar:
        total = const(0)
        for m, c in f.items():
            total = total + c * self.phi(m)
        return total

    def monomial(self, k: int) -> ParamScalar:
        return self(self.basis.monomial_in_basis(k))


class Family:
    """Graded family ``P_n = sum_m coeff(n, m) phi_m`` with its moment functional."""

    def __init__(self, name: str, basis: Basis, coeff: Callable[[int, int], ParamScalar],
                 moments: MomentFunctional, monic: bool = True, params: Optional[Dict[str, str]] = None):
        self.name = name
        self.basis = basis
        self._coeff = coeff
        self.moments = moments
        self.monic = monic
        self.params = params or {}
        self._c: Dict[Tuple[int, int], ParamScalar] = {}
        self._inv: Dict[int, Dict[int, ParamScalar]] = {}
        self._lock = threading.Lock()

    def coeff(self, n: int, m: int) -> ParamScalar:
        if m > n or m < 0:
            return const(0)
        key = (n, m)
        hit = self._c.get(key)
        if hit is None:
            hit = as_scalar(self._coeff(n, m))
            with self._lock:
                self._c[key] = hit
        return hit

    def row(self, n: int) -> Dict[int, ParamScalar]:
        """``P_n`` in the phi basis."""
        return {m: c for m in range(n + 1) if not (c := self.coeff(n, m)).is_zero()}

    def inverse_row(self, n: int) -> Dict[int, ParamScalar]:
        """``phi_n = sum_m cinv[n,m] P_m``, by forward substitution."""
        hit = self._inv.get(n)
        if hit is not None:
            return hit
        d = self.coeff(n, n)
        if d.is_zero():
            raise NonInvertibleDiagonal(f"{self.name}: c[{n},{n}] = 0")
        out: Dict[int, ParamScalar] = {n: 1 / d}
        for m in range(n):
            c = self.coeff(n, m)
            if c.is_zero():
                continue
            for k, v in self.inverse_row(m).items():
                w = -c * v / d
                out[k] = out[k] + w if k in out else w
        out = {k: v for k, v in out.items() if not v.is_zero()}
        with self._lock:
            self._inv[n] = out
        return out

    def inverse_coeff(self, n: int, m: int) -> ParamScalar:
        return self.inverse_row(n).get(m, const(0))

    def single(self, n: int, t) -> ParamScalar:
        """``P_n(t)``; ``t`` is the base variable value."""
        t = as_scalar(t)
        return sum((c * self.basis.poly(m, t) for m, c in self.row(n).items()), const(0))

    def theta_family(self) -> "Family":
        """The base functions themselves as a family (``c`` = identity)."""
        return Family(f"theta[{self.name}]", self.basis, lambda n, m: const(1 if n == m else 0),
                      self.moments, True, self.params)

    def __repr__(self):
        return f"Family({self.name!r})"


@dataclass
class MultiExpansion:
    shape: Partition
    nvars: int
    coeffs: Dict[Partition, ParamScalar] = field(default_factory=dict)

    def __getitem__(self, Q) -> ParamScalar:
        return self.coeffs.get(Partition(Q), const(0))

    def items(self):
        return sorted(self.coeffs.items(), reverse=True)


def _minor_expansion(entry: Callable[[int, int], ParamScalar], R: Partition, N: int) -> MultiExpansion:
    lam = lambdas(R, N)
    out: Dict[Partition, ParamScalar] = {}
    for Q in subpartitions(R, max_length=N):
        mu = lambdas(Q, N)
        value = det([[entry(l, m) for m in mu] for l in lam])
        if not value.is_zero():
            out[Q] = value
    return MultiExpansion(Partition(R), N, out)


def multivariate(F: Family, R, N: int) -> MultiExpansion:
    """``P_R = sum_Q C[R,Q] Theta_Q`` with ``C[R,Q] = det(c[lambda_j, mu_k])``."""
    return _minor_expansion(F.coeff, Partition(R), N)


def inverse_expansion(F: Family, R, N: int) -> MultiExpansion:
    """``Theta_R = sum_Q Cinv[R,Q] P_Q`` from the inverted single-variable matrix."""
    return _minor_expansion(F.inverse_coeff, Partition(R), N)


def _hankel(F: Family, N: int) -> ParamScalar:
    L = F.moments
    value = det([[L.monomial(2 * N - j - k) for k in range(1, N + 1)] for j in range(1, N + 1)])
    if value.is_zero():
        raise SingularNormalization(f"{F.name}: Hankel determinant vanishes at N={N}")
    return value


def _pairing_det(F: Family, rows: Sequence[Dict[int, ParamScalar]], cols: Sequence[Dict[int, ParamScalar]]) -> ParamScalar:
    basis, L = F.basis, F.moments
    return det([[L(basis.product(r, c)) for c in cols] for r in rows])


def andreief_expectation(F: Family, R, N: int) -> ParamScalar:
    """``<Theta_R>`` under ``prod mu(t_i) Delta(t)^2``, normalized by the Hankel determinant."""
    lam = lambdas(R, N)
    L, basis = F.moments, F.basis
    matrix = [[L(basis.times_t({l: const(1)}, N - k)) for k in range(1, N + 1)] for l in lam]
    return det(matrix) / _hankel(F, N)


def andreief_bilinear(F: Family, G: Family, R, Q, N: int) -> ParamScalar:
    """``<Theta^F_R P^G_Q>``; both families must share the base basis."""
    rows = [{l: const(1)} for l in lambdas(R, N)]
    cols = [G.row(m) for m in lambdas(Q, N)]
    return _pairing_det(F, rows, cols) / _hankel(F, N)


def andreief_norm(F: Family, R, Q, N: int) -> ParamScalar:
    """``<P_R P_Q>`` for the multivariate family itself."""
    rows = [F.row(l) for l in lambdas(R, N)]
    cols = [F.row(m) for m in lambdas(Q, N)]
    return _pairing_det(F, rows, cols) / _hankel(F, N)


def orthogonality_check(F: Family, R, Q, N: int) -> Report:
    R, Q = Partition(R), Partition(Q)
    value = andreief_norm(F, R, Q, N)
    if R != Q:
        return Report("orthogonality", F.name, R, N, value, const(0), Q=Q)
    return Report("orthogonality", F.name, R, N, value, value, Q=Q, notes={"norm": value})


def vandermonde(ts: Sequence[ParamScalar]) -> ParamScalar:
    """``prod_{i<j} (t_i - t_j)``, matching ``det(t_i^{N-j})``."""
    out = const(1)
    for i in range(len(ts)):
        for j in range(i + 1, len(ts)):
            out = out * (ts[i] - ts[j])
    return out


def bialternant(F: Family, R, ts: Sequence) -> ParamScalar:
    """``det(P_{lambda_j}(t_i)) / Delta(t)`` as an explicit function of the ``t_i``."""
    ts = [as_scalar(t) for t in ts]
    lam = lambdas(R, len(ts))
    num = det([[F.single(l, t) for l in lam] for t in ts])
    return num / vandermonde(ts)
