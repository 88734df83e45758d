"""Differential and difference operators in power-sum and eigenvalue form.

Power-sum operators are normal-ordered sums ``coef * p_{a1}...p_{ak} d/dp_{b1}...d/dp_{bl}``
with ``p_0 = N``.  Their infinite index ranges are truncated by the degree of
the input, which is exact because every derivative index must appear in the input.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .algebra import I, ParamScalar, as_scalar, const, var
from .detquotient import Family, bialternant, multivariate
from .models import hermite, jacobi, mp
from .partitions import Partition, partitions_up_to
from .report import Report
from .symfun import SymPoly, eval_special, power_sum, schur, to_schur, xvalues

__all__ = [
    "NonNilpotentGrading",
    "NonPolynomialResult",
    "PSOperator",
    "W2",
    "W2_beta",
    "l0",
    "W0",
    "F1",
    "F2",
    "apply_ps",
    "exp_ps",
    "XOperator",
    "apply_x",
    "xvars",
    "calogero_x",
    "w2_x_printed",
    "w2_x_calogero",
    "euler_x",
    "grad_sum_x",
    "mp_difference_x",
    "crosscheck_ps_vs_x",
    "hermite_sympoly",
    "w_representation_check",
    "jacobi_sympoly",
    "eigencheck",
    "jacobi_operator_fit",
    "pieri_check",
    "differentiation_check",
    "staircase_check",
    "hermite_ode_check",
    "rodrigues_check",
    "mp_single_difference_check",
    "wilson_difference_check",
    "mp_multivariate_difference_check",
]


class NonNilpotentGrading(ValueError):
    """The operator does not strictly lower the degree, so its exponential does not terminate."""


class NonPolynomialResult(ArithmeticError):
    """Singular terms of an x-space operator failed to cancel."""


Term = Tuple[ParamScalar, Tuple[int, ...], Tuple[int, ...]]


# -- power-sum operators -------------------------------------------------------------------

class PSOperator:
    """Linear combination of term generators; ``generator(maxdeg)`` yields the terms needed
    for inputs of degree at most ``maxdeg``."""

    def __init__(self, name: str, parts: Sequence[Tuple[ParamScalar, Callable[[int], Iterable[Term]]]]):
        self.name = name
        self.parts = [(as_scalar(c), g) for c, g in parts]

    @classmethod
    def from_generator(cls, name: str, generator: Callable[[int], Iterable[Term]]) -> "PSOperator":
        return cls(name, [(const(1), generator)])

    def terms(self, maxdeg: int) -> Iterator[Term]:
        for scale, gen in self.parts:
            for coef, mult, der in gen(maxdeg):
                yield scale * as_scalar(coef), tuple(mult), tuple(der)

    def shifts(self, maxdeg: int = 8) -> set:
        return {sum(m) - sum(d) for _, m, d in self.terms(maxdeg)}

    def __add__(self, other: "PSOperator") -> "PSOperator":
        return PSOperator(f"({self.name} + {other.name})", self.parts + other.parts)

    def __sub__(self, other: "PSOperator") -> "PSOperator":
        return self + other * -1

    def __mul__(self, k) -> "PSOperator":
        k = as_scalar(k)
        return PSOperator(f"{k}*{self.name}", [(c * k, g) for c, g in self.parts])

    __rmul__ = __mul__

    def __repr__(self):
        return f"PSOperator({self.name})"


def _w2_terms(beta: ParamScalar):
    def gen(D: int):
        for n in range(1, D + 1):
            for k in range(1, D + 1 - n):
                yield const(k * n), (k + n - 2,), (n, k)
        for s in range(2, D + 1):
            # sum over a + b = s - 2 with a, b >= 0
            for a in range(0, s - 1):
                yield beta * s, (a, s - 2 - a), (s,)
            if not (1 - beta).is_zero():
                yield (1 - beta) * (s * (s - 1)), (s - 2,), (s,)
    return gen


def W2(beta=None) -> PSOperator:
    """``sum kn p_{k+n-2} d_n d_k + sum (n+k+2) p_n p_k d_{n+k+2}`` (``p_0 = N``)."""
    if beta is None:
        return PSOperator.from_generator("W2", _w2_terms(const(1)))
    return W2_beta(beta)


def W2_beta(beta=None) -> PSOperator:
    """beta-deformed ``W_2``; the extra ``(1-beta) k(k-1) p_{k-2} d_k`` comes from the
    diagonal ``i = j`` part of the Calogero pair sum."""
    beta = var("beta") if beta is None else as_scalar(beta)
    return PSOperator.from_generator(f"W2[beta={beta}]", _w2_terms(beta))


def l0() -> PSOperator:
    return PSOperator.from_generator("l0", lambda D: ((const(n), (n,), (n,)) for n in range(1, D + 1)))


def W0(reading: str = "first") -> PSOperator:
    """``sum (n+m) p_n p_m d_{n+m} + sum nm p_{n+m} d_n d_m``.

    The printed first sum carries a second derivative in ``p_{n+m}``; ``reading="printed"``
    keeps it, ``reading="first"`` uses a first derivative.
    """
    if reading not in ("first", "printed"):
        raise ValueError(reading)

    def gen(D: int):
        for s in range(1, D + 1):
            for n in range(0, s + 1):
                der = (s,) if reading == "first" else (s, s)
                yield const(s), (n, s - n), der
        for n in range(1, D + 1):
            for m in range(1, D + 1 - n):
                yield const(n * m), (n + m,), (n, m)
    return PSOperator.from_generator(f"W0[{reading}]", gen)


def F2(reading: str = "first") -> PSOperator:
    """``sum (n+m+1) p_n p_m d_{n+m+1} + sum nm p_{n+m-1} d_n d_m``."""
    if reading not in ("first", "printed"):
        raise ValueError(reading)

    def gen(D: int):
        for s in range(1, D + 1):
            for n in range(0, s):
                der = (s,) if reading == "first" else (s, s)
                yield const(s), (n, s - 1 - n), der
        for n in range(1, D + 1):
            for m in range(1, D + 1 - n):
                yield const(n * m), (n + m - 1,), (n, m)
    return PSOperator.from_generator(f"F2[{reading}]", gen)


def F1() -> PSOperator:
    """``sum (n+1) p_n d_{n+1}``; in x-space this is ``sum_i d/dx_i``."""
    return PSOperator.from_generator("F1", lambda D: ((const(n + 1), (n,), (n + 1,)) for n in range(0, D)))


def _derive(lam: Partition, ders: Tuple[int, ...]) -> Optional[Tuple[int, Partition]]:
    counts = Counter(lam)
    mult = 1
    for k in ders:
        m = counts.get(k, 0)
        if m == 0:
            return None
        mult *= m
        counts[k] = m - 1
    rest = Partition(sorted(counts.elements(), reverse=True))
    return mult, rest


def apply_ps(op: PSOperator, f: SymPoly) -> SymPoly:
    """Exact application with ``p_0`` replaced by ``f.p0``."""
    D = max(f.degree(), 0)
    p0 = f.p0
    terms = list(op.terms(D))
    out: Dict[Partition, ParamScalar] = {}
    for lam, c in f.terms.items():
        for coef, mult, der in terms:
            if sum(der) > lam.size:
                continue
            hit = _derive(lam, der)
            if hit is None:
                continue
            k, rest = hit
            w = c * coef * k
            zeros = sum(1 for a in mult if a == 0)
            if zeros:
                w = w * p0 ** zeros
            new = Partition(sorted(list(rest) + [a for a in mult if a > 0], reverse=True))
            out[new] = out[new] + w if new in out else w
    return SymPoly(out, f.nvars)


def exp_ps(op: PSOperator, scale, f: SymPoly) -> SymPoly:
    """``sum_k scale^k op^k f / k!``; the operator must strictly lower degree."""
    if any(s >= 0 for s in op.shifts(max(f.degree(), 2))):
        raise NonNilpotentGrading(f"{op.name} does not strictly lower the degree")
    scale = as_scalar(scale)
    total, term, k = f, f, 0
    while not term.is_zero():
        k += 1
        term = apply_ps(op, term) * (scale / k)
        total = total + term
    return total


# -- x-space operators --------------------------------------------------------------------

def xvars(N: int) -> List[str]:
    if not 1 <= N <= 6:
        raise ValueError("x-space operators support 1 <= N <= 6")
    return [f"x{i}" for i in range(1, N + 1)]


@dataclass
class XOperator:
    name: str
    action: Callable[[ParamScalar, List[str]], ParamScalar]


def _is_x_polynomial(f: ParamScalar, names: Sequence[str]) -> bool:
    return not (set(f.den.variables()) & set(names))


def apply_x(op: XOperator, f, N: int) -> ParamScalar:
    names = xvars(N)
    out = op.action(as_scalar(f), names)
    if not _is_x_polynomial(out, names):
        raise NonPolynomialResult(f"{op.name}: singular terms do not cancel")
    return out


def _pair_term(f: ParamScalar, names: Sequence[str], coupling: ParamScalar) -> ParamScalar:
    """``coupling * sum_{i<j} (d_i f - d_j f)/(x_i - x_j)``."""
    out = const(0)
    grads = [f.derivative(n) for n in names]
    for i in range(len(names)):
        for j in range(i + 1, len(names)):
            out = out + (grads[i] - grads[j]) / (var(names[i]) - var(names[j]))
    return out * coupling


def _laplacian(f: ParamScalar, names) -> ParamScalar:
    return sum((f.derivative(n).derivative(n) for n in names), const(0))


def euler_x() -> XOperator:
    return XOperator("sum x_i d_i", lambda f, ns: sum((var(n) * f.derivative(n) for n in ns), const(0)))


def grad_sum_x() -> XOperator:
    return XOperator("sum d_i", lambda f, ns: sum((f.derivative(n) for n in ns), const(0)))


def w2_x_calogero(beta=1) -> XOperator:
    """``sum d_i^2 - 2 beta sum_{i != j} d_j/(x_i - x_j)`` (the form inside the Calogero equation)."""
    beta = as_scalar(beta)
    return XOperator("W2 (Calogero form)", lambda f, ns: _laplacian(f, ns) + _pair_term(f, ns, 2 * beta))


def w2_x_printed() -> XOperator:
    """``sum d_i^2 - 2 sum_{i != j} d_i/(x_i - x_j)`` exactly as in the W2 definition."""
    return XOperator("W2 (printed x-form)", lambda f, ns: _laplacian(f, ns) + _pair_term(f, ns, const(-2)))


def calogero_x(beta=1) -> XOperator:
    """Rational Calogero operator ``W2 - sum x_i d_i``; eigenvalue ``-|R|`` on Hermite polynomials."""
    w2 = w2_x_calogero(beta)
    eu = euler_x()
    return XOperator("Calogero", lambda f, ns: w2.action(f, ns) - eu.action(f, ns))


def mp_difference_x(lam=None, w=None, leading_N: bool = True) -> XOperator:
    """Multivariate Meixner-Pollaczek difference operator (``w = e^{i phi}``)."""
    lam = var("lam") if lam is None else as_scalar(lam)
    w = var("w") if w is None else as_scalar(w)

    def action(f: ParamScalar, ns: List[str]) -> ParamScalar:
        N = len(ns)
        pref = const(N if leading_N else 1)
        total = const(0)
        for j, nj in enumerate(ns):
            xj = var(nj)
            up = const(1)
            down = const(1)
            for k, nk in enumerate(ns):
                if k == j:
                    continue
                xk = var(nk)
                up = up * (xj - xk + I) / (xj - xk)
                down = down * (xk - xj + I) / (xk - xj)
            total = total + w * (lam - I * xj) * up * (f.shift(nj, I) - f)
            total = total - (1 / w) * (lam + I * xj) * down * (f.shift(nj, -I) - f)
        return pref * total

    return XOperator("MP difference" + ("" if leading_N else " (no leading N)"), action)


def _x_eval(f: SymPoly, N: int) -> ParamScalar:
    return eval_special(f.with_nvars(N), xvalues([var(n) for n in xvars(N)]))


def crosscheck_ps_vs_x(op_ps: PSOperator, op_x: XOperator, N: int, degree: int) -> Report:
    """Apply both forms to every ``S_R`` with ``|R| <= degree``; the first mismatch is kept."""
    checked = 0
    for R in partitions_up_to(degree):
        S = schur(R, N)
        lhs = _x_eval(apply_ps(op_ps, S), N)
        rhs = apply_x(op_x, _x_eval(S, N), N)
        checked += 1
        if lhs != rhs:
            return Report("crosscheck", f"{op_ps.name} vs {op_x.name}", R, N, lhs, rhs,
                          notes={"checked": checked})
    return Report("crosscheck", f"{op_ps.name} vs {op_x.name}", None, N, const(0), const(0),
                  notes={"checked": checked, "degree": degree})


# -- multivariate families as symmetric functions ------------------------------------------------

def _expansion_sympoly(F: Family, R, N: int) -> SymPoly:
    out = SymPoly({}, N)
    for Q, c in multivariate(F, R, N).coeffs.items():
        out = out + schur(Q, N) * c
    return out


def hermite_sympoly(R, N: int) -> SymPoly:
    """Determinant-defined ``H_R`` written over Schur functions."""
    return _expansion_sympoly(hermite(), R, N)


def w_representation_check(R, N: int) -> Report:
    """``exp(-W2/2) S_R`` against the determinant-defined ``H_R``, compared as power-sum polynomials."""
    R = Partition(R)
    lhs = exp_ps(W2(), const(Fraction(-1, 2)), schur(R, N))
    rhs = hermite_sympoly(R, N)
    keys = set(lhs.terms) | set(rhs.terms)
    ok = all(lhs.coeff(k) == rhs.coeff(k) for k in keys)
    return Report("w-representation", "gaussian-hermite", R, N, const(1 if ok else 0), const(1),
                  notes={"terms": len(keys)})


def jacobi_sympoly(R, N: int, u=None, v=None) -> SymPoly:
    return _expansion_sympoly(jacobi(u, v), R, N)


def _restricted(f: SymPoly, N: int) -> Dict[Partition, ParamScalar]:
    """Schur coefficients of ``f`` in ``N`` variables (components with more rows vanish)."""
    return {Q: c for Q, c in to_schur(f).items() if len(Q) <= N}


def _same_in_N(f: SymPoly, g: SymPoly, N: int) -> bool:
    a, b = _restricted(f, N), _restricted(g, N)
    return all(a.get(k, const(0)) == b.get(k, const(0)) for k in set(a) | set(b))


def _jacobi_combination(reading: str, coeffs: Dict[str, ParamScalar]) -> PSOperator:
    return (W0(reading) + l0() * coeffs["l0"] + F2(reading) * coeffs["F2"] + F1() * coeffs["F1"])


def printed_jacobi_weights(u, v) -> Dict[str, ParamScalar]:
    """Weights of ``l0, F2, F1`` next to ``W0`` in the printed Jacobi operator."""
    return {"l0": 2 + u + v, "F2": const(2), "F1": -(u + 1)}


def jacobi_eigenvalue_printed(R, N, u, v) -> ParamScalar:
    """``(u+v)|R| + 2 sum (N + j - i)``."""
    R = Partition(R)
    return (u + v) * R.size + 2 * sum((as_scalar(N) + (j - i) for i, j in R.boxes()), const(0))


def eigencheck(model: str, R, N: int, reading: str = "first", coeffs=None, leading_N: bool = True) -> Report:
    """Apply the model's operator to its determinant-defined polynomial.

    ``lhs`` is the eigenvalue read off the leading Schur coefficient, ``rhs`` the printed
    eigenvalue; ``notes['eigenfunction']`` says whether the image is proportional.
    """
    R = Partition(R)
    if model == "gaussian-hermite":
        H = hermite_sympoly(R, N)
        image = apply_ps(W2() - l0(), H)
        lead = _restricted(image, N).get(R, const(0))
        eig = lead
        ok = _same_in_N(image, H * eig, N)
        return Report("eigen:calogero", model, R, N, eig, const(-R.size), notes={"eigenfunction": ok})
    if model == "selberg-jacobi":
        u, v = var("u"), var("v")
        J = jacobi_sympoly(R, N, u, v)
        coeffs = coeffs or printed_jacobi_weights(u, v)
        op = _jacobi_combination(reading, coeffs)
        image = apply_ps(op, J)
        eig = _restricted(image, N).get(R, const(0))
        ok = _same_in_N(image, J * eig, N)
        return Report("eigen:jacobi", model, R, N, eig, jacobi_eigenvalue_printed(R, N, u, v),
                      notes={"eigenfunction": ok, "reading": reading})
    if model == "meixner-pollaczek":
        F = mp()
        xs = [var(n) for n in xvars(N)]
        Q = bialternant(F, R, xs)
        image = apply_x(mp_difference_x(leading_N=leading_N), Q, N)
        w = var("w")
        target = R.size * (w - 1 / w)
        if Q.is_zero():
            return Report("eigen:mp-difference", model, R, N, const(0), const(0))
        eig = image / Q
        return Report("eigen:mp-difference", model, R, N, eig, target,
                      notes={"eigenfunction": _is_x_polynomial(eig, xvars(N)) and not set(eig.num.variables()) & set(xvars(N)),
                             "leading_N": leading_N})
    raise KeyError(model)


def jacobi_operator_fit(N: int, reading: str, max_size: int = 3) -> Optional[Dict[str, ParamScalar]]:
    """Find ``(c_l0, c_F2, c_F1)`` with ``W0 + c_l0 l0 + c_F2 F2 + c_F1 F1`` diagonal on every ``J_R``.

    Off-diagonal Schur components of the image must vanish; each is linear in the three
    unknowns, so the conditions form a linear system solved exactly.  None if inconsistent.
    """
    u, v = var("u"), var("v")
    rows: List[List[ParamScalar]] = []
    ops = [W0(reading), l0(), F2(reading), F1()]
    for R in partitions_up_to(max_size, N):
        J = jacobi_sympoly(R, N, u, v)
        images = [_restricted(apply_ps(op, J), N) for op in ops]
        target = _restricted(J, N)
        lead = target[R]
        keys = set().union(*images, target)
        # image_Q - (image_R / J_R) J_Q = 0 for every Q != R, linear in the unknown weights
        for Q in sorted(keys):
            if Q == R:
                continue
            tq = target.get(Q, const(0))
            row = [img.get(Q, const(0)) - img.get(R, const(0)) * tq / lead for img in images]
            if any(not x.is_zero() for x in row):
                rows.append(row)
    if not rows:
        return None
    sol = _solve_affine(rows)
    if sol is None:
        return None
    return {"l0": sol[0], "F2": sol[1], "F1": sol[2]}


def _solve_affine(rows: List[List[ParamScalar]]) -> Optional[List[ParamScalar]]:
    """Solve ``r[0] + r[1] a + r[2] b + r[3] c = 0`` for all rows by exact elimination."""
    A = [r[1:] + [-r[0]] for r in rows]
    n = 3
    piv_rows = []
    r = 0
    for col in range(n):
        p = next((k for k in range(r, len(A)) if not A[k][col].is_zero()), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][col]
        A[r] = [x * inv for x in A[r]]
        for k in range(len(A)):
            if k != r and not A[k][col].is_zero():
                f = A[k][col]
                A[k] = [x - f * y for x, y in zip(A[k], A[r])]
        piv_rows.append(col)
        r += 1
    if any(all(x.is_zero() for x in row[:n]) and not row[n].is_zero() for row in A):
        return None
    if len(piv_rows) < n:
        return None
    return [A[k][n] for k in range(n)]


# -- Appendix B properties ------------------------------------------------------------------------

def _hermite_restricted(R, N):
    return _restricted(hermite_sympoly(R, N), N)


def pieri_check(R, N: int) -> Report:
    """``p_1 H_R = sum H_{R+box} + sum (N + j - i) H_{R-box}`` with rows beyond N dropped."""
    R = Partition(R)
    lhs = power_sum(1, N) * hermite_sympoly(R, N)
    rhs = SymPoly({}, N)
    for i, _ in R.addable():
        S = R.add_box(i)
        if len(S) <= N:
            rhs = rhs + hermite_sympoly(S, N)
    for i, j in R.removable():
        rhs = rhs + hermite_sympoly(R.remove_box(i), N) * (N + j - i)
    ok = _same_in_N(lhs, rhs, N)
    return Report("appendixB:pieri", "gaussian-hermite", R, N, const(1 if ok else 0), const(1))


def differentiation_check(R, N: int) -> Report:
    """``sum_i d/dx_i H_R = sum (N + j - i) H_{R-box}`` via ``F1``."""
    R = Partition(R)
    lhs = apply_ps(F1(), hermite_sympoly(R, N))
    rhs = SymPoly({}, N)
    for i, j in R.removable():
        rhs = rhs + hermite_sympoly(R.remove_box(i), N) * (N + j - i)
    ok = _same_in_N(lhs, rhs, N)
    return Report("appendixB:differentiation", "gaussian-hermite", R, N, const(1 if ok else 0), const(1))


def staircase_check(N: int, plus_one: bool = False) -> Report:
    """``H_[N-1,...,1]`` (or ``H_[N,...,1]``) against ``(-1)^{(N-2)(N+1)/2} prod (x_i + x_j)`` (times ``prod x_i``)."""
    R = Partition(range(N if plus_one else N - 1, 0, -1))
    xs = [var(n) for n in xvars(N)]
    lhs = bialternant(hermite(), R, xs)
    rhs = const((-1) ** (((N - 2) * (N + 1) // 2) % 2))
    for i in range(N):
        for j in range(i + 1, N):
            rhs = rhs * (xs[i] + xs[j])
    if plus_one:
        for x in xs:
            rhs = rhs * x
    return Report("appendixB:staircase" + ("+1" if plus_one else ""), "gaussian-hermite", R, N, lhs, rhs)


# -- single-variable equations --------------------------------------------------------------------

def _hermite_poly(n: int, x: ParamScalar) -> ParamScalar:
    return hermite().single(n, x)


def hermite_ode_check(n: int, printed: bool = False) -> Report:
    """``H'' - x H' + n H = 0``; ``printed=True`` uses ``H'' + 2x H' + n H``."""
    x = var("x1")
    H = _hermite_poly(n, x)
    d1 = H.derivative("x1")
    d2 = d1.derivative("x1")
    lhs = d2 + (2 * x * d1 if printed else -x * d1) + n * H
    return Report("ode:hermite" + (":printed" if printed else ""), "gaussian-hermite", Partition([n] if n else []), 1, lhs, const(0))


def rodrigues_check(n: int) -> Report:
    """``e^{x^2/2} d^n/dx^n e^{-x^2/2} = (-1)^n H_n``: the prefactor polynomial obeys ``P' - xP``."""
    x = var("x1")
    P = const(1)
    for _ in range(n):
        P = P.derivative("x1") - x * P
    return Report("rodrigues:hermite", "gaussian-hermite", Partition([n] if n else []), 1,
                  P, (-1) ** n * _hermite_poly(n, x))


def mp_single_difference_check(n: int) -> Report:
    """``w^{-1}(ix + lam)[q(x) - q(x-i)] + w(ix - lam)[q(x) - q(x+i)] = n (w - w^{-1}) q(x)``."""
    F = mp()
    x, lam, w = var("x1"), var("lam"), var("w")
    q = F.single(n, x)
    lhs = (1 / w) * (I * x + lam) * (q - q.shift("x1", -I)) + w * (I * x - lam) * (q - q.shift("x1", I))
    rhs = n * (w - 1 / w) * q
    return Report("difference:mp", "meixner-pollaczek", Partition([n] if n else []), 1, lhs, rhs)


def wilson_difference_check(n: int, sign: int = 1) -> Report:
    """``B(x)(W(x+i) - W(x)) + D(x)(W(x-i) - W(x)) = sign * n(n+z-1) W(x)`` with ``W`` a function of ``x^2``."""
    from .models import wilson

    F = wilson(normalized=False)
    a, b, c, d = (var(k) for k in "abcd")
    x = var("x1")
    Wx = F.single(n, x * x)
    ix = I * x
    B = (a - ix) * (b - ix) * (c - ix) * (d - ix) / (2 * ix * (2 * ix - 1))
    D = (a + ix) * (b + ix) * (c + ix) * (d + ix) / (2 * ix * (2 * ix + 1))
    lhs = B * (Wx.shift("x1", I) - Wx) + D * (Wx.shift("x1", -I) - Wx)
    rhs = sign * n * (n + a + b + c + d - 1) * Wx
    return Report("difference:wilson", "wilson", Partition([n] if n else []), 1, lhs, rhs, notes={"sign": sign})


def mp_multivariate_difference_check(R, N: int = 2, leading_N: bool = True) -> Report:
    return eigencheck("meixner-pollaczek", R, N, leading_N=leading_N)
