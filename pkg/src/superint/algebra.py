"""Exact arithmetic substrate.

Everything in the package is computed with exact numbers:

* :class:`GaussianRational` -- ``re + i*im`` with :class:`fractions.Fraction` parts;
* :class:`ParamPoly` -- polynomials with Gaussian-rational coefficients in a
  fixed, ordered list of named parameters (stored as a pair of FLINT
  ``fmpq_mpoly`` objects for the real and imaginary parts);
* :class:`ParamScalar` -- fractions of ParamPoly.

Equality of fractions is decided by cross-multiplication. Fractions are kept
with a real denominator and cancelled by a polynomial gcd, which keeps
intermediate expressions small but is never relied upon for correctness.
"""
from __future__ import annotations

import random
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Mapping, Sequence, Tuple, Union

import flint

__all__ = [
    "PARAMETERS",
    "GaussianRational",
    "ParamPoly",
    "ParamScalar",
    "Specializer",
    "DenominatorVanished",
    "UnknownParameter",
    "I",
    "const",
    "var",
    "as_scalar",
    "pochhammer",
    "frac_equal",
    "specialize",
    "det",
]

#: Every formal parameter known to the package, in canonical order.
#: ``lam`` is the Meixner-Pollaczek lambda, ``w`` stands for e^{i phi},
#: ``x1..x6`` and ``t`` are eigenvalue variables.
PARAMETERS: Tuple[str, ...] = (
    "N", "a", "b", "c", "d", "z", "u", "v", "lam", "w", "beta", "s", "t",
    "x1", "x2", "x3", "x4", "x5", "x6",
)
_CTX = flint.fmpq_mpoly_ctx.get(PARAMETERS, "lex")
_INDEX = {name: k for k, name in enumerate(PARAMETERS)}
_ZERO = _CTX.constant(0)


class DenominatorVanished(ZeroDivisionError):
    """A denominator evaluates to zero at the chosen specialization."""


class UnknownParameter(KeyError):
    """A specialization does not assign a value to some parameter."""


Number = Union[int, Fraction, "GaussianRational"]


class GaussianRational:
    """Exact complex rational ``re + i*im``."""

    __slots__ = ("re", "im")

    def __init__(self, re: Union[int, Fraction, str] = 0, im: Union[int, Fraction, str] = 0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def coerce(x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction, Rational)):
            return GaussianRational(Fraction(x))
        if isinstance(x, flint.fmpq):
            return GaussianRational(Fraction(int(x.p), int(x.q)))
        if isinstance(x, complex):
            raise TypeError("floating point complex values are not exact")
        raise TypeError(f"cannot coerce {type(x).__name__} to GaussianRational")

    def is_real(self) -> bool:
        return self.im == 0

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __add__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        p = self * o.conjugate()
        return GaussianRational(p.re / n, p.im / n)

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return GaussianRational(1) / (self ** (-n))
        result = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}*I" if self.im != 1 else "I"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re} {sign} {abs(self.im)}*I"


I = GaussianRational(0, 1)


def _fmpq(x: Fraction) -> flint.fmpq:
    return flint.fmpq(x.numerator, x.denominator)


def _to_fraction(q) -> Fraction:
    return Fraction(int(q.p), int(q.q))


class ParamPoly:
    """Polynomial with Gaussian-rational coefficients in :data:`PARAMETERS`.

    Stored as ``re + i*im`` with real FLINT polynomials, so purely real
    polynomials pay nothing for complex support.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=None, im=None):
        self.re = _ZERO if re is None else re
        self.im = _ZERO if im is None else im

    # construction -------------------------------------------------------
    @staticmethod
    def const(x: Number) -> "ParamPoly":
        g = GaussianRational.coerce(x)
        return ParamPoly(_CTX.constant(_fmpq(g.re)), _CTX.constant(_fmpq(g.im)))

    @staticmethod
    def var(name: str) -> "ParamPoly":
        if name not in _INDEX:
            raise UnknownParameter(name)
        return ParamPoly(_CTX.gen(_INDEX[name]))

    @staticmethod
    def from_terms(terms: Mapping[Tuple[int, ...], Number]) -> "ParamPoly":
        re, im = {}, {}
        for exps, c in terms.items():
            g = GaussianRational.coerce(c)
            if len(exps) != len(PARAMETERS):
                raise ValueError("exponent vector has wrong length")
            if g.re:
                re[tuple(exps)] = _fmpq(g.re)
            if g.im:
                im[tuple(exps)] = _fmpq(g.im)
        return ParamPoly(_CTX.from_dict(re) if re else _ZERO, _CTX.from_dict(im) if im else _ZERO)

    @staticmethod
    def coerce(x) -> "ParamPoly":
        if isinstance(x, ParamPoly):
            return x
        return ParamPoly.const(x)

    # queries -----------------------------------------------------------------
    def is_zero(self) -> bool:
        return self.re.is_zero() and self.im.is_zero()

    def is_real(self) -> bool:
        return self.im.is_zero()

    def is_constant(self) -> bool:
        return self.re.is_constant() and self.im.is_constant()

    def constant_value(self) -> GaussianRational:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return GaussianRational(_to_fraction(self.re.coefficient(0)) if not self.re.is_zero() else 0,
                                _to_fraction(self.im.coefficient(0)) if not self.im.is_zero() else 0)

    def terms(self) -> Dict[Tuple[int, ...], GaussianRational]:
        """Map from exponent vectors (over :data:`PARAMETERS`) to coefficients."""
        out: Dict[Tuple[int, ...], GaussianRational] = {}
        for e, c in self.re.to_dict().items():
            out[tuple(e)] = GaussianRational(_to_fraction(c))
        for e, c in self.im.to_dict().items():
            e = tuple(e)
            g = out.get(e, GaussianRational(0))
            out[e] = GaussianRational(g.re, _to_fraction(c))
        return out

    def variables(self) -> Tuple[str, ...]:
        used = set()
        for p in (self.re, self.im):
            if p.is_zero():
                continue
            for k, deg in enumerate(p.degrees()):
                if deg > 0:
                    used.add(k)
        return tuple(PARAMETERS[k] for k in sorted(used))

    def degree(self, name: str) -> int:
        k = _INDEX[name]
        return max((p.degrees()[k] for p in (self.re, self.im) if not p.is_zero()), default=-1)

    def total_degree(self) -> int:
        return max((p.total_degree() for p in (self.re, self.im) if not p.is_zero()), default=-1)

    def length(self) -> int:
        return len(self.re) + len(self.im)

    # arithmetic ----------------------------------------------------------------
    def __add__(self, other):
        try:
            o = ParamPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return ParamPoly(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return ParamPoly(-self.re, -self.im)

    def __sub__(self, other):
        try:
            o = ParamPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return ParamPoly(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return ParamPoly.coerce(other) - self

    def __mul__(self, other):
        try:
            o = ParamPoly.coerce(other)
        except TypeError:
            return NotImplemented
        if self.im.is_zero() and o.im.is_zero():
            return ParamPoly(self.re * o.re)
        if self.im.is_zero():
            return ParamPoly(self.re * o.re, self.re * o.im)
        if o.im.is_zero():
            return ParamPoly(self.re * o.re, self.im * o.re)
        return ParamPoly(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        if self.is_real():
            return ParamPoly(self.re ** n)
        result = ParamPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "ParamPoly":
        return ParamPoly(self.re, -self.im)

    def norm(self) -> "ParamPoly":
        """``self * conj(self)``, a real polynomial."""
        return ParamPoly(self.re * self.re + self.im * self.im)

    def exact_div(self, other: "ParamPoly") -> "ParamPoly":
        """Exact quotient; raises ``ArithmeticError`` if ``other`` does not divide."""
        o = ParamPoly.coerce(other)
        if o.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if not o.is_real():
            return (self * o.conjugate()).exact_div(o.norm())
        try:
            re = self.re / o.re if not self.re.is_zero() else _ZERO
            im = self.im / o.re if not self.im.is_zero() else _ZERO
        except flint.DomainError as exc:  # pragma: no cover - message passthrough
            raise ArithmeticError("inexact polynomial division") from exc
        return ParamPoly(re, im)

    def divides(self, other: "ParamPoly") -> bool:
        """True iff ``self`` divides ``other`` exactly."""
        try:
            ParamPoly.coerce(other).exact_div(self)
        except ArithmeticError:
            return False
        return True

    def __eq__(self, other):
        try:
            o = ParamPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((str(self.re), str(self.im)))

    # calculus and substitution ------------------------------------------------
    def derivative(self, name: str, order: int = 1) -> "ParamPoly":
        k = _INDEX[name]
        re, im = self.re, self.im
        for _ in range(order):
            re = re.derivative(k) if not re.is_zero() else re
            im = im.derivative(k) if not im.is_zero() else im
        return ParamPoly(re, im)

    def compose(self, mapping: Mapping[str, "ParamPoly"]) -> "ParamPoly":
        """Substitute polynomials for variables (simultaneously)."""
        if not mapping:
            return self
        complex_args = any(not ParamPoly.coerce(p).is_real() for p in mapping.values())
        if complex_args:
            return self._compose_complex(mapping)
        gens = list(_CTX.gens())
        for name, p in mapping.items():
            gens[_INDEX[name]] = ParamPoly.coerce(p).re
        re = self.re.compose(*gens) if not self.re.is_zero() else _ZERO
        im = self.im.compose(*gens) if not self.im.is_zero() else _ZERO
        return ParamPoly(re, im)

    def _compose_complex(self, mapping):
        result = ParamPoly()
        images = {name: ParamPoly.coerce(p) for name, p in mapping.items()}
        for exps, c in self.terms().items():
            term = ParamPoly.const(c)
            for k, e in enumerate(exps):
                if e == 0:
                    continue
                name = PARAMETERS[k]
                base = images.get(name, ParamPoly.var(name))
                term = term * base ** e
            result = result + term
        return result

    def shift(self, name: str, amount: Number) -> "ParamPoly":
        """``p(..., name + amount, ...)`` by a finite Taylor expansion."""
        amount = GaussianRational.coerce(amount)
        if amount.is_real():
            return self.compose({name: ParamPoly.var(name) + amount})
        result = ParamPoly()
        deriv = self
        power = GaussianRational(1)
        k = 0
        fact = 1
        while not deriv.is_zero():
            result = result + deriv * (power / fact)
            k += 1
            fact *= k
            power = power * amount
            deriv = deriv.derivative(name)
        return result

    def evaluate(self, values: Mapping[str, Number]) -> "ParamPoly":
        """Substitute exact numbers for some of the variables."""
        real = {n: GaussianRational.coerce(v) for n, v in values.items()}
        if all(v.is_real() for v in real.values()):
            sub = {n: _fmpq(v.re) for n, v in real.items()}
            re = self.re.subs(sub) if not self.re.is_zero() else _ZERO
            im = self.im.subs(sub) if not self.im.is_zero() else _ZERO
            return ParamPoly(re, im)
        return self.compose({n: ParamPoly.const(v) for n, v in real.items()})

    def content_gcd(self, other: "ParamPoly") -> "ParamPoly":
        """Real gcd of all real/imaginary components (a common divisor, not necessarily the full gcd)."""
        parts = [p for p in (self.re, self.im, other.re, other.im) if not p.is_zero()]
        if not parts:
            return ParamPoly.const(1)
        g = parts[0]
        for p in parts[1:]:
            g = g.gcd(p)
            if g.is_constant():
                break
        return ParamPoly(g)

    # display -------------------------------------------------------------------
    def __str__(self):
        if self.im.is_zero():
            return str(self.re)
        if self.re.is_zero():
            return f"I*({self.im})"
        return f"{self.re} + I*({self.im})"

    def __repr__(self):
        return f"ParamPoly({self})"


def _leading_fraction(p) -> Fraction:
    return _to_fraction(p.leading_coefficient())


class ParamScalar:
    """Fraction ``num/den`` of :class:`ParamPoly` with a real, nonzero denominator.

    The denominator is made real by multiplying through by its conjugate, then
    common polynomial factors are cancelled and the denominator is scaled to
    have leading coefficient 1. Equality uses cross-multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1, *, _raw: bool = False):
        num = ParamPoly.coerce(num)
        den = ParamPoly.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("ParamScalar with zero denominator")
        if not _raw:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den

    @staticmethod
    def coerce(x) -> "ParamScalar":
        if isinstance(x, ParamScalar):
            return x
        if isinstance(x, ParamPoly):
            return ParamScalar(x)
        return ParamScalar(ParamPoly.const(GaussianRational.coerce(x)), _raw=True)

    # queries ---------------------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def is_real(self) -> bool:
        return self.num.is_real()

    def constant_value(self) -> GaussianRational:
        return self.num.constant_value() / self.den.constant_value()

    def variables(self) -> Tuple[str, ...]:
        return tuple(sorted(set(self.num.variables()) | set(self.den.variables()),
                            key=PARAMETERS.index))

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def as_poly(self) -> ParamPoly:
        """The value as a polynomial; raises ``ArithmeticError`` if it is not one."""
        return self.num.exact_div(self.den)

    # arithmetic --------------------------------------------------------------------
    def __add__(self, other):
        try:
            o = ParamScalar.coerce(other)
        except TypeError:
            return NotImplemented
        if o.num.is_zero():
            return self
        if self.num.is_zero():
            return o
        if self.den == o.den:
            return ParamScalar(self.num + o.num, self.den)
        return ParamScalar(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return ParamScalar(-self.num, self.den, _raw=True)

    def __sub__(self, other):
        try:
            o = ParamScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return ParamScalar.coerce(other) - self

    def __mul__(self, other):
        try:
            o = ParamScalar.coerce(other)
        except TypeError:
            return NotImplemented
        if self.num.is_zero() or o.num.is_zero():
            return ParamScalar(0)
        return ParamScalar(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = ParamScalar.coerce(other)
        except TypeError:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero ParamScalar")
        return ParamScalar(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return ParamScalar.coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return ParamScalar(1) / (self ** (-n))
        return ParamScalar(self.num ** n, self.den ** n, _raw=True)

    def conjugate(self) -> "ParamScalar":
        return ParamScalar(self.num.conjugate(), self.den, _raw=True)

    def __eq__(self, other):
        try:
            o = ParamScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return frac_equal(self, o)

    def __hash__(self):
        return hash((self.num, self.den))

    # calculus / substitution -------------------------------------------------------
    def derivative(self, name: str) -> "ParamScalar":
        dn = self.num.derivative(name)
        dd = self.den.derivative(name)
        if dd.is_zero():
            return ParamScalar(dn, self.den)
        return ParamScalar(dn * self.den - self.num * dd, self.den * self.den)

    def compose(self, mapping: Mapping[str, "ParamScalar"]) -> "ParamScalar":
        """Substitute rational functions for variables."""
        mapping = {k: ParamScalar.coerce(v) for k, v in mapping.items()}
        if all(v.den.is_constant() for v in mapping.values()):
            polys = {k: v.as_poly() for k, v in mapping.items()}
            return ParamScalar(self.num.compose(polys), self.den.compose(polys))
        num = _compose_rational(self.num, mapping)
        den = _compose_rational(self.den, mapping)
        return num / den

    def shift(self, name: str, amount: Number) -> "ParamScalar":
        return ParamScalar(self.num.shift(name, amount), self.den.shift(name, amount))

    def evaluate(self, values: Mapping[str, Number]) -> "ParamScalar":
        den = self.den.evaluate(values)
        if den.is_zero():
            raise DenominatorVanished(f"denominator {self.den} vanishes at {dict(values)}")
        return ParamScalar(self.num.evaluate(values), den)

    # display --------------------------------------------------------------------------
    def expanded(self) -> Tuple[str, str]:
        """Canonical ``(num, den)`` strings: sorted monomials, explicit signs."""
        return _poly_str(self.num), _poly_str(self.den)

    def __str__(self):
        from .display import format_scalar

        return format_scalar(self)

    def __repr__(self):
        n, d = self.expanded()
        return f"ParamScalar({n!r}, {d!r})"


def _compose_rational(p: ParamPoly, mapping: Mapping[str, ParamScalar]) -> ParamScalar:
    result = ParamScalar(0)
    for exps, c in p.terms().items():
        term = ParamScalar(ParamPoly.const(c))
        for k, e in enumerate(exps):
            if e == 0:
                continue
            name = PARAMETERS[k]
            base = mapping.get(name, ParamScalar(ParamPoly.var(name)))
            term = term * base ** e
        result = result + term
    return result


def _poly_str(p: ParamPoly) -> str:
    return str(p)


def _normalize(num: ParamPoly, den: ParamPoly) -> Tuple[ParamPoly, ParamPoly]:
    if not den.is_real():
        num = num * den.conjugate()
        den = den.norm()
    if num.is_zero():
        return ParamPoly(), ParamPoly.const(1)
    if not den.is_constant():
        g = num.content_gcd(den)
        if not g.is_constant():
            num = num.exact_div(g)
            den = den.exact_div(g)
    lc = _leading_fraction(den.re)
    if lc != 1:
        inv = ParamPoly.const(1 / lc)
        num = num * inv
        den = den * inv
    return num, den


def const(x: Number) -> ParamScalar:
    """Exact constant as a :class:`ParamScalar`."""
    return ParamScalar(ParamPoly.const(x), _raw=True)


def var(name: str) -> ParamScalar:
    """The formal parameter ``name`` as a :class:`ParamScalar`."""
    return ParamScalar(ParamPoly.var(name), _raw=True)


def as_scalar(x) -> ParamScalar:
    if isinstance(x, str):
        return var(x)
    return ParamScalar.coerce(x)


def pochhammer(x, n: int) -> ParamScalar:
    """Rising factorial ``x (x+1) ... (x+n-1)``; 1 for ``n = 0``."""
    if n < 0:
        raise ValueError("pochhammer needs n >= 0")
    x = as_scalar(x)
    result = const(1)
    for k in range(n):
        result = result * (x + k)
    return result


def frac_equal(x, y) -> bool:
    """True iff the two fractions represent the same rational function."""
    x = ParamScalar.coerce(x)
    y = ParamScalar.coerce(y)
    return (x.num * y.den - y.num * x.den).is_zero()


# --------------------------------------------------------------------------------------
# deterministic specialization
# --------------------------------------------------------------------------------------

_PRIME_DENOMINATORS = (101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157)


class Specializer:
    """Deterministic assignment of exact rationals to parameters.

    Values are ``p/q`` with ``q`` a prime above 100 so that no value is an
    integer or a small-denominator rational (which is where Pochhammer-type
    denominators vanish). Registered denominators are guaranteed nonzero;
    colliding draws are resampled.
    """

    def __init__(self, seed: int, params: Iterable[str] = PARAMETERS,
                 denominators: Iterable[ParamScalar | ParamPoly] = ()):
        self.seed = int(seed)
        self._rng = random.Random(self.seed)
        self.params = tuple(params)
        self._registered: list = []
        self.assignments: Dict[str, Fraction] = {}
        for name in self.params:
            self.assignments[name] = self._draw()
        for d in denominators:
            self.register(d)

    def _draw(self) -> Fraction:
        q = self._rng.choice(_PRIME_DENOMINATORS)
        p = self._rng.randrange(-40 * q, 40 * q)
        while p % q == 0:
            p = self._rng.randrange(-40 * q, 40 * q)
        return Fraction(p, q)

    def register(self, denominator) -> None:
        """Require ``denominator`` to stay nonzero; resample until it does."""
        d = denominator.num if isinstance(denominator, ParamScalar) else ParamPoly.coerce(denominator)
        self._registered.append(d)
        for _ in range(1000):
            if all(not r.evaluate(self.assignments).is_zero() for r in self._registered):
                return
            for name in self.params:
                self.assignments[name] = self._draw()
        raise RuntimeError("could not find a non-vanishing specialization")

    def __getitem__(self, name: str) -> Fraction:
        return self.assignments[name]


def specialize(x, s: Specializer) -> GaussianRational:
    """Exact evaluation of ``x`` at the assignment held by ``s``."""
    x = ParamScalar.coerce(x)
    missing = [name for name in x.variables() if name not in s.assignments]
    if missing:
        raise UnknownParameter(", ".join(missing))
    num = x.num.evaluate(s.assignments)
    den = x.den.evaluate(s.assignments)
    if den.is_zero():
        raise DenominatorVanished(f"denominator vanishes at seed {s.seed}")
    return num.constant_value() / den.constant_value()


# --------------------------------------------------------------------------------------
# determinants
# --------------------------------------------------------------------------------------

def _lcm(a: ParamPoly, b: ParamPoly) -> ParamPoly:
    if a.is_constant():
        return b
    if b.is_constant():
        return a
    g = ParamPoly(a.re.gcd(b.re))
    return a.exact_div(g) * b


def det(matrix: Sequence[Sequence]) -> ParamScalar:
    """Determinant of a square matrix of ParamScalar.

    Rows are cleared of denominators and the resulting polynomial matrix is
    reduced by fraction-free (Bareiss) elimination with exact divisions.
    """
    n = len(matrix)
    if n == 0:
        return const(1)
    rows = [[ParamScalar.coerce(x) for x in row] for row in matrix]
    if any(len(r) != n for r in rows):
        raise ValueError("matrix is not square")
    if n == 1:
        return rows[0][0]
    scale = ParamPoly.const(1)
    a = []
    for row in rows:
        l = ParamPoly.const(1)
        for x in row:
            if not x.is_zero():
                l = _lcm(l, x.den)
        a.append([x.num * l.exact_div(x.den) if not x.is_zero() else ParamPoly() for x in row])
        scale = scale * l
    sign = 1
    prev = ParamPoly.const(1)
    for k in range(n - 1):
        if a[k][k].is_zero():
            for r in range(k + 1, n):
                if not a[r][k].is_zero():
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return const(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_div(prev)
        prev = a[k][k]
    result = a[n - 1][n - 1]
    if sign < 0:
        result = -result
    return ParamScalar(result, scale)
