"""Human-readable rendering of exact scalars (factored where cheap)."""
from __future__ import annotations

from fractions import Fraction

_FACTOR_LIMIT = 400  # terms; larger polynomials are printed expanded


def _compact(p) -> str:
    return str(p).replace(" ", "")


def _is_atom(s: str) -> bool:
    return not any(ch in s for ch in "+-/*")


def _factor_real(p):
    """Return ``(constant Fraction, [(factor_string, exponent), ...])``."""
    if p.is_constant():
        c = p.coefficient(0)
        return Fraction(int(c.p), int(c.q)), []
    if len(p) > _FACTOR_LIMIT:
        return Fraction(1), [(_compact(p), 1)]
    c, facs = p.factor()
    items = sorted(((_compact(f), e) for f, e in facs), key=lambda fe: (len(fe[0]), fe[0]))
    return Fraction(int(c.p), int(c.q)), items


def _product(const: int, factors) -> str:
    parts = [] if const == 1 and factors else [str(const)]
    for f, e in factors:
        body = f if _is_atom(f) else f"({f})"
        parts.append(body if e == 1 else f"{body}^{e}")
    out = parts[0]
    for prev, part in zip(parts, parts[1:]):
        glue = "" if prev.endswith(")") or part.startswith("(") else "*"
        out += glue + part
    return out


def format_scalar(x) -> str:
    """Factored display form, e.g. ``(a+b)(a+c)(a+d)/(a+b+c+d)``."""
    num, den = x.num, x.den
    if not num.is_real():
        n = f"I*({_compact(num.im)})"
        if not num.re.is_zero():
            n = f"({_compact(num.re)})+{n}"
        d = _compact(den.re)
        if d == "1":
            return n
        return f"{n}/{d}" if _is_atom(d) else f"{n}/({d})"
    if num.is_zero():
        return "0"
    cn, fn = _factor_real(num.re)
    cd, fd = _factor_real(den.re)
    k = cn / cd
    sign = "-" if k < 0 else ""
    k = abs(k)
    out = sign + _product(k.numerator, fn)
    if k.denominator == 1 and not fd:
        return out
    bottom = _product(k.denominator, fd)
    simple = (k.denominator == 1 and len(fd) == 1) or not fd
    if simple and (_is_atom(bottom) or bottom.startswith("(")):
        return f"{out}/{bottom}"
    return f"{out}/({bottom})"
