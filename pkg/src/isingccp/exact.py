"""Exact scalars: polynomials in pi with (Gaussian-)rational coefficients.

Because pi is transcendental, an element a0 + a1*pi + a2*pi^2 + ... of Q[pi]
is zero exactly when every coefficient is zero, so equality is decided
coefficient-wise with no tolerance.  This is what turns the commuting
common-cause equations into exact decisions instead of floating comparisons.

Real and imaginary parts are kept as separate coefficient tuples; most
scalars occurring in practice are real.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import ExactnessError

__all__ = ["ExactScalar", "parse_exact", "PI", "EXACT_I"]

_ZERO = Fraction(0)


def _trim(coeffs) -> tuple:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(Fraction(c) for c in out)


def _add(a, b):
    n = max(len(a), len(b))
    return _trim((a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0) for k in range(n))


def _neg(a):
    return tuple(-c for c in a)


def _conv(a, b):
    if not a or not b:
        return ()
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _trim(out)


def _scale(a, f):
    if not f:
        return ()
    return tuple(c * f for c in a)


def _polydiv(num, den):
    """Exact polynomial division num/den in Q[pi]; raises if inexact."""
    if not den:
        raise ZeroDivisionError("division by exact zero")
    if len(den) == 1:
        return _scale(num, Fraction(1) / den[0])
    rem = list(num)
    quot = [_ZERO] * max(len(num) - len(den) + 1, 0)
    lead = den[-1]
    for k in range(len(quot) - 1, -1, -1):
        if len(rem) < len(den) + k:
            continue
        c = rem[len(den) - 1 + k] / lead
        quot[k] = c
        for j, d in enumerate(den):
            rem[j + k] -= c * d
    if any(r != 0 for r in rem):
        raise ExactnessError("quotient does not lie in Q[pi]")
    return _trim(quot)


def _eval(coeffs, x: float) -> float:
    out = 0.0
    for c in reversed(coeffs):
        out = out * x + float(c)
    return out


class ExactScalar:
    """An element of Q(i)[pi], i.e. sum_k (a_k + i*b_k) * pi^k with a_k, b_k rational.

    Instances are immutable.  Arithmetic mixes freely with int and Fraction;
    mixing with floats raises :class:`~isingccp.errors.ExactnessError` so that
    exact decisions can never silently degrade to floating point.

    Order comparisons apply to real elements only and are evaluated
    numerically (a nonzero element of Q[pi] has a definite sign, but the
    comparison here is via double precision).
    """

    __slots__ = ("re", "im")

    def __init__(self, re=(), im=()):
        if isinstance(re, (int, Fraction)):
            re = (Fraction(re),)
        if isinstance(im, (int, Fraction)):
            im = (Fraction(im),)
        object.__setattr__(self, "re", _trim(re))
        object.__setattr__(self, "im", _trim(im))

    def __setattr__(self, *a):
        raise AttributeError("ExactScalar is immutable")

    @classmethod
    def rational(cls, p, q=1) -> "ExactScalar":
        return cls(Fraction(p, q))

    @classmethod
    def pi_power(cls, k: int, coeff=1) -> "ExactScalar":
        return cls((0,) * k + (Fraction(coeff),))

    @staticmethod
    def _coerce(other):
        if isinstance(other, ExactScalar):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return ExactScalar(other)
        if isinstance(other, (float, complex)):
            raise ExactnessError(
                "cannot mix floats with exact scalars; convert with complex(x)"
            )
        return None

    # -- ring structure ----------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return ExactScalar(_add(self.re, other.re), _add(self.im, other.im))

    __radd__ = __add__

    def __neg__(self):
        return ExactScalar(_neg(self.re), _neg(self.im))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        re = _add(_conv(self.re, other.re), _neg(_conv(self.im, other.im)))
        im = _add(_conv(self.re, other.im), _conv(self.im, other.re))
        return ExactScalar(re, im)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by exact zero")
        if not other.im:
            return ExactScalar(_polydiv(self.re, other.re), _polydiv(self.im, other.re))
        # multiply through by the conjugate; the denominator becomes real
        num = self * other.conjugate()
        den = _add(_conv(other.re, other.re), _conv(other.im, other.im))
        return ExactScalar(_polydiv(num.re, den), _polydiv(num.im, den))

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def conjugate(self) -> "ExactScalar":
        return ExactScalar(self.re, _neg(self.im))

    # -- predicates and conversions ----------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.re and not self.im

    @property
    def is_real(self) -> bool:
        return not self.im

    @property
    def is_rational(self) -> bool:
        return not self.im and len(self.re) <= 1

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ExactnessError(f"{self} is not rational")
        return self.re[0] if self.re else _ZERO

    def __bool__(self):
        return not self.is_zero

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(_eval(self.re, math.pi), _eval(self.im, math.pi))

    def __float__(self):
        if self.im:
            raise ExactnessError(f"{self} has an imaginary part")
        return _eval(self.re, math.pi)

    def _real_value(self, other):
        other = self._coerce(other)
        if other is None or self.im or other.im:
            raise ExactnessError("ordering is defined for real exact scalars only")
        return _eval(self.re, math.pi), _eval(other.re, math.pi)

    def __lt__(self, other):
        a, b = self._real_value(other)
        return a < b

    def __le__(self, other):
        return self == other or self < other

    def __gt__(self, other):
        a, b = self._real_value(other)
        return a > b

    def __ge__(self, other):
        return self == other or self > other

    # -- formatting ----------------------------------------------------------

    @staticmethod
    def _fmt_real(coeffs) -> str:
        if not coeffs:
            return "0"
        parts = []
        for k, c in enumerate(coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
                continue
            power = "pi" if k == 1 else f"pi^{k}"
            if c == 1:
                term = power
            elif c == -1:
                term = f"-{power}"
            else:
                term = f"{c}*{power}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += term if term.startswith("-") else "+" + term
        return out

    def __str__(self):
        if not self.im:
            return self._fmt_real(self.re)
        imtok = self._fmt_real(self.im)
        if not self.re:
            return f"({imtok})*i"
        return f"({self._fmt_real(self.re)})+({imtok})*i"

    def __repr__(self):
        return f"ExactScalar({self})"


PI = ExactScalar.pi_power(1)
EXACT_I = ExactScalar(0, 1)

_TERM_RE = re.compile(
    r"^(?:(?P<coef>-?\d+(?:/\d+)?)\*)?"
    r"pi(?:\^(?P<pow>\d+))?"
    r"(?:/(?P<div>\d+))?$"
)


def parse_exact(text: str) -> ExactScalar:
    """Parse an exact real token such as "1/4", "1/4+pi/20" or "1/16-1/400*pi^2".

    Each term is either a rational "p/q" or a pi term with an optional
    rational prefactor ("1/400*pi^2"), power ("pi^2") and divisor ("pi/20").
    Decimal literals are rejected: they belong to float mode.
    """
    s = text.replace(" ", "")
    if not s:
        raise ExactnessError("empty exact token")
    if "." in s or "e" in s.replace("pi", "") or "E" in s:
        raise ExactnessError(f"{text!r} looks like a float; exact tokens are rational")
    total = ExactScalar()
    for chunk in re.findall(r"[+-]?[^+-]+", s):
        sign = -1 if chunk.startswith("-") else 1
        body = chunk.lstrip("+-")
        if not body:
            raise ExactnessError(f"malformed exact token {text!r}")
        if "pi" not in body:
            try:
                total = total + sign * Fraction(body)
            except (ValueError, ZeroDivisionError) as exc:
                raise ExactnessError(f"malformed exact term {chunk!r}") from exc
            continue
        m = _TERM_RE.match(body)
        if m is None:
            raise ExactnessError(f"malformed exact term {chunk!r}")
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("div"):
            coef /= int(m.group("div"))
        power = int(m.group("pow") or 1)
        total = total + ExactScalar.pi_power(power, sign * coef)
    return total
