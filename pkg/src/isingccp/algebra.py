"""Operator algebra generated by the chain of self-adjoint unitaries U_i.

One generator sits at every half-integer site.  Generators at half-integer
distance anticommute, all other pairs commute, and every generator squares
to the identity:

    U_i U_j = -U_j U_i   if |i - j| = 1/2,
    U_i U_j =  U_j U_i   otherwise,
    U_i^2   = 1.

Words in the generators therefore reduce to monomials indexed by a finite,
strictly ascending set of sites together with a sign, and general operators
are finite linear combinations of such monomials.  Coefficients are either
complex floats or :class:`~isingccp.exact.ExactScalar` values; the two modes
never mix implicitly.

A dense matrix oracle maps a window of the chain onto qubits via

    U_k     -> Z_k                  (integer site k)
    U_{k+1/2} -> X_k X_{k+1}

which realises the generator relations exactly; the representation is
checked against them once, on first use.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import ModeError, PreconditionError
from .exact import ExactScalar
from .geometry import DoubleCone
from .halfint import double_str, from_double, to_double

__all__ = [
    "GeneratorMonomial",
    "Operator",
    "mono_mul",
    "op_mul",
    "op_adjoint",
    "normalized_trace",
    "product_trace",
    "commutes",
    "is_projection",
    "support_interval",
    "localization",
    "to_matrix",
    "DEFAULT_TOL",
]

DEFAULT_TOL = 1e-10

_PHASE_TOKENS = {"+1": 0, "1": 0, "+i": 1, "i": 1, "-1": 2, "-i": 3}
_PHASE_VALUES = {0: 1, 1: 1j, 2: -1, 3: -1j}


def _merge_sites(a: tuple, b: tuple) -> tuple[tuple, int]:
    """Multiply two ascending site words; return (sites, sign).

    Signs arise only from transposing generators at half-integer distance
    (doubled distance 1); coincident sites cancel pairwise.
    """
    sites = list(a)
    sign = 1
    for s in b:
        pos = bisect_left(sites, s)
        if pos < len(sites) and sites[pos] == s:
            if pos + 1 < len(sites) and sites[pos + 1] == s + 1:
                sign = -sign
            sites.pop(pos)
        else:
            if pos < len(sites) and sites[pos] == s + 1:
                sign = -sign
            sites.insert(pos, s)
    return tuple(sites), sign


def _reversal_sign(sites: tuple) -> int:
    """Sign of reversing an ascending word: one flip per adjacent pair."""
    flips = sum(1 for p, q in zip(sites, sites[1:]) if q - p == 1)
    return -1 if flips % 2 else 1


@dataclass(frozen=True)
class GeneratorMonomial:
    """A signed product of generators in canonical (ascending) site order.

    ``sites`` holds doubled half-integers; ``phase`` is a power of i in
    {0, 1, 2, 3}.  The empty word with phase 0 is the identity.
    """

    sites: tuple = ()
    phase: int = 0

    def __post_init__(self):
        if any(p >= q for p, q in zip(self.sites, self.sites[1:])):
            raise PreconditionError("monomial sites must be strictly ascending")
        object.__setattr__(self, "phase", self.phase % 4)

    @classmethod
    def of(cls, sites, phase="+1") -> "GeneratorMonomial":
        """Build from an ordered word of half-integer sites and a phase token.

        The word is reduced to canonical form, so repeated or descending
        sites pick up the signs the relations dictate.
        """
        word = tuple(to_double(s) for s in sites)
        if isinstance(phase, str):
            if phase not in _PHASE_TOKENS:
                raise PreconditionError(f"unknown phase token {phase!r}")
            p = _PHASE_TOKENS[phase]
        else:
            p = {1: 0, 1j: 1, -1: 2, -1j: 3}.get(phase)
            if p is None:
                raise PreconditionError(f"phase must be a fourth root of unity, got {phase!r}")
        canon, sign = _merge_sites((), word)
        if sign < 0:
            p += 2
        return cls(canon, p)

    @property
    def is_identity(self) -> bool:
        return not self.sites and self.phase == 0

    def __mul__(self, other: "GeneratorMonomial") -> "GeneratorMonomial":
        sites, sign = _merge_sites(self.sites, other.sites)
        phase = (self.phase + other.phase + (2 if sign < 0 else 0)) % 4
        return GeneratorMonomial(sites, phase)

    def adjoint(self) -> "GeneratorMonomial":
        phase = (-self.phase) % 4
        if _reversal_sign(self.sites) < 0:
            phase = (phase + 2) % 4
        return GeneratorMonomial(self.sites, phase)

    def phase_value(self) -> complex:
        return _PHASE_VALUES[self.phase]

    def __str__(self):
        prefix = {0: "", 1: "i·", 2: "-", 3: "-i·"}[self.phase]
        if not self.sites:
            return prefix + "1" if prefix else "1"
        return prefix + " ".join(f"U({double_str(s)})" for s in self.sites)


def mono_mul(m1: GeneratorMonomial, m2: GeneratorMonomial) -> GeneratorMonomial:
    """Canonical product of two monomials."""
    return m1 * m2


# -- coefficients ------------------------------------------------------------


def _zero(exact: bool):
    return ExactScalar() if exact else 0j


def _coerce_coeff(c, exact: bool):
    if exact:
        if isinstance(c, ExactScalar):
            return c
        if isinstance(c, (int, Fraction)) and not isinstance(c, bool):
            return ExactScalar(c)
        raise ModeError(
            f"exact operators need ExactScalar or rational coefficients, got {type(c).__name__}"
        )
    if isinstance(c, ExactScalar):
        raise ModeError("float operators cannot take ExactScalar coefficients; use complex(c)")
    if isinstance(c, (int, float, complex, Fraction)) and not isinstance(c, bool):
        return complex(c)
    raise ModeError(f"cannot use {type(c).__name__} as a float coefficient")


def _is_zero_coeff(c, tol: float = 0.0) -> bool:
    if isinstance(c, ExactScalar):
        return c.is_zero
    return abs(c) <= tol


def _phase_times(c, phase: int, exact: bool):
    if phase == 0:
        return c
    if exact:
        return c * _EXACT_PHASES[phase]
    return c * _PHASE_VALUES[phase]


_EXACT_PHASES = {
    0: ExactScalar(1),
    1: ExactScalar(0, 1),
    2: ExactScalar(-1),
    3: ExactScalar(0, -1),
}


def _hull(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return (min(a[0], b[0]), max(a[1], b[1]))


class Operator:
    """A finite combination of canonical monomials with mode-tagged scalars.

    Operators are immutable values.  ``time`` is an optional localization
    label: 0 marks a Cauchy-surface operator, a positive integer marks the
    image of a surface operator under that many causal time steps (``base``
    then records the doubled site interval of the surface preimage), and
    None means no localization claim is carried.
    """

    __slots__ = ("_terms", "exact", "time", "base")

    def __init__(self, terms: dict, exact: bool, time=0, base=None):
        self._terms = {s: c for s, c in terms.items() if not _is_zero_coeff(c)}
        self.exact = exact
        self.time = time
        self.base = base

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, exact=False) -> "Operator":
        return cls({}, exact)

    @classmethod
    def identity(cls, exact=False) -> "Operator":
        return cls({(): _coerce_coeff(1, exact)}, exact)

    @classmethod
    def generator(cls, site, exact=False) -> "Operator":
        """The generator U at a half-integer site."""
        return cls({(to_double(site),): _coerce_coeff(1, exact)}, exact)

    @classmethod
    def from_terms(cls, terms, exact=False) -> "Operator":
        """Build from an iterable of (coefficient, sites, phase) triples."""
        acc: dict = {}
        for coeff, sites, *rest in terms:
            phase = rest[0] if rest else "+1"
            mono = GeneratorMonomial.of(sites, phase)
            c = _phase_times(_coerce_coeff(coeff, exact), mono.phase, exact)
            acc[mono.sites] = acc.get(mono.sites, _zero(exact)) + c
        return cls(acc, exact)

    # -- structure ----------------------------------------------------------

    def terms(self):
        """Iterator over (sites, coefficient) pairs, sites ascending."""
        return iter(sorted(self._terms.items()))

    def coefficient(self, sites):
        key = tuple(sorted(to_double(s) for s in sites))
        return self._terms.get(key, _zero(self.exact))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def _check_mode(self, other: "Operator"):
        if self.exact != other.exact:
            raise ModeError(
                "cannot combine exact and float operators; coerce with to_float()"
            )

    def _labels_with(self, other: "Operator"):
        if self.is_zero:
            return other.time, other.base
        if other.is_zero:
            return self.time, self.base
        if self.time == other.time:
            if self.time in (0, None):
                return self.time, None
            return self.time, _hull(self.base, other.base)
        return None, None

    # -- linear structure ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Operator):
            return NotImplemented
        self._check_mode(other)
        acc = dict(self._terms)
        for s, c in other._terms.items():
            acc[s] = acc.get(s, _zero(self.exact)) + c
        time, base = self._labels_with(other)
        return Operator(acc, self.exact, time, base)

    def __sub__(self, other):
        if not isinstance(other, Operator):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Operator({s: -c for s, c in self._terms.items()}, self.exact, self.time, self.base)

    def scaled(self, scalar) -> "Operator":
        c = _coerce_coeff(scalar, self.exact)
        return Operator({s: v * c for s, v in self._terms.items()}, self.exact, self.time, self.base)

    def __rmul__(self, scalar):
        if isinstance(scalar, Operator):
            return NotImplemented
        return self.scaled(scalar)

    def __truediv__(self, scalar):
        if self.exact:
            coerced = ExactScalar._coerce(scalar)
            if coerced is None:
                raise ModeError(f"cannot divide an exact operator by {type(scalar).__name__}")
            return self.scaled(ExactScalar(1) / coerced)
        return self.scaled(1.0 / scalar)

    # -- multiplicative structure --------------------------------------------

    def __mul__(self, other):
        if not isinstance(other, Operator):
            return self.scaled(other)
        self._check_mode(other)
        acc: dict = {}
        zero = _zero(self.exact)
        for s1, c1 in self._terms.items():
            for s2, c2 in other._terms.items():
                sites, sign = _merge_sites(s1, s2)
                c = c1 * c2
                if sign < 0:
                    c = -c
                acc[sites] = acc.get(sites, zero) + c
        time, base = self._labels_with(other)
        return Operator(acc, self.exact, time, base)

    def adjoint(self) -> "Operator":
        acc = {}
        for s, c in self._terms.items():
            cc = c.conjugate()
            if _reversal_sign(s) < 0:
                cc = -cc
            acc[s] = cc
        return Operator(acc, self.exact, self.time, self.base)

    # -- functionals -----------------------------------------------------------

    def trace(self):
        """The normalized trace: the coefficient of the identity monomial."""
        return self._terms.get((), _zero(self.exact))

    def sup_coefficient(self) -> float:
        """Largest coefficient magnitude (numeric, both modes)."""
        if not self._terms:
            return 0.0
        return max(abs(complex(c)) for c in self._terms.values())

    def is_close_to_zero(self, tol: float = DEFAULT_TOL) -> bool:
        if self.exact:
            return self.is_zero
        return self.sup_coefficient() <= tol

    def isclose(self, other: "Operator", tol: float = DEFAULT_TOL) -> bool:
        return (self - other).is_close_to_zero(tol)

    def __eq__(self, other):
        if not isinstance(other, Operator):
            return NotImplemented
        return self.exact == other.exact and self._terms == other._terms

    def __hash__(self):
        return hash((self.exact, frozenset(self._terms.items())))

    # -- conversions ------------------------------------------------------------

    def to_float(self) -> "Operator":
        """Explicit coercion from exact to float mode."""
        if not self.exact:
            return self
        return Operator(
            {s: complex(c) for s, c in self._terms.items()}, False, self.time, self.base
        )

    def with_labels(self, time, base=None) -> "Operator":
        return Operator(self._terms, self.exact, time, base)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for s, c in sorted(self._terms.items()):
            cs = str(c) if self.exact else format(complex(c), "g")
            word = " ".join(f"U({double_str(k)})" for k in s) if s else "1"
            parts.append(f"({cs})·{word}")
        return " + ".join(parts)

    def __repr__(self):
        mode = "exact" if self.exact else "float"
        return f"<Operator {mode}, {len(self._terms)} terms>"


# -- module-level operations ---------------------------------------------------


def op_mul(x: Operator, y: Operator) -> Operator:
    return x * y


def op_adjoint(x: Operator) -> Operator:
    return x.adjoint()


def normalized_trace(x: Operator):
    return x.trace()


def product_trace(x: Operator, y: Operator):
    """Normalized trace of x*y without forming the product.

    Monomials are trace-orthogonal: tr(U_S U_T) vanishes unless S = T, and
    U_S U_S is the identity times the reversal sign of S.
    """
    x._check_mode(y)
    total = _zero(x.exact)
    terms = y._terms
    for s, cx in x._terms.items():
        cy = terms.get(s)
        if cy is not None:
            prod = cx * cy
            total = total + (-prod if _reversal_sign(s) < 0 else prod)
    return total


def commutes(x: Operator, y: Operator, tol: float = DEFAULT_TOL) -> bool:
    """True iff xy - yx vanishes (exactly, or below tol in float mode)."""
    return (x * y - y * x).is_close_to_zero(tol)


def is_projection(x: Operator, tol: float = DEFAULT_TOL) -> bool:
    """True iff x is self-adjoint and idempotent within the mode tolerance."""
    return (x - x.adjoint()).is_close_to_zero(tol) and (x * x - x).is_close_to_zero(tol)


def support_interval(x: Operator):
    """Smallest half-integer interval carrying every monomial of x.

    Returns (i, j) as Fractions, or None for multiples of the identity.
    Raises on the zero operator, whose support is undefined.
    """
    if x.is_zero:
        raise PreconditionError("the zero operator has no support")
    sites = [s for term in x._terms for s in term]
    if not sites:
        return None
    return (from_double(min(sites)), from_double(max(sites)))


def localization(x: Operator) -> DoubleCone:
    """The double cone in which x is localized.

    Surface operators (time label 0) live over their site hull at translate
    0.  Evolved operators carry the surface interval of their preimage and
    live over it at their time label.  Operators without a label fall back
    to the site hull of their expansion, which is always a valid (if not
    tight) localization at translate 0.
    """
    if x.time not in (0, None) and x.base is not None:
        return DoubleCone(x.time, x.base[0], x.base[1])
    span = support_interval(x)
    if span is None:
        raise PreconditionError("multiples of the identity are localized everywhere")
    return DoubleCone(0, to_double(span[0]), to_double(span[1]))


# -- dense matrix oracle ---------------------------------------------------------

_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Z = np.array([[1, 0], [0, -1]], dtype=complex)
_I2 = np.eye(2, dtype=complex)

_relations_checked = False


def _window_qubits(window) -> tuple[int, int]:
    i2, j2 = (to_double(window[0]), to_double(window[1]))
    if i2 > j2:
        raise PreconditionError("window needs i <= j")
    return i2 // 2, (j2 + 1) // 2


def _monomial_matrix(sites: tuple, q0: int, q1: int) -> np.ndarray:
    """Dense matrix of one monomial.

    Each per-qubit word of X and Z factors reduces to phase * X^a Z^b, so
    the whole monomial is a signed permutation matrix assembled in O(dim):
    column z maps to row z ^ xmask with sign (-1)^popcount(z & zmask).
    """
    factors = {}
    for s in sites:
        if s % 2 == 0:
            k = s // 2
            factors[k] = factors.get(k, _I2) @ _Z
        else:
            k = (s - 1) // 2
            factors[k] = factors.get(k, _I2) @ _X
            factors[k + 1] = factors.get(k + 1, _I2) @ _X
    n = q1 - q0 + 1
    dim = 1 << n
    phase = 1.0 + 0j
    xmask = 0
    zmask = 0
    for q, f in factors.items():
        bit = 1 << (q1 - q)
        if f[0, 1] == 0 and f[1, 0] == 0:
            if f[0, 0] != f[1, 1]:
                zmask |= bit
            phase *= f[0, 0]
        else:
            xmask |= bit
            if f[0, 1] != f[1, 0]:
                zmask |= bit
            phase *= f[1, 0]
    cols = np.arange(dim)
    signs = np.where(np.bitwise_count(cols & zmask) % 2, -1.0, 1.0)
    out = np.zeros((dim, dim), dtype=complex)
    out[cols ^ xmask, cols] = phase * signs
    return out


def _check_relations():
    """Verify the qubit images satisfy the generator relations once."""
    global _relations_checked
    if _relations_checked:
        return
    q0, q1 = 0, 2
    sites = [0, 1, 2, 3, 4]  # doubled: 0, 1/2, 1, 3/2, 2
    mats = {s: _monomial_matrix((s,), q0, q1) for s in sites}
    for a in sites:
        for b in sites:
            sign = -1 if abs(a - b) == 1 else 1
            if not np.array_equal(mats[a] @ mats[b], sign * (mats[b] @ mats[a])):
                raise AssertionError("qubit representation violates the generator relations")
        if not np.array_equal(mats[a] @ mats[a], np.eye(8, dtype=complex)):
            raise AssertionError("qubit representation violates U^2 = 1")
    _relations_checked = True


def to_matrix(x: Operator, window) -> np.ndarray:
    """Dense matrix of x on a window (i, j) of half-integer sites.

    The window is mapped to qubits floor(i)..ceil(j); the support of x must
    fit inside the window.
    """
    _check_relations()
    w_i2, w_j2 = to_double(window[0]), to_double(window[1])
    q0, q1 = _window_qubits(window)
    dim = 2 ** (q1 - q0 + 1)
    out = np.zeros((dim, dim), dtype=complex)
    for sites, coeff in x._terms.items():
        if sites and (sites[0] < w_i2 or sites[-1] > w_j2):
            raise PreconditionError(
                f"support {double_str(sites[0])}..{double_str(sites[-1])} "
                f"exceeds window {double_str(w_i2)}..{double_str(w_j2)}"
            )
        out += complex(coeff) * _monomial_matrix(sites, q0, q1)
    return out
