"""Exact coefficient arithmetic: binomials and polynomials in pi over Q.

Every complete integral evaluated by this package lies in Q[pi] with degree
at most p + 1, so a dense vector of ``fractions.Fraction`` coefficients is
the entire value type.  All operations are pure and results are immutable.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

import mpmath as mp

Scalar = Union[int, Fraction]

#: Default working precision (decimal digits) for numeric rendering.  Leaves
#: a wide guard band below the tightest numeric tolerance used anywhere.
DEFAULT_DIGITS = 50


def binomial(n: int, k: int) -> int:
    """C(n, k), with C(n, k) = 0 whenever k < 0 or k > n."""
    if n < 0:
        raise ValueError(f"binomial: n must be nonnegative, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"exact scalar expected, got {type(value).__name__}")


class PiPoly:
    """An element of Q[pi]; ``coeffs[j]`` is the coefficient of pi**j.

    Canonical form strips trailing zero coefficients, so the zero polynomial
    has an empty coefficient tuple and equality/hash are structural.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()) -> None:
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs: tuple[Fraction, ...] = tuple(cs)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "PiPoly":
        return cls()

    @classmethod
    def constant(cls, value: Scalar) -> "PiPoly":
        return cls((value,))

    @classmethod
    def pi_power(cls, power: int, coeff: Scalar = 1) -> "PiPoly":
        """coeff * pi**power."""
        if power < 0:
            raise ValueError("pi_power: power must be nonnegative")
        return cls((0,) * power + (coeff,))

    # -- structure ---------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree in pi; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def coeff(self, power: int) -> Fraction:
        if 0 <= power < len(self._coeffs):
            return self._coeffs[power]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, PiPoly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self == PiPoly.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> "PiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return PiPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "PiPoly":
        return PiPoly(tuple(-c for c in self._coeffs))

    def __sub__(self, other) -> "PiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "PiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "PiPoly":
        if isinstance(other, (int, Fraction)):
            s = _as_fraction(other)
            return PiPoly(tuple(c * s for c in self._coeffs))
        if isinstance(other, PiPoly):
            if not self._coeffs or not other._coeffs:
                return PiPoly.zero()
            out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
            for i, a in enumerate(self._coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
            return PiPoly(out)
        return NotImplemented

    __rmul__ = __mul__

    @staticmethod
    def _coerce(other):
        if isinstance(other, PiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return PiPoly.constant(other)
        return NotImplemented

    # -- numeric rendering -------------------------------------------------

    def evaluate(self, digits: int = DEFAULT_DIGITS) -> mp.mpf:
        """Numeric value with ``digits`` decimal digits of working precision.

        The absolute error is below 10**(1 - digits) * max(1, |value|): the
        working precision is widened by the size of the largest term, so the
        bound survives the (sometimes enormous) cancellation between
        alternating coefficients.
        """
        if digits < 10:
            raise ValueError("evaluate: digits must be >= 10")
        headroom = 0
        for j, c in enumerate(self._coeffs):
            if c == 0:
                continue
            # decimal-digit overestimate of log10 |c * pi^j|
            size = len(str(abs(c.numerator))) - len(str(c.denominator)) + (j + 1) // 2 + 1
            headroom = max(headroom, size)
        with mp.workdps(digits + 10 + headroom):
            pi = mp.pi
            acc = mp.mpf(0)
            for j, c in enumerate(self._coeffs):
                acc += mp.mpf(c.numerator) / c.denominator * pi**j
        with mp.workdps(digits):
            return +acc

    # -- serialization -----------------------------------------------------

    def to_dict(self) -> dict:
        return {"pi_coeffs": [str(c) for c in self._coeffs]}

    @classmethod
    def from_dict(cls, data: dict) -> "PiPoly":
        return cls(Fraction(c) for c in data["pi_coeffs"])

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for power in range(self.degree, -1, -1):
            c = self._coeffs[power]
            if c == 0:
                continue
            term = _term_text(c, power)
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def latex(self) -> str:
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for power in range(self.degree, -1, -1):
            c = self._coeffs[power]
            if c == 0:
                continue
            term = _term_latex(c, power)
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"PiPoly({list(self._coeffs)!r})"


def _term_text(c: Fraction, power: int) -> str:
    num, den = abs(c.numerator), c.denominator
    if power == 0:
        return f"{num}/{den}" if den > 1 else f"{num}"
    pi_s = "π" if power == 1 else f"π^{power}"
    head = "" if num == 1 else f"{num}"
    tail = "" if den == 1 else f"/{den}"
    return f"{head}{pi_s}{tail}"


def _term_latex(c: Fraction, power: int) -> str:
    num, den = abs(c.numerator), c.denominator
    pi_s = "" if power == 0 else ("\\pi" if power == 1 else f"\\pi^{{{power}}}")
    if den == 1:
        head = "" if (num == 1 and power > 0) else f"{num}"
        return f"{head}{pi_s}"
    top = ("" if (num == 1 and power > 0) else f"{num}") + pi_s
    return f"\\frac{{{top}}}{{{den}}}"
