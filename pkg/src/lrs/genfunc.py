"""Rational generating functions for linear recurring sequences.

Every order-r sequence has generating function N(t) / D(t) with

    D(t) = 1 - p_1 t - ... - p_r t^r
    N(t) = a_0 + sum_{n=1}^{r-1} (a_n - sum_{j=1}^{n} p_j a_{n-j}) t^n.

For the impulse response the numerator collapses to t^{r-1}; in general
the numerator coefficients are exactly the weights that express the
sequence as a combination of forward shifts of the impulse response.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import SpecError
from .sequence import RationalLike, SequenceSpec, as_fraction


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial over Fraction, coefficients in ascending order.

    Normalized: no trailing zero coefficients; the zero polynomial has an
    empty coefficient tuple and degree -1.
    """

    coefficients: tuple[Fraction, ...]

    def __init__(self, coefficients: Iterable[RationalLike] = ()):
        coeffs = [as_fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, k: int) -> Fraction:
        if k < 0:
            raise SpecError(f"negative coefficient index {k}")
        if k < len(self.coefficients):
            return self.coefficients[k]
        return Fraction(0)

    def __call__(self, x: RationalLike) -> Fraction:
        x = as_fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coefficients), len(other.coefficients))
        return Polynomial(
            self.coefficient(k) + other.coefficient(k) for k in range(n)
        )

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coefficients), len(other.coefficients))
        return Polynomial(
            self.coefficient(k) - other.coefficient(k) for k in range(n)
        )

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coefficients)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero or other.is_zero:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return Polynomial(out)

    def render(self, var: str = "t") -> str:
        """Human form, e.g. '2 - t - 2*t^2'."""
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for k, c in enumerate(self.coefficients):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if k == 0:
                body = str(mag)
            else:
                power = var if k == 1 else f"{var}^{k}"
                if mag == 1:
                    body = power
                else:
                    coeff = str(mag) if mag.denominator == 1 else f"({mag})"
                    body = f"{coeff}*{power}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)


@dataclass(frozen=True)
class RationalGF:
    """Proper rational generating function N(t) / D(t) with D(0) = 1."""

    numerator: Polynomial
    denominator: Polynomial

    def __init__(self, numerator: Polynomial, denominator: Polynomial):
        if denominator.coefficient(0) != 1:
            raise SpecError("denominator must have constant term 1")
        if not numerator.is_zero and numerator.degree >= denominator.degree:
            raise SpecError("numerator degree must stay below denominator degree")
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "denominator", denominator)

    @property
    def order(self) -> int:
        return self.denominator.degree

    def expand(self, count: int) -> list[Fraction]:
        """First count series coefficients by long division.

        With D(t) = 1 - sum p_j t^j the coefficients obey
        c_n = N_n + sum_{j=1}^{r} p_j c_{n-j}.
        """
        if count < 0:
            raise SpecError(f"count must be nonnegative, got {count}")
        r = self.denominator.degree
        p = [-self.denominator.coefficient(j) for j in range(1, r + 1)]
        out: list[Fraction] = []
        for n in range(count):
            acc = self.numerator.coefficient(n)
            for j in range(1, min(n, r) + 1):
                acc += p[j - 1] * out[n - j]
            out.append(acc)
        return out

    def render(self, var: str = "t") -> str:
        return f"({self.numerator.render(var)}) / ({self.denominator.render(var)})"


def genfunc_of(spec: SequenceSpec) -> RationalGF:
    """Rational generating function of the sequence described by spec."""
    r = spec.order
    p = spec.coefficients.coefficients
    a = spec.initials
    num = [a[0]]
    for n in range(1, r):
        c = a[n]
        for j in range(1, n + 1):
            c -= p[j - 1] * a[n - j]
        num.append(c)
    den = [Fraction(1)] + [-pj for pj in p]
    return RationalGF(Polynomial(num), Polynomial(den))


def irs_from_gf_shift(spec: SequenceSpec) -> list[tuple[int, Fraction]]:
    """Weights (shift, w) with  a_n = sum w * irs_term(n + shift).

    The numerator coefficient of t^k contributes weight at shift r-1-k;
    zero weights are omitted.  The shifts are nonnegative, so the
    combination only ever reads forward impulse-response terms.
    """
    gf = genfunc_of(spec)
    r = spec.order
    pairs = [
        (r - 1 - k, gf.numerator.coefficient(k))
        for k in range(r)
        if gf.numerator.coefficient(k) != 0
    ]
    return sorted(pairs, key=lambda sw: -sw[0])
