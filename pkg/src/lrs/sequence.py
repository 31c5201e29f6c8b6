"""Exact linear recurring sequences with bilateral extension.

A sequence of order r is fixed by coefficients (p_1, ..., p_r), p_r != 0,
and by initial terms a_0, ..., a_{r-1}:

    a_n = p_1 a_{n-1} + p_2 a_{n-2} + ... + p_r a_{n-r}        (n >= r)

Because p_r is nonzero the recurrence also runs backwards,

    a_{n-r} = (a_n - p_1 a_{n-1} - ... - p_{r-1} a_{n-r+1}) / p_r,

which extends every sequence down to index -(r-1).  All arithmetic is
exact over Fraction; floats are rejected at the boundary.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Union

from .errors import SpecError

Rational = Fraction
RationalLike = Union[Fraction, int, str]


def as_fraction(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or 'p/q' string to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise SpecError(f"not a rational: {value!r}")
    if isinstance(value, float):
        raise SpecError(
            f"floats are not exact; pass an int, Fraction or 'p/q' string, got {value!r}"
        )
    if isinstance(value, (int, str)):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise SpecError(f"not a rational: {value!r}") from exc
    raise SpecError(f"not a rational: {value!r}")


def format_rational(value: Fraction) -> str:
    """Render 3/4 as '3/4' and 5/1 as '5'."""
    return str(value)


@dataclass(frozen=True)
class CoefficientSet:
    """Recurrence coefficients (p_1, ..., p_r) with p_r != 0."""

    coefficients: tuple[Fraction, ...]

    def __init__(self, coefficients: Iterable[RationalLike]):
        coeffs = tuple(as_fraction(p) for p in coefficients)
        if not coeffs:
            raise SpecError("a recurrence needs at least one coefficient")
        if coeffs[-1] == 0:
            raise SpecError("the trailing coefficient p_r must be nonzero")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def order(self) -> int:
        return len(self.coefficients)

    def p(self, j: int) -> Fraction:
        """The coefficient p_j, 1-based as in the recurrence."""
        if not 1 <= j <= self.order:
            raise SpecError(f"coefficient index {j} outside 1..{self.order}")
        return self.coefficients[j - 1]

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coefficients)

    def __len__(self) -> int:
        return len(self.coefficients)


@dataclass(frozen=True)
class SequenceSpec:
    """A recurrence together with its initial terms a_0, ..., a_{r-1}."""

    coefficients: CoefficientSet
    initials: tuple[Fraction, ...]

    def __init__(
        self,
        coefficients: CoefficientSet | Iterable[RationalLike],
        initials: Iterable[RationalLike],
    ):
        if not isinstance(coefficients, CoefficientSet):
            coefficients = CoefficientSet(coefficients)
        values = tuple(as_fraction(a) for a in initials)
        if len(values) != coefficients.order:
            raise SpecError(
                f"expected {coefficients.order} initial terms, got {len(values)}"
            )
        object.__setattr__(self, "coefficients", coefficients)
        object.__setattr__(self, "initials", values)

    @property
    def order(self) -> int:
        return self.coefficients.order

    @property
    def is_irs(self) -> bool:
        """True if the initials are (0, ..., 0, 1)."""
        r = self.order
        return self.initials == (Fraction(0),) * (r - 1) + (Fraction(1),)


def make_irs(coefficients: CoefficientSet | Iterable[RationalLike]) -> SequenceSpec:
    """Impulse response spec for the given coefficients: initials (0, ..., 0, 1)."""
    if not isinstance(coefficients, CoefficientSet):
        coefficients = CoefficientSet(coefficients)
    r = coefficients.order
    return SequenceSpec(coefficients, (0,) * (r - 1) + (1,))


class BilateralSequence:
    """Lazily extended term cache for a SequenceSpec.

    Terms are defined for every n >= -(r-1); asking below that floor is an
    error because the backward recurrence would need terms the spec does
    not determine without further choices.  Instances may be shared
    between threads; the cache is guarded by a lock.
    """

    def __init__(self, spec: SequenceSpec):
        self.spec = spec
        self._base = spec.order - 1  # _values[i] holds a_{i - _base}
        self._lock = threading.Lock()
        self._values = self._seed()

    def _seed(self) -> list[Fraction]:
        spec = self.spec
        r = spec.order
        p = spec.coefficients.coefficients
        known = {n: spec.initials[n] for n in range(r)}
        for n in range(-1, -r, -1):
            # a_n = (a_{n+r} - sum_{j=1}^{r-1} p_j a_{n+r-j}) / p_r
            acc = known[n + r]
            for j in range(1, r):
                acc -= p[j - 1] * known[n + r - j]
            known[n] = acc / p[r - 1]
        return [known[n] for n in range(-r + 1, r)]

    @property
    def floor(self) -> int:
        """Lowest defined index, -(r-1)."""
        return -self._base

    def term(self, n: int) -> Fraction:
        """The exact term a_n for n >= -(r-1)."""
        if n < -self._base:
            raise SpecError(
                f"index {n} below the bilateral floor {-self._base} for order {self.spec.order}"
            )
        with self._lock:
            self._extend(n)
            return self._values[n + self._base]

    def terms_range(self, lo: int, hi: int) -> list[Fraction]:
        """Terms a_lo, ..., a_hi inclusive."""
        if lo > hi:
            raise SpecError(f"empty range {lo}..{hi}")
        if lo < -self._base:
            raise SpecError(
                f"index {lo} below the bilateral floor {-self._base} for order {self.spec.order}"
            )
        with self._lock:
            self._extend(hi)
            return self._values[lo + self._base : hi + self._base + 1]

    def _extend(self, n: int) -> None:
        # caller holds the lock
        p = self.spec.coefficients.coefficients
        r = self.spec.order
        values = self._values
        while len(values) - self._base <= n:
            m = len(values)  # position of the new term in the cache
            acc = Fraction(0)
            for j in range(1, r + 1):
                acc += p[j - 1] * values[m - j]
            values.append(acc)


def spec_to_json(spec: SequenceSpec) -> str:
    """Serialize a spec; rationals become 'p/q' strings."""
    payload = {
        "coefficients": [str(p) for p in spec.coefficients],
        "initials": [str(a) for a in spec.initials],
    }
    return json.dumps(payload)


def spec_from_json(text: str) -> SequenceSpec:
    """Parse the JSON produced by spec_to_json."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"invalid spec JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise SpecError("spec JSON must be an object")
    try:
        coeffs = payload["coefficients"]
        initials = payload["initials"]
    except KeyError as exc:
        raise SpecError(f"spec JSON missing key {exc}") from exc
    if not isinstance(coeffs, list) or not isinstance(initials, list):
        raise SpecError("'coefficients' and 'initials' must be arrays")
    return SequenceSpec(coeffs, initials)
