"""Applications: Stirling columns, Wythoff-style arrays, boustrophedon.

Three places where a whole family of integer arrays turns out to be
governed by one linear recurrence apparatus: columns of the Stirling
triangle of the second kind are impulse responses, the rows of the
Wythoff and Pell-Wythoff arrays are order-2 sequences seeded by floor
functions of quadratic irrationals, and the boustrophedon transform is
cross-checked through its binomial convolution with the zigzag numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt
from typing import Iterable, Literal

from mpmath import mp, mpf

from .errors import InsufficientRowsError, SpecError
from .genfunc import Polynomial
from .sequence import (
    BilateralSequence,
    CoefficientSet,
    RationalLike,
    SequenceSpec,
    as_fraction,
    make_irs,
)

Variant = Literal["fibonacci", "pell"]


# ---------------------------------------------------------------------------
# Stirling numbers of the second kind


def stirling_coefficients(k: int) -> CoefficientSet:
    """Coefficients (p_1, ..., p_k) with prod_{j=1}^{k} (1 - j t) = 1 - sum p_j t^j.

    The column S(n+1, k) of the Stirling triangle is the impulse response
    of exactly this coefficient set.
    """
    if k < 1:
        raise SpecError(f"k must be >= 1, got {k}")
    poly = Polynomial([1])
    for j in range(1, k + 1):
        poly = poly * Polynomial([1, -j])
    return CoefficientSet(-poly.coefficient(j) for j in range(1, k + 1))


def stirling_column(k: int, count: int) -> list[Fraction]:
    """S(n+1, k) for n = 0..count-1, computed as an impulse response."""
    if count < 0:
        raise SpecError(f"count must be nonnegative, got {count}")
    if count == 0:
        return []
    seq = BilateralSequence(make_irs(stirling_coefficients(k)))
    return seq.terms_range(0, count - 1)


def stirling_triangle(n_max: int) -> list[list[int]]:
    """Rows S(n, k), 0 <= k <= n <= n_max, from the double recurrence.

    S(n+1, k) = k S(n, k) + S(n, k-1) with S(0, 0) = 1; independent of the
    impulse response route, which makes it the oracle for stirling_column.
    """
    if n_max < 0:
        raise SpecError(f"n_max must be nonnegative, got {n_max}")
    rows = [[1]]
    for n in range(n_max):
        prev = rows[-1]
        row = [0] * (n + 2)
        for kk in range(n + 2):
            left = kk * prev[kk] if kk <= n else 0
            down = prev[kk - 1] if kk >= 1 else 0
            row[kk] = left + down
        rows.append(row)
    return rows


# ---------------------------------------------------------------------------
# Wythoff arrays

_FIBONACCI_COEFFS = (1, 1)
_PELL_COEFFS = (2, 1)


def _floor_row_seed(variant: Variant, j: int) -> int:
    # floor((j+1) phi) and floor((j+1)(1+sqrt 2)) via integer square roots:
    # floor((a + sqrt(b))/2) = (a + isqrt(b)) // 2 for irrational sqrt(b).
    if variant == "fibonacci":
        s = j + 1
        return (s + isqrt(5 * s * s)) // 2
    if variant == "pell":
        s = j + 1
        return s + isqrt(2 * s * s) - 1
    raise SpecError(f"unknown variant {variant!r}")


def wythoff_row_spec(variant: Variant, j: int) -> SequenceSpec:
    """Order-2 spec for row j: initials (j, seed_j) under the variant's recurrence."""
    if j < 0:
        raise SpecError(f"row index must be nonnegative, got {j}")
    if variant not in ("fibonacci", "pell"):
        raise SpecError(f"unknown variant {variant!r}")
    coeffs = _FIBONACCI_COEFFS if variant == "fibonacci" else _PELL_COEFFS
    return SequenceSpec(coeffs, (j, _floor_row_seed(variant, j)))


def wythoff_array(variant: Variant, n_rows: int, n_cols: int) -> list[list[int]]:
    """First n_rows x n_cols entries; row j starts at its two seed columns."""
    if n_rows < 0 or n_cols < 0:
        raise SpecError("row and column counts must be nonnegative")
    out = []
    for j in range(n_rows):
        seq = BilateralSequence(wythoff_row_spec(variant, j))
        row = seq.terms_range(0, n_cols - 1) if n_cols else []
        out.append([int(v) for v in row])
    return out


def wythoff_closed_form_check(
    variant: Variant, j: int, n_max: int, precision_bits: int = 256
) -> bool:
    """Exact row terms against the explicit two-power closed form.

    Fibonacci rows:  a_n = ((s - j(1-sqrt5)/2)/sqrt5) phi^n
                         - ((s - j phi)/sqrt5) ((1-sqrt5)/2)^n
    Pell rows:       b_n = ((w - j(1-sqrt2) - 1)/(2 sqrt2)) (1+sqrt2)^n
                         - ((w - j(1+sqrt2) - 1)/(2 sqrt2)) (1-sqrt2)^n
    where s = floor((j+1) phi) and w = floor((j+1)(1+sqrt2)).
    """
    spec = wythoff_row_spec(variant, j)
    seq = BilateralSequence(spec)
    with mp.workprec(precision_bits):
        if variant == "fibonacci":
            sqrt5 = mp.sqrt(5)
            alpha = (1 + sqrt5) / 2
            beta = (1 - sqrt5) / 2
            s = mpf(int(spec.initials[1]))
            c1 = (s - j * beta) / sqrt5
            c2 = (s - j * alpha) / sqrt5
        else:
            sqrt2 = mp.sqrt(2)
            alpha = 1 + sqrt2
            beta = 1 - sqrt2
            w = mpf(int(spec.initials[1]) + 1)
            c1 = (w - j * beta - 1) / (2 * sqrt2)
            c2 = (w - j * alpha - 1) / (2 * sqrt2)
        tol = mpf(2) ** (-(precision_bits // 2))
        for n in range(n_max + 1):
            approx = c1 * alpha**n - c2 * beta**n
            exact = mpf(int(seq.term(n)))
            if abs(approx - exact) > tol * max(mpf(1), abs(exact)):
                return False
    return True


@dataclass(frozen=True)
class PartitionCheck:
    """Outcome of the disjoint-cover check over [0, bound]."""

    ok: bool
    duplicates: tuple[tuple[int, int], ...]  # (value, occurrences > 1)
    missing: tuple[int, ...]


def wythoff_partition_check(n_rows: int, bound: int) -> PartitionCheck:
    """Every integer in [0, bound] exactly once across the Fibonacci array.

    Counted entries are the array proper (columns n >= 2 of each row);
    the integer 0 is covered once by the top left seed of row 0.  Raises
    InsufficientRowsError when rows beyond n_rows would still contribute
    entries <= bound, since missing values would then say nothing about
    the partition property itself.
    """
    if n_rows < 0 or bound < 0:
        raise SpecError("n_rows and bound must be nonnegative")
    # Row j's smallest counted entry is j + floor((j+1) phi), increasing in j.
    def first_entry(j: int) -> int:
        return j + _floor_row_seed("fibonacci", j)

    if n_rows == 0 or first_entry(n_rows) <= bound:
        raise InsufficientRowsError(
            f"row {n_rows} still holds entries <= {bound}; generate more rows"
        )
    counts = {0: 1}  # the lone 0 in row 0, column 0
    for j in range(n_rows):
        seq = BilateralSequence(wythoff_row_spec("fibonacci", j))
        n = 2
        while True:
            value = int(seq.term(n))
            if value > bound:
                break
            counts[value] = counts.get(value, 0) + 1
            n += 1
    duplicates = tuple(
        (v, c) for v, c in sorted(counts.items()) if v <= bound and c > 1
    )
    missing = tuple(v for v in range(bound + 1) if v not in counts)
    return PartitionCheck(not duplicates and not missing, duplicates, missing)


# ---------------------------------------------------------------------------
# boustrophedon transform


def boustrophedon(
    values: Iterable[RationalLike],
) -> tuple[list[Fraction], list[list[Fraction]]]:
    """Transform b and its triangle: T(n,0) = a_n fed in alternating rows.

    T(n+1, k+1) = T(n+1, k) + T(n, n-k), and b_n = T(n, n).
    """
    a = [as_fraction(v) for v in values]
    triangle: list[list[Fraction]] = []
    b: list[Fraction] = []
    for n, a_n in enumerate(a):
        row = [a_n]
        for k in range(n):
            row.append(row[k] + triangle[n - 1][n - 1 - k])
        triangle.append(row)
        b.append(row[n])
    return b, triangle


def zigzag_numbers(count: int) -> list[Fraction]:
    """Transform of (1, 0, 0, ...): 1, 1, 1, 2, 5, 16, 61, ..."""
    if count < 0:
        raise SpecError(f"count must be nonnegative, got {count}")
    if count == 0:
        return []
    b, _ = boustrophedon([1] + [0] * (count - 1))
    return b


def boustrophedon_egf_check(values: Iterable[RationalLike]) -> bool:
    """Binomial convolution identity b_n = sum_k C(n,k) Z(n-k) a_k.

    Z are the zigzag numbers, i.e. the transform of the delta sequence;
    on the exponential generating function side this is multiplication
    by sec + tan.  Exact, so the return value is a clean boolean.
    """
    a = [as_fraction(v) for v in values]
    b, _ = boustrophedon(a)
    z = zigzag_numbers(len(a))
    for n in range(len(a)):
        conv = sum((comb(n, k) * z[n - k] * a[k] for k in range(n + 1)), Fraction(0))
        if conv != b[n]:
            return False
    return True
