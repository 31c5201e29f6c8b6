"""Exact linear algebra connecting a sequence with its impulse response.

Two directions are covered.  Forward: every order-r sequence is a fixed
rational combination of backward shifts of its impulse response (the
representation weights fall out of the initial terms and coefficients).
Inverse: the impulse response is recovered from 2r - 1 consecutive terms
of any single sequence by solving an exact Toeplitz-style system whose
unknowns sit at parity-dependent shifts; the system can be singular, and
exact arithmetic is what lets us say so with certainty.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .errors import SingularMatrixError, SpecError
from .sequence import (
    BilateralSequence,
    RationalLike,
    SequenceSpec,
    as_fraction,
    make_irs,
)


class ExactMatrix:
    """Dense matrix over Fraction with exact determinant and solve."""

    def __init__(self, rows: Iterable[Iterable[RationalLike]]):
        data = [tuple(as_fraction(x) for x in row) for row in rows]
        if not data:
            raise SpecError("matrix needs at least one row")
        width = len(data[0])
        if width == 0 or any(len(row) != width for row in data):
            raise SpecError("matrix rows must be nonempty and equal length")
        self.rows = tuple(data)
        self.nrows = len(data)
        self.ncols = width

    def _scaled_integer_rows(
        self, rhs: Sequence[Fraction] | None
    ) -> tuple[list[list[int]], Fraction]:
        # Clear denominators row by row so Bareiss runs over the integers.
        # The product of the scale factors relates det(int) to det(self).
        scale = Fraction(1)
        out: list[list[int]] = []
        for i, row in enumerate(self.rows):
            entries = list(row)
            if rhs is not None:
                entries.append(rhs[i])
            mult = lcm(*(x.denominator for x in entries))
            scale *= mult
            out.append([int(x * mult) for x in entries])
        return out, scale

    def det(self) -> Fraction:
        """Exact determinant via fraction-free (Bareiss) elimination."""
        if self.nrows != self.ncols:
            raise SpecError("determinant needs a square matrix")
        m, scale = self._scaled_integer_rows(None)
        n = self.nrows
        sign = 1
        prev = 1
        for k in range(n - 1):
            pivot_row = _find_pivot(m, k, n)
            if pivot_row is None:
                return Fraction(0)
            if pivot_row != k:
                m[k], m[pivot_row] = m[pivot_row], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return Fraction(sign * m[n - 1][n - 1]) / scale

    def solve(self, rhs: Sequence[RationalLike]) -> list[Fraction]:
        """Solve self * x = rhs exactly; raise SingularMatrixError if det = 0."""
        if self.nrows != self.ncols:
            raise SpecError("solve needs a square matrix")
        b = [as_fraction(x) for x in rhs]
        if len(b) != self.nrows:
            raise SpecError(f"rhs length {len(b)} != {self.nrows}")
        m, _ = self._scaled_integer_rows(b)
        n = self.nrows
        prev = 1
        for k in range(n - 1):
            pivot_row = _find_pivot(m, k, n)
            if pivot_row is None:
                raise SingularMatrixError("matrix is singular (det = 0)")
            if pivot_row != k:
                m[k], m[pivot_row] = m[pivot_row], m[k]
            for i in range(k + 1, n):
                for j in range(k + 1, n + 1):
                    m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        if m[n - 1][n - 1] == 0:
            raise SingularMatrixError("matrix is singular (det = 0)")
        x = [Fraction(0)] * n
        for i in range(n - 1, -1, -1):
            acc = Fraction(m[i][n])
            for j in range(i + 1, n):
                acc -= m[i][j] * x[j]
            x[i] = acc / m[i][i]
        return x


def _find_pivot(m: list[list[int]], k: int, n: int) -> int | None:
    # Largest-magnitude pivot in column k keeps the integer growth modest.
    best = None
    best_mag = 0
    for i in range(k, n):
        mag = abs(m[i][k])
        if mag > best_mag:
            best, best_mag = i, mag
    return best


# ---------------------------------------------------------------------------
# representation of a sequence by its impulse response


def represent_weights(spec: SequenceSpec) -> tuple[Fraction, list[Fraction]]:
    """Weights (lead, w) with  a_n = lead*F(n) + sum_j w[j]*F(n-1-j).

    F is the impulse response of spec's coefficients, lead = a_{r-1} and
    w[j] = sum_{k=j}^{r-2} a_k p_{r+j-k} for j = 0..r-2.
    """
    r = spec.order
    p = spec.coefficients
    a = spec.initials
    lead = a[r - 1]
    weights = []
    for j in range(r - 1):
        acc = Fraction(0)
        for k in range(j, r - 1):
            acc += a[k] * p.p(r + j - k)
        weights.append(acc)
    return lead, weights


def represent_by_irs(spec: SequenceSpec, n: int, irs: BilateralSequence | None = None) -> Fraction:
    """Evaluate a_n through the impulse response representation.

    Exact for every n >= 0; the value always equals the plain recurrence
    term, which makes this a cheap self-check of the whole machinery.
    """
    if n < 0:
        raise SpecError(f"representation needs n >= 0, got {n}")
    if irs is None:
        irs = BilateralSequence(make_irs(spec.coefficients))
    lead, weights = represent_weights(spec)
    acc = lead * irs.term(n)
    for j, w in enumerate(weights):
        acc += w * irs.term(n - 1 - j)
    return acc


def delta_identity_check(
    coefficients, k: int, n: int, irs: BilateralSequence | None = None
) -> Fraction:
    """Value of sum_{j=0}^{k} p_{r+j-k} F(n-1-j); equals 1 iff n == k.

    Defined for 0 <= k <= r-2 and n in the initial window 0..r-1, which is
    exactly where the representation weights need it to collapse.
    """
    spec = make_irs(coefficients)
    r = spec.order
    if not 0 <= k <= r - 2:
        raise SpecError(f"k must lie in 0..{r - 2}, got {k}")
    if not 0 <= n <= r - 1:
        raise SpecError(f"n must lie in the initial window 0..{r - 1}, got {n}")
    if irs is None:
        irs = BilateralSequence(spec)
    p = spec.coefficients
    acc = Fraction(0)
    for j in range(k + 1):
        acc += p.p(r + j - k) * irs.term(n - 1 - j)
    return acc


# ---------------------------------------------------------------------------
# inverse direction: impulse response out of one sequence


@dataclass(frozen=True)
class ToeplitzSystem:
    """Exact system whose solution writes F(n) as sum c_j a_(n+shift_j).

    Row t states sum_j c_j a_(t+shift_j) = delta_(t,r-1) for t = 0..r-1,
    matching the impulse response on its initial window.  The shifts
    depend on the parity of r: even r uses r/2..1 and -1..-r/2 (no center
    term), odd r uses (r-1)/2..-(r-1)/2 including 0.
    """

    spec: SequenceSpec
    shifts: tuple[int, ...]
    matrix: ExactMatrix
    rhs: tuple[Fraction, ...]


@dataclass(frozen=True)
class IrsRepresentation:
    """Sparse combination F(n) = sum c * a_(n+shift)."""

    terms: tuple[tuple[int, Fraction], ...]

    def evaluate(self, seq: BilateralSequence, n: int) -> Fraction:
        acc = Fraction(0)
        for shift, c in self.terms:
            acc += c * seq.term(n + shift)
        return acc

    def render(self, target: str = "F~_n", source: str = "a") -> str:
        parts = []
        for shift, c in self.terms:
            if shift == 0:
                idx = "n"
            elif shift > 0:
                idx = f"n+{shift}"
            else:
                idx = f"n{shift}"
            parts.append(f"({c})*{source}[{idx}]")
        return f"{target} = " + " + ".join(parts)


def _toeplitz_shifts(r: int) -> tuple[int, ...]:
    if r % 2 == 0:
        half = r // 2
        return tuple(range(half, 0, -1)) + tuple(range(-1, -half - 1, -1))
    half = (r - 1) // 2
    return tuple(range(half, -half - 1, -1))


def build_toeplitz(spec: SequenceSpec) -> ToeplitzSystem:
    """Set up the exact system recovering the impulse response from spec."""
    r = spec.order
    shifts = _toeplitz_shifts(r)
    seq = BilateralSequence(spec)
    rows = [[seq.term(t + s) for s in shifts] for t in range(r)]
    rhs = tuple(Fraction(int(t == r - 1)) for t in range(r))
    return ToeplitzSystem(spec, shifts, ExactMatrix(rows), rhs)


def solve_toeplitz(system: ToeplitzSystem) -> IrsRepresentation:
    """Solve the system exactly; singular systems raise, never approximate."""
    solution = system.matrix.solve(system.rhs)
    return IrsRepresentation(tuple(zip(system.shifts, solution)))


def order2_coefficients(spec: SequenceSpec) -> tuple[Fraction, Fraction]:
    """Closed-form (c1, c2) with F(n) = c1*a_(n+1) + c2*a_(n-1), order 2.

    Needs p_1 != 0 and a_1^2 - a_0 a_1 p_1 - a_0^2 p_2 != 0; either failure
    means no such representation exists for this sequence.
    """
    if spec.order != 2:
        raise SpecError(f"order-2 formula, got order {spec.order}")
    p1, p2 = spec.coefficients.coefficients
    a0, a1 = spec.initials
    core = a1 * a1 - a0 * a1 * p1 - a0 * a0 * p2
    if p1 == 0 or core == 0:
        raise SpecError("no impulse response representation: p_1 or the "
                        "initial-term form a_1^2 - a_0 a_1 p_1 - a_0^2 p_2 vanishes")
    denom = p1 * core
    return (a1 - a0 * p1) / denom, -(a1 * p2) / denom


# ---------------------------------------------------------------------------
# order-2 bases


def _order2_pair(b1: SequenceSpec, b2: SequenceSpec) -> None:
    if b1.order != 2 or b2.order != 2:
        raise SpecError("basis operations are defined for order 2")
    if b1.coefficients != b2.coefficients:
        raise SpecError("basis members must share one coefficient set")


def is_nontrivial_basis(b1: SequenceSpec, b2: SequenceSpec) -> bool:
    """True when (b1, b2) spans the solution space and neither member is
    a disguised impulse response shift (initials (1/p_2, 0))."""
    _order2_pair(b1, b2)
    p2 = b1.coefficients.p(2)
    det = b1.initials[0] * b2.initials[1] - b2.initials[0] * b1.initials[1]
    if det == 0:
        return False
    for b in (b1, b2):
        if b.initials[1] == 0 and b.initials[0] == 1 / p2:
            return False
    return True


def decompose_in_basis(
    target: SequenceSpec, b1: SequenceSpec, b2: SequenceSpec
) -> tuple[Fraction, Fraction]:
    """Exact (c1, c2) with target = c1*b1 + c2*b2, termwise."""
    _order2_pair(b1, b2)
    if target.order != 2 or target.coefficients != b1.coefficients:
        raise SpecError("target must share the basis coefficient set")
    matrix = ExactMatrix(
        [
            [b1.initials[0], b2.initials[0]],
            [b1.initials[1], b2.initials[1]],
        ]
    )
    c1, c2 = matrix.solve(list(target.initials))
    return c1, c2
