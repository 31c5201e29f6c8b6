"""Root-based closed forms, evaluated in high-precision complex arithmetic.

The characteristic polynomial t^r - p_1 t^{r-1} - ... - p_r is solved by
simultaneous (Aberth) iteration at a working precision a little above the
requested one.  Approximations are then clustered into distinct roots
with multiplicities; clusters that cannot be separated decisively are an
error rather than a guess, because a wrong multiplicity silently changes
the closed form.

Closed forms are verification artifacts here: the exact recurrence is
always the authority, and these evaluations are compared against it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp, mpc, mpf

from .errors import AmbiguousClusterError, RootFindingError, SpecError
from .genfunc import Polynomial
from .irs_algebra import represent_weights
from .sequence import CoefficientSet, SequenceSpec

DEFAULT_PRECISION_BITS = 256


def characteristic_polynomial(coefficients: CoefficientSet) -> Polynomial:
    """Exact monic characteristic polynomial t^r - p_1 t^{r-1} - ... - p_r."""
    if not isinstance(coefficients, CoefficientSet):
        coefficients = CoefficientSet(coefficients)
    p = coefficients.coefficients
    r = len(p)
    ascending = [-p[r - 1 - k] for k in range(r)] + [Fraction(1)]
    return Polynomial(ascending)


@dataclass(frozen=True)
class RootDecomposition:
    """Distinct characteristic roots with multiplicities.

    roots are (value, multiplicity) pairs sorted by descending real part
    then descending imaginary part; multiplicities sum to the order.
    """

    roots: tuple[tuple[mpc, int], ...]
    precision_bits: int
    characteristic: Polynomial
    max_residual: mpf

    @property
    def order(self) -> int:
        return sum(m for _, m in self.roots)


def _to_mpf(x: Fraction) -> mpf:
    return mpf(x.numerator) / mpf(x.denominator)


def _eval_poly(desc: list[mpc], z: mpc) -> mpc:
    acc = desc[0]
    for c in desc[1:]:
        acc = acc * z + c
    return acc


def _derivative(desc: list[mpc]) -> list[mpc]:
    n = len(desc) - 1
    return [desc[k] * (n - k) for k in range(n)]


def _aberth(desc: list[mpc], workprec: int) -> list[mpc]:
    """All roots of the monic polynomial given by descending coefficients."""
    r = len(desc) - 1
    deriv = _derivative(desc)
    radius = 1 + max(abs(c) for c in desc[1:]) if r > 0 else mpf(1)
    z = [
        radius * mpc(mp.cos(theta), mp.sin(theta))
        for theta in (mpf(2) * mp.pi * k / r + mpf(2) / 5 for k in range(r))
    ]
    # Multiple roots pull convergence down to a linear rate, so the cap
    # scales with the precision rather than staying constant.
    max_iter = 60 + 4 * workprec
    stop = mpf(2) ** (-(workprec - 8))
    best = None
    stall = 0
    for _ in range(max_iter):
        biggest = mpf(0)
        for i in range(r):
            pv = _eval_poly(desc, z[i])
            dv = _eval_poly(deriv, z[i])
            if dv == 0:
                z[i] += stop + mpf(1) / 1024  # nudge off a stationary point
                biggest = max(biggest, mpf(1))
                continue
            w = pv / dv
            s = mpc(0)
            for j in range(r):
                if j != i:
                    s += 1 / (z[i] - z[j])
            denom = 1 - w * s
            delta = w if denom == 0 else w / denom
            z[i] -= delta
            biggest = max(biggest, abs(delta) / (1 + abs(z[i])))
        if biggest <= stop:
            break
        # Multiple roots plateau at the half-precision noise floor long
        # before the stop threshold; bail out once progress stalls.
        if best is None or biggest < best * mpf("0.9"):
            best = biggest if best is None else min(best, biggest)
            stall = 0
        else:
            stall += 1
            if stall >= 20:
                break
    return z


def _cluster(points: list[mpc], precision_bits: int) -> list[list[mpc]]:
    """Group approximations within 2^-(precision_bits/3) of each other.

    Raises AmbiguousClusterError when the grouping is borderline: either a
    chained cluster wider than the radius, or two clusters separated by
    less than eight radii.  Both mean the precision cannot support a
    confident multiplicity call.
    """
    n = len(points)
    radius = mpf(2) ** (-(precision_bits // 3))
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if abs(points[i] - points[j]) <= radius:
                parent[find(i)] = find(j)
    groups: dict[int, list[mpc]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(points[i])
    clusters = list(groups.values())
    for members in clusters:
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                if abs(members[i] - members[j]) > radius:
                    raise AmbiguousClusterError(
                        "chained root cluster wider than the clustering radius; "
                        "raise precision_bits"
                    )
    for a in range(len(clusters)):
        for b in range(a + 1, len(clusters)):
            gap = min(
                abs(x - y) for x in clusters[a] for y in clusters[b]
            )
            if gap <= 8 * radius:
                raise AmbiguousClusterError(
                    "two root clusters closer than eight clustering radii; "
                    "raise precision_bits"
                )
    return clusters


def characteristic_roots(
    coefficients: CoefficientSet, precision_bits: int = DEFAULT_PRECISION_BITS
) -> RootDecomposition:
    """Distinct roots of the characteristic polynomial with multiplicities."""
    if not isinstance(coefficients, CoefficientSet):
        coefficients = CoefficientSet(coefficients)
    if precision_bits < 32:
        raise SpecError(f"precision_bits must be at least 32, got {precision_bits}")
    char = characteristic_polynomial(coefficients)
    r = coefficients.order
    workprec = precision_bits + max(64, 8 * r)
    with mp.workprec(workprec):
        desc = [_to_mpf(char.coefficient(r - k)) for k in range(r + 1)]
        desc_c = [mpc(c) for c in desc]
        approx = _aberth(desc_c, workprec)
        clusters = _cluster(approx, precision_bits)
        roots: list[tuple[mpc, int]] = []
        for members in clusters:
            mult = len(members)
            center = sum(members, mpc(0)) / mult
            center = _polish(desc_c, center, mult)
            if abs(center.imag) <= mpf(2) ** (-(precision_bits // 2)) * (1 + abs(center)):
                center = mpc(center.real, 0)
            roots.append((center, mult))
        tol_base = mpf(2) ** (-(precision_bits // 2))
        max_residual = mpf(0)
        for value, _ in roots:
            residual = abs(_eval_poly(desc_c, value))
            scale = max(mpf(1), abs(value) ** r)
            if residual > tol_base * scale:
                raise RootFindingError(
                    f"root residual {mp.nstr(residual, 8)} exceeds tolerance; "
                    "raise precision_bits"
                )
            max_residual = max(max_residual, residual)
        roots.sort(key=lambda rm: (-rm[0].real, -rm[0].imag))
    return RootDecomposition(tuple(roots), precision_bits, char, max_residual)


def _polish(desc: list[mpc], z: mpc, mult: int) -> mpc:
    # Newton on the (mult-1)-th derivative: a multiplicity-m root of p is a
    # simple root of p^(m-1), so the step converges quadratically again.
    target = desc
    for _ in range(mult - 1):
        target = _derivative(target)
    deriv = _derivative(target)
    for _ in range(6):
        dv = _eval_poly(deriv, z)
        if dv == 0:
            break
        z = z - _eval_poly(target, z) / dv
    return z


# ---------------------------------------------------------------------------
# evaluation


def _partial_fraction_coefficients(
    decomposition: RootDecomposition,
) -> list[tuple[mpc, int, list[mpc]]]:
    """Per distinct root alpha: coefficients A_i of (1 - alpha t)^-i.

    Writing the impulse response generating function as
    t^{r-1} / prod_j (1 - alpha_j t)^{m_j}, the list returned for root j
    holds [A_1, ..., A_m] from the expansion around t = 1/alpha_j.
    """
    out = []
    for j, (alpha, mult) in enumerate(decomposition.roots):
        # Series of prod_{k != j} (1 - alpha_k (1-u)/alpha_j)^{m_k} in u,
        # truncated at degree mult-1, then inverted.
        series = [mpc(1)] + [mpc(0)] * (mult - 1)
        for k, (beta, mk) in enumerate(decomposition.roots):
            if k == j:
                continue
            ratio = beta / alpha
            for _ in range(mk):
                prev = list(series)
                for d in range(mult):
                    low = prev[d] * (1 - ratio)
                    high = prev[d - 1] * ratio if d > 0 else mpc(0)
                    series[d] = low + high
        inv = [mpc(0)] * mult
        inv[0] = 1 / series[0]
        for d in range(1, mult):
            acc = mpc(0)
            for t in range(1, d + 1):
                acc += series[t] * inv[d - t]
            inv[d] = -acc / series[0]
        # A_{mult - d} is the coefficient of u^d
        a_coeffs = [inv[mult - i] for i in range(1, mult + 1)]
        out.append((alpha, mult, a_coeffs))
    return out


def _binomial_poly(x: int, d: int) -> int:
    # binomial(x, d) continued to negative integer x as the polynomial
    # x(x-1)...(x-d+1)/d!; exact over the integers.
    num = 1
    for t in range(d):
        num *= x - t
    return num // math.factorial(d)


def _irs_value(decomposition: RootDecomposition, n: int) -> mpc:
    r = decomposition.order
    with mp.workprec(decomposition.precision_bits):
        total = mpc(0)
        for alpha, mult, a_coeffs in _partial_fraction_coefficients(decomposition):
            power = alpha ** (n - r + 1)
            inner = mpc(0)
            for i in range(1, mult + 1):
                inner += a_coeffs[i - 1] * _binomial_poly(n - r + i, i - 1)
            total += inner * power
        return total


def irs_closed_form(decomposition: RootDecomposition, n: int) -> mpc:
    """Impulse response term F(n) from the roots alone.

    For simple roots this is sum alpha^n / prod(alpha - beta); multiple
    roots contribute the confluent limit of that expression.  n may be
    any index down to the bilateral floor -(r-1).
    """
    if n < -(decomposition.order - 1):
        raise SpecError(
            f"index {n} below the bilateral floor -(r-1) = {-(decomposition.order - 1)}"
        )
    return _irs_value(decomposition, n)


def closed_form_evaluator(
    spec: SequenceSpec,
    decomposition: RootDecomposition | None = None,
    precision_bits: int = DEFAULT_PRECISION_BITS,
) -> "ClosedFormEvaluator":
    """Evaluator for a_n combining the representation weights with the
    impulse response closed form."""
    if decomposition is None:
        decomposition = characteristic_roots(spec.coefficients, precision_bits)
    lead, weights = represent_weights(spec)
    return ClosedFormEvaluator(spec, decomposition, lead, tuple(weights))


def general_closed_form(
    spec: SequenceSpec,
    decomposition: RootDecomposition | None,
    n: int,
    precision_bits: int = DEFAULT_PRECISION_BITS,
) -> mpc:
    """a_n from the characteristic roots, for any order and multiplicities.

    Pass decomposition=None to have the roots computed here; reuse a
    RootDecomposition across calls when evaluating many indices.
    """
    return closed_form_evaluator(spec, decomposition, precision_bits).value(n)


@dataclass(frozen=True)
class ClosedFormEvaluator:
    spec: SequenceSpec
    decomposition: RootDecomposition
    lead: Fraction
    weights: tuple[Fraction, ...]

    def value(self, n: int) -> mpc:
        """a_n = lead*F(n) + sum_j weights[j]*F(n-1-j), F from the roots."""
        if n < 0:
            raise SpecError(f"closed form evaluation needs n >= 0, got {n}")
        with mp.workprec(self.decomposition.precision_bits):
            total = _to_mpf(self.lead) * _irs_value(self.decomposition, n)
            for j, w in enumerate(self.weights):
                if w != 0:
                    total += _to_mpf(w) * _irs_value(self.decomposition, n - 1 - j)
            return total


def order2_closed_form(
    spec: SequenceSpec,
    n: int,
    precision_bits: int = DEFAULT_PRECISION_BITS,
) -> mpc:
    """Direct two-root formula for order-2 sequences.

    Distinct roots alpha, beta:
        a_n = ((a_1 - beta a_0)/(alpha - beta)) alpha^n
            - ((a_1 - alpha a_0)/(alpha - beta)) beta^n
    Double root alpha:
        a_n = n a_1 alpha^{n-1} - (n-1) a_0 alpha^n
    """
    if spec.order != 2:
        raise SpecError(f"order-2 formula, got order {spec.order}")
    if n < -1:
        raise SpecError(f"index {n} below the bilateral floor -1")
    decomposition = characteristic_roots(spec.coefficients, precision_bits)
    with mp.workprec(precision_bits):
        a0 = _to_mpf(spec.initials[0])
        a1 = _to_mpf(spec.initials[1])
        if len(decomposition.roots) == 1:
            alpha = decomposition.roots[0][0]
            return n * a1 * alpha ** (n - 1) - (n - 1) * a0 * alpha**n
        alpha = decomposition.roots[0][0]
        beta = decomposition.roots[1][0]
        gap = alpha - beta
        return ((a1 - beta * a0) / gap) * alpha**n - ((a1 - alpha * a0) / gap) * beta**n
