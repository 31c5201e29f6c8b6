"""Identity families for order-2 recurring sequences, verified exactly.

Everything here runs over the unbounded bilateral extension: with p_2
nonzero the recurrence determines F(n) for every integer n, negative
indices included, and all checks compare exact Fractions.  A verdict
either passes over the swept parameter ranges or carries the first
counterexample found.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd
from typing import Callable, Iterable, Mapping, Union

from .errors import SpecError, UnknownIdentityError
from .irs_algebra import order2_coefficients
from .sequence import (
    BilateralSequence,
    RationalLike,
    SequenceSpec,
    as_fraction,
    make_irs,
)

IndexArg = Union[int, Iterable[int]]


class BilateralOrder2:
    """Order-2 sequence memoized over all of Z (no index floor)."""

    def __init__(self, p1: RationalLike, p2: RationalLike,
                 a0: RationalLike, a1: RationalLike):
        self.p1 = as_fraction(p1)
        self.p2 = as_fraction(p2)
        if self.p2 == 0:
            raise SpecError("p_2 must be nonzero for a bilateral extension")
        self._memo: dict[int, Fraction] = {0: as_fraction(a0), 1: as_fraction(a1)}
        self._lo = 0
        self._hi = 1

    def value(self, n: int) -> Fraction:
        memo = self._memo
        while self._hi < n:
            self._hi += 1
            memo[self._hi] = self.p1 * memo[self._hi - 1] + self.p2 * memo[self._hi - 2]
        while self._lo > n:
            self._lo -= 1
            memo[self._lo] = (memo[self._lo + 2] - self.p1 * memo[self._lo + 1]) / self.p2
        return memo[n]


class BilateralIRS2(BilateralOrder2):
    """Bilateral impulse response: F(0) = 0, F(1) = 1."""

    def __init__(self, p1: RationalLike, p2: RationalLike):
        super().__init__(p1, p2, 0, 1)


@dataclass(frozen=True)
class Counterexample:
    params: Mapping[str, int]
    identity: str
    lhs: Fraction
    rhs: Fraction


@dataclass(frozen=True)
class IdentityVerdict:
    identity_name: str
    parameter_ranges: str
    passed: bool
    counterexample: Counterexample | None = None
    cases: int = 0


PointCheck = Callable[..., list[tuple[str, Fraction, Fraction]]]


def _indices(arg: IndexArg) -> list[int]:
    if isinstance(arg, bool):
        raise SpecError(f"not an index: {arg!r}")
    if isinstance(arg, int):
        return [arg]
    values = [int(v) for v in arg]
    if not values:
        raise SpecError("empty parameter range")
    return values


def _ranges_label(params: dict[str, list[int]]) -> str:
    parts = []
    for key, values in params.items():
        lo, hi = min(values), max(values)
        parts.append(f"{key}={lo}" if lo == hi else f"{key}={lo}..{hi}")
    return ", ".join(parts)


def _sweep(name: str, params: dict[str, list[int]], point: PointCheck) -> IdentityVerdict:
    label = _ranges_label(params)
    checked = 0
    for combo in itertools.product(*params.values()):
        kw = dict(zip(params.keys(), combo))
        for line, lhs, rhs in point(**kw):
            checked += 1
            if lhs != rhs:
                return IdentityVerdict(
                    name, label, False, Counterexample(kw, line, lhs, rhs), checked
                )
    return IdentityVerdict(name, label, True, None, checked)


# ---------------------------------------------------------------------------
# core families


def addition_formula(irs: BilateralIRS2, m: IndexArg, r: IndexArg) -> IdentityVerdict:
    """F(m+r) = F(m)F(r+1) + p2 F(m-1)F(r) over all integer m, r."""

    def point(m: int, r: int):
        lhs = irs.value(m + r)
        rhs = irs.value(m) * irs.value(r + 1) + irs.p2 * irs.value(m - 1) * irs.value(r)
        return [("F(m+r) = F(m)F(r+1) + p2*F(m-1)F(r)", lhs, rhs)]

    return _sweep("addition", {"m": _indices(m), "r": _indices(r)}, point)


def nonlinear_expansion(
    irs: BilateralIRS2, m: IndexArg, n: IndexArg, r: IndexArg
) -> IdentityVerdict:
    """Binomial expansion F(r+mn) = sum_j C(n,j) F(m)^j (p2 F(m-1))^(n-j) F(r+j)."""

    def point(m: int, n: int, r: int):
        if n < 0:
            raise SpecError(f"n must be nonnegative, got {n}")
        fm = irs.value(m)
        fm1 = irs.p2 * irs.value(m - 1)
        rhs = Fraction(0)
        for j in range(n + 1):
            rhs += comb(n, j) * fm**j * fm1 ** (n - j) * irs.value(r + j)
        return [("F(r+mn) = sum_j C(n,j) F(m)^j (p2*F(m-1))^(n-j) F(r+j)",
                 irs.value(r + m * n), rhs)]

    return _sweep(
        "nonlinear", {"m": _indices(m), "n": _indices(n), "r": _indices(r)}, point
    )


def negative_index_suite(irs: BilateralIRS2, m: IndexArg, n: IndexArg) -> IdentityVerdict:
    """The three sums that land on F(-1), F(0), F(1) after full reflection.

    sum_j p2^(n-j+1) C(n,j) F(m)^j F(m-1)^(n-j) F(j-mn-1) = 1
    sum_j p2^(n-j)   C(n,j) F(m)^j F(m-1)^(n-j) F(j-mn)   = 0
    sum_j p2^(n-j)   C(n,j) F(m)^j F(m-1)^(n-j) F(j-mn+1) = 1
    """

    def point(m: int, n: int):
        if n < 0:
            raise SpecError(f"n must be nonnegative, got {n}")
        fm = irs.value(m)
        fm1 = irs.value(m - 1)
        sums = [Fraction(0), Fraction(0), Fraction(0)]
        for j in range(n + 1):
            common = comb(n, j) * fm**j * fm1 ** (n - j)
            sums[0] += irs.p2 ** (n - j + 1) * common * irs.value(j - m * n - 1)
            sums[1] += irs.p2 ** (n - j) * common * irs.value(j - m * n)
            sums[2] += irs.p2 ** (n - j) * common * irs.value(j - m * n + 1)
        return [
            ("sum with F(j-mn-1) = 1", sums[0], Fraction(1)),
            ("sum with F(j-mn) = 0", sums[1], Fraction(0)),
            ("sum with F(j-mn+1) = 1", sums[2], Fraction(1)),
        ]

    return _sweep("negative-index", {"m": _indices(m), "n": _indices(n)}, point)


def _small_m_weights(p1: Fraction, p2: Fraction) -> list[tuple[int, Fraction, Fraction]]:
    # (m, per-j weight, complementary base): F(2) = p1, F(3) = p1^2 + p2,
    # F(4) = p1 (p1^2 + 2 p2), and the base is p2 * F(m-1).
    return [
        (2, p1, p2),
        (3, p1 * p1 + p2, p1 * p2),
        (4, p1 * (p1 * p1 + 2 * p2), p2 * (p1 * p1 + p2)),
    ]


def small_m_suite(irs: BilateralIRS2, n: IndexArg, r: IndexArg) -> IdentityVerdict:
    """The m = 2, 3, 4 instances with the weights written out in p1, p2."""

    def point(n: int, r: int):
        if n < 0:
            raise SpecError(f"n must be nonnegative, got {n}")
        lines = []
        for m, weight, base in _small_m_weights(irs.p1, irs.p2):
            rhs = Fraction(0)
            for j in range(n + 1):
                rhs += comb(n, j) * weight**j * base ** (n - j) * irs.value(r + j)
            lines.append(
                (f"m={m}: F(r+{m}n) = sum_j C(n,j) w^j b^(n-j) F(r+j)",
                 irs.value(r + m * n), rhs)
            )
        return lines

    return _sweep("small-m", {"n": _indices(n), "r": _indices(r)}, point)


def transfer_suite(spec: SequenceSpec, n: IndexArg, r: IndexArg) -> IdentityVerdict:
    """The m = 2, 3, 4 families transported onto a general member.

    The impulse response is eliminated through its two-term representation
    F(x) = c1 a(x+1) + c2 a(x-1); the combined statement uses
    X(x) = c1 a(x-1) + c2 a(x-2), itself a solution of the recurrence.
    """
    if spec.order != 2:
        raise SpecError(f"transfer requires an order-2 spec, got order {spec.order}")
    c1, c2 = order2_coefficients(spec)
    p1, p2 = spec.coefficients.coefficients
    a0, a1 = spec.initials
    irs = BilateralIRS2(p1, p2)

    def member(x: int) -> Fraction:
        # a over all of Z: a(x) = a1 F(x) + p2 a0 F(x-1)
        return a1 * irs.value(x) + p2 * a0 * irs.value(x - 1)

    def combined(x: int) -> Fraction:
        return c1 * member(x - 1) + c2 * member(x - 2)

    def point(n: int, r: int):
        if n < 0:
            raise SpecError(f"n must be nonnegative, got {n}")
        lines = []
        for m, weight, base in _small_m_weights(p1, p2):
            rhs = Fraction(0)
            for j in range(n + 1):
                rhs += comb(n, j) * weight**j * base ** (n - j) * combined(r + j)
            lines.append(
                (f"m={m}: X(r+{m}n) = sum_j C(n,j) w^j b^(n-j) X(r+j)",
                 combined(r + m * n), rhs)
            )
        return lines

    return _sweep("transfer", {"n": _indices(n), "r": _indices(r)}, point)


# ---------------------------------------------------------------------------
# congruences


def _as_integer(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise SpecError(f"{what} must be an integer, got {x}")
    return x.numerator


def _congruent(lhs: int, rhs: int, modulus: int) -> bool:
    # modulus 0 reduces the congruence to plain equality
    if modulus == 0:
        return lhs == rhs
    return (lhs - rhs) % modulus == 0


def congruence_suite(
    irs: BilateralIRS2, m: IndexArg, n: IndexArg, r: IndexArg
) -> IdentityVerdict:
    """Congruences modulo products of impulse response terms.

    Always checks F(mn+r) = (p2 F(m-1))^n F(r) + F(m)^n F(n+r) modulo
    F(m-1)F(m); for n = 0 the two displayed terms are one and the same
    j = 0 term, so the right side degenerates to F(r) alone.  When
    gcd(F(m), F(n)) = 1 it additionally checks F(mn) = 0 modulo F(m)F(n).
    Requires integer p1, p2 and m >= 1, n >= 0, r >= 0.
    """
    p1 = _as_integer(irs.p1, "p_1")
    p2 = _as_integer(irs.p2, "p_2")

    def F(k: int) -> int:
        return _as_integer(irs.value(k), f"F({k})")

    def residues(lhs: int, rhs: int, modulus: int) -> tuple[Fraction, Fraction]:
        if modulus == 0:
            return Fraction(lhs), Fraction(rhs)
        return Fraction(lhs % modulus), Fraction(rhs % modulus)

    def point(m: int, n: int, r: int):
        if m < 1 or n < 0 or r < 0:
            raise SpecError(f"need m >= 1, n >= 0, r >= 0, got m={m} n={n} r={r}")
        modulus = F(m - 1) * F(m)
        lhs = F(m * n + r)
        if n == 0:
            rhs = F(r)
        else:
            rhs = (p2 * F(m - 1)) ** n * F(r) + F(m) ** n * F(n + r)
        lines = [
            (f"F(mn+r) = (p2 F(m-1))^n F(r) + F(m)^n F(n+r)  (mod {modulus})",
             *residues(lhs, rhs, modulus))
        ]
        if n >= 1 and gcd(F(m), F(n)) == 1:
            prod_mod = F(m) * F(n)
            lines.append(
                (f"F(mn) = 0  (mod F(m)F(n) = {prod_mod})",
                 *residues(F(m * n), 0, prod_mod))
            )
        return lines

    return _sweep(
        "congruence",
        {"m": _indices(m), "n": _indices(n), "r": _indices(r)},
        point,
    )


def congruence_product(irs: BilateralIRS2, ms: Iterable[int]) -> IdentityVerdict:
    """F(m_1 ... m_s) = 0 mod F(m_1)...F(m_s) for pairwise coprime F(m_i)."""
    indices = [int(m) for m in ms]
    if len(indices) < 2:
        raise SpecError("need at least two indices")
    if any(m < 1 for m in indices):
        raise SpecError("indices must be >= 1")
    values = [_as_integer(irs.value(m), f"F({m})") for m in indices]
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            if gcd(values[i], values[j]) != 1:
                raise SpecError(
                    f"F({indices[i]}) = {values[i]} and F({indices[j]}) = {values[j]} "
                    "are not coprime"
                )
    modulus = 1
    product = 1
    for v, m in zip(values, indices):
        modulus *= v
        product *= m
    lhs = _as_integer(irs.value(product), f"F({product})")
    ok = _congruent(lhs, 0, modulus)
    label = ", ".join(f"m_{i + 1}={m}" for i, m in enumerate(indices))
    if ok:
        return IdentityVerdict("congruence-product", label, True, None, 1)
    params = {f"m_{i + 1}": m for i, m in enumerate(indices)}
    return IdentityVerdict(
        "congruence-product", label, False,
        Counterexample(params, f"F({product}) = 0 (mod {modulus})",
                       Fraction(lhs % modulus if modulus else lhs), Fraction(0)),
        1,
    )


# ---------------------------------------------------------------------------
# nonhomogeneous reduction


def nonhomogeneous_reduce(
    p: RationalLike, q: RationalLike, ell: RationalLike,
    initials: Iterable[RationalLike],
) -> SequenceSpec:
    """Homogeneous spec for b_n = a_n - k where a_n = p a_{n-1} + q a_{n-2} + ell.

    The shift k = ell / (1 - p - q) exists exactly when p + q != 1.  One
    initial term means an order-1 input (q must then be 0); two initial
    terms mean order 2.  Recover a_n as b_n + k.
    """
    p = as_fraction(p)
    q = as_fraction(q)
    ell = as_fraction(ell)
    init = tuple(as_fraction(a) for a in initials)
    if p + q == 1:
        raise SpecError("p + q = 1 leaves no constant shift; reduction undefined")
    k = ell / (1 - p - q)
    if len(init) == 1:
        if q != 0:
            raise SpecError("one initial term implies order 1, so q must be 0")
        return SequenceSpec((p,), (init[0] - k,))
    if len(init) == 2:
        return SequenceSpec((p, q), (init[0] - k, init[1] - k))
    raise SpecError(f"expected 1 or 2 initial terms, got {len(init)}")


# ---------------------------------------------------------------------------
# named catalog


@dataclass(frozen=True)
class NamedIdentity:
    name: str
    summary: str
    params: Mapping[str, tuple[int, int]]
    holds: bool
    build: Callable[[], PointCheck]


def _fibonacci_lucas():
    fib = BilateralIRS2(1, 1)
    lucas = BilateralOrder2(1, 1, 2, 1)
    return fib.value, lucas.value


def _jacobsthal_pair():
    jac = BilateralIRS2(1, 2)
    jlc = BilateralOrder2(1, 2, 2, 1)
    return jac.value, jlc.value


def _carlitz() -> PointCheck:
    F, L = _fibonacci_lucas()

    def point(n: int):
        return [("F(n+1)L(n+2) - F(n+2)L(n) = F(2n+1)",
                 F(n + 1) * L(n + 2) - F(n + 2) * L(n), F(2 * n + 1))]

    return point


def _fibonacci_product() -> PointCheck:
    F, _ = _fibonacci_lucas()

    def point(n: int):
        return [("F(n+1)F(n+2) - F(n-1)F(n) = F(2n+1)",
                 F(n + 1) * F(n + 2) - F(n - 1) * F(n), F(2 * n + 1))]

    return point


def _lucas_square() -> PointCheck:
    _, L = _fibonacci_lucas()

    def point(n: int):
        return [("L(n+1)^2 + L(n)^2 = L(2n) + L(2n+2)",
                 L(n + 1) ** 2 + L(n) ** 2, L(2 * n) + L(2 * n + 2))]

    return point


def _lucas_from_fibonacci() -> PointCheck:
    F, L = _fibonacci_lucas()

    def point(n: int):
        return [
            ("L(n) = F(n) + 2F(n-1)", L(n), F(n) + 2 * F(n - 1)),
            ("L(n) = F(n+1) + F(n-1)", L(n), F(n + 1) + F(n - 1)),
        ]

    return point


def _fibonacci_from_lucas() -> PointCheck:
    F, L = _fibonacci_lucas()
    fifth = Fraction(1, 5)

    def point(n: int):
        return [("F(n) = (1/5)L(n-1) + (1/5)L(n+1)",
                 F(n), fifth * L(n - 1) + fifth * L(n + 1))]

    return point


def _jacobsthal_lucas_forms() -> PointCheck:
    J, j = _jacobsthal_pair()

    def point(n: int):
        return [
            ("j(n) = J(n) + 4J(n-1)", j(n), J(n) + 4 * J(n - 1)),
            ("j(n) = 2^n + (-1)^n", j(n), Fraction(2) ** n + Fraction(-1) ** n),
        ]

    return point


def _jacobsthal_square() -> PointCheck:
    J, _ = _jacobsthal_pair()

    def point(n: int):
        return [("J(n)^2 + 4J(n-1)J(n) = J(2n)",
                 J(n) ** 2 + 4 * J(n - 1) * J(n), J(2 * n))]

    return point


def _jacobsthal_mixed_product() -> PointCheck:
    J, j = _jacobsthal_pair()

    def point(n: int):
        return [("j(n)J(n) = J(2n)", j(n) * J(n), J(2 * n))]

    return point


def _jacobsthal_cross() -> PointCheck:
    J, _ = _jacobsthal_pair()

    def point(m: int, n: int):
        return [("J(m)J(n-1) - J(n)J(m-1) = (-1)^n 2^(n-1) J(m-n)",
                 J(m) * J(n - 1) - J(n) * J(m - 1),
                 Fraction(-1) ** n * Fraction(2) ** (n - 1) * J(m - n))]

    return point


def _jacobsthal_lucas_cross() -> PointCheck:
    J, j = _jacobsthal_pair()

    def point(m: int, n: int):
        return [("J(m)j(n) - J(n)j(m) = (-1)^n 2^(n+1) J(m-n)",
                 J(m) * j(n) - J(n) * j(m),
                 Fraction(-1) ** n * Fraction(2) ** (n + 1) * J(m - n))]

    return point


def _jacobsthal_addition() -> PointCheck:
    J, _ = _jacobsthal_pair()

    def point(m: int, n: int):
        return [("J(m+n) = J(m)J(n) + 2J(m)J(n-1) + 2J(n)J(m-1)",
                 J(m + n),
                 J(m) * J(n) + 2 * J(m) * J(n - 1) + 2 * J(n) * J(m - 1))]

    return point


def _jacobsthal_mixed_sum(sign: int) -> Callable[[], PointCheck]:
    def build() -> PointCheck:
        J, j = _jacobsthal_pair()
        op = "+" if sign > 0 else "-"

        def point(m: int, n: int):
            return [(f"J(m)j(n) {op} J(n)j(m) = 2J(m+n)",
                     J(m) * j(n) + sign * J(n) * j(m), 2 * J(m + n))]

        return point

    return build


def _jacobsthal_lucas_recurrence() -> PointCheck:
    J, j = _jacobsthal_pair()

    def point(n: int):
        return [("j(n) = J(n+1) + 2J(n-1)", j(n), J(n + 1) + 2 * J(n - 1))]

    return point


def _mersenne_dual() -> PointCheck:
    M = BilateralOrder2(3, -2, 0, 1).value

    def point(n: int):
        lines = [
            ("M(n) = 2M(n-1) + 1", M(n), 2 * M(n - 1) + 1),
            ("M(n) = 2^n - 1", M(n), Fraction(2) ** n - 1),
        ]
        if n >= 2:
            lines.append(("M(n) = 3M(n-1) - 2M(n-2)",
                          M(n), 3 * M(n - 1) - 2 * M(n - 2)))
        return lines

    return point


def _tribonacci_shift() -> PointCheck:
    T = BilateralSequence(make_irs((1, 1, 1)))

    def point(n: int):
        return [("T(n) = 2T(n-1) - T(n-4)",
                 T.term(n), 2 * T.term(n - 1) - T.term(n - 4))]

    return point


def _tribonacci_like_seven_term() -> PointCheck:
    s = BilateralSequence(SequenceSpec((1, 1, 1), (2, 1, 1)))

    def point(n: int):
        acc = (6 * s.term(n + 1) - 16 * s.term(n) + 7 * s.term(n - 1)
               + 2 * s.term(n - 2) + 6 * s.term(n - 3) - 4 * s.term(n - 4)
               - s.term(n - 5))
        return [("6a(n+1) - 16a(n) + 7a(n-1) + 2a(n-2) + 6a(n-3) - 4a(n-4) - a(n-5) = 0",
                 acc, Fraction(0))]

    return point


def _tribonacci_seven_term() -> PointCheck:
    T = BilateralSequence(make_irs((1, 1, 1)))

    def point(n: int):
        acc = (T.term(n) + T.term(n - 1) - 5 * T.term(n - 2) - 2 * T.term(n - 3)
               + T.term(n - 4) + 3 * T.term(n - 5) + T.term(n - 6))
        return [("F(n) + F(n-1) - 5F(n-2) - 2F(n-3) + F(n-4) + 3F(n-5) + F(n-6) = 0",
                 acc, Fraction(0))]

    return point


CATALOG: dict[str, NamedIdentity] = {
    entry.name: entry
    for entry in [
        NamedIdentity(
            "carlitz-fibonacci-lucas",
            "F(n+1)L(n+2) - F(n+2)L(n) = F(2n+1)",
            {"n": (0, 64)}, True, _carlitz),
        NamedIdentity(
            "fibonacci-product-shift",
            "F(n+1)F(n+2) - F(n-1)F(n) = F(2n+1)",
            {"n": (0, 64)}, True, _fibonacci_product),
        NamedIdentity(
            "lucas-square-sum",
            "L(n+1)^2 + L(n)^2 = L(2n) + L(2n+2)",
            {"n": (0, 64)}, True, _lucas_square),
        NamedIdentity(
            "lucas-from-fibonacci",
            "L(n) = F(n) + 2F(n-1) = F(n+1) + F(n-1)",
            {"n": (0, 64)}, True, _lucas_from_fibonacci),
        NamedIdentity(
            "fibonacci-from-lucas",
            "F(n) = (1/5)L(n-1) + (1/5)L(n+1)",
            {"n": (0, 64)}, True, _fibonacci_from_lucas),
        NamedIdentity(
            "jacobsthal-lucas-from-jacobsthal",
            "j(n) = J(n) + 4J(n-1) = 2^n + (-1)^n",
            {"n": (0, 64)}, True, _jacobsthal_lucas_forms),
        NamedIdentity(
            "jacobsthal-square",
            "J(n)^2 + 4J(n-1)J(n) = J(2n)",
            {"n": (0, 64)}, True, _jacobsthal_square),
        NamedIdentity(
            "jacobsthal-mixed-product",
            "j(n)J(n) = J(2n)",
            {"n": (0, 64)}, True, _jacobsthal_mixed_product),
        NamedIdentity(
            "jacobsthal-cross",
            "J(m)J(n-1) - J(n)J(m-1) = (-1)^n 2^(n-1) J(m-n)",
            {"m": (0, 24), "n": (0, 24)}, True, _jacobsthal_cross),
        NamedIdentity(
            "jacobsthal-lucas-cross",
            "J(m)j(n) - J(n)j(m) = (-1)^n 2^(n+1) J(m-n)",
            {"m": (0, 24), "n": (0, 24)}, True, _jacobsthal_lucas_cross),
        NamedIdentity(
            "jacobsthal-addition",
            "J(m+n) = J(m)J(n) + 2J(m)J(n-1) + 2J(n)J(m-1)",
            {"m": (0, 24), "n": (0, 24)}, True, _jacobsthal_addition),
        NamedIdentity(
            "jacobsthal-mixed-sum",
            "J(m)j(n) + J(n)j(m) = 2J(m+n)",
            {"m": (0, 24), "n": (0, 24)}, True, _jacobsthal_mixed_sum(+1)),
        NamedIdentity(
            "jacobsthal-mixed-sum-printed",
            "J(m)j(n) - J(n)j(m) = 2J(m+n); the minus variant, kept to "
            "document that it fails",
            {"m": (0, 24), "n": (0, 24)}, False, _jacobsthal_mixed_sum(-1)),
        NamedIdentity(
            "jacobsthal-lucas-recurrence",
            "j(n) = J(n+1) + 2J(n-1)",
            {"n": (0, 64)}, True, _jacobsthal_lucas_recurrence),
        NamedIdentity(
            "mersenne-dual",
            "M(n) = 2M(n-1) + 1 = 3M(n-1) - 2M(n-2) = 2^n - 1",
            {"n": (1, 64)}, True, _mersenne_dual),
        NamedIdentity(
            "tribonacci-shift",
            "T(n) = 2T(n-1) - T(n-4) for the order-3 impulse response",
            {"n": (4, 64)}, True, _tribonacci_shift),
        NamedIdentity(
            "tribonacci-like-seven-term",
            "6a(n+1) - 16a(n) + 7a(n-1) + 2a(n-2) + 6a(n-3) - 4a(n-4) - a(n-5) = 0",
            {"n": (5, 64)}, True, _tribonacci_like_seven_term),
        NamedIdentity(
            "tribonacci-seven-term",
            "F(n) + F(n-1) - 5F(n-2) - 2F(n-3) + F(n-4) + 3F(n-5) + F(n-6) = 0",
            {"n": (6, 64)}, True, _tribonacci_seven_term),
    ]
}


def named_identity_names() -> list[str]:
    return sorted(CATALOG)


ALIASES = {
    "carlitz": "carlitz-fibonacci-lucas",
    "tribonacci-7term": "tribonacci-seven-term",
    "tribonacci-like-7term": "tribonacci-like-seven-term",
}


def named_identity_suite(
    name: str, window: Mapping[str, IndexArg] | IndexArg | None = None
) -> IdentityVerdict:
    """Verify a cataloged identity over its default or overridden window.

    window may be a mapping from parameter names to index ranges, or a
    single range applied to every parameter of the identity.
    """
    try:
        entry = CATALOG[ALIASES.get(name, name)]
    except KeyError:
        raise UnknownIdentityError(
            f"unknown identity {name!r}; known: {', '.join(named_identity_names())}"
        ) from None
    overrides: Mapping[str, IndexArg]
    if window is None:
        overrides = {}
    elif isinstance(window, Mapping):
        overrides = window
    else:
        shared = _indices(window)
        overrides = {key: shared for key in entry.params}
    params: dict[str, list[int]] = {}
    for key, (lo, hi) in entry.params.items():
        arg: IndexArg = overrides.get(key, range(lo, hi + 1))
        params[key] = _indices(arg)
    point = entry.build()
    return _sweep(name, params, point)
