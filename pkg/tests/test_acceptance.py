"""Acceptance gate: one test per criterion, each printing a PASS line.

Budgets are wall-clock upper bounds asserted with time.perf_counter.
Random sweeps are seeded so reruns see the same draws.
"""

import random
import time
from fractions import Fraction
from math import gcd

from mpmath import mp, mpf

from conftest import naive_irs, naive_terms, random_spec_data
from lrs import (
    BilateralIRS2,
    BilateralSequence,
    SequenceSpec,
    SingularMatrixError,
    boustrophedon,
    boustrophedon_egf_check,
    build_toeplitz,
    characteristic_roots,
    congruence_product,
    congruence_suite,
    delta_identity_check,
    closed_form_evaluator,
    irs_closed_form,
    make_irs,
    named_identity_suite,
    negative_index_suite,
    nonlinear_expansion,
    represent_by_irs,
    small_m_suite,
    solve_toeplitz,
    stirling_column,
    stirling_triangle,
    wythoff_array,
    wythoff_closed_form_check,
    wythoff_partition_check,
)


def rel_error(approx, exact, bits=400):
    with mp.workprec(bits):
        target = mpf(exact.numerator) / mpf(exact.denominator)
        if target == 0:
            return abs(approx)
        return abs(approx - target) / abs(target)


def test_01_golden_impulse_and_named_sequences():
    start = time.perf_counter()
    goldens = [
        ([1, 1], [0, 1], [0, 1, 1, 2, 3, 5, 8, 13]),
        ([2, 1], [0, 1], [0, 1, 2, 5, 12, 29]),
        ([1, 2], [0, 1], [0, 1, 1, 3, 5, 11, 21]),
        ([1, 2], [2, 1], [2, 1, 5, 7, 17, 31]),
        ([1, 1, 1], [0, 0, 1], [0, 0, 1, 1, 2, 4, 7, 13, 24, 44]),
        ([1, 1, 1], [2, 1, 1], [2, 1, 1, 4, 6, 11, 21]),
    ]
    for coeffs, initials, expected in goldens:
        seq = BilateralSequence(SequenceSpec(coeffs, initials))
        assert seq.terms_range(0, len(expected) - 1) == [Fraction(v) for v in expected]
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0, f"budget 1 s exceeded: {elapsed:.3f} s"
    print(f"PASS 1: six golden sequences exact ({elapsed:.3f} s)")


def test_02_toeplitz_solution_and_reproduction():
    start = time.perf_counter()
    spec = SequenceSpec([1, 1, 1], [2, 1, 1])
    rep = solve_toeplitz(build_toeplitz(spec))
    assert rep.terms == (
        (1, Fraction(6, 19)),
        (0, Fraction(-4, 19)),
        (-1, Fraction(-1, 19)),
    )
    seq = BilateralSequence(spec)
    irs = naive_irs([1, 1, 1], 65)
    assert all(rep.evaluate(seq, n) == irs[n] for n in range(65))
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0, f"budget 1 s exceeded: {elapsed:.3f} s"
    print(f"PASS 2: Toeplitz weights (6/19, -4/19, -1/19), impulse response "
          f"reproduced for n=0..64 ({elapsed:.3f} s)")


def test_03_singular_system_reported_exactly():
    system = build_toeplitz(SequenceSpec([1, 3, 1], [1, 0, 1]))
    assert system.matrix.det() == 0
    try:
        solve_toeplitz(system)
    except SingularMatrixError:
        pass
    else:
        raise AssertionError("singular system produced a numeric solution")
    print("PASS 3: singular Toeplitz system detected with determinant exactly 0")


def test_04_representation_and_delta_sweep():
    start = time.perf_counter()
    rng = random.Random(20240)
    for _ in range(200):
        coeffs, initials = random_spec_data(rng, 6)
        spec = SequenceSpec(coeffs, initials)
        r = spec.order
        irs = BilateralSequence(make_irs(coeffs))
        seq = BilateralSequence(spec)
        for n in range(65):
            assert represent_by_irs(spec, n, irs) == seq.term(n)
        for k in range(r - 1):
            for n in range(r):
                assert delta_identity_check(coeffs, k, n, irs) == (1 if n == k else 0)
    elapsed = time.perf_counter() - start
    assert elapsed < 30.0, f"budget 30 s exceeded: {elapsed:.3f} s"
    print(f"PASS 4: representation + delta identity exact on 200 random specs, "
          f"n=0..64 ({elapsed:.3f} s)")


def test_05_closed_form_precision():
    start = time.perf_counter()
    tol = mpf(10) ** -20
    named = [[1, 1], [2, 1], [1, 2], [1, 1, 1], [2, -1]]
    for coeffs in named:
        dec = characteristic_roots(coeffs, 256)
        exact = naive_irs(coeffs, 41)
        for n in range(41):
            assert rel_error(irs_closed_form(dec, n), exact[n]) <= tol, (coeffs, n)
    # the double-root case equals n itself
    assert naive_irs([2, -1], 41) == [Fraction(n) for n in range(41)]

    rng = random.Random(20241)
    for _ in range(20):
        coeffs, initials = random_spec_data(rng, 5, rational=False)
        spec = SequenceSpec(coeffs, initials)
        evaluator = closed_form_evaluator(spec, precision_bits=256)
        exact = naive_terms(coeffs, initials, 41)
        for n in range(41):
            assert rel_error(evaluator.value(n), exact[n]) <= tol, (coeffs, initials, n)
    elapsed = time.perf_counter() - start
    assert elapsed < 30.0, f"budget 30 s exceeded: {elapsed:.3f} s"
    print(f"PASS 5: closed forms within 1e-20 relative error up to n=40 "
          f"({elapsed:.3f} s)")


def test_06_nonlinear_identity_sweep():
    start = time.perf_counter()
    m_grid = range(1, 6)
    n_grid = range(0, 7)
    r_grid = range(-10, 11)
    engines = [BilateralIRS2(1, 1), BilateralIRS2(2, 1), BilateralIRS2(1, 2)]
    rng = random.Random(20242)
    while len(engines) < 23:
        p1, p2 = rng.randint(-3, 3), rng.randint(-3, 3)
        if p2 != 0:
            engines.append(BilateralIRS2(p1, p2))
    for irs in engines:
        verdict = nonlinear_expansion(irs, m_grid, n_grid, r_grid)
        assert verdict.passed, verdict.counterexample
        verdict = negative_index_suite(irs, m_grid, n_grid)
        assert verdict.passed, verdict.counterexample
        verdict = small_m_suite(irs, n_grid, r_grid)
        assert verdict.passed, verdict.counterexample
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0, f"budget 60 s exceeded: {elapsed:.3f} s"
    print(f"PASS 6: nonlinear, negative-index and m=2,3,4 families exact over "
          f"[1,5]x[0,6]x[-10,10] for 23 engines ({elapsed:.3f} s)")


def test_07_named_identities():
    names = [
        "carlitz-fibonacci-lucas",
        "lucas-from-fibonacci",
        "fibonacci-from-lucas",
        "jacobsthal-lucas-from-jacobsthal",
        "mersenne-dual",
        "tribonacci-shift",
        "tribonacci-like-seven-term",
        "tribonacci-seven-term",
    ]
    for name in names:
        verdict = named_identity_suite(name)
        assert verdict.passed, (name, verdict.counterexample)
    print(f"PASS 7: {len(names)} named identity families exact over their "
          f"stated windows up to n=64")


def test_08_congruence_families():
    start = time.perf_counter()
    engines = {
        "fibonacci": BilateralIRS2(1, 1),
        "pell": BilateralIRS2(2, 1),
        "jacobsthal": BilateralIRS2(1, 2),
    }
    for label, irs in engines.items():
        verdict = congruence_suite(irs, range(2, 7), range(0, 7), range(0, 11))
        assert verdict.passed, (label, verdict.counterexample)
        # product congruence on every coprime index pair in the window
        for m in range(2, 7):
            for n in range(m + 1, 7):
                fm, fn = int(irs.value(m)), int(irs.value(n))
                if fm and fn and gcd(fm, fn) == 1:
                    assert congruence_product(irs, (m, n)).passed, (label, m, n)
    fib = naive_terms([1, 1], [0, 1], 61)
    assert fib[60] == 1548008755920
    assert fib[3] * fib[4] * fib[5] == 30
    assert fib[60] % 30 == 0
    assert congruence_product(BilateralIRS2(1, 1), (3, 4, 5)).passed
    elapsed = time.perf_counter() - start
    assert elapsed < 30.0, f"budget 30 s exceeded: {elapsed:.3f} s"
    print(f"PASS 8: congruence grid m=2..6, n=0..6, r=0..10 plus product "
          f"congruences including F_60 = 0 mod 30 ({elapsed:.3f} s)")


def test_09_stirling_columns():
    tri = stirling_triangle(31)
    for k in range(1, 8):
        col = stirling_column(k, 30)
        assert col == [tri[n + 1][k] if k <= n + 1 else 0 for n in range(30)], k
    col2 = stirling_column(2, 10)
    assert [col2[n - 1] for n in range(3, 7)] == [3, 7, 15, 31]
    col3 = stirling_column(3, 10)
    assert [col3[n - 1] for n in range(4, 7)] == [6, 25, 90]
    print("PASS 9: Stirling columns k=1..7 equal the shifted triangle columns; "
          "example values reproduced")


def test_10_wythoff_tables():
    fib_expected = [
        [0, 1, 1, 2, 3, 5, 8, 13],
        [1, 3, 4, 7, 11, 18, 29, 47],
        [2, 4, 6, 10, 16, 26, 42, 68],
        [3, 6, 9, 15, 24, 39, 63, 102],
        [4, 8, 12, 20, 32, 52, 84, 136],
        [5, 9, 14, 23, 37, 60, 97, 157],
        [6, 11, 17, 28, 45, 73, 118, 191],
        [7, 12, 19, 31, 50, 81, 131, 212],
    ]
    # row 2, column 6: printed source has 470, which breaks the row rule;
    # 2*198 + 82 = 478 and the adjacent 1154 = 2*478 + 198 pins the value
    pell_expected = [
        [0, 1, 2, 5, 12, 29, 70, 169],
        [1, 3, 7, 17, 41, 99, 239, 577],
        [2, 6, 14, 34, 82, 198, 478, 1154],
        [3, 8, 19, 46, 111, 268, 647, 1562],
        [4, 11, 26, 63, 152, 367, 886, 2139],
    ]
    assert wythoff_array("fibonacci", 8, 8) == fib_expected
    assert wythoff_array("pell", 5, 8) == pell_expected
    assert all(wythoff_closed_form_check("fibonacci", j, 7) for j in range(8))
    assert all(wythoff_closed_form_check("pell", j, 7) for j in range(5))
    report = wythoff_partition_check(8, 20)
    assert report.ok and not report.duplicates and not report.missing
    print("PASS 10: 8x8 and 5x8 arrays match, closed forms agree on every "
          "entry, partition of [0,20] verified")


def test_11_boustrophedon():
    b, _ = boustrophedon([1, 1, 1, 1])
    assert b == [1, 2, 4, 9]
    rng = random.Random(20243)
    for _ in range(50):
        length = rng.randint(1, 12)
        values = [
            Fraction(rng.randint(-9, 9), rng.choice((1, 1, 2, 3)))
            for _ in range(length)
        ]
        assert boustrophedon_egf_check(values)
    print("PASS 11: boustrophedon transform golden case and EGF identity on "
          "50 random inputs, exact")
