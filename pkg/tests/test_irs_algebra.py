import random
from fractions import Fraction

import pytest

from conftest import naive_bilateral, naive_irs, naive_terms, random_spec_data
from lrs import (
    BilateralSequence,
    ExactMatrix,
    SequenceSpec,
    SingularMatrixError,
    SpecError,
    build_toeplitz,
    decompose_in_basis,
    delta_identity_check,
    is_nontrivial_basis,
    make_irs,
    order2_coefficients,
    represent_by_irs,
    represent_weights,
    solve_toeplitz,
)


def ref_det(rows):
    """Plain Gaussian elimination over Fraction; no shared code with ExactMatrix."""
    m = [[Fraction(v) for v in row] for row in rows]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col] / m[col][col]
            for c in range(col, n):
                m[r][c] -= factor * m[col][c]
    return det


def test_det_golden():
    assert ExactMatrix([[1, 2], [3, 4]]).det() == -2
    assert ExactMatrix([["1/2", 1], [1, 2]]).det() == 0
    assert ExactMatrix([[2, 0, 1], [1, 1, 0], [0, 3, 1]]).det() == 5


def test_det_matches_reference_on_random_matrices():
    rng = random.Random(555)
    for _ in range(40):
        n = rng.randint(1, 5)
        rows = [
            [Fraction(rng.randint(-6, 6), rng.choice((1, 1, 2, 3))) for _ in range(n)]
            for _ in range(n)
        ]
        assert ExactMatrix(rows).det() == ref_det(rows)


def test_solve_round_trip():
    rng = random.Random(556)
    solved = 0
    while solved < 25:
        n = rng.randint(1, 5)
        rows = [[Fraction(rng.randint(-6, 6)) for _ in range(n)] for _ in range(n)]
        x = [Fraction(rng.randint(-9, 9), rng.choice((1, 2))) for _ in range(n)]
        rhs = [sum(rows[i][j] * x[j] for j in range(n)) for i in range(n)]
        matrix = ExactMatrix(rows)
        if matrix.det() == 0:
            with pytest.raises(SingularMatrixError):
                matrix.solve(rhs)
            continue
        assert matrix.solve(rhs) == x
        solved += 1


def test_matrix_validation():
    with pytest.raises(SpecError):
        ExactMatrix([])
    with pytest.raises(SpecError):
        ExactMatrix([[1, 2], [3]])
    with pytest.raises(SpecError):
        ExactMatrix([[1], [2]]).det()  # determinant needs a square matrix
    with pytest.raises(SpecError):
        ExactMatrix([[1]]).solve([1, 2])  # rhs length must match


# ---------------------------------------------------------------------------
# representation by impulse response shifts


def test_represent_weights_golden():
    lead, weights = represent_weights(SequenceSpec([1, 1, 1], [1, 2, 3]))
    assert lead == 3
    assert weights == [Fraction(3), Fraction(2)]
    # a_n = a_2 F~_n + (a_0 + a_1) F~_{n-1} + a_1 F~_{n-2} for this family
    lead2, weights2 = represent_weights(SequenceSpec([1, 1, 1], [5, -7, 2]))
    assert (lead2, weights2) == (2, [Fraction(-2), Fraction(-7)])


def test_representation_reproduces_terms():
    rng = random.Random(7000)
    for _ in range(30):
        coeffs, initials = random_spec_data(rng, 6)
        spec = SequenceSpec(coeffs, initials)
        irs = BilateralSequence(make_irs(coeffs))
        expected = naive_terms(coeffs, initials, 65)
        for n in range(65):
            assert represent_by_irs(spec, n, irs) == expected[n]


def test_representation_rejects_negative_index():
    with pytest.raises(SpecError):
        represent_by_irs(SequenceSpec([1, 1], [0, 1]), -1)


def test_delta_identity_window():
    rng = random.Random(7001)
    for _ in range(20):
        coeffs, _ = random_spec_data(rng, 6)
        r = len(coeffs)
        if r < 2:
            continue
        irs = BilateralSequence(make_irs(coeffs))
        for k in range(r - 1):
            for n in range(r):
                value = delta_identity_check(coeffs, k, n, irs)
                assert value == (1 if n == k else 0)
    with pytest.raises(SpecError):
        delta_identity_check([1, 1, 1], 2, 0)
    with pytest.raises(SpecError):
        delta_identity_check([1, 1, 1], 0, 3)


# ---------------------------------------------------------------------------
# Toeplitz recovery


def test_toeplitz_exact_golden():
    system = build_toeplitz(SequenceSpec([1, 1, 1], [2, 1, 1]))
    rep = solve_toeplitz(system)
    assert rep.terms == (
        (1, Fraction(6, 19)),
        (0, Fraction(-4, 19)),
        (-1, Fraction(-1, 19)),
    )
    assert (
        rep.render(target="F~_n", source="a")
        == "F~_n = (6/19)*a[n+1] + (-4/19)*a[n] + (-1/19)*a[n-1]"
    )
    seq = BilateralSequence(SequenceSpec([1, 1, 1], [2, 1, 1]))
    irs = naive_irs([1, 1, 1], 65)
    for n in range(65):
        assert rep.evaluate(seq, n) == irs[n]


def test_toeplitz_singular_case_is_exact():
    system = build_toeplitz(SequenceSpec([1, 3, 1], [1, 0, 1]))
    assert system.matrix.rows == (
        (Fraction(0), Fraction(1), Fraction(-2)),
        (Fraction(1), Fraction(0), Fraction(1)),
        (Fraction(2), Fraction(1), Fraction(0)),
    )
    assert system.matrix.det() == 0
    with pytest.raises(SingularMatrixError):
        solve_toeplitz(system)


def test_toeplitz_shift_patterns():
    shift_sets = {
        1: [0],
        2: [1, -1],
        3: [1, 0, -1],
        4: [2, 1, -1, -2],
        5: [2, 1, 0, -1, -2],
        6: [3, 2, 1, -1, -2, -3],
    }
    rng = random.Random(808)
    for r, expected in shift_sets.items():
        coeffs, initials = random_spec_data(rng, 1)
        coeffs = [Fraction(1)] * (r - 1) + [Fraction(1)]
        initials = [Fraction(rng.randint(1, 5)) for _ in range(r)]
        system = build_toeplitz(SequenceSpec(coeffs, initials))
        assert list(system.shifts) == expected


def test_toeplitz_recovers_irs_for_random_specs():
    rng = random.Random(809)
    recovered = 0
    while recovered < 25:
        coeffs, initials = random_spec_data(rng, 6)
        spec = SequenceSpec(coeffs, initials)
        try:
            rep = solve_toeplitz(build_toeplitz(spec))
        except SingularMatrixError:
            continue
        seq = BilateralSequence(spec)
        irs = naive_irs(coeffs, 41)
        assert all(rep.evaluate(seq, n) == irs[n] for n in range(41))
        recovered += 1


def test_toeplitz_order_one():
    rep = solve_toeplitz(build_toeplitz(SequenceSpec([3], [5])))
    assert rep.terms == ((0, Fraction(1, 5)),)
    with pytest.raises(SingularMatrixError):
        solve_toeplitz(build_toeplitz(SequenceSpec([3], [0])))


# ---------------------------------------------------------------------------
# order-2 closed-path coefficients


def test_order2_coefficients_golden():
    assert order2_coefficients(SequenceSpec([1, 1], [2, 1])) == (
        Fraction(1, 5),
        Fraction(1, 5),
    )
    assert order2_coefficients(SequenceSpec([1, 2], [2, 1])) == (
        Fraction(1, 9),
        Fraction(2, 9),
    )


def test_order2_coefficients_match_toeplitz():
    rng = random.Random(4040)
    matched = 0
    while matched < 25:
        p1 = Fraction(rng.randint(-5, 5), rng.choice((1, 2)))
        p2 = Fraction(rng.randint(-5, 5), rng.choice((1, 2)))
        a0 = Fraction(rng.randint(-5, 5))
        a1 = Fraction(rng.randint(-5, 5))
        if p1 == 0 or p2 == 0:
            continue
        spec = SequenceSpec([p1, p2], [a0, a1])
        try:
            c1, c2 = order2_coefficients(spec)
        except SpecError:
            with pytest.raises(SingularMatrixError):
                solve_toeplitz(build_toeplitz(spec))
            continue
        rep = solve_toeplitz(build_toeplitz(spec))
        assert rep.terms == ((1, c1), (-1, c2))
        matched += 1


def test_order2_coefficients_preconditions():
    with pytest.raises(SpecError):
        order2_coefficients(SequenceSpec([0, 1], [1, 1]))  # p_1 = 0
    # D = a_1^2 - a_0 a_1 p_1 - a_0^2 p_2 = 0 for the IRS-degenerate pair below
    with pytest.raises(SpecError):
        order2_coefficients(SequenceSpec([2, -1], [1, 1]))


# ---------------------------------------------------------------------------
# two-member bases


def test_basis_golden_decomposition():
    fib = SequenceSpec([1, 1], [0, 1])
    lucas = SequenceSpec([1, 1], [2, 1])
    assert is_nontrivial_basis(fib, lucas)
    c1, c2 = decompose_in_basis(SequenceSpec([1, 1], [3, 5]), fib, lucas)
    assert (c1, c2) == (Fraction(7, 2), Fraction(3, 2))
    # reconstruct termwise
    target = naive_terms([1, 1], [3, 5], 65)
    f = naive_terms([1, 1], [0, 1], 65)
    lu = naive_terms([1, 1], [2, 1], 65)
    assert all(c1 * f[n] + c2 * lu[n] == target[n] for n in range(65))


def test_basis_rejects_degenerate_pairs():
    fib = SequenceSpec([1, 1], [0, 1])
    doubled = SequenceSpec([1, 1], [0, 2])
    assert not is_nontrivial_basis(fib, doubled)
    # shifted impulse response in disguise: initials (1/p_2, 0)
    assert not is_nontrivial_basis(fib, SequenceSpec([1, 1], [1, 0]))
    with pytest.raises(SingularMatrixError):
        decompose_in_basis(SequenceSpec([1, 1], [3, 5]), fib, doubled)
    with pytest.raises(SpecError):
        decompose_in_basis(
            SequenceSpec([2, 1], [3, 5]), fib, SequenceSpec([1, 1], [2, 1])
        )  # mismatched coefficient sets
