"""Shared test helpers.

The reference evaluators here are deliberately naive: direct summation
with Fraction, no caching, no shared code with the package. Unit and
acceptance tests treat them as the independent oracle.
"""

from fractions import Fraction
import random


def naive_terms(coeffs, initials, count):
    p = [Fraction(c) for c in coeffs]
    vals = [Fraction(a) for a in initials]
    r = len(p)
    while len(vals) < count:
        n = len(vals)
        vals.append(sum(p[j - 1] * vals[n - j] for j in range(1, r + 1)))
    return vals[:count]


def naive_bilateral(coeffs, initials, lo, hi):
    """Values for n = lo..hi, backward extension by division by p_r."""
    p = [Fraction(c) for c in coeffs]
    r = len(p)
    vals = {i: Fraction(a) for i, a in enumerate(initials)}
    for n in range(r, hi + 1):
        vals[n] = sum(p[j - 1] * vals[n - j] for j in range(1, r + 1))
    for m in range(-1, lo - 1, -1):
        head = vals[m + r]
        tail = sum(p[j - 1] * vals[m + r - j] for j in range(1, r))
        vals[m] = (head - tail) / p[r - 1]
    return [vals[i] for i in range(lo, hi + 1)]


def naive_irs(coeffs, count):
    r = len(coeffs)
    return naive_terms(coeffs, [0] * (r - 1) + [1], count)


def random_rational(rng, num_span=4, denominators=(1, 1, 1, 2, 3)):
    num = rng.randint(-num_span, num_span)
    return Fraction(num, rng.choice(denominators))


def random_spec_data(rng, max_order, rational=True):
    """(coeffs, initials) with p_r != 0; integers only when rational=False."""
    r = rng.randint(1, max_order)
    coeffs = []
    for _ in range(r - 1):
        coeffs.append(random_rational(rng) if rational else Fraction(rng.randint(-3, 3)))
    while True:
        last = random_rational(rng) if rational else Fraction(rng.randint(-3, 3))
        if last != 0:
            coeffs.append(last)
            break
    initials = [
        random_rational(rng, 5) if rational else Fraction(rng.randint(-5, 5))
        for _ in range(r)
    ]
    return coeffs, initials
