"""Continued fractions and the subtractive Euclidean step count.

subtractive_steps(a, c) counts the row subtractions needed to reduce the
pair (a, c) by repeated subtraction of the smaller from the larger; it
equals the sum of the partial quotients of a/c when gcd(a, c) = 1.  Both
are computed with divisions, never literal subtraction loops, so the cost
stays logarithmic while the returned count is the exact subtractive one.
"""

from __future__ import annotations

import math

from .mat2 import Mat2Z, is_left_dominated
from .word import Word


def cf_expand(a: int, c: int) -> list[int]:
    """Partial quotients of a/c by the division algorithm.

    The leading quotient is floor(a/c) (zero when a < c); for fractions
    with more than one quotient the last one is always >= 2, which is the
    canonical one of the two expansions every positive rational has.
    """
    if a <= 0 or c <= 0:
        raise ValueError("numerator and denominator must be positive")
    if math.gcd(a, c) != 1:
        raise ValueError("%d/%d is not in lowest terms" % (a, c))
    quotients = []
    while c:
        quotients.append(a // c)
        a, c = c, a % c
    return quotients


def partial_quotient_sum(a: int, c: int) -> int:
    """Sum of the partial quotients of a/c."""
    return sum(cf_expand(a, c))


def subtractive_steps(a: int, c: int) -> int:
    """Exact step count of the subtractive gcd reduction of (a, c).

    One step replaces (a, c) by (a-c, c) when a > c > 0, or by (a, c-a)
    when c >= a > 0; the count is 0 once c = 0.  Steps are batched into
    quotients, so runtime is that of ordinary Euclid.
    """
    if a < 0 or c < 0:
        raise ValueError("arguments must be nonnegative")
    if a == 0 and c == 0:
        raise ValueError("undefined for (0, 0)")
    if a == 0 or c == 0:
        return 0
    steps = 0
    while c:
        if a > c:
            q = (a - 1) // c  # subtract while a stays above c
            steps += q
            a -= q * c
        else:
            q = c // a
            steps += q
            c -= q * a
    return steps


def reduce_left_dominated(m: Mat2Z) -> Word:
    """Write a left-dominated unimodular matrix as a word in U and L.

    Only the left column (a, c) is consulted: while it is not (1, 0),
    subtract the top row from the bottom when a <= c (an L^-1 step, so L
    joins the word) and the bottom from the top otherwise (a U^-1 step).
    Runs of equal steps are emitted as single exponent runs.  The word
    evaluates to m exactly over Z, uses no negative exponents, and has
    length subtractive_steps(a, c).
    """
    if not is_left_dominated(m):
        raise ValueError("matrix is not left-dominated")
    a, c = m.a, m.c
    runs: list[tuple[str, int]] = []
    while (a, c) != (1, 0):
        if a <= c:
            q = c // a
            c -= q * a
            runs.append(("L", q))
        else:
            q = (a - 1) // c
            a -= q * c
            runs.append(("U", q))
    return Word(tuple(runs))
