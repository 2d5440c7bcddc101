"""Shared test helpers: independent oracles and enumerations."""

import math
import random

from sl2nav import Mat2Z, Word


def naive_subtractive_steps(a: int, c: int) -> int:
    """Literal one-subtraction-at-a-time step count (oracle)."""
    steps = 0
    while c:
        if a > c:
            a -= c
        else:
            c -= a
        steps += 1
    return steps


def _ceil_div(x: int, y: int) -> int:
    return -((-x) // y)


def enumerate_left_dominated(bound: int) -> list[Mat2Z]:
    """Every unimodular matrix with nonnegative entries <= bound whose left
    column sum is at least the right column sum.

    For each coprime left column (a, c) the unimodularity solutions form
    the line (d, b) = (d0 + c*t, b0 + a*t); only the few t keeping all
    entries in range are visited.  Cross-checked against brute force for
    small bounds in the euclid tests.
    """
    out = []
    for a in range(bound + 1):
        for c in range(bound + 1):
            if math.gcd(a, c) != 1 or a == 0:
                continue
            if c == 0:
                if a == 1:
                    out.append(Mat2Z(1, 0, 0, 1))
                continue
            d0 = pow(a, -1, c)
            b0 = (a * d0 - 1) // c
            t_min = max(_ceil_div(-d0, c), _ceil_div(-b0, a))
            t_max = min((bound - d0) // c, (bound - b0) // a)
            for t in range(t_min, t_max + 1):
                d = d0 + c * t
                b = b0 + a * t
                if a + c >= b + d:
                    out.append(Mat2Z(a, b, c, d))
    return out


def brute_force_left_dominated(bound: int) -> set[tuple[int, int, int, int]]:
    """Quartic-loop reference enumeration, feasible only for small bounds."""
    out = set()
    for a in range(bound + 1):
        for b in range(bound + 1):
            for c in range(bound + 1):
                for d in range(bound + 1):
                    if a * d - b * c == 1 and a + c >= b + d:
                        out.add((a, b, c, d))
    return out


def dominance_step(m: Mat2Z) -> Mat2Z:
    """One row subtraction: bottom minus top when a <= c, else top minus bottom."""
    if m.a <= m.c:
        return Mat2Z(m.a, m.b, m.c - m.a, m.d - m.b)
    return Mat2Z(m.a - m.c, m.b - m.d, m.c, m.d)


def random_word(rng: random.Random, max_runs: int = 40, max_exp: int = 20) -> Word:
    runs = []
    for _ in range(rng.randrange(max_runs + 1)):
        exp = rng.randrange(-max_exp, max_exp + 1)
        if exp == 0:
            exp = 1
        runs.append((rng.choice("UL"), exp))
    return Word.from_runs(runs)
