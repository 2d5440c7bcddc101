"""Arbitrary-precision arithmetic mod a prime: primality, inverses,
quadratic residues, and square roots.

All residues are plain Python ints in [0, p-1]; the modulus travels as an
explicit argument.  Randomized routines take a random.Random instance so
that identical seeds reproduce identical runs.
"""

from __future__ import annotations

import random

RngState = random.Random

# Trial-division screen before Miller-Rabin.
_SMALL_PRIMES: tuple[int, ...] = tuple(
    n for n in range(2, 1000) if all(n % d for d in range(2, n))
)

# Below this bound the fixed-base Miller-Rabin test is exact.
_DETERMINISTIC_LIMIT = 3317044064679887385961981
_DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

_RANDOM_ROUNDS = 40


def _miller_rabin_witness(n: int, base: int, d: int, s: int) -> bool:
    """True when `base` witnesses that odd n > 2 is composite (n-1 = d*2^s)."""
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_probable_prime(n: int) -> bool:
    """Primality test: trial division by small primes, then Miller-Rabin.

    Exact for n below ~3.3e24 (fixed witness set); above that, 40
    pseudo-random rounds leave a composite-acceptance probability
    under 4**-40.
    """
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n == q:
            return True
        if n % q == 0:
            return False

    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    if n < _DETERMINISTIC_LIMIT:
        bases = _DETERMINISTIC_BASES
    else:
        # Seeding from n keeps the function pure while varying the bases.
        rng = random.Random(n)
        bases = tuple(rng.randrange(2, n - 1) for _ in range(_RANDOM_ROUNDS))
    return not any(_miller_rabin_witness(n, b, d, s) for b in bases)


def mod_inverse(a: int, p: int) -> int:
    """Inverse of a mod p, in [1, p-1]."""
    a %= p
    if a == 0:
        raise ValueError("0 is not invertible mod %d" % p)
    return pow(a, -1, p)


def is_quadratic_residue(x: int, p: int) -> bool:
    """Euler criterion: x^((p-1)/2) == 1 mod p.  Zero is rejected."""
    x %= p
    if x == 0:
        raise ValueError("zero is excluded from residue classification")
    if p == 2:
        return True
    return pow(x, (p - 1) // 2, p) == 1


def sqrt_mod(x: int, p: int, rng: RngState) -> int:
    """A square root of x mod p, by the Tonelli-Shanks method.

    Which of the two roots comes back is unspecified; callers that need a
    canonical one should normalize.  The non-residue needed internally is
    found by sampling from `rng` (expected two draws), so the result is a
    deterministic function of (x, p, rng state).
    """
    x %= p
    if x == 0:
        raise ValueError("zero has no usable square root here")
    if p == 2:
        return 1
    if not is_quadratic_residue(x, p):
        raise ValueError("%d is not a quadratic residue mod %d" % (x, p))

    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1

    exp = (p - 1) // 2
    while True:
        z = rng.randrange(1, p)
        if pow(z, exp, p) == p - 1:
            break

    c = pow(z, q, p)
    t = pow(x, q, p)
    r = pow(x, (q + 1) // 2, p)
    m = s
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        r = r * b % p
        c = b * b % p
        t = t * c % p
        m = i
    return r


def random_residue(p: int, rng: RngState) -> int:
    """Uniform draw from [0, p-1]."""
    return rng.randrange(p)
