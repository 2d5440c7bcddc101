"""Randomized synthesis of short generator words for SL2(F_p) elements.

The route to a short word for the unitriangular matrix [[1,y],[0,1]] is:
split y into a sum x1 + x2 of two nonzero quadratic residues, take the
small square root a_i of each x_i, and conjugate U by the integer lift of
[[a_i,*],[0,a_i^-1]].  Each conjugator reduces to a generator word through
the subtractive Euclidean reduction of a_i/p, so the total length is
governed by the partial quotient sums of the a_i/p, which for random a_i
are almost always O(log p loglog p).  Roots whose quotient sum exceeds a
configurable threshold are rejected and the split is redrawn.  Arbitrary
group elements are products of at most four unitriangular matrices.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .arith import RngState, is_quadratic_residue, mod_inverse, random_residue, sqrt_mod
from .euclid import partial_quotient_sum, reduce_left_dominated
from .mat2 import Mat2Fp, lift_upper
from .word import Word

# Below this prime, a split of y into two nonzero quadratic residues may
# not exist at all (e.g. y = 4 mod 5), so synthesis goes straight to the
# direct U^y fallback.
_MIN_RANDOMIZED_PRIME = 13

DEFAULT_C_CONST = 4.0
DEFAULT_MAX_ATTEMPTS = 64


@dataclass(frozen=True)
class NavConfig:
    """Tuning for randomized synthesis: threshold constant, retry budget, seed."""

    c_const: float = DEFAULT_C_CONST
    max_attempts: int = DEFAULT_MAX_ATTEMPTS
    seed: int = 0

    def __post_init__(self):
        if self.c_const <= 0:
            raise ValueError("c_const must be positive")
        if self.max_attempts < 1:
            raise ValueError("max_attempts must be at least 1")


@dataclass(frozen=True)
class NavReport:
    """Audit record for one synthesis: the word, its target, and how it went."""

    word: Word
    target: Mat2Fp
    attempts: int
    length: int
    threshold: float
    used_fallback: bool

    def __post_init__(self):
        assert self.length == self.word.length

    def to_json_dict(self) -> dict:
        return {
            "word": self.word.to_json_pairs(),
            "target": self.target.entries_string(),
            "p": str(self.target.p),
            "attempts": self.attempts,
            "length": self.length,
            "threshold": self.threshold,
            "used_fallback": self.used_fallback,
        }


def threshold(p: int, c_const: float) -> float:
    """Rejection bound c_const * ln(p) * ln(ln(p)), the inner log clamped at 1.

    The clamp keeps the bound positive and monotone for primes below e^e.
    """
    if p < 2:
        raise ValueError("p must be at least 2")
    return c_const * math.log(p) * math.log(max(math.e, math.log(p)))


def canonical_root(x: int, p: int, rng: RngState) -> int:
    """The square root of x lying in [1, floor(p/2)]."""
    r = sqrt_mod(x, p, rng)
    return min(r, p - r)


def conjugate_block(a: int, p: int) -> Word:
    """Word for the conjugate M U M^-1, where M is the integer lift of
    [[a,*],[0,a^-1]].

    Evaluates mod p to [[1, a^2],[0,1]] and has length exactly
    2 * subtractive_steps(a, p) + 1.
    """
    lift_word = reduce_left_dominated(lift_upper(a, p))
    return lift_word * Word.single("U", 1) * lift_word.invert()


def _fallback_word(y: int, p: int) -> Word:
    # Direct representation U^y' with y' the representative in (-p/2, p/2].
    y_signed = y if y <= p // 2 else y - p
    return Word.single("U", y_signed)


def synth_upper(y: int, p: int, cfg: NavConfig, _rng: RngState | None = None) -> NavReport:
    """Short word evaluating to [[1, y],[0, 1]] mod p.

    Repeatedly draws x1 uniform from F_p and sets x2 = y - x1; a draw
    succeeds when both are nonzero quadratic residues whose canonical
    roots have partial quotient sum within the threshold.  The word is
    then the pair of conjugate blocks, of length at most
    4 * threshold + 2.  After max_attempts failures (or for tiny p) the
    direct word U^y' is returned and flagged as a fallback.
    """
    y %= p
    rng = _rng if _rng is not None else random.Random(cfg.seed)
    bound = threshold(p, cfg.c_const)
    target = Mat2Fp(1, y, 0, 1, p)
    if y == 0:
        return NavReport(Word.identity(), target, 0, 0, bound, False)

    attempts = 0
    if p >= _MIN_RANDOMIZED_PRIME:
        for attempt in range(1, cfg.max_attempts + 1):
            attempts = attempt
            x1 = random_residue(p, rng)
            if x1 == 0:
                continue
            x2 = (y - x1) % p
            if x2 == 0:
                continue
            if not is_quadratic_residue(x1, p) or not is_quadratic_residue(x2, p):
                continue
            a1 = canonical_root(x1, p, rng)
            a2 = canonical_root(x2, p, rng)
            if partial_quotient_sum(a1, p) > bound or partial_quotient_sum(a2, p) > bound:
                continue
            w = conjugate_block(a1, p) * conjugate_block(a2, p)
            return NavReport(w, target, attempt, w.length, bound, False)

    w = _fallback_word(y, p)
    return NavReport(w, target, attempts, w.length, bound, True)


def synth_lower(y: int, p: int, cfg: NavConfig, _rng: RngState | None = None) -> NavReport:
    """Short word for [[1, 0],[y, 1]]: the transpose of the upper synthesis."""
    upper = synth_upper(y, p, cfg, _rng)
    w = upper.word.transposed()
    target = Mat2Fp(1, 0, y, 1, p)
    return NavReport(w, target, upper.attempts, w.length, upper.threshold, upper.used_fallback)


def decompose(m: Mat2Fp, cfg: NavConfig = NavConfig()) -> NavReport:
    """Word in {U, L, U^-1, L^-1} evaluating to m, via at most four
    unitriangular factors.

    When the lower-left entry c is nonzero, m factors as
    [[1,y1],[0,1]] [[1,0],[y2,1]] [[1,y3],[0,1]] with y2 = c,
    y1 = (a-1)/c, y3 = (d-1)/c.  Otherwise m*L has nonzero lower-left
    entry; it is decomposed the same way and L^-1 appended.  Attempts are
    aggregated across the synthesis calls; the report is a deterministic
    function of (m, cfg).
    """
    p = m.p
    if (m.a * m.d - m.b * m.c) % p != 1:
        raise ValueError("matrix is not unimodular mod %d" % p)
    bound = threshold(p, cfg.c_const)
    if m.is_identity():
        return NavReport(Word.identity(), m, 0, 0, bound, False)

    if m.c != 0:
        rng = random.Random(cfg.seed)
        c_inv = mod_inverse(m.c, p)
        y1 = (m.a - 1) * c_inv % p
        y3 = (m.d - 1) * c_inv % p
        upper1 = synth_upper(y1, p, cfg, rng)
        lower = synth_lower(m.c, p, cfg, rng)
        upper3 = synth_upper(y3, p, cfg, rng)
        w = upper1.word * lower.word * upper3.word
        attempts = upper1.attempts + lower.attempts + upper3.attempts
        fallback = upper1.used_fallback or lower.used_fallback or upper3.used_fallback
        return NavReport(w, m, attempts, w.length, bound, fallback)

    # Upper triangular and not the identity: shift to a nonzero corner.
    shifted = decompose(m * Mat2Fp(1, 0, 1, 1, p), cfg)
    w = shifted.word * Word.single("L", -1)
    return NavReport(w, m, shifted.attempts, w.length, bound, shifted.used_fallback)


def verify(w: Word, m: Mat2Fp) -> bool:
    """True when the word evaluates to m over F_p."""
    return w.eval_fp(m.p) == m
