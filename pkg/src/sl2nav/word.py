"""Words over the generator alphabet {U, L, U^-1, L^-1}, run-length encoded.

A word is a sequence of runs (letter, exponent) with adjacent runs on
different letters and no zero exponents; its length is the total letter
count sum(|exponent|).  Text grammar: whitespace-separated tokens, each a
letter 'U' or 'L' optionally followed by '^' and a signed decimal
exponent; the single token "e" is the empty word.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .mat2 import Mat2Fp, Mat2Z

_TOKEN = re.compile(r"\S+")
_LETTERS = ("U", "L")


@dataclass(frozen=True)
class Word:
    runs: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        prev = None
        for letter, exp in self.runs:
            if letter not in _LETTERS:
                raise ValueError("unknown letter %r" % letter)
            if exp == 0:
                raise ValueError("zero exponent in run")
            if letter == prev:
                raise ValueError("adjacent runs share letter %r; not canonical" % letter)
            prev = letter

    @classmethod
    def identity(cls) -> "Word":
        return cls(())

    @classmethod
    def single(cls, letter: str, exp: int) -> "Word":
        if exp == 0:
            return cls(())
        return cls(((letter, exp),))

    @classmethod
    def from_runs(cls, runs: Iterable[tuple[str, int]]) -> "Word":
        """Build a word from arbitrary runs, merging and dropping as needed."""
        stack: list[tuple[str, int]] = []
        for letter, exp in runs:
            if exp == 0:
                continue
            if stack and stack[-1][0] == letter:
                merged = stack[-1][1] + exp
                if merged == 0:
                    stack.pop()
                else:
                    stack[-1] = (letter, merged)
            else:
                stack.append((letter, exp))
        return cls(tuple(stack))

    @property
    def length(self) -> int:
        return sum(abs(exp) for _, exp in self.runs)

    def is_identity(self) -> bool:
        return not self.runs

    def __mul__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        return Word.from_runs(self.runs + other.runs)

    def invert(self) -> "Word":
        return Word(tuple((letter, -exp) for letter, exp in reversed(self.runs)))

    __invert__ = invert

    def transposed(self) -> "Word":
        """Word evaluating to the transpose: reverse runs and swap U <-> L."""
        swap = {"U": "L", "L": "U"}
        return Word(tuple((swap[letter], exp) for letter, exp in reversed(self.runs)))

    def eval_z(self) -> Mat2Z:
        """Left-to-right product over Z; U^e = [[1,e],[0,1]], L^e = [[1,0],[e,1]]."""
        a, b, c, d = 1, 0, 0, 1
        for letter, e in self.runs:
            if letter == "U":
                b += a * e
                d += c * e
            else:
                a += b * e
                c += d * e
        return Mat2Z(a, b, c, d)

    def eval_fp(self, p: int) -> Mat2Fp:
        """Same product with every step reduced mod p."""
        a, b, c, d = 1, 0, 0, 1
        for letter, e in self.runs:
            e %= p
            if letter == "U":
                b = (b + a * e) % p
                d = (d + c * e) % p
            else:
                a = (a + b * e) % p
                c = (c + d * e) % p
        return Mat2Fp(a, b, c, d, p)

    @classmethod
    def parse(cls, text: str) -> "Word":
        tokens = [(m.group(), m.start()) for m in _TOKEN.finditer(text)]
        if not tokens:
            raise ValueError("empty input; write 'e' for the empty word")
        if any(tok == "e" for tok, _ in tokens):
            if len(tokens) == 1:
                return cls(())
            pos = next(start for tok, start in tokens if tok == "e")
            raise ValueError("'e' must stand alone (position %d)" % pos)
        runs: list[tuple[str, int]] = []
        for tok, pos in tokens:
            letter, rest = tok[0], tok[1:]
            if letter not in _LETTERS:
                raise ValueError("unknown letter %r at position %d" % (letter, pos))
            if rest == "":
                exp = 1
            elif rest.startswith("^"):
                try:
                    exp = int(rest[1:])
                except ValueError:
                    raise ValueError(
                        "bad exponent %r at position %d" % (rest[1:], pos)
                    ) from None
            else:
                raise ValueError("malformed token %r at position %d" % (tok, pos))
            if exp == 0:
                raise ValueError("zero exponent at position %d" % pos)
            runs.append((letter, exp))
        return cls.from_runs(runs)

    def __str__(self) -> str:
        if not self.runs:
            return "e"
        return " ".join(
            letter if exp == 1 else "%s^%d" % (letter, exp) for letter, exp in self.runs
        )

    def to_json_pairs(self) -> list[list[str]]:
        """JSON form: [[letter, exponent-as-decimal-string], ...]."""
        return [[letter, str(exp)] for letter, exp in self.runs]

    @classmethod
    def from_json_pairs(cls, pairs: Iterable[Iterable[str]]) -> "Word":
        return cls.from_runs((letter, int(exp)) for letter, exp in pairs)
