"""2x2 unimodular matrices over Z and over F_p.

Determinant-1 is a construction invariant checked by assert, so test and
debug runs verify it while optimized runs skip the extra bignum products.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import RngState, mod_inverse


@dataclass(frozen=True)
class Mat2Z:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        assert self.a * self.d - self.b * self.c == 1, "determinant must be 1"

    @classmethod
    def identity(cls) -> "Mat2Z":
        return cls(1, 0, 0, 1)

    def __mul__(self, other: "Mat2Z") -> "Mat2Z":
        if not isinstance(other, Mat2Z):
            return NotImplemented
        return Mat2Z(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "Mat2Z":
        return Mat2Z(self.d, -self.b, -self.c, self.a)

    def transpose(self) -> "Mat2Z":
        return Mat2Z(self.a, self.c, self.b, self.d)

    def det(self) -> int:
        return self.a * self.d - self.b * self.c


@dataclass(frozen=True)
class Mat2Fp:
    """Element of SL2(F_p); entries are stored fully reduced."""

    a: int
    b: int
    c: int
    d: int
    p: int

    def __post_init__(self):
        p = self.p
        if p < 2:
            raise ValueError("modulus must be at least 2")
        object.__setattr__(self, "a", self.a % p)
        object.__setattr__(self, "b", self.b % p)
        object.__setattr__(self, "c", self.c % p)
        object.__setattr__(self, "d", self.d % p)
        assert (self.a * self.d - self.b * self.c) % p == 1, "determinant must be 1 mod p"

    @classmethod
    def identity(cls, p: int) -> "Mat2Fp":
        return cls(1, 0, 0, 1, p)

    @classmethod
    def from_string(cls, text: str, p: int) -> "Mat2Fp":
        """Parse "a,b,c,d" (decimal entries of any size, reduced mod p)."""
        parts = [s.strip() for s in text.split(",")]
        if len(parts) != 4:
            raise ValueError("expected four comma-separated entries, got %d" % len(parts))
        try:
            a, b, c, d = (int(s) for s in parts)
        except ValueError:
            raise ValueError("matrix entries must be decimal integers: %r" % text) from None
        if (a * d - b * c) % p != 1:
            raise ValueError("matrix is not unimodular mod %d" % p)
        return cls(a, b, c, d, p)

    def entries_string(self) -> str:
        return "%d,%d,%d,%d" % (self.a, self.b, self.c, self.d)

    def __mul__(self, other: "Mat2Fp") -> "Mat2Fp":
        if not isinstance(other, Mat2Fp):
            return NotImplemented
        if self.p != other.p:
            raise ValueError("modulus mismatch: %d vs %d" % (self.p, other.p))
        p = self.p
        return Mat2Fp(
            (self.a * other.a + self.b * other.c) % p,
            (self.a * other.b + self.b * other.d) % p,
            (self.c * other.a + self.d * other.c) % p,
            (self.c * other.b + self.d * other.d) % p,
            p,
        )

    def inverse(self) -> "Mat2Fp":
        return Mat2Fp(self.d, -self.b, -self.c, self.a, self.p)

    def transpose(self) -> "Mat2Fp":
        return Mat2Fp(self.a, self.c, self.b, self.d, self.p)

    def is_identity(self) -> bool:
        return self.a == 1 and self.b == 0 and self.c == 0 and self.d == 1


GEN_U = Mat2Z(1, 1, 0, 1)
GEN_L = Mat2Z(1, 0, 1, 1)


def reduce_mod(m: Mat2Z, p: int) -> Mat2Fp:
    """Entrywise reduction of a unimodular integer matrix into SL2(F_p)."""
    return Mat2Fp(m.a, m.b, m.c, m.d, p)


def is_left_dominated(m: Mat2Z) -> bool:
    """All entries nonnegative and left column sum >= right column sum."""
    return (
        m.a >= 0
        and m.b >= 0
        and m.c >= 0
        and m.d >= 0
        and m.a + m.c >= m.b + m.d
    )


def lift_upper(a: int, p: int) -> Mat2Z:
    """Integer lift [[a, (a*d-1)/p], [p, d]] of the residue a, with d its
    inverse mod p.  Reduces mod p to [[a, *], [0, a^-1]] and has
    determinant exactly 1 over Z.
    """
    a %= p
    if a == 0:
        raise ValueError("cannot lift a multiple of %d" % p)
    d = mod_inverse(a, p)
    b = (a * d - 1) // p
    return Mat2Z(a, b, p, d)


def random_sl2(p: int, rng: RngState) -> Mat2Fp:
    """Uniform random element of SL2(F_p).

    Draw a nonzero first row, then a uniform point on the line of
    compatible second rows; every group element arises with equal
    probability.
    """
    while True:
        a = rng.randrange(p)
        b = rng.randrange(p)
        if a or b:
            break
    if a:
        c0, d0 = 0, mod_inverse(a, p)
    else:
        c0, d0 = (-mod_inverse(b, p)) % p, 0
    t = rng.randrange(p)
    return Mat2Fp(a, b, (c0 + t * a) % p, (d0 + t * b) % p, p)
