"""Exact semirings and dense vector/matrix arithmetic over them.

Four instances are provided: the Boolean semiring, arbitrary-precision
integers, exact rationals, and the tropical (min, +) semiring.  Everything
is computed exactly; no floating point enters any arithmetic path (the
tropical infinity is a distinguished absorbing value that never mixes into
finite sums).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable

from .errors import DimensionError, SemiringError

TROPICAL_INF = float("inf")


class Semiring:
    """A semiring (S, +, *, 0, 1) with exact arithmetic on plain Python values.

    Flags describe the extra structure available:
      is_ring   subtraction exists
      is_field  division by nonzero elements exists
      is_pid    exact gcd-style division exists (Z; fields trivially qualify)
    """

    name: str = "?"
    is_ring = False
    is_field = False
    is_pid = False

    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def eq(self, a, b) -> bool:
        return a == b

    def neg(self, a):
        raise SemiringError(f"{self.name}: no subtraction")

    def coerce(self, raw):
        """Validate and normalise an externally supplied value."""
        raise NotImplementedError

    def to_fraction(self, a) -> Fraction:
        raise SemiringError(f"{self.name}: does not embed in the rationals")

    def sample(self, rng: random.Random):
        """A random element, for law checking and test generation."""
        raise NotImplementedError

    def sum(self, values: Iterable):
        acc = self.zero()
        for v in values:
            acc = self.add(acc, v)
        return acc

    def dot(self, u, v):
        if len(u) != len(v):
            raise DimensionError(f"dot: {len(u)} vs {len(v)}")
        return self.sum(self.mul(a, b) for a, b in zip(u, v))

    def __repr__(self):
        return f"<semiring {self.name}>"


class BooleanSemiring(Semiring):
    name = "bool"

    def add(self, a, b):
        return a | b

    def mul(self, a, b):
        return a & b

    def zero(self):
        return 0

    def one(self):
        return 1

    def coerce(self, raw):
        if raw in (0, 1, False, True):
            return int(raw)
        raise SemiringError(f"bool: bad value {raw!r}")

    def to_fraction(self, a):
        return Fraction(a)

    def sample(self, rng):
        return rng.randint(0, 1)


class IntegerRing(Semiring):
    name = "int"
    is_ring = True
    is_pid = True

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def zero(self):
        return 0

    def one(self):
        return 1

    def neg(self, a):
        return -a

    def coerce(self, raw):
        if isinstance(raw, bool):
            raise SemiringError(f"int: bad value {raw!r}")
        if isinstance(raw, int):
            return raw
        if isinstance(raw, str):
            try:
                return int(raw)
            except ValueError:
                raise SemiringError(f"int: bad value {raw!r}") from None
        raise SemiringError(f"int: bad value {raw!r}")

    def to_fraction(self, a):
        return Fraction(a)

    def sample(self, rng):
        return rng.randint(-20, 20)


class RationalField(Semiring):
    name = "rational"
    is_ring = True
    is_field = True
    is_pid = True

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def neg(self, a):
        return -a

    def coerce(self, raw):
        # Fraction keeps values in lowest terms with positive denominator.
        if isinstance(raw, bool):
            raise SemiringError(f"rational: bad value {raw!r}")
        if isinstance(raw, (int, Fraction)):
            return Fraction(raw)
        if isinstance(raw, str):
            try:
                return Fraction(raw)
            except (ValueError, ZeroDivisionError) as exc:
                raise SemiringError(f"rational: bad value {raw!r}") from exc
        raise SemiringError(f"rational: bad value {raw!r}")

    def to_fraction(self, a):
        return a

    def sample(self, rng):
        return Fraction(rng.randint(-12, 12), rng.randint(1, 9))


class TropicalSemiring(Semiring):
    """(N u {inf}, min, +): addition is min with identity inf, product is + with identity 0."""

    name = "tropical"

    def add(self, a, b):
        return min(a, b)

    def mul(self, a, b):
        return a + b

    def zero(self):
        return TROPICAL_INF

    def one(self):
        return 0

    def coerce(self, raw):
        if raw == TROPICAL_INF or raw == "inf":
            return TROPICAL_INF
        if isinstance(raw, bool):
            raise SemiringError(f"tropical: bad value {raw!r}")
        if isinstance(raw, int) and raw >= 0:
            return raw
        if isinstance(raw, str):
            try:
                v = int(raw)
            except ValueError:
                v = -1
            if v >= 0:
                return v
        raise SemiringError(f"tropical: bad value {raw!r}")

    def sample(self, rng):
        if rng.random() < 0.15:
            return TROPICAL_INF
        return rng.randint(0, 12)


BOOL = BooleanSemiring()
INT = IntegerRing()
RATIONAL = RationalField()
TROPICAL = TropicalSemiring()

SEMIRINGS = {s.name: s for s in (BOOL, INT, RATIONAL, TROPICAL)}


def semiring_by_name(name: str) -> Semiring:
    try:
        return SEMIRINGS[name]
    except KeyError:
        raise SemiringError(f"unknown semiring {name!r}") from None


@dataclass(frozen=True)
class Matrix:
    """Dense matrix with explicit shape (rows may be empty, so shape is stored)."""

    semiring: Semiring
    n_rows: int
    n_cols: int
    entries: tuple[tuple[Any, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.n_rows:
            raise DimensionError(f"{self.n_rows} rows declared, {len(self.entries)} given")
        for row in self.entries:
            if len(row) != self.n_cols:
                raise DimensionError(f"{self.n_cols} cols declared, row of {len(row)} given")

    @classmethod
    def from_rows(cls, semiring: Semiring, rows, n_cols: int | None = None) -> "Matrix":
        rows = tuple(tuple(semiring.coerce(v) for v in row) for row in rows)
        if n_cols is None:
            if not rows:
                raise DimensionError("cannot infer column count of an empty matrix")
            n_cols = len(rows[0])
        return cls(semiring, len(rows), n_cols, rows)

    @classmethod
    def identity(cls, semiring: Semiring, n: int) -> "Matrix":
        one, zero = semiring.one(), semiring.zero()
        rows = tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))
        return cls(semiring, n, n, rows)

    @classmethod
    def zeros(cls, semiring: Semiring, n_rows: int, n_cols: int) -> "Matrix":
        zero = semiring.zero()
        return cls(semiring, n_rows, n_cols, tuple((zero,) * n_cols for _ in range(n_rows)))

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def col(self, j: int) -> tuple:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> "Matrix":
        return Matrix(self.semiring, self.n_cols, self.n_rows,
                      tuple(self.col(j) for j in range(self.n_cols)))


def _check_same_semiring(a: Semiring, b: Semiring):
    if a is not b:
        raise SemiringError(f"mixed semirings: {a.name} and {b.name}")


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """Standard matrix product using the semiring's add/mul."""
    _check_same_semiring(a.semiring, b.semiring)
    if a.n_cols != b.n_rows:
        raise DimensionError(f"mat_mul: {a.n_rows}x{a.n_cols} times {b.n_rows}x{b.n_cols}")
    sr = a.semiring
    bt = b.transpose()
    rows = tuple(tuple(sr.dot(ar, bc) for bc in bt.entries) for ar in a.entries)
    return Matrix(sr, a.n_rows, b.n_cols, rows)


def mat_vec(a: Matrix, v: tuple) -> tuple:
    """Apply a matrix to a column vector."""
    if a.n_cols != len(v):
        raise DimensionError(f"mat_vec: {a.n_rows}x{a.n_cols} times vector of {len(v)}")
    sr = a.semiring
    return tuple(sr.dot(row, v) for row in a.entries)


def vec_mat(v: tuple, a: Matrix) -> tuple:
    """Apply a matrix to a row vector (on the right)."""
    if a.n_rows != len(v):
        raise DimensionError(f"vec_mat: vector of {len(v)} times {a.n_rows}x{a.n_cols}")
    sr = a.semiring
    return tuple(sr.dot(v, a.col(j)) for j in range(a.n_cols))


@dataclass(frozen=True)
class LawReport:
    """Outcome of a randomized semiring-law check; failures carry a counterexample each."""

    semiring: str
    samples: int
    failures: tuple[str, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.failures


def check_semiring_laws(instance: Semiring, samples: int = 100, seed: int = 0) -> LawReport:
    """Randomized check of the monoid, distributivity and annihilation laws."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = random.Random(seed)
    s = instance
    failures = []

    def claim(law, lhs, rhs, triple):
        if not s.eq(lhs, rhs):
            failures.append(f"{law} fails on {triple!r}: {lhs!r} != {rhs!r}")

    for _ in range(samples):
        a, b, c = (s.sample(rng) for _ in range(3))
        claim("add-assoc", s.add(s.add(a, b), c), s.add(a, s.add(b, c)), (a, b, c))
        claim("add-comm", s.add(a, b), s.add(b, a), (a, b))
        claim("add-zero", s.add(a, s.zero()), a, (a,))
        claim("mul-assoc", s.mul(s.mul(a, b), c), s.mul(a, s.mul(b, c)), (a, b, c))
        claim("mul-one-left", s.mul(s.one(), a), a, (a,))
        claim("mul-one-right", s.mul(a, s.one()), a, (a,))
        claim("left-distrib", s.mul(a, s.add(b, c)), s.add(s.mul(a, b), s.mul(a, c)), (a, b, c))
        claim("right-distrib", s.mul(s.add(a, b), c), s.add(s.mul(a, c), s.mul(b, c)), (a, b, c))
        claim("annihilate-left", s.mul(s.zero(), a), s.zero(), (a,))
        claim("annihilate-right", s.mul(a, s.zero()), s.zero(), (a,))
    return LawReport(s.name, samples, tuple(failures))
