"""Exact linear algebra for the standard hyperbolic alternating form.

All values are immutable tuples of Python integers, so every operation is
exact at any size.  The basis of Z^(2r) is ordered (u1, v1, ..., ur, vr) and
the form takes +1 on each (ui, vi) pair, which keeps its Gram matrix block
diagonal.  Matrices act on column vectors from the left; covectors are row
functionals, acted on the right by composition.
"""

from __future__ import annotations

import random
from dataclasses import InitVar, dataclass
from functools import lru_cache
from operator import mul
from typing import Iterable, Sequence, Union


def _as_int_tuple(values: Iterable[int]) -> tuple[int, ...]:
    return tuple(int(v) for v in values)


def _check_rank(r: int) -> int:
    r = int(r)
    if r < 1:
        raise ValueError(f"rank must be a positive integer, got {r}")
    return r


def _matmul(a, b):
    cols = tuple(zip(*b))
    return tuple(tuple(sum(map(mul, row, col)) for col in cols) for row in a)


def _transpose(rows):
    return tuple(zip(*rows))


@lru_cache(maxsize=None)
def _form_rows(r: int) -> tuple[tuple[int, ...], ...]:
    # Gram matrix of the form: +1 at (2k, 2k+1), -1 at (2k+1, 2k).
    n = 2 * r
    rows = [[0] * n for _ in range(n)]
    for k in range(r):
        rows[2 * k][2 * k + 1] = 1
        rows[2 * k + 1][2 * k] = -1
    return tuple(tuple(row) for row in rows)


@lru_cache(maxsize=None)
def _identity_rows(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class Vector:
    """Integer column vector in the ordered hyperbolic basis."""

    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        coords = _as_int_tuple(self.coords)
        if not coords or len(coords) % 2:
            raise ValueError("a vector needs a positive even number of coordinates")
        object.__setattr__(self, "coords", coords)

    @property
    def rank(self) -> int:
        return len(self.coords) // 2

    @classmethod
    def zero(cls, r: int) -> "Vector":
        return cls((0,) * (2 * _check_rank(r)))

    @classmethod
    def unit(cls, r: int, j: int) -> "Vector":
        n = 2 * _check_rank(r)
        if not 0 <= j < n:
            raise ValueError("basis index out of range")
        return cls(tuple(int(i == j) for i in range(n)))

    @classmethod
    def u(cls, r: int, i: int) -> "Vector":
        """The i-th (1-based) vector of the first kind in its hyperbolic pair."""
        return cls.unit(r, 2 * (i - 1))

    @classmethod
    def v(cls, r: int, i: int) -> "Vector":
        """The i-th (1-based) vector of the second kind in its hyperbolic pair."""
        return cls.unit(r, 2 * (i - 1) + 1)

    def _same_rank(self, other: "Vector") -> None:
        if len(self.coords) != len(other.coords):
            raise ValueError("rank mismatch")

    def __add__(self, other: "Vector") -> "Vector":
        self._same_rank(other)
        return Vector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Vector") -> "Vector":
        self._same_rank(other)
        return Vector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Vector":
        return Vector(tuple(-a for a in self.coords))

    def __rmul__(self, k: int) -> "Vector":
        return Vector(tuple(int(k) * a for a in self.coords))

    def mod2(self) -> "BitVector":
        return BitVector(self.coords)


@dataclass(frozen=True)
class BitVector:
    """Mod-2 vector; coordinates normalized to 0/1."""

    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        coords = tuple(int(c) % 2 for c in self.coords)
        if not coords or len(coords) % 2:
            raise ValueError("a vector needs a positive even number of coordinates")
        object.__setattr__(self, "coords", coords)

    @property
    def rank(self) -> int:
        return len(self.coords) // 2

    @classmethod
    def zero(cls, r: int) -> "BitVector":
        return cls((0,) * (2 * _check_rank(r)))

    @classmethod
    def unit(cls, r: int, j: int) -> "BitVector":
        return cls(Vector.unit(r, j).coords)

    def __add__(self, other: "BitVector") -> "BitVector":
        if len(self.coords) != len(other.coords):
            raise ValueError("rank mismatch")
        return BitVector(tuple(a ^ b for a, b in zip(self.coords, other.coords)))


def phi_eval(v: Union[Vector, BitVector], w: Union[Vector, BitVector]) -> int:
    """Value of the hyperbolic form: sum over pairs of a_i b'_i - b_i a'_i."""
    a, b = v.coords, w.coords
    if len(a) != len(b):
        raise ValueError("rank mismatch")
    total = 0
    for k in range(0, len(a), 2):
        total += a[k] * b[k + 1] - a[k + 1] * b[k]
    return total


@dataclass(frozen=True)
class Covector:
    """Row functional with coefficients in Z (modulus 0) or Z/modulus."""

    coords: tuple[int, ...]
    modulus: int = 0

    def __post_init__(self) -> None:
        m = int(self.modulus)
        if m < 0:
            raise ValueError("modulus must be non-negative")
        coords = _as_int_tuple(self.coords)
        if not coords or len(coords) % 2:
            raise ValueError("a covector needs a positive even number of coordinates")
        if m:
            coords = tuple(c % m for c in coords)
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "modulus", m)

    @property
    def rank(self) -> int:
        return len(self.coords) // 2

    @classmethod
    def zero(cls, r: int, modulus: int = 0) -> "Covector":
        return cls((0,) * (2 * _check_rank(r)), modulus)

    @classmethod
    def unit(cls, r: int, j: int, modulus: int = 0) -> "Covector":
        return cls(Vector.unit(r, j).coords, modulus)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def _compatible(self, other: "Covector") -> None:
        if len(self.coords) != len(other.coords):
            raise ValueError("rank mismatch")
        if self.modulus != other.modulus:
            raise ValueError("modulus mismatch")

    def __add__(self, other: "Covector") -> "Covector":
        self._compatible(other)
        return Covector(tuple(a + b for a, b in zip(self.coords, other.coords)), self.modulus)

    def __sub__(self, other: "Covector") -> "Covector":
        self._compatible(other)
        return Covector(tuple(a - b for a, b in zip(self.coords, other.coords)), self.modulus)

    def __neg__(self) -> "Covector":
        return Covector(tuple(-a for a in self.coords), self.modulus)

    def evaluate(self, v: Union[Vector, BitVector]) -> int:
        """Pairing with a vector, reduced into the covector's coefficient ring."""
        if len(v.coords) != len(self.coords):
            raise ValueError("rank mismatch")
        total = sum(map(mul, self.coords, v.coords))
        return total % self.modulus if self.modulus else total

    def act(self, a: Union["SymplecticMatrix", "BitMatrix"]) -> "Covector":
        """Right action by composition: (x.A)(w) = x(Aw)."""
        if isinstance(a, BitMatrix):
            if self.modulus != 2:
                raise ValueError("mod-2 matrices act only on mod-2 covectors")
        elif not isinstance(a, SymplecticMatrix):
            raise TypeError("expected a SymplecticMatrix or BitMatrix")
        rows = a.rows
        if len(rows) != len(self.coords):
            raise ValueError("rank mismatch")
        coords = tuple(sum(map(mul, self.coords, col)) for col in zip(*rows))
        return Covector(coords, self.modulus)

    def reduce_to(self, m: int) -> "Covector":
        m = int(m)
        if m < 0:
            raise ValueError("modulus must be non-negative")
        if m == 0:
            if self.modulus != 0:
                raise ValueError("cannot lift a finite-modulus covector back to integers")
            return self
        if self.modulus and self.modulus % m:
            raise ValueError(f"{m} does not divide modulus {self.modulus}")
        return Covector(self.coords, m)

    def mod2(self) -> "Covector":
        return self.reduce_to(2)


def _preserves_form(rows) -> bool:
    j = _form_rows(len(rows) // 2)
    return _matmul(_matmul(_transpose(rows), j), rows) == j


def _preserves_form_mod2(rows) -> bool:
    j = _form_rows(len(rows) // 2)
    j2 = tuple(tuple(e % 2 for e in row) for row in j)
    prod = _matmul(_matmul(_transpose(rows), j2), rows)
    return tuple(tuple(e % 2 for e in row) for row in prod) == j2


def is_symplectic(matrix: Union["SymplecticMatrix", Sequence[Sequence[int]]]) -> bool:
    """Exact form-preservation check; raises on non-square or odd dimension."""
    if isinstance(matrix, SymplecticMatrix):
        rows = matrix.rows
    else:
        rows = tuple(_as_int_tuple(row) for row in matrix)
    n = len(rows)
    if n == 0 or n % 2 or any(len(row) != n for row in rows):
        raise ValueError("expected a square integer matrix of even dimension")
    return _preserves_form(rows)


@dataclass(frozen=True)
class SymplecticMatrix:
    """Integer matrix preserving the hyperbolic form; validated on construction."""

    rows: tuple[tuple[int, ...], ...]
    check: InitVar[bool] = True

    def __post_init__(self, check: bool) -> None:
        rows = tuple(_as_int_tuple(row) for row in self.rows)
        n = len(rows)
        if n == 0 or n % 2 or any(len(row) != n for row in rows):
            raise ValueError("matrix must be square of even dimension")
        object.__setattr__(self, "rows", rows)
        if check and not _preserves_form(rows):
            raise ValueError("matrix does not preserve the hyperbolic form")

    @property
    def rank(self) -> int:
        return len(self.rows) // 2

    @property
    def dim(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, r: int) -> "SymplecticMatrix":
        return cls(_identity_rows(2 * _check_rank(r)), check=False)

    def __mul__(self, other: "SymplecticMatrix") -> "SymplecticMatrix":
        if not isinstance(other, SymplecticMatrix):
            return NotImplemented
        if self.dim != other.dim:
            raise ValueError("rank mismatch")
        # products of form-preserving matrices preserve the form
        return SymplecticMatrix(_matmul(self.rows, other.rows), check=False)

    def inverse(self) -> "SymplecticMatrix":
        """Exact inverse derived from the form identity, verified by multiplying back."""
        j = _form_rows(self.rank)
        negj = tuple(tuple(-e for e in row) for row in j)
        inv_rows = _matmul(_matmul(negj, _transpose(self.rows)), j)
        if _matmul(self.rows, inv_rows) != _identity_rows(self.dim):
            raise ArithmeticError("inverse postcondition failed")
        return SymplecticMatrix(inv_rows, check=False)

    def mod2(self) -> "BitMatrix":
        # the reduction of a form-preserving matrix preserves the form mod 2
        return BitMatrix(self.rows, check=False)

    def apply(self, v: Vector) -> Vector:
        if len(self.rows) != len(v.coords):
            raise ValueError("rank mismatch")
        return Vector(tuple(sum(map(mul, row, v.coords)) for row in self.rows))

    def column(self, j: int) -> Vector:
        return Vector(tuple(row[j] for row in self.rows))


@dataclass(frozen=True)
class BitMatrix:
    """Mod-2 matrix satisfying the mod-2 form identity."""

    rows: tuple[tuple[int, ...], ...]
    check: InitVar[bool] = True

    def __post_init__(self, check: bool) -> None:
        rows = tuple(tuple(int(e) % 2 for e in row) for row in self.rows)
        n = len(rows)
        if n == 0 or n % 2 or any(len(row) != n for row in rows):
            raise ValueError("matrix must be square of even dimension")
        object.__setattr__(self, "rows", rows)
        if check and not _preserves_form_mod2(rows):
            raise ValueError("matrix is not symplectic mod 2")

    @property
    def rank(self) -> int:
        return len(self.rows) // 2

    @classmethod
    def identity(cls, r: int) -> "BitMatrix":
        return cls(_identity_rows(2 * _check_rank(r)), check=False)

    def column(self, j: int) -> BitVector:
        return BitVector(tuple(row[j] for row in self.rows))


@lru_cache(maxsize=None)
def transvection(v: Vector) -> SymplecticMatrix:
    """Matrix of w -> w + phi(v, w) v, symplectic for every integer v."""
    n = 2 * v.rank
    cols = []
    for j in range(n):
        e = Vector.unit(v.rank, j)
        c = phi_eval(v, e)
        cols.append(tuple(e.coords[i] + c * v.coords[i] for i in range(n)))
    return SymplecticMatrix(_transpose(cols), check=False)


def act_covector(x: Covector, a: Union[SymplecticMatrix, BitMatrix]) -> Covector:
    return x.act(a)


def reduce_covector(x: Covector, m: int) -> Covector:
    return x.reduce_to(m)


def neg_identity(r: int) -> SymplecticMatrix:
    n = 2 * _check_rank(r)
    rows = tuple(tuple(-int(i == j) for j in range(n)) for i in range(n))
    return SymplecticMatrix(rows, check=False)


@lru_cache(maxsize=None)
def transvection_candidates(r: int) -> tuple[Vector, ...]:
    """Directions used by the seeded word generator: u_i, v_i, and u_i +/- v_j."""
    r = _check_rank(r)
    us = [Vector.u(r, i) for i in range(1, r + 1)]
    vs = [Vector.v(r, i) for i in range(1, r + 1)]
    sums = [us[i] + vs[j] for i in range(r) for j in range(r)]
    diffs = [us[i] - vs[j] for i in range(r) for j in range(r)]
    return tuple(us + vs + sums + diffs)


def random_symplectic_word(r: int, word_length: int, rng: random.Random) -> SymplecticMatrix:
    if word_length < 0:
        raise ValueError("word length must be non-negative")
    candidates = transvection_candidates(r)
    acc = SymplecticMatrix.identity(r)
    for _ in range(word_length):
        acc = acc * transvection(rng.choice(candidates))
    return acc


def random_symplectic(r: int, word_length: int, seed: int) -> SymplecticMatrix:
    """Deterministic product of word_length transvections drawn from the candidate set."""
    return random_symplectic_word(r, word_length, random.Random(seed))
