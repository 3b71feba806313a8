"""Quadratic refinements of the mod-2 hyperbolic form and their orbits.

A refinement is determined by its 2r basis values: the refinement identity
psi(x + y) = psi(x) + psi(y) + phibar(x, y) forces every other value, giving
the closed evaluation formula used by qeval.  The symplectic group acts on
refinements through its mod-2 image.  Orbit enumeration uses the transvection
action

    (psi . T_v)(x) = psi(x) + phibar(v, x) * (psi(v) + 1),

a direct consequence of the refinement identity, evaluated on 2r-bit integer
states for speed; tests cross-check it against the generic matrix action.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Union

from .symplectic import BitMatrix, BitVector, SymplecticMatrix, Covector, Vector, _check_rank

ENUMERATION_RANK_LIMIT = 12
DECOMPOSITION_RANK_LIMIT = 8


@dataclass(frozen=True)
class QuadraticRefinement:
    """Refinement stored by its values on (u1, v1, ..., ur, vr)."""

    basis_values: tuple[int, ...]

    def __post_init__(self) -> None:
        values = tuple(int(b) % 2 for b in self.basis_values)
        if not values or len(values) % 2:
            raise ValueError("need a positive even number of basis values")
        object.__setattr__(self, "basis_values", values)

    @property
    def rank(self) -> int:
        return len(self.basis_values) // 2

    @classmethod
    def zero(cls, r: int) -> "QuadraticRefinement":
        return cls((0,) * (2 * _check_rank(r)))

    @classmethod
    def arf_one(cls, r: int) -> "QuadraticRefinement":
        """Lexicographically least refinement with Arf invariant 1."""
        return cls((0,) * (2 * _check_rank(r) - 2) + (1, 1))


def qeval(psi: QuadraticRefinement, v: Union[Vector, BitVector]) -> int:
    """psi(v) = sum over pairs of a_i psi(u_i) + b_i psi(v_i) + a_i b_i, mod 2."""
    bits = tuple(c % 2 for c in v.coords)
    vals = psi.basis_values
    if len(bits) != len(vals):
        raise ValueError("rank mismatch")
    total = 0
    for k in range(psi.rank):
        a, b = bits[2 * k], bits[2 * k + 1]
        total ^= (a & vals[2 * k]) ^ (b & vals[2 * k + 1]) ^ (a & b)
    return total


def qact(psi: QuadraticRefinement, a: Union[SymplecticMatrix, BitMatrix]) -> QuadraticRefinement:
    """Right action psi.A, i.e. the refinement v -> psi(Av); depends only on A mod 2."""
    if isinstance(a, SymplecticMatrix):
        m = a.mod2()
    elif isinstance(a, BitMatrix):
        m = a
    else:
        raise TypeError("expected a SymplecticMatrix or BitMatrix")
    if m.rank != psi.rank:
        raise ValueError("rank mismatch")
    values = tuple(qeval(psi, m.column(j)) for j in range(2 * psi.rank))
    return QuadraticRefinement(values)


def qtranslate(psi: QuadraticRefinement, xbar: Covector) -> QuadraticRefinement:
    """Torsor translation psi + xbar by a mod-2 covector."""
    if xbar.modulus != 2:
        raise ValueError("translation must be a mod-2 covector")
    if xbar.rank != psi.rank:
        raise ValueError("rank mismatch")
    return QuadraticRefinement(tuple(p ^ c for p, c in zip(psi.basis_values, xbar.coords)))


def qdifference(psi1: QuadraticRefinement, psi0: QuadraticRefinement) -> Covector:
    """The unique mod-2 covector with psi1 = psi0 + xbar."""
    if psi1.rank != psi0.rank:
        raise ValueError("rank mismatch")
    return Covector(tuple(a ^ b for a, b in zip(psi1.basis_values, psi0.basis_values)), 2)


def arf(psi: QuadraticRefinement) -> int:
    """Arf invariant: sum over pairs of psi(u_i) psi(v_i), mod 2."""
    vals = psi.basis_values
    return sum(vals[2 * k] & vals[2 * k + 1] for k in range(psi.rank)) & 1


def expected_orbit_sizes(r: int) -> tuple[int, int]:
    """Closed-form orbit sizes (Arf 0, Arf 1)."""
    r = _check_rank(r)
    return (2 ** (2 * r - 1) + 2 ** (r - 1), 2 ** (2 * r - 1) - 2 ** (r - 1))


def enumerate_refinements(r: int) -> list[QuadraticRefinement]:
    """All 2^(2r) refinements in lexicographic basis-value order."""
    r = _check_rank(r)
    if r > ENUMERATION_RANK_LIMIT:
        raise ValueError(f"rank {r} exceeds the enumeration limit {ENUMERATION_RANK_LIMIT}")
    return [QuadraticRefinement(bits) for bits in product((0, 1), repeat=2 * r)]


def _even_mask(nbits: int) -> int:
    return sum(1 << i for i in range(0, nbits, 2))


def _state_of(bits) -> int:
    state = 0
    for i, b in enumerate(bits):
        state |= (b & 1) << i
    return state


def _bits_of(state: int, nbits: int) -> tuple[int, ...]:
    return tuple((state >> i) & 1 for i in range(nbits))


def _orbit_states(start: int, nbits: int) -> set[int]:
    # one entry per transvection direction: (covector mask, self-pairing parity)
    even = _even_mask(nbits)
    size = 1 << nbits
    swap = [0] * size
    par = bytearray(size)
    for v in range(1, size):
        swap[v] = ((v & even) << 1) | ((v >> 1) & even)
        par[v] = (v & (v >> 1) & even).bit_count() & 1
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for s in frontier:
            for v in range(1, size):
                if ((s & v).bit_count() ^ par[v]) & 1:
                    continue  # psi(v) = 1: this transvection fixes the state
                t = s ^ swap[v]
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    return seen


def orbit_of(psi: QuadraticRefinement) -> list[QuadraticRefinement]:
    """Closure of psi under all nonzero mod-2 transvections, sorted by basis values.

    Time and memory grow as 16^r; ranks past 6 are mostly of academic interest.
    """
    if psi.rank > ENUMERATION_RANK_LIMIT:
        raise ValueError(f"rank {psi.rank} exceeds the orbit limit {ENUMERATION_RANK_LIMIT}")
    n = 2 * psi.rank
    states = _orbit_states(_state_of(psi.basis_values), n)
    return [QuadraticRefinement(bits) for bits in sorted(_bits_of(s, n) for s in states)]


def is_group_fixed(psi: QuadraticRefinement) -> bool:
    """Whether every transvection fixes psi, i.e. its orbit is a singleton."""
    n = 2 * psi.rank
    even = _even_mask(n)
    state = _state_of(psi.basis_values)
    for v in range(1, 1 << n):
        par = (v & (v >> 1) & even).bit_count() & 1
        if ((state & v).bit_count() ^ par) & 1:
            continue
        return False  # psi(v) = 0 and v != 0: the transvection at v moves psi
    return True


@dataclass(frozen=True)
class OrbitClass:
    arf_label: int
    size: int
    representative: QuadraticRefinement


@dataclass(frozen=True)
class OrbitReport:
    """Orbit decomposition data; two classes are expected, one per Arf value."""

    rank: int
    orbits: tuple[OrbitClass, ...]


def orbit_decomposition(r: int) -> OrbitReport:
    """Partition all refinements into orbits, labelled by the Arf invariant."""
    r = _check_rank(r)
    if r > DECOMPOSITION_RANK_LIMIT:
        raise ValueError(f"rank {r} exceeds the decomposition limit {DECOMPOSITION_RANK_LIMIT}")
    n = 2 * r
    seen: set[int] = set()
    classes: list[OrbitClass] = []
    for bits in product((0, 1), repeat=n):
        s = _state_of(bits)
        if s in seen:
            continue
        orbit = _orbit_states(s, n)
        seen |= orbit
        rep = QuadraticRefinement(bits)  # lex scan: first unseen state is the least member
        classes.append(OrbitClass(arf(rep), len(orbit), rep))
    if len(seen) != 1 << n:
        raise ArithmeticError("orbits failed to partition the refinement set")
    classes.sort(key=lambda c: (c.arf_label, c.representative.basis_values))
    return OrbitReport(r, tuple(classes))
