"""The Jacobi group of covector-matrix pairs and its refinement subgroups.

Elements are pairs (x, A) with product (x, A)(y, B) = (x.B + y, AB).  For a
refinement psi, the pairs whose mod-2 covector part equals the principal
cocycle value of their matrix form a subgroup; it is an extension of the
symplectic group by the lattice of even covectors.  `splits` decides whether
that extension admits a homomorphic section, by exhaustive search for a
group-fixed translate of the base refinement.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Callable, Optional

from .cocycles import principal_at
from .quadratic import QuadraticRefinement, is_group_fixed, qtranslate
from .symplectic import Covector, SymplecticMatrix, _check_rank, random_symplectic_word

SPLIT_RANK_LIMIT = 8


@dataclass(frozen=True)
class JacobiElement:
    """Pair (x, A): a covector together with a symplectic matrix of equal rank."""

    x: Covector
    a: SymplecticMatrix

    def __post_init__(self) -> None:
        if self.x.rank != self.a.rank:
            raise ValueError("covector and matrix ranks differ")

    @property
    def rank(self) -> int:
        return self.a.rank

    @property
    def modulus(self) -> int:
        return self.x.modulus

    def __mul__(self, other: "JacobiElement") -> "JacobiElement":
        return jmul(self, other)

    def inverse(self) -> "JacobiElement":
        return jinv(self)


def jacobi_identity(r: int, modulus: int = 0) -> JacobiElement:
    return JacobiElement(Covector.zero(r, modulus), SymplecticMatrix.identity(r))


def jmul(g: JacobiElement, h: JacobiElement) -> JacobiElement:
    if g.rank != h.rank or g.modulus != h.modulus:
        raise ValueError("operands must share rank and modulus")
    return JacobiElement(g.x.act(h.a) + h.x, g.a * h.a)


def jinv(g: JacobiElement) -> JacobiElement:
    ai = g.a.inverse()
    return JacobiElement(-(g.x.act(ai)), ai)


def gamma_psi_member(g: JacobiElement, psi: QuadraticRefinement) -> bool:
    """Whether the mod-2 part of x equals the principal cocycle value of A."""
    if g.rank != psi.rank:
        raise ValueError("rank mismatch")
    if g.modulus % 2:
        raise ValueError("membership needs modulus 0 or even")
    return g.x.reduce_to(2) == principal_at(psi, g.a)


def include_fiber(x: Covector, r: int) -> JacobiElement:
    """Embed an even covector as the pair (x, Id)."""
    if x.rank != _check_rank(r):
        raise ValueError("rank mismatch")
    if any(c % 2 for c in x.coords):
        raise ValueError("fiber covectors must have even coordinates")
    return JacobiElement(x, SymplecticMatrix.identity(r))


def project(g: JacobiElement) -> SymplecticMatrix:
    return g.a


def reduce_modulus(g: JacobiElement, m: int) -> JacobiElement:
    return JacobiElement(g.x.reduce_to(m), g.a)


def reframe(g: JacobiElement, y: Covector) -> JacobiElement:
    """Conjugation by (y, Id): (x, A) -> (y.A + x - y, A).

    Carries the refinement subgroup at psi onto the one at psi + ybar.
    """
    if y.rank != g.rank or y.modulus != g.modulus:
        raise ValueError("conjugating covector must share rank and modulus")
    return JacobiElement(y.act(g.a) + g.x - y, g.a)


def default_base_refinement(r: int) -> QuadraticRefinement:
    """All-zero base, except at rank 1 where the Arf-1 form makes the section zero."""
    r = _check_rank(r)
    return QuadraticRefinement.arf_one(1) if r == 1 else QuadraticRefinement.zero(r)


def lift_bits(xbar: Covector, modulus: int) -> Covector:
    """Integer (or residue) covector with the given mod-2 reduction."""
    if xbar.modulus != 2:
        raise ValueError("expected a mod-2 covector")
    return Covector(xbar.coords, modulus)


def section_from_witness(xbar: Covector, modulus: int) -> Callable[[SymplecticMatrix], JacobiElement]:
    """Homomorphic section A -> (x.A - x, A) where x lifts the witness."""
    x = lift_bits(xbar, modulus)
    def sigma(a: SymplecticMatrix) -> JacobiElement:
        return JacobiElement(x.act(a) - x, a)
    return sigma


def section_r1(a: SymplecticMatrix, modulus: int = 0) -> JacobiElement:
    """The zero section A -> (0, A), valid at rank 1 over the Arf-1 base form."""
    if a.rank != 1:
        raise ValueError("the zero section exists only at rank 1")
    return JacobiElement(Covector.zero(1, modulus), a)


@dataclass(frozen=True)
class SplitVerdict:
    """Outcome of the splitting decision at one rank and modulus.

    When `splits` is true, `witness` is the lexicographically least mod-2
    translation making the base refinement group-fixed, and the section is
    A -> (x.A - x, A) for x any lift of the witness.  When false, every one of
    the 2^(2r) candidate translations was checked and none is group-fixed.
    """

    rank: int
    modulus: int
    base: QuadraticRefinement
    splits: bool
    witness: Optional[Covector]
    fixed_refinement: Optional[QuadraticRefinement]
    candidates_checked: int

    def section(self) -> Callable[[SymplecticMatrix], JacobiElement]:
        if not self.splits or self.witness is None:
            raise ValueError("extension does not split; no section exists")
        return section_from_witness(self.witness, self.modulus)


def splits(r: int, modulus: int, psi: Optional[QuadraticRefinement] = None) -> SplitVerdict:
    """Decide whether the extension splits; exhaustive and exact.

    Requires modulus 0 (integer covectors) or a multiple of 4, the regime in
    which splitting is equivalent to the base refinement having a group-fixed
    translate.
    """
    r = _check_rank(r)
    if r > SPLIT_RANK_LIMIT:
        raise ValueError(f"rank {r} exceeds the splitting search limit {SPLIT_RANK_LIMIT}")
    if modulus != 0 and modulus % 4:
        raise ValueError("modulus must be 0 or divisible by 4")
    base = default_base_refinement(r) if psi is None else psi
    if base.rank != r:
        raise ValueError("base refinement rank mismatch")
    checked = 0
    for bits in product((0, 1), repeat=2 * r):
        checked += 1
        xbar = Covector(bits, 2)
        shifted = qtranslate(base, xbar)
        if is_group_fixed(shifted):
            return SplitVerdict(r, modulus, base, True, xbar, shifted, checked)
    return SplitVerdict(r, modulus, base, False, None, None, checked)


def random_member(psi: QuadraticRefinement, modulus: int, rng: random.Random,
                  word_length: int = 8) -> JacobiElement:
    """Seeded sample from the refinement subgroup (not uniform over the group)."""
    a = random_symplectic_word(psi.rank, rng.randint(0, word_length), rng)
    xbar = principal_at(psi, a)
    n = 2 * psi.rank
    if modulus == 0:
        noise = [rng.randint(-9, 9) for _ in range(n)]
    else:
        noise = [rng.randrange(modulus) for _ in range(n)]
    coords = tuple(b + 2 * t for b, t in zip(xbar.coords, noise))
    return JacobiElement(Covector(coords, modulus), a)


@dataclass(frozen=True)
class ExtensionModel:
    """Extension data: the even covector fiber over the symplectic group at a base."""

    rank: int
    modulus: int
    base: QuadraticRefinement

    def __post_init__(self) -> None:
        _check_rank(self.rank)
        if self.modulus % 2:
            raise ValueError("modulus must be 0 or even")
        if self.base.rank != self.rank:
            raise ValueError("base refinement rank mismatch")

    def identity(self) -> JacobiElement:
        return jacobi_identity(self.rank, self.modulus)

    def contains(self, g: JacobiElement) -> bool:
        return (g.rank == self.rank and g.modulus == self.modulus
                and gamma_psi_member(g, self.base))

    def splitting(self) -> SplitVerdict:
        return splits(self.rank, self.modulus, self.base)
