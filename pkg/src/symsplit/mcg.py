"""Mapping class group models for connected sums of sphere products.

Two exact models share the same pair arithmetic: the smooth flavor keeps
integer covectors (modulus 0), while the homotopy flavor reduces them modulo
twice the order of the relevant stable homotopy group (that order is 12 in
dimension 3 and 120 in dimension 7).  Twist generators populate the fiber,
and the splitting question is decided for both flavors at once.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .jacobi import (JacobiElement, SplitVerdict, gamma_psi_member, jacobi_identity,
                     reduce_modulus, splits)
from .quadratic import QuadraticRefinement
from .symplectic import Covector, SymplecticMatrix, _check_rank

COEFFICIENT_ORDER = {3: 12, 7: 120}

SMOOTH = "smooth"
HOMOTOPY = "homotopy"


@dataclass(frozen=True)
class ManifoldParams:
    """Middle dimension p (3 or 7) and the number r of product-of-spheres summands."""

    p: int
    r: int

    def __post_init__(self) -> None:
        if self.p not in COEFFICIENT_ORDER:
            raise ValueError("supported middle dimensions are 3 and 7")
        _check_rank(self.r)

    @property
    def c(self) -> int:
        return COEFFICIENT_ORDER[self.p]


@dataclass(frozen=True)
class MCGModel:
    params: ManifoldParams
    flavor: str
    modulus: int
    base: QuadraticRefinement

    def __post_init__(self) -> None:
        if self.flavor not in (SMOOTH, HOMOTOPY):
            raise ValueError(f"unknown flavor {self.flavor!r}")
        if self.flavor == SMOOTH and self.modulus != 0:
            raise ValueError("the smooth model works over the integers (modulus 0)")
        if self.flavor == HOMOTOPY and (self.modulus <= 0 or self.modulus % 4):
            raise ValueError("the homotopy modulus must be positive and divisible by 4")
        if self.base.rank != self.params.r:
            raise ValueError("base refinement rank mismatch")

    @property
    def rank(self) -> int:
        return self.params.r

    def identity(self) -> JacobiElement:
        return jacobi_identity(self.rank, self.modulus)

    def contains(self, g: JacobiElement) -> bool:
        return (g.rank == self.rank and g.modulus == self.modulus
                and gamma_psi_member(g, self.base))


def aut_model(p: int, r: int) -> MCGModel:
    """Smooth-flavor model: integer covectors over the all-zero base refinement."""
    return MCGModel(ManifoldParams(p, r), SMOOTH, 0, QuadraticRefinement.zero(r))


def homotopy_model(p: int, r: int, modulus: Optional[int] = None) -> MCGModel:
    """Homotopy-flavor model; modulus defaults to twice the coefficient order."""
    params = ManifoldParams(p, r)
    m = 2 * params.c if modulus is None else modulus
    return MCGModel(params, HOMOTOPY, m, QuadraticRefinement.zero(r))


def dehn_twist(model: MCGModel, i: int, kind: str, alpha: int) -> JacobiElement:
    """Twist generator (x, Id): kind "u" sets x(v_i) = alpha, kind "v" sets x(u_i) = alpha.

    The coefficient alpha must be even; that parity is what makes the twist a
    member of the model.
    """
    r = model.rank
    if kind not in ("u", "v"):
        raise ValueError('twist kind must be "u" or "v"')
    if not 1 <= i <= r:
        raise ValueError("pair index out of range")
    if alpha % 2:
        raise ValueError("twist coefficient must be even")
    pos = 2 * (i - 1) + (1 if kind == "u" else 0)
    coords = tuple(alpha if j == pos else 0 for j in range(2 * r))
    return JacobiElement(Covector(coords, model.modulus), SymplecticMatrix.identity(r))


def to_homotopy(model: MCGModel, g: JacobiElement, target: Optional[MCGModel] = None) -> JacobiElement:
    """Reduce a smooth-model member into the homotopy model."""
    if model.flavor != SMOOTH:
        raise ValueError("source model must have the smooth flavor")
    if not model.contains(g):
        raise ValueError("element is not a member of the smooth model")
    if target is None:
        target = homotopy_model(model.params.p, model.params.r)
    if target.flavor != HOMOTOPY or target.params != model.params:
        raise ValueError("target must be a homotopy model with the same parameters")
    return reduce_modulus(g, target.modulus)


def pontryagin_parts(j: int) -> tuple[int, int, int]:
    """The three factors of the twist coefficient: a_j, c_j, (2j-1)!."""
    j = int(j)
    if j < 1:
        raise ValueError("the index must be a positive integer")
    a = 2 if j % 2 else 1  # (3 - (-1)^j) / 2
    c = 2 if j <= 2 else 1
    return a, c, math.factorial(2 * j - 1)


def pontryagin_coefficient(j: int) -> int:
    """Coefficient a_j c_j (2j-1)! tying the top tangential class to the twist datum."""
    a, c, f = pontryagin_parts(j)
    return a * c * f


@dataclass(frozen=True)
class SplittingTheoremVerdict:
    p: int
    r: int
    smooth: SplitVerdict
    homotopy: SplitVerdict

    @property
    def smooth_splits(self) -> bool:
        return self.smooth.splits

    @property
    def homotopy_splits(self) -> bool:
        return self.homotopy.splits


def splitting_theorem_verdict(p: int, r: int,
                              homotopy_modulus: Optional[int] = None) -> SplittingTheoremVerdict:
    """Decide splitting for the smooth and homotopy models of one manifold."""
    params = ManifoldParams(p, r)
    m = 2 * params.c if homotopy_modulus is None else homotopy_modulus
    return SplittingTheoremVerdict(p, r, splits(r, 0), splits(r, m))
