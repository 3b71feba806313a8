from __future__ import annotations

import random

import pytest

from symsplit.cocycles import (
    CoboundaryCocycle,
    CoboundaryWitness,
    PrincipalCocycle,
    TabulatedCocycle,
    check_cocycle_law,
    coboundary_at,
    minus_id_constraint,
    principal_at,
    principal_coboundary_witness,
)
from symsplit.quadratic import QuadraticRefinement, enumerate_refinements, qtranslate
from symsplit.symplectic import (
    Covector,
    SymplecticMatrix,
    Vector,
    neg_identity,
    random_symplectic_word,
    transvection,
)


def _random_words(r, count, seed, max_len=10):
    rng = random.Random(seed)
    return [random_symplectic_word(r, rng.randint(0, max_len), rng) for _ in range(count)]


def test_coboundary_at_hand_value():
    # x = u1*, A = twist at u1: x.A = (1, 1), so the coboundary value is (0, 1)
    x = Covector((1, 0))
    assert coboundary_at(x, transvection(Vector.u(1, 1))).coords == (0, 1)


def test_coboundary_law_all_moduli():
    rng = random.Random(3)
    for m in (0, 2, 4, 24):
        for r in (1, 2):
            for _ in range(10):
                span = 40 if m == 0 else m
                x = Covector(tuple(rng.randrange(-span, span) for _ in range(2 * r)), m)
                s = CoboundaryCocycle(x)
                a = random_symplectic_word(r, rng.randint(0, 10), rng)
                b = random_symplectic_word(r, rng.randint(0, 10), rng)
                assert check_cocycle_law(s, a, b)
                assert s.modulus == m and s.rank == r


def test_principal_law_sampled():
    rng = random.Random(9)
    for r in (1, 2, 3):
        for _ in range(20):
            psi = QuadraticRefinement(tuple(rng.randint(0, 1) for _ in range(2 * r)))
            s = PrincipalCocycle(psi)
            a = random_symplectic_word(r, rng.randint(0, 10), rng)
            b = random_symplectic_word(r, rng.randint(0, 10), rng)
            assert check_cocycle_law(s, a, b)


def test_principal_vanishes_at_identity_and_neg_identity():
    for r in (1, 2, 3):
        for psi in enumerate_refinements(r):
            assert principal_at(psi, SymplecticMatrix.identity(r)).is_zero()
            assert principal_at(psi, neg_identity(r)).is_zero()


def test_principal_additive_in_translation():
    # s(psi + xbar) = s(psi) + s(xbar) pointwise, exhaustively at rank 1 and 2
    rng = random.Random(15)
    for r in (1, 2):
        mats = _random_words(r, 6, seed=100 + r) + [SymplecticMatrix.identity(r), neg_identity(r)]
        for psi in enumerate_refinements(r):
            for bits in [(0,) * 2 * r, (1,) * 2 * r, tuple(rng.randint(0, 1) for _ in range(2 * r))]:
                xbar = Covector(bits, 2)
                shifted = qtranslate(psi, xbar)
                for a in mats:
                    assert principal_at(shifted, a) == principal_at(psi, a) + coboundary_at(xbar, a)


def test_minus_id_constraint_for_coboundaries():
    rng = random.Random(21)
    for m in (0, 4, 24, 240):
        for _ in range(15):
            r = rng.randint(1, 3)
            span = 50 if m == 0 else m
            x = Covector(tuple(rng.randrange(-span, span) for _ in range(2 * r)), m)
            a = random_symplectic_word(r, rng.randint(0, 10), rng)
            assert minus_id_constraint(CoboundaryCocycle(x), a)


def test_minus_id_constraint_rejects_odd_modulus():
    s = CoboundaryCocycle(Covector((1, 0), 3))
    with pytest.raises(ValueError):
        minus_id_constraint(s, SymplecticMatrix.identity(1))


def test_witness_frozen_rank_one():
    w = principal_coboundary_witness(QuadraticRefinement((1, 1)))
    assert w == CoboundaryWitness(Covector((0, 0), 2))
    w = principal_coboundary_witness(QuadraticRefinement((0, 0)))
    assert w == CoboundaryWitness(Covector((1, 1), 2))
    w = principal_coboundary_witness(QuadraticRefinement((0, 1)))
    assert w == CoboundaryWitness(Covector((1, 0), 2))


def test_witness_absent_above_rank_one():
    for r in (2, 3):
        assert principal_coboundary_witness(QuadraticRefinement.zero(r)) is None
        assert principal_coboundary_witness(QuadraticRefinement.arf_one(r)) is None


def test_witness_makes_cocycles_agree():
    # when a witness exists, the principal cocycle IS the coboundary of the witness
    psi = QuadraticRefinement((0, 0))
    xbar = principal_coboundary_witness(psi).xbar
    for a in _random_words(1, 20, seed=33):
        assert principal_at(psi, a) == coboundary_at(xbar, a)


def test_witness_rank_limit():
    with pytest.raises(ValueError):
        principal_coboundary_witness(QuadraticRefinement.zero(9))


def test_tabulated_negative_control():
    # the law forces s(T^2) = s(T).T + s(T) = (0, 1); tabulating (0, 0) breaks it
    t = transvection(Vector.u(1, 1))
    table = TabulatedCocycle((
        (SymplecticMatrix.identity(1), Covector((0, 0), 2)),
        (t, Covector((1, 0), 2)),
        (t * t, Covector((0, 0), 2)),
    ))
    assert table.rank == 1 and table.modulus == 2
    assert not check_cocycle_law(table, t, t)
    with pytest.raises(ValueError):
        table.value(neg_identity(1))
    with pytest.raises(ValueError):
        TabulatedCocycle(())
