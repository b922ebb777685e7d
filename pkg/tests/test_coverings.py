import random

import pytest
import sympy

from alexmod.abelian import AbelianGroup, IntMatrix
from alexmod.coverings import (RamificationData, cover_homology, cover_quotient,
                               cyclic_ramification, gamma_presentation, lefschetz_traces,
                               ramification_from_hom, riemann_hurwitz_genus,
                               validate_ramification)
from alexmod.errors import DimensionMismatch, NonIntegralGenus


def shape(G):
    return (G.free_rank, G.torsion)


def test_gamma_presentation_shape():
    P = gamma_presentation((2, 2, 2, 2))
    assert (P.num_generators, len(P.relators)) == (4, 5)
    P = gamma_presentation((3, 3, 3))
    assert (P.num_generators, len(P.relators)) == (3, 4)
    assert P.relators[0].syllables == ((1, 1), (2, 1), (3, 1))
    with pytest.raises(DimensionMismatch):
        gamma_presentation((2, 3))
    with pytest.raises(ValueError):
        gamma_presentation((2, 1, 2))


def test_cover_quotient_examples():
    H, psi = cover_quotient(RamificationData((2, 2, 2, 2)))
    assert shape(H) == (0, (2, 2, 2))
    full = RamificationData((2, 2, 2, 2), IntMatrix.identity(4))
    H, psi = cover_quotient(full)
    assert H.is_trivial
    with pytest.raises(DimensionMismatch):
        RamificationData((2, 2))
    with pytest.raises(DimensionMismatch):
        RamificationData((2, 2, 2), IntMatrix.identity(2))


def test_validate_ramification():
    rd = cyclic_ramification((2, 2, 2, 2), 2)
    H, psi = cover_quotient(rd)
    assert validate_ramification(rd, H, psi) == []
    rd = cyclic_ramification((4, 4, 4, 4), 2)
    H, psi = cover_quotient(rd)
    assert len(validate_ramification(rd, H, psi)) == 4
    rd = cyclic_ramification((3, 3, 3), 3)
    assert validate_ramification(rd, *cover_quotient(rd)) == []


@pytest.mark.parametrize("n, indices, orders, g", [
    (2, (2,) * 6, (2,) * 6, 2),
    (2, (2,) * 4, (2,) * 4, 1),
    (4, (2, 2, 2), (2, 2, 2), 0),
    (3, (3, 3, 3), (3, 3, 3), 1),
])
def test_riemann_hurwitz(n, indices, orders, g):
    assert riemann_hurwitz_genus(n, indices, orders) == g


def test_riemann_hurwitz_errors():
    with pytest.raises(NonIntegralGenus):
        riemann_hurwitz_genus(2, (2, 2, 2), (2, 2, 2))
    with pytest.raises(NonIntegralGenus):
        riemann_hurwitz_genus(3, (2, 2, 2), (3, 3, 3))


def _check_action(cr):
    H = cr.deck_group
    rank = cr.homology.free_rank
    mats = cr.h_action
    I = IntMatrix.identity(rank)
    if rank:
        assert all(abs(sympy.Matrix(m.data).det()) == 1 for m in mats)
    for a in mats:
        for b in mats:
            assert a @ b == b @ a
    for g, m, d in zip(H.generators(), mats, H.torsion):
        p = I
        for _ in range(d):
            p = p @ m
        assert p == I
    assert sum(cr.traces.values()) % H.order == 0


@pytest.mark.parametrize("indices, n, images, homology, genus, traces", [
    ((2,) * 6, 2, None, 4, 2, [4, -4]),
    ((2,) * 4, 2, None, 2, 1, [2, -2]),
    ((3, 3, 3), 3, None, 2, 1, [2, -1, -1]),
    ((4, 4, 2), 4, (1, 1, 2), 2, 1, [2, 0, -2, 0]),
])
def test_cyclic_covers(indices, n, images, homology, genus, traces):
    rd = cyclic_ramification(indices, n, images)
    cr = cover_homology(rd)
    assert shape(cr.homology) == (homology, ())
    assert cr.genus == genus
    assert not cr.warnings
    assert [cr.traces[h] for h in cr.deck_group.elements()] == traces
    _check_action(cr)
    H, psi = cover_quotient(rd)
    assert lefschetz_traces(H, psi, genus) == cr.traces


def test_hyperelliptic_involution():
    cr = cover_homology(cyclic_ramification((2,) * 6, 2))
    assert cr.h_action[0] == IntMatrix([[-1 if i == j else 0 for j in range(4)] for i in range(4)])


def test_klein_four_genus_zero():
    K = AbelianGroup(0, (2, 2))
    rd = ramification_from_hom((2, 2, 2), K, [K.element(torsion=[1, 0]),
                                              K.element(torsion=[0, 1]),
                                              K.element(torsion=[1, 1])])
    cr = cover_homology(rd)
    assert cr.homology.is_trivial and cr.genus == 0
    assert shape(cr.deck_group) == (0, (2, 2))


def test_maximal_cover_2_6():
    cr = cover_homology(RamificationData((2,) * 6))
    assert shape(cr.deck_group) == (0, (2,) * 5)
    assert shape(cr.homology) == (34, ())
    assert cr.genus == 17
    _check_action(cr)
    H, psi = cover_quotient(RamificationData((2,) * 6))
    assert lefschetz_traces(H, psi, 17) == cr.traces


def test_random_cyclic_covers_against_oracles():
    rng = random.Random(7)
    done = 0
    while done < 12:
        s = rng.randint(3, 5)
        n = rng.choice([2, 3, 4, 5, 6])
        imgs = [rng.randrange(1, n) for _ in range(s - 1)]
        last = -sum(imgs) % n
        if last == 0:
            continue
        imgs.append(last)
        # declare the actual orders as the indices so that no warnings arise
        Z = AbelianGroup.cyclic(n)
        indices = [Z.order_of(Z.element(torsion=[a])) for a in imgs]
        if any(e < 2 for e in indices):
            continue
        rd = cyclic_ramification(indices, n, imgs)
        H, psi = cover_quotient(rd)
        if H.order != n:
            continue
        cr = cover_homology(rd)
        assert not cr.homology.torsion
        assert cr.homology.free_rank == 2 * cr.genus
        assert lefschetz_traces(H, psi, cr.genus) == cr.traces
        _check_action(cr)
        done += 1


def test_report_serializes():
    cr = cover_homology(cyclic_ramification((3, 3, 3), 3))
    d = cr.to_dict()
    assert d["genus"] == 1 and d["homology"]["free_rank"] == 2
    assert len(d["h_action"]) == 1
