"""Abelian branched covers of the projective line and their first homology.

The base is ``P^1`` minus ``s`` points with fundamental group generated by
loops ``x_1, ..., x_s`` subject to ``x_1 ... x_s = 1``.  Filling the punctures
with ramification index ``e_i`` adds the relators ``x_i^{e_i}``.  A cover with
abelian deck group ``H`` corresponds to a lattice ``R_0`` between the
commutator subgroup and the whole group; ``R^ab`` of the kernel is the first
homology of the compact cover.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .abelian import AbelianElement, AbelianGroup, Cokernel, IntMatrix, lattice_kernel
from .crowell import crowell_kernel, crowell_sequence
from .errors import DimensionMismatch, InfiniteGroupError, NonIntegralGenus, OracleDisagreement
from .presentations import AbelianHom, GroupPresentation, subgroup_abelianization
from .words import Word


@dataclass(frozen=True)
class RamificationData:
    indices: tuple[int, ...]
    r0_lattice: IntMatrix = None

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(self.indices))
        s = len(self.indices)
        if s < 3:
            raise DimensionMismatch(f"need at least 3 branch points, got {s}")
        if any(e < 2 for e in self.indices):
            raise ValueError(f"ramification indices must be >= 2, got {self.indices}")
        lat = self.r0_lattice if self.r0_lattice is not None else IntMatrix.zeros(s, 0)
        if lat.rows != s:
            raise DimensionMismatch(f"lattice columns have length {lat.rows}, expected {s}")
        object.__setattr__(self, "r0_lattice", lat)


def gamma_presentation(indices: Sequence[int]) -> GroupPresentation:
    """``<x_1..x_s | x_1 x_2 ... x_s, x_i^{e_i}>``."""
    s = len(indices)
    if s < 3:
        raise DimensionMismatch(f"need at least 3 branch points, got {s}")
    if any(e < 2 for e in indices):
        raise ValueError(f"ramification indices must be >= 2, got {tuple(indices)}")
    rels = [Word([(i, 1) for i in range(1, s + 1)])]
    rels += [Word.generator(i, e) for i, e in enumerate(indices, start=1)]
    return GroupPresentation(s, tuple(rels))


def cover_quotient(rd: RamificationData) -> tuple[AbelianGroup, AbelianHom]:
    s = len(rd.indices)
    cols = [[1] * s]
    for i, e in enumerate(rd.indices):
        v = [0] * s
        v[i] = e
        cols.append(v)
    cols += rd.r0_lattice.columns()
    coker = Cokernel(IntMatrix.from_columns(cols, s))
    images = []
    for i in range(s):
        u = [0] * s
        u[i] = 1
        images.append(coker.project(u))
    return coker.group, AbelianHom(gamma_presentation(rd.indices), coker.group, images)


def ramification_from_hom(indices: Sequence[int], target: AbelianGroup,
                          images: Sequence[AbelianElement]) -> RamificationData:
    """The data whose ``R_0`` is the kernel of ``x_i -> images[i]``."""
    s = len(indices)
    if len(images) != s:
        raise DimensionMismatch(f"{len(images)} images for {s} branch points")
    M = IntMatrix.from_columns([target.to_vector(e) for e in images], target.ngens)
    K = lattice_kernel(M.hstack(target.relation_matrix()))
    return RamificationData(tuple(indices), IntMatrix.from_columns([c[:s] for c in K.columns()], s))


def cyclic_ramification(indices: Sequence[int], n: int,
                        images: Sequence[int] | None = None) -> RamificationData:
    """Cyclic cover of degree ``n`` with ``x_i -> images[i]`` (default all 1) in ``Z/n``."""
    Z = AbelianGroup.cyclic(n)
    imgs = [1] * len(indices) if images is None else list(images)
    return ramification_from_hom(indices, Z, [Z.from_vector([a]) for a in imgs])


def validate_ramification(rd: RamificationData, H: AbelianGroup, psi: AbelianHom) -> list[str]:
    if not H.is_finite:
        raise InfiniteGroupError(f"deck group {H} is infinite")
    warnings = []
    for i, (e, g) in enumerate(zip(rd.indices, psi.images), start=1):
        m = H.order_of(g)
        if m != e:
            warnings.append(f"point {i}: psi(x_{i}) has order {m}, declared index {e}; "
                            f"the cover is not ramified with index {e} there")
    return warnings


def riemann_hurwitz_genus(n: int, indices: Sequence[int], orders: Sequence[int]) -> int:
    """``2 - 2g = 2n - sum_i (n / m_i)(m_i - 1)``."""
    if len(indices) != len(orders):
        raise DimensionMismatch("one order per branch point is required")
    for e, m in zip(indices, orders):
        if m < 1 or e % m:
            raise NonIntegralGenus(f"order {m} does not divide the index {e}")
    chi = Fraction(2 * n) - sum(Fraction(n, m) * (m - 1) for m in orders)
    g = 1 - chi / 2
    if g.denominator != 1 or g < 0:
        raise NonIntegralGenus(f"genus {g} is not a nonnegative integer")
    return int(g)


def lefschetz_traces(H: AbelianGroup, psi: AbelianHom, genus: int) -> dict[AbelianElement, int]:
    """Trace of each deck transformation on ``H_1`` predicted by the Lefschetz fixed point formula.

    A nontrivial ``h`` fixes the ``n / m_i`` points above branch point ``i``
    exactly when ``h`` lies in the cyclic group generated by ``psi(x_i)``.
    """
    n = H.order
    cyclic = []
    for g in psi.images:
        orbit, x = {H.identity}, g
        while x != H.identity:
            orbit.add(x)
            x = H.add(x, g)
        cyclic.append(orbit)
    out = {}
    for h in H.elements():
        if H.is_identity(h):
            out[h] = 2 * genus
        else:
            out[h] = 2 - sum(n // len(orb) for orb in cyclic if h in orb)
    return out


@dataclass
class CoverReport:
    deck_group: AbelianGroup
    homology: AbelianGroup
    genus: int
    h_action: list[IntMatrix]
    warnings: list[str] = field(default_factory=list)
    traces: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "deck_group": self.deck_group.to_dict(),
            "homology": self.homology.to_dict(),
            "genus": self.genus,
            "h_action": [m.data for m in self.h_action],
            "warnings": list(self.warnings),
            "traces": {str(h): t for h, t in self.traces.items()},
        }


def cover_homology(rd: RamificationData) -> CoverReport:
    H, psi = cover_quotient(rd)
    warnings = validate_ramification(rd, H, psi)
    P = psi.presentation
    cs = crowell_sequence(P, psi)
    sub = crowell_kernel(cs)
    homology = sub.group
    oracle = subgroup_abelianization(P, psi)
    if homology != oracle:
        raise OracleDisagreement("ker theta2 and Reidemeister-Schreier disagree", homology, oracle)
    if homology.torsion:
        raise OracleDisagreement("closed-surface homology must be free", homology,
                                 f"Z^{homology.free_rank}")
    orders = [H.order_of(g) for g in psi.images]
    genus = riemann_hurwitz_genus(H.order, rd.indices, orders)
    if homology.free_rank != 2 * genus:
        raise OracleDisagreement("rank of H_1 against Riemann-Hurwitz", homology.free_rank,
                                 2 * genus)

    n, r, rank = H.order, P.num_generators, homology.free_rank
    table = H.addition_table
    basis = [sub.lift(homology.element([1 if k == t else 0 for k in range(rank)]))
             for t in range(rank)]

    def action(h: AbelianElement) -> IntMatrix:
        perm = table[H.index(h)]
        cols = []
        for b in basis:
            moved = [0] * (n * r)
            for j in range(r):
                for k in range(n):
                    moved[j * n + perm[k]] = b[j * n + k]
            cols.append(list(sub.project(moved).free))
        return IntMatrix.from_columns(cols, rank)

    h_action = [action(g) for g in H.generators()]
    traces = {}
    for h in H.elements():
        m = action(h)
        traces[h] = sum(m.data[i][i] for i in range(rank))
    return CoverReport(H, homology, genus, h_action, warnings, traces)
