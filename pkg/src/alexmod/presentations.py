"""Finitely presented groups and their homomorphisms to abelian groups."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .abelian import (AbelianElement, AbelianGroup, AbelianGroupHom, Cokernel, IntMatrix,
                      _Solver, coker_invariants)
from .errors import InfiniteGroupError, InvalidHomomorphism, NonSurjective, RelatorNotKilled
from .words import Word, word_mul


@dataclass(frozen=True)
class GroupPresentation:
    num_generators: int
    relators: tuple[Word, ...] = ()
    generator_names: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "relators", tuple(self.relators))
        names = tuple(self.generator_names) or tuple(f"x{i}" for i in range(1, self.num_generators + 1))
        object.__setattr__(self, "generator_names", names)
        if self.num_generators < 0:
            raise ValueError("negative number of generators")
        if len(names) != self.num_generators:
            raise ValueError(f"{len(names)} names for {self.num_generators} generators")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")
        for k, r in enumerate(self.relators):
            if r.max_generator() > self.num_generators:
                raise ValueError(f"relator {k} uses generator {r.max_generator()} "
                                 f"but only {self.num_generators} exist")

    @classmethod
    def free(cls, n: int, names: Sequence[str] = ()) -> "GroupPresentation":
        return cls(n, (), tuple(names))

    def exponent_matrix(self) -> IntMatrix:
        """Generators by relators; entry ``(j, i)`` is the exponent sum of ``x_j`` in ``R_i``."""
        cols = [r.exponent_sums(self.num_generators) for r in self.relators]
        return IntMatrix.from_columns(cols, self.num_generators)

    def format(self) -> str:
        rels = "; ".join(r.format(list(self.generator_names)) for r in self.relators)
        return f"gens: {', '.join(self.generator_names)}\nrels: {rels}\n"


class AbelianHom:
    """A homomorphism from a presented group to an abelian group.

    Built from one image per generator; construction fails unless every
    relator maps to the identity.
    """

    def __init__(self, presentation: GroupPresentation, target: AbelianGroup,
                 images: Sequence[AbelianElement]):
        if len(images) != presentation.num_generators:
            raise InvalidHomomorphism(
                f"{len(images)} images for {presentation.num_generators} generators")
        self.presentation = presentation
        self.target = target
        self.images = tuple(target.from_vector(target.to_vector(e)) for e in images)
        for k, r in enumerate(presentation.relators):
            img = self.of_word(r)
            if not target.is_identity(img):
                raise RelatorNotKilled(k, img)

    def of_word(self, w: Word) -> AbelianElement:
        acc = [0] * self.target.ngens
        for g, e in w.syllables:
            for k, x in enumerate(self.target.to_vector(self.images[g - 1])):
                acc[k] += e * x
        return self.target.from_vector(acc)

    def of_exponents(self, exps: Sequence[int]) -> AbelianElement:
        return self.target.combine(exps, self.images)

    def is_surjective(self) -> bool:
        M = IntMatrix.from_columns([self.target.to_vector(e) for e in self.images],
                                   self.target.ngens)
        return coker_invariants(M.hstack(self.target.relation_matrix())).is_trivial

    def then(self, f: AbelianGroupHom) -> "AbelianHom":
        """The composite ``f o self``."""
        if f.source != self.target:
            raise InvalidHomomorphism("target of the hom is not the source of f")
        return AbelianHom(self.presentation, f.target, [f(e) for e in self.images])

    def __repr__(self):
        return (f"AbelianHom(-> {self.target}, "
                f"[{', '.join(map(str, self.images))}])")


def validate_hom(P: GroupPresentation, images: Sequence[AbelianElement],
                 target: AbelianGroup) -> AbelianHom:
    return AbelianHom(P, target, images)


def abelianization(P: GroupPresentation) -> tuple[AbelianGroup, AbelianHom]:
    coker = Cokernel(P.exponent_matrix())
    n = P.num_generators
    images = []
    for j in range(n):
        e = [0] * n
        e[j] = 1
        images.append(coker.project(e))
    return coker.group, AbelianHom(P, coker.group, images)


def trivial_hom(P: GroupPresentation) -> AbelianHom:
    t = AbelianGroup.trivial()
    return AbelianHom(P, t, [t.identity] * P.num_generators)


def factor_through(psi: AbelianHom, other: AbelianHom) -> AbelianGroupHom:
    """The unique ``f`` with ``f o psi == other``, for surjective ``psi``.

    Raises :class:`InvalidHomomorphism` if ``other`` does not factor.
    """
    if not psi.is_surjective():
        raise NonSurjective("can only factor through a surjective homomorphism")
    src = psi.target
    # generators of Z^r followed by the relations of src, mapped into src's coordinates
    n = psi.presentation.num_generators
    M = IntMatrix.from_columns([src.to_vector(e) for e in psi.images], src.ngens)
    M = M.hstack(src.relation_matrix())
    solver = _Solver(M)
    images = []
    for g in src.generators():
        x = solver.solve(src.to_vector(g))
        images.append(other.of_exponents(x[:n]))
    f = AbelianGroupHom(src, other.target, images)
    for j in range(n):
        if f(psi.images[j]) != other.images[j]:
            raise InvalidHomomorphism(f"homomorphisms disagree on generator {j + 1}")
    return f


@dataclass
class SchreierRewrite:
    presentation: GroupPresentation
    cosets: tuple[AbelianElement, ...]
    transversal: dict
    num_schreier_generators: int
    pruned: list[tuple[int, int]] = field(default_factory=list)
    generator_labels: list[tuple[int, int]] = field(default_factory=list)


def _transversal(psi: AbelianHom) -> dict:
    """Prefix-closed transversal ``x_1^{a_1} ... x_r^{a_r}`` indexed by coset."""
    H = psi.target
    reps = {H.identity: Word.identity()}
    for i, g in enumerate(psi.images, start=1):
        reached = set(reps)
        index, x = 1, g
        while x not in reached:
            index += 1
            x = H.add(x, g)
        new = dict(reps)
        for h, w in reps.items():
            cur = h
            for a in range(1, index):
                cur = H.add(cur, g)
                new[cur] = word_mul(w, Word.generator(i, a))
        reps = new
    return reps


def schreier_rewrite(P: GroupPresentation, psi: AbelianHom) -> SchreierRewrite:
    H = psi.target
    if not H.is_finite:
        raise InfiniteGroupError(f"Reidemeister-Schreier needs a finite target, got {H}")
    if not psi.is_surjective():
        raise NonSurjective("the homomorphism does not map onto its target")
    cosets = H.elements()
    trans = _transversal(psi)
    assert len(trans) == len(cosets)
    cidx = {h: k for k, h in enumerate(cosets)}
    r = P.num_generators
    gen_ids: dict[tuple[int, int], int] = {}
    pruned, labels = [], []
    for c, h in enumerate(cosets):
        for j in range(1, r + 1):
            target = H.add(h, psi.images[j - 1])
            if word_mul(trans[h], Word.generator(j)) == trans[target]:
                pruned.append((c, j))
            else:
                gen_ids[(c, j)] = len(gen_ids) + 1
                labels.append((c, j))
    rels = []
    for h in cosets:
        for R in P.relators:
            c = h
            syll = []
            for g, step in R.letters():
                img = psi.images[g - 1]
                if step > 0:
                    k = gen_ids.get((cidx[c], g))
                    c = H.add(c, img)
                else:
                    c = H.sub(c, img)
                    k = gen_ids.get((cidx[c], g))
                if k is not None:
                    syll.append((k, step))
            assert c == h
            rels.append(Word(syll))
    names = tuple(f"{P.generator_names[j - 1]}_{c}" for c, j in labels)
    pres = GroupPresentation(len(gen_ids), tuple(rels), names)
    return SchreierRewrite(pres, cosets, trans, len(cosets) * r, pruned, labels)


def reidemeister_schreier(P: GroupPresentation, psi: AbelianHom) -> GroupPresentation:
    """A presentation of ``ker(psi)``, which has index ``|H|`` in the group."""
    return schreier_rewrite(P, psi).presentation


def subgroup_abelianization(P: GroupPresentation, psi: AbelianHom) -> AbelianGroup:
    return abelianization(reidemeister_schreier(P, psi))[0]
