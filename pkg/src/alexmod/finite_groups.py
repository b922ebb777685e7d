"""Small finite groups given by explicit multiplication tables."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Hashable, Sequence

from .abelian import AbelianElement, AbelianGroup
from .errors import InvalidHomomorphism
from .presentations import GroupPresentation
from .words import Word


@dataclass(frozen=True)
class FiniteGroupTable:
    """Elements are ``0 .. order-1``; ``table[a][b]`` is the index of ``a * b``.

    ``generators[k]`` is the element assigned to presentation generator ``k + 1``.
    """

    order: int
    table: tuple[tuple[int, ...], ...]
    generators: tuple[int, ...]
    identity: int = 0
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(tuple(r) for r in self.table))
        object.__setattr__(self, "generators", tuple(self.generators))
        self.validate()

    def validate(self):
        n, T, e = self.order, self.table, self.identity
        if len(T) != n or any(len(r) != n for r in T):
            raise ValueError("table is not square of size order")
        for a in range(n):
            if T[e][a] != a or T[a][e] != a:
                raise ValueError(f"element {e} is not an identity")
            if sorted(T[a]) != list(range(n)):
                raise ValueError(f"row {a} is not a permutation")
            if e not in T[a]:
                raise ValueError(f"element {a} has no inverse")
        # associativity: exhaustive for small tables, otherwise on generator triples
        triples = range(n) if n <= 24 else sorted(set(self.generators) | {e})
        for a in triples:
            for b in range(n) if n <= 24 else triples:
                ab = T[a][b]
                for c in range(n) if n <= 24 else triples:
                    if T[ab][c] != T[a][T[b][c]]:
                        raise ValueError(f"table is not associative at {(a, b, c)}")

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        return self.table[a].index(self.identity)

    def evaluate(self, w: Word) -> int:
        x = self.identity
        for g, step in w.letters():
            y = self.generators[g - 1]
            x = self.mul(x, y if step > 0 else self.inverse(y))
        return x

    def check_presentation(self, P: GroupPresentation) -> bool:
        """Generators match and every relator evaluates to the identity."""
        if P.num_generators != len(self.generators):
            return False
        return all(self.evaluate(r) == self.identity for r in P.relators)

    def words(self) -> list[Word]:
        """A word in the generators for every element (breadth-first, shortest first)."""
        out: list[Word | None] = [None] * self.order
        out[self.identity] = Word.identity()
        frontier = [self.identity]
        while frontier:
            nxt = []
            for a in frontier:
                for k, g in enumerate(self.generators, start=1):
                    for step, y in ((1, g), (-1, self.inverse(g))):
                        b = self.mul(a, y)
                        if out[b] is None:
                            out[b] = out[a] * Word.generator(k, step)
                            nxt.append(b)
            frontier = nxt
        if any(w is None for w in out):
            raise ValueError("the listed generators do not generate the table")
        return out


def table_from_closure(gens: Sequence[Hashable], mul: Callable, identity: Hashable,
                       name: str = "") -> FiniteGroupTable:
    elements = [identity]
    index = {identity: 0}
    k = 0
    while k < len(elements):
        for g in gens:
            p = mul(elements[k], g)
            if p not in index:
                index[p] = len(elements)
                elements.append(p)
        k += 1
    table = [[index[mul(a, b)] for b in elements] for a in elements]
    return FiniteGroupTable(len(elements), table, tuple(index[g] for g in gens), 0, name)


def _perm_mul(p, q):
    # apply q first, then p
    return tuple(p[i] for i in q)


def cyclic_table(n: int) -> FiniteGroupTable:
    if not 1 <= n <= 12:
        raise ValueError("built-in cyclic tables cover 1 <= n <= 12")
    return FiniteGroupTable(n, [[(a + b) % n for b in range(n)] for a in range(n)],
                            (1 % n,), 0, f"Z/{n}")


def s3_table() -> FiniteGroupTable:
    """``S_3`` with generators a = (0 1 2), b = (0 1)."""
    return table_from_closure([(1, 2, 0), (1, 0, 2)], _perm_mul, (0, 1, 2), "S3")


def d4_table() -> FiniteGroupTable:
    """Dihedral group of order 8 acting on the square; a = rotation, b = reflection."""
    return table_from_closure([(1, 2, 3, 0), (0, 3, 2, 1)], _perm_mul, (0, 1, 2, 3), "D4")


def _quat_mul(p, q):
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return (a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)


def q8_table() -> FiniteGroupTable:
    """Quaternion units; generators i and j."""
    return table_from_closure([(0, 1, 0, 0), (0, 0, 1, 0)], _quat_mul, (1, 0, 0, 0), "Q8")


def _w(*syll):
    return Word(list(syll))


def cyclic_presentation(n: int) -> GroupPresentation:
    return GroupPresentation(1, (_w((1, n)),), ("x",))


def s3_presentation() -> GroupPresentation:
    return GroupPresentation(2, (_w((1, 3)), _w((2, 2)), _w((1, 1), (2, 1), (1, 1), (2, 1))), ("a", "b"))


def d4_presentation() -> GroupPresentation:
    return GroupPresentation(2, (_w((1, 4)), _w((2, 2)), _w((1, 1), (2, 1), (1, 1), (2, 1))), ("a", "b"))


def q8_presentation() -> GroupPresentation:
    # i^4 = 1, i^2 = j^2, j^-1 i j = i^-1
    return GroupPresentation(2, (_w((1, 4)), _w((1, 2), (2, -2)), _w((2, -1), (1, 1), (2, 1), (1, 1))),
                             ("i", "j"))


BUILTIN_TABLES = {
    "S3": (s3_table, s3_presentation),
    "D4": (d4_table, d4_presentation),
    "Q8": (q8_table, q8_presentation),
}


def table_hom(T: FiniteGroupTable, target: AbelianGroup,
              generator_images: Sequence[AbelianElement]) -> list[AbelianElement]:
    """Extend images of the table generators to every element; checked on all pairs."""
    if len(generator_images) != len(T.generators):
        raise InvalidHomomorphism("one image per table generator is required")
    images: list[AbelianElement | None] = [None] * T.order
    for k, w in enumerate(T.words()):
        acc = [0] * target.ngens
        for g, e in w.syllables:
            for c, x in enumerate(target.to_vector(generator_images[g - 1])):
                acc[c] += e * x
        images[k] = target.from_vector(acc)
    for a in range(T.order):
        for b in range(T.order):
            if images[T.mul(a, b)] != target.add(images[a], images[b]):
                raise InvalidHomomorphism(f"not a homomorphism on the pair {(a, b)}")
    return images


def normal_subgroups(T: FiniteGroupTable) -> list[frozenset[int]]:
    """All normal subgroups generated by normal closures of at most two elements."""
    n = T.order

    def closure(seed):
        conj = set()
        for s in seed:
            for g in range(n):
                conj.add(T.mul(T.mul(g, s), T.inverse(g)))
        sub = {T.identity}
        frontier = list(sub)
        while frontier:
            nxt = []
            for a in frontier:
                for c in conj:
                    b = T.mul(a, c)
                    if b not in sub:
                        sub.add(b)
                        nxt.append(b)
            frontier = nxt
        return frozenset(sub)

    found = {closure([])}
    for a in range(n):
        found.add(closure([a]))
        for b in range(a + 1, n):
            found.add(closure([a, b]))
    return sorted(found, key=lambda s: (len(s), sorted(s)))
