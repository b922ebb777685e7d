"""Fox free derivatives and the Alexander presentation matrix."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .abelian import AbelianGroup, coker_invariants
from .errors import GroupMismatch
from .group_algebra import (AlgebraMatrix, GroupAlgebraElement, alexander_polynomial_from_ideal,
                            elementary_ideal_generators, expand_relations, is_laurent_group)
from .presentations import AbelianHom, GroupPresentation
from .words import FreeAlgebraElement, Word, falg_add, falg_scale_word, word_mul


def fox_derivative(w: Word, j: int) -> FreeAlgebraElement:
    """``dw/dx_j`` in ``Z[F]``.

    A syllable ``x_j^n`` contributes ``prefix * (1 + x_j + ... + x_j^(n-1))``
    for ``n > 0`` and ``-prefix * (x_j^-1 + ... + x_j^n)`` for ``n < 0``.
    """
    terms: dict[Word, int] = defaultdict(int)
    prefix = Word.identity()
    for g, e in w.syllables:
        if g == j:
            if e > 0:
                for k in range(e):
                    terms[word_mul(prefix, Word.generator(j, k))] += 1
            else:
                for k in range(1, -e + 1):
                    terms[word_mul(prefix, Word.generator(j, -k))] -= 1
        prefix = word_mul(prefix, Word.generator(g, e))
    return FreeAlgebraElement(terms)


def fox_jacobian(P: GroupPresentation) -> list[list[FreeAlgebraElement]]:
    """Entry ``(i, j)`` is ``dR_i/dx_j``."""
    return [[fox_derivative(R, j) for j in range(1, P.num_generators + 1)] for R in P.relators]


def fundamental_identity_check(w: Word, num_generators: int | None = None) -> bool:
    """Check ``w - 1 == sum_j (dw/dx_j)(x_j - 1)`` exactly in ``Z[F]``."""
    n = w.max_generator() if num_generators is None else num_generators
    lhs = FreeAlgebraElement.from_word(w) - FreeAlgebraElement.one()
    rhs = FreeAlgebraElement.zero()
    for j in range(1, n + 1):
        xj_minus_1 = FreeAlgebraElement.from_word(Word.generator(j)) - FreeAlgebraElement.one()
        rhs = falg_add(rhs, fox_derivative(w, j) * xj_minus_1)
    return lhs == rhs


def push_forward(a: FreeAlgebraElement, psi: AbelianHom) -> GroupAlgebraElement:
    """Apply ``psi o pi`` to an element of ``Z[F]``."""
    acc = defaultdict(int)
    for w, c in a.terms.items():
        acc[psi.of_word(w)] += c
    return GroupAlgebraElement(psi.target, acc)


def fox_row(w: Word, psi: AbelianHom) -> list[GroupAlgebraElement]:
    """``(psi(dw/dx_1), ..., psi(dw/dx_r))``."""
    return [push_forward(fox_derivative(w, j), psi)
            for j in range(1, psi.presentation.num_generators + 1)]


@dataclass(frozen=True)
class AlexanderPresentation:
    matrix: AlgebraMatrix
    source_presentation: GroupPresentation
    hom: AbelianHom

    @property
    def group(self) -> AbelianGroup:
        return self.matrix.group


def alexander_matrix(P: GroupPresentation, psi: AbelianHom) -> AlexanderPresentation:
    if psi.presentation != P:
        # psi was validated against another presentation; revalidate here
        psi = AbelianHom(P, psi.target, psi.images)
    rows = [fox_row(R, psi) for R in P.relators]
    M = AlgebraMatrix(psi.target, rows, len(P.relators), P.num_generators)
    return AlexanderPresentation(M, P, psi)


def alexander_invariants(ap: AlexanderPresentation) -> AbelianGroup:
    """Underlying abelian group of the Alexander module; ``H`` must be finite."""
    return coker_invariants(expand_relations(ap.matrix))


def alexander_polynomial(P: GroupPresentation, psi: AbelianHom) -> GroupAlgebraElement:
    if not is_laurent_group(psi.target):
        raise GroupMismatch(f"the Alexander polynomial needs H = Z, got {psi.target}")
    ap = alexander_matrix(P, psi)
    return alexander_polynomial_from_ideal(elementary_ideal_generators(ap.matrix, 1), psi.target)


def derivation_row_law(u: Word, v: Word, psi: AbelianHom) -> bool:
    """``row(uv) == row(u) + psi(u) row(v)``: the map ``g -> row(g)`` is a psi-derivation."""
    ru, rv, ruv = fox_row(u, psi), fox_row(v, psi), fox_row(word_mul(u, v), psi)
    shift = psi.of_word(u)
    return all(c == a + b.shift(shift) for a, b, c in zip(ru, rv, ruv))


def product_rule_holds(u: Word, v: Word, j: int) -> bool:
    return fox_derivative(word_mul(u, v), j) == falg_add(fox_derivative(u, j),
                                                         falg_scale_word(u, fox_derivative(v, j)))
