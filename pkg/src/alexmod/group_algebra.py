"""Integral group rings of finitely generated abelian groups.

For ``H = Z^n`` this is the Laurent polynomial ring in ``n`` variables; for
finite ``H`` it is a finite rank free abelian group and matrices over it can
be expanded to integer matrices through the regular representation.
"""

from __future__ import annotations

import itertools
import math
from collections import defaultdict
from typing import Iterable, Mapping, Sequence

from .abelian import AbelianElement, AbelianGroup, AbelianGroupHom, IntMatrix
from .errors import DimensionMismatch, GroupMismatch, InfiniteGroupError


class GroupAlgebraElement:
    """A finite integer combination of elements of an abelian group."""

    __slots__ = ("group", "terms")

    def __init__(self, group: AbelianGroup, terms: Mapping[AbelianElement, int] | None = None):
        self.group = group
        clean: dict[AbelianElement, int] = {}
        for e, c in (terms or {}).items():
            if c:
                e = group.from_vector(group.to_vector(e))
                s = clean.get(e, 0) + c
                if s:
                    clean[e] = s
                else:
                    del clean[e]
        self.terms = clean

    @classmethod
    def _raw(cls, group, terms):
        obj = object.__new__(cls)
        obj.group = group
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls, group: AbelianGroup) -> "GroupAlgebraElement":
        return cls._raw(group, {})

    @classmethod
    def one(cls, group: AbelianGroup) -> "GroupAlgebraElement":
        return cls._raw(group, {group.identity: 1})

    @classmethod
    def monomial(cls, group: AbelianGroup, e: AbelianElement, coeff: int = 1) -> "GroupAlgebraElement":
        return cls(group, {e: coeff})

    @classmethod
    def constant(cls, group: AbelianGroup, c: int) -> "GroupAlgebraElement":
        return cls(group, {group.identity: c})

    def _check(self, other):
        if other.group != self.group:
            raise GroupMismatch(f"elements of Z[{self.group}] and Z[{other.group}]")

    def __add__(self, other):
        if isinstance(other, int):
            other = GroupAlgebraElement.constant(self.group, other)
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return GroupAlgebraElement._raw(self.group, terms)

    __radd__ = __add__

    def __neg__(self):
        return GroupAlgebraElement._raw(self.group, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return GroupAlgebraElement.zero(self.group)
            return GroupAlgebraElement._raw(self.group, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        self._check(other)
        G = self.group
        acc: dict[AbelianElement, int] = defaultdict(int)
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                acc[G.add(a, b)] += x * y
        return GroupAlgebraElement._raw(G, {e: c for e, c in acc.items() if c})

    __rmul__ = __mul__

    def shift(self, e: AbelianElement) -> "GroupAlgebraElement":
        """Multiply by the group element ``e``."""
        G = self.group
        return GroupAlgebraElement._raw(G, {G.add(e, a): c for a, c in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, int):
            other = GroupAlgebraElement.constant(self.group, other)
        return (isinstance(other, GroupAlgebraElement) and self.group == other.group
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.group, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"GroupAlgebraElement(Z[{self.group}], {format_element(self)})"

    def __str__(self):
        return format_element(self)


def ga_add(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    return a + b


def ga_mul(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    return a * b


def augmentation(a: GroupAlgebraElement) -> int:
    return sum(a.terms.values())


def ga_apply_hom(a: GroupAlgebraElement, f: AbelianGroupHom) -> GroupAlgebraElement:
    if f.source != a.group:
        raise GroupMismatch(f"hom from {f.source} applied to an element of Z[{a.group}]")
    acc: dict[AbelianElement, int] = defaultdict(int)
    for e, c in a.terms.items():
        acc[f(e)] += c
    return GroupAlgebraElement._raw(f.target, {e: c for e, c in acc.items() if c})


def is_laurent_group(group: AbelianGroup) -> bool:
    return group.free_rank == 1 and not group.torsion


def format_element(a: GroupAlgebraElement, var: str = "t") -> str:
    """Laurent form (``t^2 - t + 1``) over ``Z``, else a ``(free; torsion): coeff`` list."""
    if not a.terms:
        return "0"
    if is_laurent_group(a.group):
        out = ""
        for e in sorted(a.terms, key=lambda e: -e.free[0]):
            c, k = a.terms[e], e.free[0]
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if not out:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out
    return ", ".join(f"{e}: {a.terms[e]}" for e in sorted(a.terms))


class AlgebraMatrix:
    """A matrix over ``Z[H]``.  Rows index relators, columns index generators."""

    __slots__ = ("group", "rows", "cols", "entries")

    def __init__(self, group: AbelianGroup, entries: Sequence[Sequence[GroupAlgebraElement]],
                 rows: int | None = None, cols: int | None = None):
        self.group = group
        self.entries = tuple(tuple(r) for r in entries)
        self.rows = len(self.entries) if rows is None else rows
        self.cols = (len(self.entries[0]) if self.entries else 0) if cols is None else cols
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionMismatch("ragged algebra matrix")
        for r in self.entries:
            for a in r:
                if a.group != group:
                    raise GroupMismatch(f"entry over Z[{a.group}] in a matrix over Z[{group}]")

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    def __eq__(self, other):
        return (isinstance(other, AlgebraMatrix) and self.group == other.group
                and self.rows == other.rows and self.cols == other.cols
                and self.entries == other.entries)

    def map_entries(self, f: AbelianGroupHom) -> "AlgebraMatrix":
        return AlgebraMatrix(f.target, [[ga_apply_hom(a, f) for a in r] for r in self.entries],
                             self.rows, self.cols)

    def __matmul__(self, other: "AlgebraMatrix") -> "AlgebraMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"({self.rows}x{self.cols}) @ ({other.rows}x{other.cols})")
        zero = GroupAlgebraElement.zero(self.group)
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return AlgebraMatrix(self.group, out, self.rows, other.cols)

    def transpose(self) -> "AlgebraMatrix":
        return AlgebraMatrix(self.group, [list(c) for c in zip(*self.entries)] if self.rows else [],
                             self.cols, self.rows)

    def permuted(self, row_perm: Sequence[int], col_perm: Sequence[int]) -> "AlgebraMatrix":
        return AlgebraMatrix(self.group, [[self.entries[i][j] for j in col_perm] for i in row_perm],
                             self.rows, self.cols)

    def to_rows(self) -> list[list[str]]:
        return [[format_element(a) for a in r] for r in self.entries]

    def __repr__(self):
        return f"AlgebraMatrix(Z[{self.group}], {self.to_rows()})"


def _require_finite(group: AbelianGroup):
    if not group.is_finite:
        raise InfiniteGroupError(f"regular expansion needs a finite group, got Z[{group}]")


def regular_matrix(a: GroupAlgebraElement) -> IntMatrix:
    """Left regular representation: entry ``(k, l)`` is the coefficient of ``h_k`` in ``a h_l``."""
    return regular_expand(AlgebraMatrix(a.group, [[a]]))


def regular_expand(M: AlgebraMatrix) -> IntMatrix:
    """Replace each entry by its ``|H| x |H|`` left regular representation block."""
    H = M.group
    _require_finite(H)
    n = H.order
    table = H.addition_table
    out = IntMatrix.zeros(n * M.rows, n * M.cols)
    for i in range(M.rows):
        for j in range(M.cols):
            for e, c in M.entries[i][j].terms.items():
                g = H.index(e)
                row_g = table[g]
                for l in range(n):
                    out.data[i * n + row_g[l]][j * n + l] += c
    return out


def expand_relations(M: AlgebraMatrix) -> IntMatrix:
    """The module presented by ``M`` as an integer presentation.

    Rows of ``M`` are relations on the ``M.cols`` free generators.  The result
    has one row per coordinate ``h_k * e_j`` (index ``j * |H| + k``) and one
    column per relation ``h * row_i`` (index ``i * |H| + index(h)``), so its
    cokernel is the underlying abelian group of the module.
    """
    H = M.group
    _require_finite(H)
    n = H.order
    table = H.addition_table
    out = IntMatrix.zeros(n * M.cols, n * M.rows)
    for i in range(M.rows):
        for j in range(M.cols):
            for e, c in M.entries[i][j].terms.items():
                g = H.index(e)
                row_g = table[g]
                for h in range(n):
                    out.data[j * n + row_g[h]][i * n + h] += c
    return out


def expand_vector(v: Sequence[GroupAlgebraElement], group: AbelianGroup) -> list[int]:
    """Coordinates of a vector in ``Z[H]^r`` in the layout used by :func:`expand_relations`."""
    _require_finite(group)
    n = group.order
    out = [0] * (n * len(v))
    for j, a in enumerate(v):
        for e, c in a.terms.items():
            out[j * n + group.index(e)] += c
    return out


def collapse_vector(coords: Sequence[int], group: AbelianGroup) -> list[GroupAlgebraElement]:
    """Inverse of :func:`expand_vector`."""
    n = group.order
    els = group.elements()
    return [GroupAlgebraElement(group, {els[k]: coords[j * n + k] for k in range(n)})
            for j in range(len(coords) // n)]


def determinant(M: AlgebraMatrix) -> GroupAlgebraElement:
    """Determinant over the commutative ring ``Z[H]`` by expansion over column subsets."""
    n = M.rows
    if M.cols != n:
        raise DimensionMismatch("determinant of a non-square matrix")
    G = M.group
    # dp[mask] = signed sum over ways to fill the first popcount(mask) rows using columns in mask
    dp = {0: GroupAlgebraElement.one(G)}
    for i in range(n):
        nxt: dict[int, GroupAlgebraElement] = {}
        for mask, val in dp.items():
            for j in range(n):
                if mask >> j & 1 or not M.entries[i][j]:
                    continue
                sign = -1 if bin(mask >> j).count("1") % 2 else 1
                term = val * M.entries[i][j] * sign
                key = mask | 1 << j
                nxt[key] = nxt[key] + term if key in nxt else term
        dp = nxt
    return dp.get((1 << n) - 1, GroupAlgebraElement.zero(G))


def elementary_ideal_generators(M: AlgebraMatrix, d: int) -> list[GroupAlgebraElement]:
    """Generators of ``E_d``: the ``(cols - d)``-minors of ``M``, in lexicographic order."""
    G = M.group
    k = M.cols - d
    if k <= 0:
        return [GroupAlgebraElement.one(G)]
    if k > min(M.rows, M.cols):
        return [GroupAlgebraElement.zero(G)]
    out = []
    for rs in itertools.combinations(range(M.rows), k):
        for cs in itertools.combinations(range(M.cols), k):
            sub = AlgebraMatrix(G, [[M.entries[i][j] for j in cs] for i in rs], k, k)
            out.append(determinant(sub))
    return out


# One-variable Laurent polynomials.  Internally: (lowest degree, ascending coefficient list).

def _to_poly(a: GroupAlgebraElement) -> tuple[int, list[int]]:
    if not a.terms:
        return 0, []
    degs = {e.free[0]: c for e, c in a.terms.items()}
    lo, hi = min(degs), max(degs)
    return lo, [degs.get(k, 0) for k in range(lo, hi + 1)]


def _from_poly(group: AbelianGroup, shift: int, coeffs: Sequence[int]) -> GroupAlgebraElement:
    return GroupAlgebraElement(group, {AbelianElement((shift + k,), ()): c
                                       for k, c in enumerate(coeffs) if c})


def _trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _content(p: Sequence[int]) -> int:
    return math.gcd(*p) if p else 0


def _primitive(p: list[int]) -> list[int]:
    c = _content(p)
    if c == 0:
        return []
    if p[-1] < 0:
        c = -c
    return [x // c for x in p]


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of ``a`` by ``b`` (``lc(b)^k a = q b + r``)."""
    r = a[:]
    db, lb = len(b) - 1, b[-1]
    while r and len(r) - 1 >= db:
        shift = len(r) - 1 - db
        lr = r[-1]
        r = [lb * x for x in r]
        for k, y in enumerate(b):
            r[k + shift] -= lr * y
        _trim(r)
    return r


def poly_gcd(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Gcd in ``Z[t]`` (ascending coefficients) via a primitive remainder sequence."""
    a, b = _trim(list(a)), _trim(list(b))
    if not a or not b:
        p = a or b
        return [-x for x in p] if p and p[-1] < 0 else p
    content = math.gcd(_content(a), _content(b))
    a, b = _primitive(a), _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a, b = b, _primitive(r) if r else []
    return [content * x for x in _primitive(a)]


def poly_divmod(a: Sequence[int], b: Sequence[int]) -> tuple[list[int], list[int]] | None:
    """Exact division in ``Z[t]``; ``None`` if some quotient coefficient is not integral."""
    r = _trim(list(a))
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [0] * max(len(r) - len(b) + 1, 0)
    while r and len(r) >= len(b):
        shift = len(r) - len(b)
        if r[-1] % b[-1]:
            return None
        c = r[-1] // b[-1]
        q[shift] = c
        for k, y in enumerate(b):
            r[k + shift] -= c * y
        _trim(r)
    return q, r


def laurent_normalize(a: GroupAlgebraElement) -> GroupAlgebraElement:
    """Multiply by a unit ``+-t^k`` so the lowest degree is 0 and the top coefficient is positive."""
    _, p = _to_poly(a)
    if not p:
        return a
    _trim(p)
    if p[-1] < 0:
        p = [-x for x in p]
    return _from_poly(a.group, 0, p)


def laurent_gcd(elements: Iterable[GroupAlgebraElement]) -> GroupAlgebraElement:
    elements = list(elements)
    if not elements:
        raise ValueError("gcd of an empty list")
    group = elements[0].group
    if not is_laurent_group(group):
        raise GroupMismatch(f"Laurent gcd needs Z[t, t^-1], got Z[{group}]")
    g: list[int] = []
    for a in elements:
        if a.group != group:
            raise GroupMismatch("mixed rings in gcd")
        g = poly_gcd(g, _to_poly(a)[1])
    if not g:
        return GroupAlgebraElement.zero(group)
    return laurent_normalize(_from_poly(group, 0, g))


def alexander_polynomial_from_ideal(gens: Sequence[GroupAlgebraElement],
                                    group: AbelianGroup | None = None) -> GroupAlgebraElement:
    if not gens:
        raise ValueError("no generators")
    group = group or gens[0].group
    if not is_laurent_group(group):
        raise GroupMismatch(f"one-variable Alexander polynomial needs H = Z, got {group}")
    return laurent_gcd(gens)


def laurent(group_or_coeffs, coeffs: Mapping[int, int] | None = None) -> GroupAlgebraElement:
    """Build an element of ``Z[t, t^-1]`` from ``{degree: coefficient}``."""
    if coeffs is None:
        group, coeffs = AbelianGroup(1), group_or_coeffs
    else:
        group = group_or_coeffs
    return GroupAlgebraElement(group, {AbelianElement((k,), ()): c for k, c in coeffs.items()})
