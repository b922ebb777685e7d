"""Exact integer linear algebra and finitely generated abelian groups.

Conventions used everywhere in the package: a matrix ``A`` with ``m`` rows
presents the abelian group ``Z^m / (column span of A)``.  Rows index
generators, columns index relations.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .errors import DimensionMismatch, InfiniteGroupError, InvalidHomomorphism, NotInSpan


class IntMatrix:
    """A dense matrix of Python integers, stored as a list of row lists."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Iterable[Iterable[int]] = (), rows: int | None = None,
                 cols: int | None = None):
        self.data = [[int(x) for x in row] for row in data]
        self.rows = len(self.data) if rows is None else rows
        if cols is None:
            cols = len(self.data[0]) if self.data else 0
        self.cols = cols
        if not self.data and self.rows:
            self.data = [[0] * cols for _ in range(self.rows)]
        if len(self.data) != self.rows or any(len(r) != cols for r in self.data):
            raise DimensionMismatch("ragged matrix data")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def diagonal(cls, entries: Sequence[int], rows: int | None = None,
                 cols: int | None = None) -> "IntMatrix":
        rows = len(entries) if rows is None else rows
        cols = len(entries) if cols is None else cols
        m = cls.zeros(rows, cols)
        for i, d in enumerate(entries):
            m.data[i][i] = d
        return m

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> "IntMatrix":
        for c in columns:
            if len(c) != rows:
                raise DimensionMismatch(f"column of length {len(c)}, expected {rows}")
        return cls([[c[i] for c in columns] for i in range(rows)], rows, len(columns))

    def columns(self) -> list[list[int]]:
        return [[row[j] for row in self.data] for j in range(self.cols)]

    def column(self, j: int) -> list[int]:
        return [row[j] for row in self.data]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.columns(), self.cols, self.rows)

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.rows != other.rows:
            raise DimensionMismatch(f"cannot stack {self.rows} rows with {other.rows}")
        return IntMatrix([a + b for a, b in zip(self.data, other.data)],
                         self.rows, self.cols + other.cols)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        cols = other.columns()
        return IntMatrix([[sum(a * b for a, b in zip(row, c) if a) for c in cols]
                          for row in self.data], self.rows, other.cols)

    def apply(self, vec: Sequence[int]) -> list[int]:
        if len(vec) != self.cols:
            raise DimensionMismatch(f"vector of length {len(vec)} for {self.shape} matrix")
        nz = [(j, v) for j, v in enumerate(vec) if v]
        return [sum(row[j] * v for j, v in nz) for row in self.data]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, idx):
        i, j = idx
        return self.data[i][j]

    def __eq__(self, other):
        return (isinstance(other, IntMatrix) and self.shape == other.shape
                and self.data == other.data)

    def __repr__(self):
        return f"IntMatrix({self.data!r}, rows={self.rows}, cols={self.cols})"

    def format(self) -> str:
        lines = [f"{self.rows} {self.cols}"]
        lines += [" ".join(str(x) for x in row) for row in self.data]
        return "\n".join(lines)


def determinant(A: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = A.rows
    if A.cols != n:
        raise DimensionMismatch("determinant of a non-square matrix")
    if n == 0:
        return 1
    M = [row[:] for row in A.data]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


class SmithForm(NamedTuple):
    U: IntMatrix
    D: IntMatrix
    V: IntMatrix


class _Smith:
    """Result of the elimination: the diagonal plus whichever transforms were asked for."""

    __slots__ = ("m", "n", "diag", "U", "Uinv", "V")

    def __init__(self, m, n, diag, U, Uinv, V):
        self.m, self.n, self.diag = m, n, diag
        self.U, self.Uinv, self.V = U, Uinv, V

    @property
    def rank(self) -> int:
        return len(self.diag)


def _eye(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _smith(A: IntMatrix, want_u=False, want_uinv=False, want_v=False) -> _Smith:
    """Smith normal form by pivoting on the smallest nonzero entry.

    ``U`` and ``Uinv`` are lists of rows; ``V`` is returned as a list of its
    columns, since that is how every caller consumes it.
    """
    m, n = A.rows, A.cols
    D = [row[:] for row in A.data]
    U = _eye(m) if want_u else None
    UiT = _eye(m) if want_uinv else None  # rows are the columns of U^-1
    VT = _eye(n) if want_v else None      # rows are the columns of V
    diag: list[int] = []

    def row_sub(i, t, q):
        # row_i -= q * row_t
        rt, ri = D[t], D[i]
        for k in [k for k in range(n) if rt[k]]:
            ri[k] -= q * rt[k]
        if U is not None:
            ut, ui = U[t], U[i]
            for k in [k for k in range(m) if ut[k]]:
                ui[k] -= q * ut[k]
        if UiT is not None:
            a, b = UiT[t], UiT[i]
            for k in [k for k in range(m) if b[k]]:
                a[k] += q * b[k]

    def col_sub(j, t, q):
        # col_j -= q * col_t
        for row in D:
            if row[t]:
                row[j] -= q * row[t]
        if VT is not None:
            vt, vj = VT[t], VT[j]
            for k in [k for k in range(n) if vt[k]]:
                vj[k] -= q * vt[k]

    def swap_rows(i, t):
        if i != t:
            D[i], D[t] = D[t], D[i]
            if U is not None:
                U[i], U[t] = U[t], U[i]
            if UiT is not None:
                UiT[i], UiT[t] = UiT[t], UiT[i]

    def swap_cols(j, t):
        if j != t:
            for row in D:
                row[j], row[t] = row[t], row[j]
            if VT is not None:
                VT[j], VT[t] = VT[t], VT[j]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            row = D[i]
            for j in range(t, n):
                a = row[j]
                if a and (best is None or abs(a) < best[0]):
                    best = (abs(a), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        swap_rows(best[1], t)
        swap_cols(best[2], t)

        while True:
            p = D[t][t]
            small = None
            for i in range(t + 1, m):
                a = D[i][t]
                if a:
                    row_sub(i, t, a // p)
                    r = D[i][t]
                    if r and (small is None or abs(r) < small[0]):
                        small = (abs(r), i)
            if small is not None:
                swap_rows(small[1], t)
                continue
            rt = D[t]
            for j in range(t + 1, n):
                a = rt[j]
                if a:
                    q = a // p
                    rt[j] -= q * p
                    if VT is not None:
                        vt, vj = VT[t], VT[j]
                        for k in [k for k in range(n) if vt[k]]:
                            vj[k] -= q * vt[k]
                    r = rt[j]
                    if r and (small is None or abs(r) < small[0]):
                        small = (abs(r), j)
            if small is not None:
                swap_cols(small[1], t)
                continue
            if abs(p) != 1:
                bad = None
                for i in range(t + 1, m):
                    if any(a % p for a in D[i][t + 1:]):
                        bad = i
                        break
                if bad is not None:
                    # row_t += row_bad, then the row clearing step exposes a remainder
                    row_sub(t, bad, -1)
                    continue
            break

        if D[t][t] < 0:
            D[t] = [-a for a in D[t]]
            if U is not None:
                U[t] = [-a for a in U[t]]
            if UiT is not None:
                UiT[t] = [-a for a in UiT[t]]
        diag.append(D[t][t])

    Uinv = [list(col) for col in zip(*UiT)] if UiT is not None and m else ([] if UiT is not None else None)
    return _Smith(m, n, diag, U, Uinv, VT)


def smith_normal_form(A: IntMatrix) -> SmithForm:
    """Return unimodular ``U``, ``V`` and diagonal ``D`` with ``U @ A @ V == D``.

    The diagonal entries are nonnegative and each divides the next.
    """
    s = _smith(A, want_u=True, want_v=True)
    D = IntMatrix.diagonal(s.diag, A.rows, A.cols)
    V = IntMatrix([list(r) for r in zip(*s.V)], A.cols, A.cols) if A.cols else IntMatrix.zeros(0, 0)
    return SmithForm(IntMatrix(s.U, A.rows, A.rows), D, V)


def invariant_factors(A: IntMatrix) -> list[int]:
    """Nonzero diagonal entries of the Smith form, in divisibility order."""
    return _smith(A).diag


class AbelianElement(NamedTuple):
    free: tuple[int, ...]
    torsion: tuple[int, ...]

    def __str__(self):
        return (f"({', '.join(map(str, self.free))}; "
                f"{', '.join(map(str, self.torsion))})")


@dataclass(frozen=True)
class AbelianGroup:
    """``Z^free_rank + Z/d_1 + ... + Z/d_k`` with ``d_1 | d_2 | ... | d_k``."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(d) for d in self.torsion))
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        for d in self.torsion:
            if d < 2:
                raise ValueError(f"invariant factor {d} must be >= 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"invariant factors {self.torsion} do not form a divisibility chain")

    @classmethod
    def trivial(cls) -> "AbelianGroup":
        return cls(0, ())

    @classmethod
    def cyclic(cls, n: int) -> "AbelianGroup":
        """``Z/n``; ``n = 0`` gives ``Z`` and ``n = 1`` the trivial group."""
        if n == 0:
            return cls(1, ())
        return cls(0, () if abs(n) == 1 else (abs(n),))

    @property
    def ngens(self) -> int:
        return self.free_rank + len(self.torsion)

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def order(self) -> int:
        if not self.is_finite:
            raise InfiniteGroupError(f"{self} is infinite")
        return math.prod(self.torsion)

    @property
    def identity(self) -> AbelianElement:
        return AbelianElement((0,) * self.free_rank, (0,) * len(self.torsion))

    def element(self, free: Sequence[int] = (), torsion: Sequence[int] = ()) -> AbelianElement:
        free = tuple(free) or (0,) * self.free_rank
        torsion = tuple(torsion) or (0,) * len(self.torsion)
        if len(free) != self.free_rank or len(torsion) != len(self.torsion):
            raise DimensionMismatch(f"element shape does not match {self}")
        return AbelianElement(free, tuple(a % d for a, d in zip(torsion, self.torsion)))

    def from_vector(self, vec: Sequence[int]) -> AbelianElement:
        f = self.free_rank
        if len(vec) != self.ngens:
            raise DimensionMismatch(f"vector of length {len(vec)} for {self}")
        return AbelianElement(tuple(vec[:f]),
                              tuple(a % d for a, d in zip(vec[f:], self.torsion)))

    @staticmethod
    def to_vector(e: AbelianElement) -> list[int]:
        return list(e.free) + list(e.torsion)

    def add(self, a: AbelianElement, b: AbelianElement) -> AbelianElement:
        return AbelianElement(
            tuple(x + y for x, y in zip(a.free, b.free)),
            tuple((x + y) % d for x, y, d in zip(a.torsion, b.torsion, self.torsion)))

    def neg(self, a: AbelianElement) -> AbelianElement:
        return AbelianElement(tuple(-x for x in a.free),
                              tuple(-x % d for x, d in zip(a.torsion, self.torsion)))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def scale(self, k: int, a: AbelianElement) -> AbelianElement:
        return AbelianElement(tuple(k * x for x in a.free),
                              tuple(k * x % d for x, d in zip(a.torsion, self.torsion)))

    def combine(self, coeffs: Sequence[int], elements: Sequence[AbelianElement]) -> AbelianElement:
        acc = [0] * self.ngens
        for c, e in zip(coeffs, elements):
            if c:
                for k, x in enumerate(self.to_vector(e)):
                    acc[k] += c * x
        return self.from_vector(acc)

    def is_identity(self, a: AbelianElement) -> bool:
        return not any(a.free) and not any(a.torsion)

    def order_of(self, a: AbelianElement) -> int:
        """Order of ``a``; 0 stands for infinite order."""
        if any(a.free):
            return 0
        o = 1
        for x, d in zip(a.torsion, self.torsion):
            o = math.lcm(o, d // math.gcd(x, d))
        return o

    def generators(self) -> list[AbelianElement]:
        out = []
        for k in range(self.ngens):
            v = [0] * self.ngens
            v[k] = 1
            out.append(self.from_vector(v))
        return out

    def relation_matrix(self) -> IntMatrix:
        """Columns ``d_i e_i`` presenting this group on its standard generators."""
        f = self.free_rank
        cols = []
        for i, d in enumerate(self.torsion):
            v = [0] * self.ngens
            v[f + i] = d
            cols.append(v)
        return IntMatrix.from_columns(cols, self.ngens)

    @cached_property
    def _elements(self) -> tuple[AbelianElement, ...]:
        return tuple(AbelianElement((), t)
                     for t in itertools.product(*(range(d) for d in self.torsion)))

    @cached_property
    def _index(self) -> dict:
        return {e: i for i, e in enumerate(self._elements)}

    def elements(self) -> tuple[AbelianElement, ...]:
        """All elements in canonical (lexicographic) order; finite groups only."""
        if not self.is_finite:
            raise InfiniteGroupError(f"cannot enumerate the infinite group {self}")
        return self._elements

    def index(self, a: AbelianElement) -> int:
        return self._index[a]

    @cached_property
    def addition_table(self) -> list[list[int]]:
        """``table[i][j]`` is the index of ``elements[i] + elements[j]``."""
        els = self.elements()
        idx = self._index
        return [[idx[self.add(a, b)] for b in els] for a in els]

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " x ".join(parts) if parts else "0"

    def to_dict(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}


class Cokernel:
    """``Z^rows / colspan(A)`` in normal form, with maps to and from coordinates."""

    def __init__(self, A: IntMatrix):
        s = _smith(A, want_u=True, want_uinv=True)
        self.matrix = A
        self._U = s.U
        self._Uinv = s.Uinv
        m = A.rows
        diag = s.diag + [0] * (m - len(s.diag))
        self._torsion_pos = [i for i, d in enumerate(diag) if d > 1]
        self._free_pos = [i for i, d in enumerate(diag) if d == 0]
        self.group = AbelianGroup(len(self._free_pos),
                                  tuple(diag[i] for i in self._torsion_pos))

    def project(self, vec: Sequence[int]) -> AbelianElement:
        if len(vec) != self.matrix.rows:
            raise DimensionMismatch(f"vector of length {len(vec)} for Z^{self.matrix.rows}")
        nz = [(j, v) for j, v in enumerate(vec) if v]
        w = {}
        for i in self._free_pos + self._torsion_pos:
            row = self._U[i]
            w[i] = sum(row[j] * v for j, v in nz)
        return self.group.element([w[i] for i in self._free_pos],
                                  [w[i] for i in self._torsion_pos])

    def lift(self, e: AbelianElement) -> list[int]:
        """An integer vector projecting onto ``e``."""
        m = self.matrix.rows
        out = [0] * m
        for coeff, i in zip(list(e.free) + list(e.torsion), self._free_pos + self._torsion_pos):
            if coeff:
                for k in range(m):
                    out[k] += coeff * self._Uinv[k][i]
        return out


def coker_invariants(A: IntMatrix) -> AbelianGroup:
    """Invariants of ``Z^rows / colspan(A)``."""
    diag = invariant_factors(A)
    return AbelianGroup(A.rows - len(diag), tuple(d for d in diag if d > 1))


def lattice_kernel(A: IntMatrix) -> IntMatrix:
    """Basis (as columns) of the integer solutions of ``A x = 0``."""
    s = _smith(A, want_v=True)
    return IntMatrix.from_columns(s.V[s.rank:], A.cols)


def solve(A: IntMatrix, b: Sequence[int]) -> list[int] | None:
    """An integer ``x`` with ``A x = b``, or ``None`` if there is none."""
    if len(b) != A.rows:
        raise DimensionMismatch(f"right-hand side of length {len(b)} for {A.rows} rows")
    return _Solver(A).solve(b)


class _Solver:
    """Factor ``A`` once, then solve ``A x = b`` for many right-hand sides."""

    def __init__(self, A: IntMatrix):
        s = _smith(A, want_u=True, want_v=True)
        self.A, self.s = A, s

    def solve(self, b: Sequence[int]) -> list[int] | None:
        s = self.s
        nz = [(j, v) for j, v in enumerate(b) if v]
        y = [sum(row[j] * v for j, v in nz) for row in s.U]
        for i in range(s.rank, len(y)):
            if y[i]:
                return None
        x = [0] * self.A.cols
        for i, d in enumerate(s.diag):
            if y[i] % d:
                return None
            c = y[i] // d
            if c:
                for k, v in enumerate(s.V[i]):
                    if v:
                        x[k] += c * v
        return x


def lattice_membership(b: Sequence[int], A: IntMatrix) -> bool:
    """Is ``b`` an integer combination of the columns of ``A``?"""
    return solve(A, b) is not None


class Lattice:
    """A sublattice of ``Z^n`` given by spanning columns; membership is amortised."""

    def __init__(self, A: IntMatrix):
        self.matrix = A
        self._solver = _Solver(A)

    @property
    def ambient(self) -> int:
        return self.matrix.rows

    def __contains__(self, b) -> bool:
        if len(b) != self.matrix.rows:
            raise DimensionMismatch(f"vector of length {len(b)} in Z^{self.matrix.rows}")
        return self._solver.solve(b) is not None

    def coefficients(self, b) -> list[int] | None:
        return self._solver.solve(b)


def sublattice_equal(A: IntMatrix, B: IntMatrix) -> bool:
    if A.rows != B.rows:
        raise DimensionMismatch(f"ambient ranks {A.rows} and {B.rows} differ")
    la, lb = Lattice(A), Lattice(B)
    return all(c in lb for c in A.columns()) and all(c in la for c in B.columns())


class Subquotient:
    """``span(generators) / span(relations)`` for sublattices of a common ``Z^n``."""

    def __init__(self, generators: IntMatrix, relations: IntMatrix):
        if generators.rows != relations.rows:
            raise DimensionMismatch(
                f"ambient ranks {generators.rows} and {relations.rows} differ")
        s = _smith(generators, want_u=True, want_uinv=True)
        self._s = s
        n = generators.rows
        self.ambient = n
        coords = []
        for col in relations.columns():
            y = self._span_coordinates(col)
            if y is None:
                raise NotInSpan("relation vector not inside the generator span")
            coords.append(y)
        self._coker = Cokernel(IntMatrix.from_columns(coords, s.rank))
        self.group = self._coker.group
        # d_i times column i of U^-1 is a basis of span(generators)
        self._basis = [[s.diag[i] * s.Uinv[k][i] for k in range(n)] for i in range(s.rank)]

    def _span_coordinates(self, vec):
        s = self._s
        nz = [(j, v) for j, v in enumerate(vec) if v]
        y = [sum(row[j] * v for j, v in nz) for row in s.U]
        if any(y[s.rank:]):
            return None
        out = []
        for i, d in enumerate(s.diag):
            if y[i] % d:
                return None
            out.append(y[i] // d)
        return out

    def contains(self, vec) -> bool:
        return self._span_coordinates(vec) is not None

    def project(self, vec: Sequence[int]) -> AbelianElement:
        y = self._span_coordinates(vec)
        if y is None:
            raise NotInSpan("vector not inside the generator span")
        return self._coker.project(y)

    def lift(self, e: AbelianElement) -> list[int]:
        y = self._coker.lift(e)
        out = [0] * self.ambient
        for c, b in zip(y, self._basis):
            if c:
                for k, v in enumerate(b):
                    out[k] += c * v
        return out


def subquotient_invariants(generators: IntMatrix, relations: IntMatrix) -> AbelianGroup:
    return Subquotient(generators, relations).group


def reduce_mod(group: AbelianGroup, modulus: int) -> AbelianGroup:
    """Invariants of ``group (x) Z/modulus``; a coefficient view, not new arithmetic."""
    if modulus < 1:
        raise ValueError("modulus must be positive")
    factors = [modulus] * group.free_rank + [math.gcd(d, modulus) for d in group.torsion]
    return coker_invariants(IntMatrix.diagonal(factors))


class AbelianGroupHom:
    """A homomorphism between abelian groups, given on the source's standard generators."""

    def __init__(self, source: AbelianGroup, target: AbelianGroup,
                 images: Sequence[AbelianElement]):
        if len(images) != source.ngens:
            raise InvalidHomomorphism(
                f"{len(images)} images for {source.ngens} source generators")
        self.source, self.target = source, target
        self.images = tuple(target.from_vector(target.to_vector(e)) for e in images)
        f = source.free_rank
        for i, d in enumerate(source.torsion):
            if not target.is_identity(target.scale(d, self.images[f + i])):
                raise InvalidHomomorphism(
                    f"generator of order {d} sent to {self.images[f + i]}, "
                    f"whose order does not divide {d}")

    @classmethod
    def identity(cls, group: AbelianGroup) -> "AbelianGroupHom":
        return cls(group, group, group.generators())

    @classmethod
    def zero(cls, source: AbelianGroup, target: AbelianGroup) -> "AbelianGroupHom":
        return cls(source, target, [target.identity] * source.ngens)

    def __call__(self, e: AbelianElement) -> AbelianElement:
        return self.target.combine(self.source.to_vector(e), self.images)

    def compose(self, first: "AbelianGroupHom") -> "AbelianGroupHom":
        """``self o first``."""
        if first.target != self.source:
            raise InvalidHomomorphism("composition of incompatible homomorphisms")
        return AbelianGroupHom(first.source, self.target, [self(e) for e in first.images])

    def matrix(self) -> IntMatrix:
        return IntMatrix.from_columns([self.target.to_vector(e) for e in self.images],
                                      self.target.ngens)

    def _image_lattice(self) -> IntMatrix:
        return self.matrix().hstack(self.target.relation_matrix())

    def is_surjective(self) -> bool:
        return coker_invariants(self._image_lattice()).is_trivial

    def kernel_generators(self) -> list[AbelianElement]:
        """Elements of the source generating the kernel."""
        n = self.source.ngens
        K = lattice_kernel(self._image_lattice())
        out = []
        for col in K.columns():
            e = self.source.from_vector(col[:n])
            if not self.source.is_identity(e) and e not in out:
                out.append(e)
        return out

    def is_injective(self) -> bool:
        return not self.kernel_generators()

    def __eq__(self, other):
        return (isinstance(other, AbelianGroupHom) and self.source == other.source
                and self.target == other.target and self.images == other.images)

    def __repr__(self):
        return (f"AbelianGroupHom({self.source} -> {self.target}, "
                f"[{', '.join(map(str, self.images))}])")


def subgroup_chain(group: AbelianGroup, generators: Sequence[AbelianElement]):
    """Build ``0 -> K -> group -> group/K -> 0`` for ``K`` generated by ``generators``.

    Returns ``(inclusion, projection)`` as :class:`AbelianGroupHom` objects.
    """
    n = group.ngens
    S = IntMatrix.from_columns([group.to_vector(g) for g in generators], n)
    rel = group.relation_matrix()
    quotient = Cokernel(S.hstack(rel))
    projection = AbelianGroupHom(group, quotient.group,
                                 [quotient.project(group.to_vector(g)) for g in group.generators()])
    # relations among the chosen generators
    k = len(generators)
    K = lattice_kernel(S.hstack(rel))
    sub = Cokernel(IntMatrix.from_columns([c[:k] for c in K.columns()], k))
    images = [group.combine(sub.lift(e), generators) for e in sub.group.generators()]
    inclusion = AbelianGroupHom(sub.group, group, images)
    return inclusion, projection
