"""Reduced words in a free group and the integral group ring of the free group.

Generators are numbered from 1.  A word is a tuple of syllables
``(generator, exponent)`` kept fully reduced at all times, so two words are
equal as group elements exactly when they are equal as Python objects.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Mapping


def word_reduce(raw: Iterable[tuple[int, int]]) -> "Word":
    """Freely reduce a list of ``(generator, exponent)`` pairs."""
    stack: list[list[int]] = []
    for gen, exp in raw:
        if gen < 1:
            raise ValueError(f"generator index must be >= 1, got {gen}")
        if exp == 0:
            continue
        if stack and stack[-1][0] == gen:
            stack[-1][1] += exp
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([gen, exp])
    return Word._from_reduced(tuple((g, e) for g, e in stack))


class Word:
    """An element of the free group on generators ``x_1, x_2, ...``."""

    __slots__ = ("syllables", "_hash")

    def __init__(self, syllables: Iterable[tuple[int, int]] = ()):
        reduced = word_reduce(syllables)
        self.syllables = reduced.syllables
        self._hash = reduced._hash

    @classmethod
    def _from_reduced(cls, syllables: tuple[tuple[int, int], ...]) -> "Word":
        w = object.__new__(cls)
        w.syllables = syllables
        w._hash = hash(syllables)
        return w

    @classmethod
    def generator(cls, index: int, exponent: int = 1) -> "Word":
        return word_reduce([(index, exponent)])

    @classmethod
    def identity(cls) -> "Word":
        return _IDENTITY

    def __mul__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        return word_mul(self, other)

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return word_inv(self) ** (-n)
        result = _IDENTITY
        for _ in range(n):
            result = word_mul(result, self)
        return result

    def inverse(self) -> "Word":
        return word_inv(self)

    def __eq__(self, other):
        return isinstance(other, Word) and self.syllables == other.syllables

    def __hash__(self):
        return self._hash

    def __lt__(self, other: "Word"):
        return self.syllables < other.syllables

    def __len__(self):
        return sum(abs(e) for _, e in self.syllables)

    def __bool__(self):
        return bool(self.syllables)

    def letters(self):
        """Yield the word one letter at a time as ``(generator, +1 or -1)``."""
        for g, e in self.syllables:
            step = 1 if e > 0 else -1
            for _ in range(abs(e)):
                yield g, step

    def exponent_sums(self, num_generators: int) -> list[int]:
        sums = [0] * num_generators
        for g, e in self.syllables:
            sums[g - 1] += e
        return sums

    def max_generator(self) -> int:
        return max((g for g, _ in self.syllables), default=0)

    def format(self, names: list[str] | None = None) -> str:
        if not self.syllables:
            return "1"
        parts = []
        for g, e in self.syllables:
            name = names[g - 1] if names else f"x{g}"
            parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts)

    def __repr__(self):
        return f"Word({list(self.syllables)!r})"

    def __str__(self):
        return self.format()


_IDENTITY = Word._from_reduced(())


def word_mul(u: Word, v: Word) -> Word:
    a, b = u.syllables, v.syllables
    if not a:
        return v
    if not b:
        return u
    i, j = len(a), 0
    # cancel across the junction
    while i > 0 and j < len(b) and a[i - 1][0] == b[j][0]:
        e = a[i - 1][1] + b[j][1]
        if e != 0:
            merged = (a[i - 1][0], e)
            return Word._from_reduced(a[:i - 1] + (merged,) + b[j + 1:])
        i -= 1
        j += 1
    return Word._from_reduced(a[:i] + b[j:])


def word_inv(u: Word) -> Word:
    return Word._from_reduced(tuple((g, -e) for g, e in reversed(u.syllables)))


class FreeAlgebraElement:
    """A finite integer combination of reduced words, an element of Z[F]."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, int] | None = None):
        self.terms = {w: c for w, c in (terms or {}).items() if c != 0}

    @classmethod
    def _raw(cls, terms: dict) -> "FreeAlgebraElement":
        obj = object.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def from_word(cls, w: Word, coefficient: int = 1) -> "FreeAlgebraElement":
        return cls({w: coefficient})

    @classmethod
    def zero(cls) -> "FreeAlgebraElement":
        return cls._raw({})

    @classmethod
    def one(cls) -> "FreeAlgebraElement":
        return cls({_IDENTITY: 1})

    def __add__(self, other: "FreeAlgebraElement") -> "FreeAlgebraElement":
        return falg_add(self, other)

    def __neg__(self) -> "FreeAlgebraElement":
        return FreeAlgebraElement._raw({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "FreeAlgebraElement") -> "FreeAlgebraElement":
        return falg_add(self, -other)

    def __mul__(self, other):
        if isinstance(other, int):
            return FreeAlgebraElement({w: c * other for w, c in self.terms.items()})
        if isinstance(other, FreeAlgebraElement):
            acc: dict[Word, int] = defaultdict(int)
            for u, a in self.terms.items():
                for v, b in other.terms.items():
                    acc[word_mul(u, v)] += a * b
            return FreeAlgebraElement(acc)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, FreeAlgebraElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def format(self, names: list[str] | None = None) -> str:
        if not self.terms:
            return "0"
        out = []
        for w in sorted(self.terms, key=lambda w: (len(w), w.syllables)):
            c = self.terms[w]
            body = w.format(names)
            if body == "1":
                term = str(abs(c))
            else:
                term = body if abs(c) == 1 else f"{abs(c)}*{body}"
            sign = "-" if c < 0 else "+"
            out.append((sign, term))
        first_sign, first = out[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, term in out[1:]:
            text += f" {sign} {term}"
        return text

    def __repr__(self):
        return f"FreeAlgebraElement({self.format()})"


def falg_add(a: FreeAlgebraElement, b: FreeAlgebraElement) -> FreeAlgebraElement:
    terms = dict(a.terms)
    for w, c in b.terms.items():
        s = terms.get(w, 0) + c
        if s:
            terms[w] = s
        else:
            terms.pop(w, None)
    return FreeAlgebraElement._raw(terms)


def falg_scale_word(w: Word, a: FreeAlgebraElement) -> FreeAlgebraElement:
    """Left translation ``w * a``; it permutes the terms of ``a``."""
    return FreeAlgebraElement._raw({word_mul(w, u): c for u, c in a.terms.items()})
