import pytest
from hypothesis import given, strategies as st

from alexmod.words import (FreeAlgebraElement, Word, falg_add, falg_scale_word, word_inv,
                           word_mul, word_reduce)

syllable = st.tuples(st.integers(1, 4), st.integers(-3, 3))
raw_words = st.lists(syllable, max_size=20)
words = raw_words.map(word_reduce)


def W(*s):
    return Word(list(s))


def F(*pairs):
    out = FreeAlgebraElement.zero()
    for w, c in pairs:
        out = out + FreeAlgebraElement.from_word(w) * c
    return out


x, y, z = (Word.generator(i) for i in (1, 2, 3))


@pytest.mark.parametrize("raw, expected", [
    ([(1, 1), (1, -1)], ()),
    ([(1, 2), (1, 3)], ((1, 5),)),
    ([(1, 1), (2, 1), (2, -1), (1, 1)], ((1, 2),)),
    ([(2, 0), (1, 1)], ((1, 1),)),
])
def test_reduce_examples(raw, expected):
    assert word_reduce(raw).syllables == expected


def test_reduce_rejects_bad_index():
    with pytest.raises(ValueError):
        word_reduce([(0, 1)])


def test_mul_inv_examples():
    assert word_mul(x, word_inv(x)) == Word.identity()
    assert word_inv(x * y) == W((2, -1), (1, -1))
    assert (x * y) * (word_inv(y) * z) == x * z


@given(raw_words)
def test_reduce_idempotent(raw):
    w = word_reduce(raw)
    assert word_reduce(list(w.syllables)) == w
    s = w.syllables
    assert all(e != 0 for _, e in s)
    assert all(a[0] != b[0] for a, b in zip(s, s[1:]))


@given(raw_words, raw_words)
def test_concatenation_then_reduce(a, b):
    assert word_reduce(a + b) == word_mul(word_reduce(a), word_reduce(b))


@given(words, words, words)
def test_group_laws(u, v, w):
    assert word_mul(word_mul(u, v), w) == word_mul(u, word_mul(v, w))
    assert word_mul(u, word_inv(u)) == Word.identity()
    assert word_mul(word_inv(u), u) == Word.identity()
    assert word_inv(word_inv(u)) == u


def test_letters_and_exponent_sums():
    w = W((1, 2), (2, -1))
    assert list(w.letters()) == [(1, 1), (1, 1), (2, -1)]
    assert w.exponent_sums(3) == [2, -1, 0]
    assert len(w) == 3
    assert w.format(["a", "b"]) == "a^2*b^-1"
    assert Word.identity().format() == "1"


def test_falg_examples():
    assert falg_add(F((x, 1)), F((x, -1))) == FreeAlgebraElement.zero()
    one = FreeAlgebraElement.one()
    assert falg_scale_word(x, one + FreeAlgebraElement.from_word(y)) == F((x, 1), (x * y, 1))
    assert (one + FreeAlgebraElement.from_word(x)) + (FreeAlgebraElement.from_word(x) - one) \
        == F((x, 2))


def test_falg_no_zero_terms():
    a = F((x, 1), (y, 2)) - F((x, 1))
    assert a.terms == {y: 2}


@given(words, words, st.lists(st.tuples(words, st.integers(-3, 3)), max_size=5))
def test_left_translation_is_action(u, v, pairs):
    a = F(*pairs)
    assert falg_scale_word(u, falg_scale_word(v, a)) == falg_scale_word(word_mul(u, v), a)
    assert falg_scale_word(Word.identity(), a) == a


@given(st.lists(st.tuples(words, st.integers(-3, 3)), max_size=4),
       st.lists(st.tuples(words, st.integers(-3, 3)), max_size=4),
       st.lists(st.tuples(words, st.integers(-3, 3)), max_size=4))
def test_ring_laws(p, q, r):
    a, b, c = F(*p), F(*q), F(*r)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
