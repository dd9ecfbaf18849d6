"""
Free group words.

A letter is a nonzero integer: ``g`` is the generator with index ``g``
(1-based) and ``-g`` its inverse.  Generator names only exist in the
parser; everything here is name free.

Letters are totally ordered by ``(abs(g), g < 0)``, i.e.
``1 < -1 < 2 < -2 < ...``.  This order picks canonical rotations of
cyclic words.
"""
from __future__ import annotations

from typing import Iterable

from .errors import DomainError, MalformedInputError


def letter_key(x: int) -> tuple[int, int]:
    return (abs(x), 0 if x > 0 else 1)


def word_key(w) -> tuple:
    return tuple(letter_key(x) for x in w)


class Word(tuple):
    """
    A freely reduced word, stored as a tuple of signed generator indices.

    >>> Word([1, -1, 2])
    Word(2)
    >>> Word([2, 1]) * Word([-1, 3])
    Word(2, 3)
    """

    def __new__(cls, letters: Iterable[int] = ()):
        return super().__new__(cls, _reduce(letters))

    @classmethod
    def _raw(cls, letters):
        # caller guarantees letters are freely reduced
        return super().__new__(cls, letters)

    def __repr__(self):
        return "Word(" + ", ".join(map(str, self)) + ")"

    def __mul__(self, other):
        return Word(tuple(self) + tuple(other))

    def __rmul__(self, other):
        return Word(tuple(other) + tuple(self))

    def __add__(self, other):
        return self.__mul__(other)

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return Word(tuple(self) * n)

    def __getitem__(self, item):
        result = super().__getitem__(item)
        if isinstance(item, slice):
            return Word._raw(result)
        return result

    def inverse(self) -> Word:
        return Word._raw(tuple(-x for x in reversed(self)))

    def rank(self) -> int:
        """Largest generator index occurring (0 for the empty word)."""
        return max((abs(x) for x in self), default=0)

    def support(self) -> frozenset[int]:
        return frozenset(abs(x) for x in self)

    def is_cyclically_reduced(self) -> bool:
        return len(self) < 2 or self[0] != -self[-1]

    def cyclic_reduction(self) -> Word:
        i, j = 0, len(self)
        while j - i >= 2 and self[i] == -self[j - 1]:
            i += 1
            j -= 1
        return Word._raw(tuple(self)[i:j])

    def rotate(self, k: int) -> Word:
        """Rotate left by k; only meaningful on cyclically reduced words."""
        if not self:
            return self
        k %= len(self)
        t = tuple(self)
        return Word._raw(t[k:] + t[:k])

    def substitute(self, images) -> Word:
        """Apply the endomorphism sending generator ``g`` to ``images[g]``."""
        out = []
        for x in self:
            img = images[abs(x)]
            out.extend(img if x > 0 else (-y for y in reversed(img)))
        return Word(out)


def _reduce(letters) -> tuple:
    stack = []
    for x in letters:
        if x == 0:
            raise MalformedInputError("letter 0 is not a generator")
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def free_reduce(raw: Iterable[int], m: int | None = None) -> Word:
    """Freely reduce a sequence of signed letters, checking indices against rank ``m``."""
    raw = tuple(raw)
    for x in raw:
        if not isinstance(x, int) or x == 0 or (m is not None and abs(x) > m):
            raise MalformedInputError(f"letter {x!r} out of range for rank {m}")
    return Word(raw)


def commutator(u, v) -> Word:
    """``[u, v] = u v u^-1 v^-1``."""
    u, v = Word(u), Word(v)
    return u * v * u.inverse() * v.inverse()


def least_rotation(w: Word) -> Word:
    if not w:
        return w
    return min((w.rotate(k) for k in range(len(w))), key=word_key)


class CyclicWord:
    """
    Conjugacy class of a word in the free group.

    The representative is cyclically reduced and is the least of its own
    rotations in the letter order.  Two words are conjugate exactly when
    their CyclicWords compare equal.
    """

    __slots__ = ("word",)

    def __init__(self, w: Iterable[int] = ()):
        if isinstance(w, CyclicWord):
            w = w.word
        object.__setattr__(self, "word", least_rotation(Word(w).cyclic_reduction()))

    def __setattr__(self, name, value):
        raise AttributeError("CyclicWord is immutable")

    def __eq__(self, other):
        return isinstance(other, CyclicWord) and self.word == other.word

    def __hash__(self):
        return hash(("CyclicWord", self.word))

    def __lt__(self, other):
        return (len(self), word_key(self.word)) < (len(other), word_key(other.word))

    def __len__(self):
        return len(self.word)

    def __iter__(self):
        return iter(self.word)

    def __repr__(self):
        return f"CyclicWord({', '.join(map(str, self.word))})"

    def inverse(self) -> CyclicWord:
        return CyclicWord(self.word.inverse())

    def support(self) -> frozenset[int]:
        return self.word.support()


def cyclic_normal_form(w) -> CyclicWord:
    return CyclicWord(w)


def _primitive_period(t: tuple) -> int:
    n = len(t)
    for p in range(1, n + 1):
        if n % p == 0 and t[:p] * (n // p) == t:
            return p
    return n


def root_and_exponent(w) -> tuple[CyclicWord, int]:
    """
    Root and exponent of the cyclic reduction of ``w``.

    >>> root_and_exponent(Word([1, 2, 1, 2]))
    (CyclicWord(1, 2), 2)
    """
    c = Word(w).cyclic_reduction()
    if not c:
        raise DomainError("the empty word has no root")
    p = _primitive_period(tuple(c))
    return CyclicWord(c[:p]), len(c) // p


def is_proper_power(w) -> bool:
    return root_and_exponent(w)[1] > 1


def exponent_sum(w, g: int) -> int:
    return sum((1 if x > 0 else -1) for x in w if abs(x) == g)


def exponent_vector(w, m: int) -> list[int]:
    v = [0] * m
    for x in w:
        v[abs(x) - 1] += 1 if x > 0 else -1
    return v


def reduced_words(m: int, length: int):
    """All freely reduced words of exactly the given length, in lexicographic letter order."""
    letters = sorted([g for g in range(1, m + 1)] + [-g for g in range(1, m + 1)], key=letter_key)

    def extend(prefix, k):
        if k == 0:
            yield Word._raw(tuple(prefix))
            return
        for x in letters:
            if prefix and prefix[-1] == -x:
                continue
            prefix.append(x)
            yield from extend(prefix, k - 1)
            prefix.pop()

    yield from extend([], length)


def words_up_to(m: int, max_length: int):
    for n in range(max_length + 1):
        yield from reduced_words(m, n)


def cyclic_words(m: int, length: int, *, primitive_only: bool = False):
    """Canonical representatives of cyclic words of the given length (each exactly once)."""
    for w in reduced_words(m, length):
        if not w.is_cyclically_reduced():
            continue
        if least_rotation(w) != w:
            continue
        if primitive_only and _primitive_period(tuple(w)) != len(w):
            continue
        yield CyclicWord(w)
