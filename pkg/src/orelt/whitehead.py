"""
Whitehead automorphisms of the free group F_m and orbit-length minimization.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .errors import DomainError, ResourceError
from .words import CyclicWord, Word, letter_key

DEFAULT_MAX_RANK = 6


def _letters(m):
    return sorted([g for g in range(1, m + 1)] + [-g for g in range(1, m + 1)], key=letter_key)


@dataclass(frozen=True)
class WhiteheadAut:
    """
    A Whitehead automorphism.

    kind "I": ``perm[g-1]`` is the signed image letter of generator ``g``.
    kind "II": multiplier letter ``a`` and letter set ``A`` with a in A,
    a^-1 not in A; a letter x != a^{+-1} goes to ``x a`` if x in A,
    to ``a^-1 x`` if x^-1 in A, to ``a^-1 x a`` if both.
    """

    kind: str
    perm: tuple = ()
    a: int = 0
    A: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.kind == "I":
            if sorted(abs(x) for x in self.perm) != list(range(1, len(self.perm) + 1)):
                raise DomainError(f"not a signed permutation: {self.perm}")
        elif self.kind == "II":
            if self.a not in self.A or -self.a in self.A:
                raise DomainError("type II needs a in A and a^-1 not in A")
        else:
            raise DomainError(f"unknown kind {self.kind!r}")

    @classmethod
    def type1(cls, perm: Sequence[int]):
        return cls("I", perm=tuple(perm))

    @classmethod
    def type2(cls, a: int, A):
        return cls("II", a=a, A=frozenset(A))

    def images(self, m: int) -> dict[int, Word]:
        if self.kind == "I":
            return {g: Word((self.perm[g - 1],)) for g in range(1, m + 1)}
        a = self.a
        out = {}
        for g in range(1, m + 1):
            if g == abs(a):
                out[g] = Word((g,))
                continue
            img = [g]
            if -g in self.A:
                img.insert(0, -a)
            if g in self.A:
                img.append(a)
            out[g] = Word(img)
        return out

    def __call__(self, w, m: int | None = None) -> Word:
        w = Word(w)
        if m is None:
            m = max(w.rank(), len(self.perm), abs(self.a), max((abs(x) for x in self.A), default=0))
        return w.substitute(self.images(m))

    def is_inner(self, m: int) -> bool:
        """True for type II moves acting as conjugation (A = all letters but a^-1)."""
        return self.kind == "II" and len(self.A) == 2 * m - 1

    def is_identity(self, m: int) -> bool:
        if self.kind == "I":
            return self.perm == tuple(range(1, m + 1))
        return self.A == frozenset([self.a])

    def __str__(self):
        if self.kind == "I":
            return f"I{list(self.perm)}"
        return f"II(a={self.a}, A={sorted(self.A, key=letter_key)})"


def _check_rank(m, max_rank):
    if m < 1:
        raise DomainError("rank must be at least 1")
    if m > max_rank:
        raise ResourceError(f"rank {m} exceeds the Whitehead rank cap {max_rank}", cap="max_rank", value=max_rank)


def type1_generators(m: int) -> list[WhiteheadAut]:
    """Transpositions of two generators followed by single-generator inversions."""
    out = []
    ident = list(range(1, m + 1))
    for i, j in combinations(range(m), 2):
        p = ident[:]
        p[i], p[j] = p[j], p[i]
        out.append(WhiteheadAut.type1(p))
    for i in range(m):
        p = ident[:]
        p[i] = -p[i]
        out.append(WhiteheadAut.type1(p))
    return out


def type2_automorphisms(m: int) -> list[WhiteheadAut]:
    out = []
    letters = _letters(m)
    for a in letters:
        rest = [x for x in letters if abs(x) != abs(a)]
        for mask in range(1 << len(rest)):
            A = {a} | {x for k, x in enumerate(rest) if mask >> k & 1}
            out.append(WhiteheadAut.type2(a, A))
    return out


def enumerate_whitehead_auts(m: int, *, max_rank: int = DEFAULT_MAX_RANK) -> list[WhiteheadAut]:
    """Type I generators followed by all 2m * 2^(2m-2) type II automorphisms."""
    _check_rank(m, max_rank)
    return type1_generators(m) + type2_automorphisms(m)


@dataclass(frozen=True)
class MinimalForm:
    word: CyclicWord
    support: frozenset
    witness_chain: tuple = ()

    @property
    def k(self) -> int:
        return len(self.support)


_AUT_CACHE: dict = {}


def _type2_cached(m, max_rank, reverse=False):
    _check_rank(m, max_rank)
    key = (m, reverse)
    if key not in _AUT_CACHE:
        auts = [(phi, phi.images(m)) for phi in type2_automorphisms(m)]
        if reverse:
            auts.reverse()
        _AUT_CACHE[key] = auts
    return _AUT_CACHE[key]


def minimize(w, m: int, *, max_rank: int = DEFAULT_MAX_RANK, reverse: bool = False) -> MinimalForm:
    """
    Greedy Whitehead minimization of the cyclic word of ``w`` in F_m.

    Scans the type II automorphisms in enumeration order and applies the
    first one that strictly shortens the cyclic word, then rescans, until
    no move shortens it.  ``reverse=True`` scans in the opposite order,
    which gives a second, independently reached minimal form.
    """
    c = Word(w).cyclic_reduction()
    if not c:
        raise DomainError("cannot minimize the empty word")
    if c.rank() > m:
        raise DomainError(f"word uses generator {c.rank()} but rank is {m}")
    auts = _type2_cached(m, max_rank, reverse)
    chain = []
    improved = True
    while improved and len(c) > 1:
        improved = False
        for phi, images in auts:
            d = c.substitute(images).cyclic_reduction()
            if len(d) < len(c):
                c = d
                chain.append(phi)
                improved = True
                break
    cw = CyclicWord(c)
    return MinimalForm(cw, cw.support(), tuple(chain))


def replay(w, chain, m: int) -> CyclicWord:
    c = Word(w)
    for phi in chain:
        c = phi(c, m).cyclic_reduction()
    return CyclicWord(c)


def is_primitive(w, m: int, **kw) -> bool:
    return len(minimize(w, m, **kw).word) == 1


def length_preserving_orbit(w, m: int, *, max_size: int = 100_000) -> set[CyclicWord]:
    """All cyclic words reachable from ``w`` by Whitehead moves that keep cyclic length."""
    start = CyclicWord(w)
    n = len(start)
    moves = [phi.images(m) for phi in enumerate_whitehead_auts(m)]
    seen = {start}
    todo = [start]
    while todo:
        c = todo.pop()
        for images in moves:
            d = CyclicWord(c.word.substitute(images))
            if len(d) == n and d not in seen:
                seen.add(d)
                todo.append(d)
                if len(seen) > max_size:
                    raise ResourceError("length-preserving orbit too large", cap="max_size", value=max_size)
    return seen
