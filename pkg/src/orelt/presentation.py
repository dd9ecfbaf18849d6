"""
Finite presentations: the one-relator record ⟨X; R^n⟩ and general multi-relator presentations.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import gcd

from .errors import DomainError, MalformedInputError
from .words import CyclicWord, Word, exponent_vector, root_and_exponent

DEFAULT_NAMES = "abcdefghijklmnopqrstuvwxyz"


def default_names(m):
    if m <= len(DEFAULT_NAMES):
        return tuple(DEFAULT_NAMES[:m])
    return tuple(f"x{i}" for i in range(1, m + 1))


@dataclass(frozen=True)
class OneRelatorPresentation:
    """⟨x_1..x_m; root^n⟩ with ``root`` cyclically reduced and not a proper power."""

    m: int
    root: CyclicWord
    n: int = 1
    names: tuple = field(default=None, compare=False)

    def __post_init__(self):
        if self.m < 1:
            raise DomainError("need at least one generator")
        if self.n < 1:
            raise DomainError("exponent must be positive")
        root = CyclicWord(self.root)
        object.__setattr__(self, "root", root)
        if not root.word:
            raise MalformedInputError("empty relator root")
        if root.word.rank() > self.m:
            raise MalformedInputError(f"relator uses generator {root.word.rank()} but m = {self.m}")
        if root_and_exponent(root.word)[1] != 1:
            raise DomainError("root must not be a proper power")
        if self.names is None:
            object.__setattr__(self, "names", default_names(self.m))
        elif len(self.names) != self.m:
            raise MalformedInputError("wrong number of generator names")
        else:
            object.__setattr__(self, "names", tuple(self.names))

    @classmethod
    def from_relator(cls, m, relator, names=None):
        root, n = root_and_exponent(Word(relator))
        return cls(m, root, n, names)

    @property
    def relator(self) -> Word:
        return self.root.word ** self.n

    @property
    def relators(self) -> tuple:
        return (self.relator,)

    @property
    def is_torsion(self) -> bool:
        return self.m >= 2 and self.n >= 2

    def hat(self) -> OneRelatorPresentation:
        """The torsion-free quotient ⟨X; R⟩."""
        return OneRelatorPresentation(self.m, self.root, 1, self.names)

    def to_presentation(self) -> Presentation:
        return Presentation(self.names, (self.relator,))


@dataclass(frozen=True)
class Presentation:
    """General finite presentation; ``names`` fixes the generator count and display names."""

    names: tuple
    relators: tuple = ()

    def __post_init__(self):
        names = tuple(self.names)
        if len(set(names)) != len(names):
            raise MalformedInputError(f"duplicate generator names in {names}")
        rels = tuple(Word(r) for r in self.relators)
        for r in rels:
            if r.rank() > len(names):
                raise MalformedInputError(f"relator uses generator {r.rank()} beyond {len(names)}")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "relators", rels)

    @property
    def m(self) -> int:
        return len(self.names)

    def relator_classes(self) -> Counter:
        """Multiset of relators up to cyclic permutation and inversion; trivial relators dropped."""
        out = Counter()
        for r in self.relators:
            c = CyclicWord(r)
            if not c.word:
                continue
            out[min(c, c.inverse())] += 1
        return out

    def same_as(self, other: Presentation) -> bool:
        return self.m == other.m and self.relator_classes() == other.relator_classes()

    def as_one_relator(self) -> OneRelatorPresentation:
        rels = [r for r in self.relators if r.cyclic_reduction()]
        if len(rels) != 1:
            raise DomainError(f"expected exactly one nontrivial relator, got {len(rels)}")
        return OneRelatorPresentation.from_relator(self.m, rels[0], self.names)

    def abelian_invariants(self) -> tuple[int, tuple]:
        return abelian_invariants(self.m, self.relators)


def as_presentation(P) -> Presentation:
    if isinstance(P, Presentation):
        return P
    return P.to_presentation()


def abelian_invariants(m, relators) -> tuple[int, tuple]:
    """
    Free rank and torsion coefficients (each > 1) of the abelianization.

    >>> abelian_invariants(2, [Word([1, 2, 1, 2])])
    (1, (2,))
    """
    rows = [exponent_vector(r, m) for r in relators]
    rows = [r for r in rows if any(r)]
    diag = _smith_diagonal(rows, m)
    rank = m - sum(1 for d in diag if d)
    torsion = tuple(sorted(abs(d) for d in diag if abs(d) > 1))
    return rank, torsion


def _smith_diagonal(rows, ncols):
    A = [list(r) for r in rows]
    diag = []
    t = 0
    nrows = len(A)
    while t < min(nrows, ncols):
        pivot = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if A[i][j] and (pivot is None or abs(A[i][j]) < abs(A[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        i, j = pivot
        A[t], A[i] = A[i], A[t]
        for row in A:
            row[t], row[j] = row[j], row[t]
        while True:
            p = A[t][t]
            dirty = False
            for i in range(t + 1, nrows):
                q = A[i][t] // p
                if q:
                    A[i] = [x - q * y for x, y in zip(A[i], A[t])]
                if A[i][t]:
                    dirty = True
            for j in range(t + 1, ncols):
                q = A[t][j] // p
                if q:
                    for row in A:
                        row[j] -= q * row[t]
                if A[t][j]:
                    dirty = True
            if not dirty:
                # make the pivot divide everything left in the block
                bad = next(((i, j) for i in range(t + 1, nrows) for j in range(t + 1, ncols) if A[i][j] % p), None)
                if bad is None:
                    break
                A[t] = [x + y for x, y in zip(A[t], A[bad[0]])]
                continue
            # move the smallest nonzero entry of row/column t to the pivot
            best = (t, t)
            for i in range(t, nrows):
                if A[i][t] and abs(A[i][t]) < abs(A[best[0]][best[1]]):
                    best = (i, t)
            for j in range(t, ncols):
                if A[t][j] and abs(A[t][j]) < abs(A[best[0]][best[1]]):
                    best = (t, j)
            i, j = best
            A[t], A[i] = A[i], A[t]
            for row in A:
                row[t], row[j] = row[j], row[t]
        diag.append(A[t][t])
        t += 1
    return diag
