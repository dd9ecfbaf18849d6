"""
Word problem in ⟨X; R^n⟩, n >= 2, by greedy Dehn reduction.

By Newman's spelling theorem a nonempty freely reduced word that is
trivial contains a subword of a cyclic permutation of R^n or R^-n of
length greater than (n-1)|R|.  Such a piece S of a rotation S*C is
replaced by C^-1, which is strictly shorter, so greedy replacement to a
fixed point decides triviality.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .presentation import OneRelatorPresentation
from .words import Word


@dataclass(frozen=True)
class RelatorTable:
    threshold: int  # stored pieces are strictly longer than this
    max_length: int
    pieces: dict  # piece (tuple) -> replacement Word

    def __len__(self):
        return len(self.pieces)

    def lengths(self):
        return sorted({len(s) for s in self.pieces})


def build_table(P: OneRelatorPresentation) -> RelatorTable:
    if P.n < 2:
        raise DomainError("Dehn reduction needs a torsion exponent n >= 2")
    r = len(P.root)
    threshold = (P.n - 1) * r
    pieces = {}
    for base in (P.relator, P.relator.inverse()):
        L = len(base)
        for start in range(L):
            rot = base.rotate(start)
            for length in range(threshold + 1, L + 1):
                piece = tuple(rot[:length])
                # piece * rest is a relator, so piece = rest^-1
                pieces.setdefault(piece, rot[length:].inverse())
    return RelatorTable(threshold, len(P.relator), pieces)


_TABLES: dict = {}


def table_for(P: OneRelatorPresentation) -> RelatorTable:
    key = (P.m, P.root, P.n)
    t = _TABLES.get(key)
    if t is None:
        t = _TABLES[key] = build_table(P)
    return t


def find_piece(w, T: RelatorTable):
    """Leftmost start, longest match: ``(start, length)`` or None."""
    w = tuple(w)
    lo = T.threshold + 1
    for i in range(len(w) - lo + 1):
        for length in range(min(T.max_length, len(w) - i), lo - 1, -1):
            if w[i:i + length] in T.pieces:
                return i, length
    return None


def dehn_step(w, T: RelatorTable):
    w = Word(w)
    hit = find_piece(w, T)
    if hit is None:
        return None
    i, length = hit
    return Word(tuple(w[:i]) + tuple(T.pieces[tuple(w[i:i + length])]) + tuple(w[i + length:]))


def reduce_word(w, P: OneRelatorPresentation):
    """
    Dehn-reduce to a fixed point.  Returns ``(final, steps)`` where each
    step is ``(before, start, length, replacement)``.
    """
    T = table_for(P)
    w = Word(w)
    steps = []
    while True:
        hit = find_piece(w, T)
        if hit is None:
            return w, steps
        i, length = hit
        repl = T.pieces[tuple(w[i:i + length])]
        steps.append((w, i, length, repl))
        w = Word(tuple(w[:i]) + tuple(repl) + tuple(w[i + length:]))


def is_trivial(w, P: OneRelatorPresentation) -> bool:
    return not reduce_word(w, P)[0]


def are_equal(u, v, P: OneRelatorPresentation) -> bool:
    return is_trivial(Word(u) * Word(v).inverse(), P)


def check_replay(w, steps, P: OneRelatorPresentation) -> bool:
    """
    Re-verify a reduction without the table: each replaced piece followed
    by the inverse of its replacement must spell a cyclic permutation of
    R^n or R^-n.  True when the replay is valid and ends at the empty word.
    """
    rel = P.relator
    rotations = {tuple(rel.rotate(k)) for k in range(len(rel))}
    rotations |= {tuple(rel.inverse().rotate(k)) for k in range(len(rel))}
    cur = Word(w)
    for before, i, length, repl in steps:
        if before != cur:
            return False
        piece = tuple(before[i:i + length])
        if len(piece) != length or piece + tuple(Word(repl).inverse()) not in rotations:
            return False
        cur = Word(tuple(before[:i]) + tuple(repl) + tuple(before[i + length:]))
    return not cur
