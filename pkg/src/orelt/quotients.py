"""
Finite-quotient certificates: homomorphisms into symmetric groups S_k.

Permutations are tuples ``p`` with ``p[i]`` the image of ``i``.  Words
act left to right: ``g1 g2`` maps to "image(g1), then image(g2)".
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any

from . import kernels
from .errors import ResourceError
from .presentation import as_presentation
from .words import Word

DEFAULT_MAX_DEGREE = 6
DEFAULT_MAX_SPACE = 2 * 10**8


class Status(enum.Enum):
    PROVEN_TRUE = "ProvenTrue"
    PROVEN_FALSE = "ProvenFalse"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Verdict:
    """
    Result of a semi-decision.  Proven verdicts carry a certificate that
    can be checked independently; Unknown carries the bounds that were
    exhausted.
    """

    status: Status
    certificate: Any = None
    bound: dict = field(default_factory=dict)
    value: Any = None

    @property
    def proven(self) -> bool:
        return self.status is not Status.UNKNOWN

    def __bool__(self):
        return self.status is Status.PROVEN_TRUE

    @classmethod
    def true(cls, certificate=None, value=None, **bound):
        return cls(Status.PROVEN_TRUE, certificate, bound, value)

    @classmethod
    def false(cls, certificate=None, value=None, **bound):
        return cls(Status.PROVEN_FALSE, certificate, bound, value)

    @classmethod
    def unknown(cls, certificate=None, **bound):
        return cls(Status.UNKNOWN, certificate, bound)


def compose(p, q):
    """p then q."""
    return tuple(q[i] for i in p)


def invert(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def perm_order(p) -> int:
    ident = tuple(range(len(p)))
    q, n = p, 1
    while q != ident:
        q, n = compose(q, p), n + 1
    return n


@dataclass(frozen=True)
class FiniteQuotientHom:
    degree: int
    images: tuple

    def __call__(self, w):
        ident = tuple(range(self.degree))
        acc = ident
        for x in w:
            p = self.images[abs(x) - 1]
            acc = compose(acc, p if x > 0 else invert(p))
        return acc

    def kills(self, relators) -> bool:
        ident = tuple(range(self.degree))
        return all(self(r) == ident for r in relators)

    def order_of(self, w) -> int:
        return perm_order(self(w))

    def to_dict(self):
        return {"degree": self.degree, "images": [list(p) for p in self.images]}


def _homs_from_rows(k, rows):
    perms = kernels.perm_tables(k)[0]
    return [FiniteQuotientHom(k, tuple(tuple(int(i) for i in perms[j]) for j in row)) for row in rows]


def _check_caps(k, m, max_degree, max_space):
    if k < 1:
        raise ValueError("degree must be positive")
    if k > max_degree:
        raise ResourceError(f"degree {k} exceeds quotient degree cap {max_degree}", cap="max_degree", value=max_degree)
    space = kernels.perm_tables(k)[0].shape[0] ** m
    if space > max_space:
        raise ResourceError(f"S_{k}^{m} has {space} image tuples, over the cap {max_space}",
                            cap="max_space", value=max_space)


def _search(P, k, word=(), mode=kernels.ACCEPT_ALL, param=0, max_out=None, *,
            max_degree=DEFAULT_MAX_DEGREE, max_space=DEFAULT_MAX_SPACE):
    P = as_presentation(P)
    _check_caps(k, P.m, max_degree, max_space)
    rows = kernels.search(k, P.m, P.relators, Word(word), mode, param, max_out)
    return _homs_from_rows(k, rows)


def enumerate_homs(P, k: int, *, max_degree: int = DEFAULT_MAX_DEGREE, max_space: int = DEFAULT_MAX_SPACE):
    """All homomorphisms P -> S_k, in lexicographic order of image tuples."""
    return _search(P, k, max_degree=max_degree, max_space=max_space)


def count_homs(P, k: int, **caps) -> int:
    return len(enumerate_homs(P, k, **caps))


def certify_nontrivial(P, w, max_degree: int = 5, *, max_space: int = DEFAULT_MAX_SPACE,
                       degree_cap: int = DEFAULT_MAX_DEGREE) -> Verdict:
    """
    ProvenTrue with a hom into some S_k (k <= max_degree) sending ``w``
    to a non-identity permutation; otherwise Unknown.  The freely trivial
    word is rejected as ProvenFalse, its free reduction being the proof.
    """
    w = Word(w)
    if not w:
        return Verdict.false({"reason": "freely trivial"}, max_degree=max_degree)
    P = as_presentation(P)
    for k in range(2, max_degree + 1):
        homs = _search(P, k, w, kernels.ACCEPT_NONTRIVIAL, max_out=1, max_degree=degree_cap, max_space=max_space)
        if homs:
            return Verdict.true(homs[0], max_degree=max_degree)
    return Verdict.unknown(max_degree=max_degree)


def certify_order_lower_bound(P, w, d: int, max_degree: int = 5, *, max_space: int = DEFAULT_MAX_SPACE,
                              degree_cap: int = DEFAULT_MAX_DEGREE) -> Verdict:
    """
    Certify that w^e != 1 for every 0 < e < d.

    The certificate is a list of ``(e, hom)`` pairs where the order of
    ``hom(w)`` does not divide ``e``; one hom with image order >= d covers
    every e at once and is tried first.
    """
    w = Word(w)
    if d <= 1:
        return Verdict.true([], max_degree=max_degree)
    if not w:
        return Verdict.false({"reason": "freely trivial"}, max_degree=max_degree)
    P = as_presentation(P)
    kw = dict(max_degree=degree_cap, max_space=max_space)
    for k in range(2, max_degree + 1):
        homs = _search(P, k, w, kernels.ACCEPT_ORDER_AT_LEAST, d, 1, **kw)
        if homs:
            return Verdict.true([(e, homs[0]) for e in range(1, d)], max_degree=max_degree)
    cert = {}
    for e in range(1, d):
        if e in cert:
            continue
        for k in range(2, max_degree + 1):
            homs = _search(P, k, w, kernels.ACCEPT_ORDER_NOT_DIVIDING, e, 1, **kw)
            if homs:
                o = homs[0].order_of(w)
                for e2 in range(1, d):
                    if e2 % o and e2 not in cert:
                        cert[e2] = homs[0]
                break
        else:
            return Verdict.unknown(sorted(cert.items()), max_degree=max_degree, first_unexcluded=e)
    return Verdict.true(sorted(cert.items()), max_degree=max_degree)


def check_order_certificate(P, w, d, certificate) -> bool:
    """Independent replay of a lower-bound certificate."""
    rels = as_presentation(P).relators
    covered = set()
    for e, hom in certificate:
        if not hom.kills(rels) or e % hom.order_of(w) == 0:
            return False
        covered.add(e)
    return covered >= set(range(1, d))
