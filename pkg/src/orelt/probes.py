"""
Bounded searches: malnormality witnesses, membership in T = ⟨⟨R⟩⟩, and
the exhaustive ends-lemma harness.
"""
from __future__ import annotations

import time
from dataclasses import dataclass

from . import dehn, quotients
from .classify import EndsClass, ends_of_G, ends_of_Ghat, lemma_holds
from .errors import DomainError, ResourceError
from .presentation import OneRelatorPresentation
from .quotients import Verdict
from .words import CyclicWord, Word, cyclic_words, exponent_vector, letter_key, words_up_to


@dataclass(frozen=True)
class SearchBounds:
    max_y_length: int = 4
    max_power: int = 3
    max_coset_power: int = 6

    def __post_init__(self):
        if min(self.max_y_length, self.max_power, self.max_coset_power) < 1:
            raise DomainError("search bounds must be positive")

    def as_dict(self):
        return {"max_y_length": self.max_y_length, "max_power": self.max_power,
                "max_coset_power": self.max_coset_power}


@dataclass(frozen=True)
class MalnormalityWitness:
    """y^-1 x^i y = x^j in G with y != x^k for |k| <= coset_bound."""

    x: Word
    y: Word
    i: int
    j: int
    coset_bound: int

    def check(self, P: OneRelatorPresentation) -> bool:
        lhs = self.y.inverse() * self.x ** self.i * self.y
        if not dehn.are_equal(lhs, self.x ** self.j, P):
            return False
        return not any(dehn.are_equal(self.y, self.x ** k, P)
                       for k in range(-self.coset_bound, self.coset_bound + 1))


def _signed_range(n):
    for k in range(1, n + 1):
        yield k
        yield -k


def malnormal_witness_search(P: OneRelatorPresentation, x, bounds: SearchBounds = SearchBounds()) -> Verdict:
    """
    Look for y outside ⟨x⟩ conjugating a power of x into ⟨x⟩.

    Candidates are visited by length, then letter order, then i = 1..max_power
    and j = 1, -1, 2, -2, ...; the first hit is returned as ProvenTrue.
    Unknown means the box was exhausted.
    """
    x = Word(x)
    if dehn.is_trivial(x, P):
        raise DomainError("x is trivial in G")
    powers = {k: x ** k for k in range(-max(bounds.max_power, bounds.max_coset_power),
                                          max(bounds.max_power, bounds.max_coset_power) + 1)}
    in_cyclic = {}
    for y in words_up_to(P.m, bounds.max_y_length):
        if not y:
            continue
        yi = y.inverse()
        for i in range(1, bounds.max_power + 1):
            conj = yi * powers[i] * y
            for j in _signed_range(bounds.max_power):
                if not dehn.are_equal(conj, powers[j], P):
                    continue
                if y not in in_cyclic:
                    in_cyclic[y] = any(dehn.are_equal(y, powers[k], P)
                                       for k in range(-bounds.max_coset_power, bounds.max_coset_power + 1))
                if in_cyclic[y]:
                    continue
                return Verdict.true(MalnormalityWitness(x, y, i, j, bounds.max_coset_power), **bounds.as_dict())
    return Verdict.unknown(**bounds.as_dict())


@dataclass(frozen=True)
class ConjugateProduct:
    """w = prod u_t R^{e_t} u_t^-1 freely; factors are ``(u_t, e_t)``."""

    factors: tuple

    def evaluate(self, R) -> Word:
        R = Word(R)
        out = Word()
        for u, e in self.factors:
            u = Word(u)
            out = out * u * R ** e * u.inverse()
        return out


def _conjugates(R: Word, m: int, max_len: int):
    table = {}
    for u in words_up_to(m, max_len):
        for e in (1, -1):
            c = u * R ** e * u.inverse()
            table.setdefault(c, (u, e))
    return table


def conjugate_product_search(R, w, m: int, max_factors: int, max_conj_length: int, *, max_frontier: int = 200_000):
    """Bounded search for w as a product of conjugates of R^{+-1}; returns a ConjugateProduct or None."""
    R, w = Word(R), Word(w)
    if not w:
        return ConjugateProduct(())
    conj = _conjugates(R, m, max_conj_length)
    ordered = sorted(conj.items(), key=lambda kv: (len(kv[1][0]), [letter_key(a) for a in kv[1][0]], -kv[1][1]))
    frontier = {w: ()}
    for depth in range(1, max_factors + 1):
        for r, used in frontier.items():
            if r in conj:
                return ConjugateProduct(used + (conj[r],))
        if depth == max_factors:
            break
        nxt = {}
        for r, used in frontier.items():
            for c, f in ordered:
                s = c.inverse() * r
                if s not in nxt and s not in frontier:
                    nxt[s] = used + (f,)
                    if not s:
                        return ConjugateProduct(used + (f,))
            if len(nxt) > max_frontier:
                raise ResourceError("conjugate product frontier too large", cap="max_frontier", value=max_frontier)
        frontier = nxt
    return None


def exponent_obstruction(R, w, m):
    """Exponent vector of w is not an integer multiple of that of R (so w is not in ⟨⟨R⟩⟩)."""
    vr, vw = exponent_vector(R, m), exponent_vector(w, m)
    if not any(vr):
        return any(vw)
    k = next(i for i, a in enumerate(vr) if a)
    if vw[k] % vr[k]:
        return True
    t = vw[k] // vr[k]
    return any(b != t * a for a, b in zip(vr, vw))


def t_membership(P: OneRelatorPresentation, w, bounds: SearchBounds = SearchBounds(3, 2, 6), *,
                 max_degree: int = 4, max_frontier: int = 200_000) -> Verdict:
    """
    Is w in T = ⟨⟨R⟩⟩, i.e. trivial in ⟨X; R⟩?

    ProvenFalse comes from an exponent-sum obstruction or a finite
    quotient of ⟨X; R⟩ not killing w; ProvenTrue from an explicit product
    of at most ``max_power`` conjugates of R^{+-1} with conjugators of
    length at most ``max_y_length``.  Both certificates replay without
    any solver.
    """
    w = Word(w)
    R = P.root.word
    info = dict(bounds.as_dict(), max_degree=max_degree)
    if not w:
        return Verdict.true(ConjugateProduct(()), **info)
    if exponent_obstruction(R, w, P.m):
        return Verdict.false({"exponent_vector": exponent_vector(w, P.m),
                              "relator_vector": exponent_vector(R, P.m)}, **info)
    hat = P.hat()
    q = quotients.certify_nontrivial(hat, w, max_degree)
    if q:
        return Verdict.false(q.certificate, **info)
    prod = conjugate_product_search(R, w, P.m, bounds.max_power, bounds.max_y_length, max_frontier=max_frontier)
    if prod is not None:
        return Verdict.true(prod, **info)
    return Verdict.unknown(**info)


def closed_form_root_count(m: int, length: int) -> int:
    """Number of cyclic words of the given length that are cyclically reduced and not proper powers."""

    def mobius(n):
        res, p = 1, 2
        while p * p <= n:
            if n % p == 0:
                n //= p
                if n % p == 0:
                    return 0
                res = -res
            p += 1
        return -res if n > 1 else res

    def cyc(k):
        return (2 * m - 1) ** k + 1 + (m - 1) * (1 + (-1) ** k)

    total = sum(mobius(d) * cyc(length // d) for d in range(1, length + 1) if length % d == 0)
    return total // length


HARNESS_CAPS = {2: 8, 3: 5}


def ends_lemma_harness(m: int, max_root_length: int, n: int = 2, *, caps=None) -> dict:
    """
    Check the ends biconditional on every non-power cyclic root up to the
    given length.  The G side uses a minimal form reached by scanning
    Whitehead moves forwards, the Ĝ side one reached scanning backwards.
    """
    caps = HARNESS_CAPS if caps is None else caps
    if m not in caps:
        raise ResourceError(f"harness supports ranks {sorted(caps)}", cap="rank", value=sorted(caps))
    if max_root_length > caps[m]:
        raise ResourceError(f"root length {max_root_length} over cap {caps[m]} for rank {m}",
                            cap="max_root_length", value=caps[m])
    if n < 2:
        raise DomainError("harness needs n >= 2")
    t0 = time.perf_counter()
    counts, expected, tally, violations = {}, {}, {}, []
    for length in range(1, max_root_length + 1):
        counts[length] = 0
        expected[length] = closed_form_root_count(m, length)
        for root in cyclic_words(m, length, primitive_only=True):
            counts[length] += 1
            P = OneRelatorPresentation(m, root, n)
            g = ends_of_G(P)
            gh = ends_of_Ghat(P, reverse=True)
            key = f"{g}/{gh}"
            tally[key] = tally.get(key, 0) + 1
            if not lemma_holds(g, gh):
                violations.append({"root": list(root.word), "ends_G": str(g), "ends_Ghat": str(gh)})
    return {
        "rank": m,
        "max_root_length": max_root_length,
        "n": n,
        "roots": sum(counts.values()),
        "counts_by_length": counts,
        "expected_by_length": expected,
        "count_matches": counts == expected,
        "classes": dict(sorted(tally.items())),
        "violations": violations,
        "runtime_s": time.perf_counter() - t0,
    }
