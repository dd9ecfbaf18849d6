"""
Graphs of groups with virtually-ℤ edge groups, their fundamental groups,
and Tietze certificates for checking presentation isomorphisms.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field, replace
from itertools import combinations, permutations, product

from . import dehn, quotients
from .classify import torsion_order
from .errors import CertificateError, DomainError, StructuralError
from .presentation import OneRelatorPresentation, Presentation
from .quotients import Verdict
from .words import CyclicWord, Word, root_and_exponent

ELEMENTARY_CYCLIC = "elementary-cyclic"
ELEMENTARY_DIHEDRAL = "elementary-dihedral"
RIGID = "rigid"
TAGS = (ELEMENTARY_CYCLIC, ELEMENTARY_DIHEDRAL, RIGID)
CYCLIC = "cyclic"
DIHEDRAL = "dihedral"


@dataclass(frozen=True)
class Vertex:
    id: str
    presentation: Presentation
    tag: str = RIGID

    def __post_init__(self):
        if self.tag not in TAGS:
            raise StructuralError(f"vertex {self.id}: unknown tag {self.tag!r}")

    @property
    def elementary(self):
        return self.tag != RIGID


@dataclass(frozen=True)
class Edge:
    """
    Edge group ℤ (one generator) or D_∞ = ⟨p, q; p^2, q^2⟩ (two), with the
    images of its generators in the endpoint vertex groups.
    """

    id: str
    u: str
    v: str
    images_u: tuple
    images_v: tuple
    kind: str = CYCLIC
    tree: bool = True
    stable: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "images_u", tuple(Word(w) for w in self.images_u))
        object.__setattr__(self, "images_v", tuple(Word(w) for w in self.images_v))
        need = {CYCLIC: 1, DIHEDRAL: 2}.get(self.kind)
        if need is None:
            raise StructuralError(f"edge {self.id}: unknown kind {self.kind!r}")
        if len(self.images_u) != need or len(self.images_v) != need:
            raise StructuralError(f"edge {self.id}: {self.kind} edge needs {need} image(s) per endpoint")


@dataclass(frozen=True)
class GraphOfGroups:
    vertices: tuple
    edges: tuple
    jsj: bool = False

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        ids = [v.id for v in self.vertices]
        if len(set(ids)) != len(ids):
            raise StructuralError("duplicate vertex ids")
        eids = [e.id for e in self.edges]
        if len(set(eids)) != len(eids):
            raise StructuralError("duplicate edge ids")
        by_id = self.vertex_map
        for e in self.edges:
            for end, imgs in ((e.u, e.images_u), (e.v, e.images_v)):
                if end not in by_id:
                    raise StructuralError(f"edge {e.id}: dangling endpoint {end!r}")
                m = by_id[end].presentation.m
                for w in imgs:
                    if w.rank() > m:
                        raise StructuralError(f"edge {e.id}: image uses generator outside vertex {end}")

    @property
    def vertex_map(self):
        return {v.id: v for v in self.vertices}

    def degree(self, vid) -> int:
        return sum((e.u == vid) + (e.v == vid) for e in self.edges)

    def tree_edges(self):
        return [e for e in self.edges if e.tree]

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        return len(_reach(self.vertices[0].id, self.edges)) == len(self.vertices)

    def tree_problems(self) -> list[str]:
        out = []
        tree = self.tree_edges()
        if len(tree) != len(self.vertices) - 1:
            out.append(f"spanning tree has {len(tree)} edges, need {len(self.vertices) - 1}")
        if len(_reach(self.vertices[0].id, tree)) != len(self.vertices):
            out.append("tree edges do not connect every vertex")
        return out

    def with_tree(self, tree_ids) -> GraphOfGroups:
        tree_ids = set(tree_ids)
        return replace(self, edges=tuple(replace(e, tree=e.id in tree_ids) for e in self.edges))


def _reach(start, edges):
    adj = {}
    for e in edges:
        adj.setdefault(e.u, []).append(e.v)
        adj.setdefault(e.v, []).append(e.u)
    seen, todo = {start}, [start]
    while todo:
        x = todo.pop()
        for y in adj.get(x, ()):
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def spanning_trees(G: GraphOfGroups):
    """Every choice of spanning tree, as re-flagged copies of G."""
    k = len(G.vertices) - 1
    for combo in combinations(G.edges, k):
        if len(_reach(G.vertices[0].id, combo)) == len(G.vertices):
            yield G.with_tree(e.id for e in combo)


# --- validation ---------------------------------------------------------

def _solver(pres: Presentation):
    if not pres.relators:
        return "free"
    try:
        P = pres.as_one_relator()
    except DomainError:
        return None
    return P if P.n >= 2 else None


def _nontrivial(pres: Presentation, w: Word):
    """True/False when decided, None when unknown."""
    if not w:
        return False
    solver = _solver(pres)
    if solver == "free":
        return True
    if quotients.certify_nontrivial(pres, w, 4):
        return True
    if isinstance(solver, OneRelatorPresentation):
        return not dehn.is_trivial(w, solver)
    return None


def _has_order_two(pres: Presentation, w: Word):
    solver = _solver(pres)
    if solver == "free":
        return False
    if isinstance(solver, OneRelatorPresentation):
        v = torsion_order(solver, w, 2)
        if v.proven:
            return v.value == 2
        return None
    # w^2 is literally a relator up to rotation/inversion
    sq = CyclicWord(w ** 2)
    if any(sq in (CyclicWord(r), CyclicWord(r).inverse()) for r in pres.relators):
        return True if _nontrivial(pres, w) else None
    return None


def validate(G: GraphOfGroups) -> Verdict:
    """
    Structural and shape checks.  ProvenTrue when everything is decided
    and holds, ProvenFalse with the violation list otherwise, Unknown when
    the only problems are undecided checks.
    """
    violations, warnings, checked = [], [], []
    if not G.is_connected():
        violations.append("graph is not connected")
    violations.extend(G.tree_problems())
    checked.append("connectivity")
    checked.append("spanning tree")
    vmap = G.vertex_map
    for e in G.edges:
        for end, imgs in ((e.u, e.images_u), (e.v, e.images_v)):
            pres = vmap[end].presentation
            for w in imgs:
                nt = _nontrivial(pres, w)
                if nt is False:
                    violations.append(f"edge {e.id}: image at {end} is trivial")
                elif nt is None:
                    warnings.append(f"edge {e.id}: nontriviality of image at {end} undecided")
                if e.kind == DIHEDRAL:
                    o2 = _has_order_two(pres, w)
                    if o2 is False:
                        violations.append(f"edge {e.id}: dihedral image at {end} does not have order 2")
                    elif o2 is None:
                        warnings.append(f"edge {e.id}: order of dihedral image at {end} undecided")
    checked.append("edge images")
    if G.jsj:
        for v in G.vertices:
            if v.tag == ELEMENTARY_DIHEDRAL:
                incident = [e for e in G.edges if v.id in (e.u, e.v)]
                if G.degree(v.id) != 1:
                    violations.append(f"dihedral vertex {v.id} has degree {G.degree(v.id)}, expected 1")
                if any(e.kind != DIHEDRAL for e in incident):
                    violations.append(f"dihedral vertex {v.id} has a non-dihedral incident edge")
        for e in G.edges:
            a, b = vmap[e.u], vmap[e.v]
            if a.elementary == b.elementary:
                violations.append(f"edge {e.id} does not join an elementary and a non-elementary vertex")
        checked.append("JSJ shape")
    cert = {"violations": violations, "warnings": warnings, "checked": checked}
    if violations:
        return Verdict.false(cert)
    if warnings:
        return Verdict.unknown(cert)
    return Verdict.true(cert)


# --- fundamental group --------------------------------------------------

def _traversal(G: GraphOfGroups):
    """Tree edges in BFS order from the first vertex, then the non-tree edges in file order."""
    tree = G.tree_edges()
    order, seen = [], {G.vertices[0].id}
    queue = deque([G.vertices[0].id])
    used = set()
    while queue:
        x = queue.popleft()
        for e in tree:
            if e.id in used or x not in (e.u, e.v):
                continue
            used.add(e.id)
            order.append(e)
            y = e.v if e.u == x else e.u
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return order, [e for e in G.edges if not e.tree]


def _shift(w, offset):
    return Word([x + offset if x > 0 else x - offset for x in w])


@dataclass
class Pi1:
    raw: Presentation
    presentation: Presentation
    collapse: list = field(default_factory=list)


def fundamental_group_raw(G: GraphOfGroups, *, collapse: bool = True) -> Pi1:
    if not G.is_connected() or G.tree_problems():
        raise StructuralError("graph must be connected with a valid spanning tree")
    names, offsets = [], {}
    taken = set()
    for v in G.vertices:
        offsets[v.id] = len(names)
        for nm in v.presentation.names:
            names.append(nm if nm not in taken else f"{v.id}_{nm}")
            taken.add(names[-1])
    if len(set(names)) != len(names):
        raise StructuralError("cannot make generator names unique")
    rels = []
    for v in G.vertices:
        rels.extend(_shift(r, offsets[v.id]) for r in v.presentation.relators)
    tree_order, loops = _traversal(G)
    id_rels = []
    for e in tree_order:
        for a, b in zip(e.images_u, e.images_v):
            r = _shift(a, offsets[e.u]) * _shift(b, offsets[e.v]).inverse()
            id_rels.append((len(rels), e))
            rels.append(r)
    for k, e in enumerate(loops, 1):
        s = e.stable or ("s" if len(loops) == 1 else f"s{k}")
        while s in taken:
            s += "_"
        taken.add(s)
        names.append(s)
        t = len(names)
        for a, b in zip(e.images_u, e.images_v):
            rels.append(Word([-t]) * _shift(a, offsets[e.u]) * Word([t]) * _shift(b, offsets[e.v]).inverse())
    raw = Presentation(tuple(names), tuple(rels))
    if not collapse:
        return Pi1(raw, raw, [])
    moves = _collapse_moves(G, raw, offsets, id_rels)
    return Pi1(raw, apply_certificate(raw, moves), moves)


def _collapse_moves(G, raw, offsets, id_rels):
    """Eliminate generators of elementary cyclic vertices through their first tree identification."""
    elim = set()
    for v in G.vertices:
        if v.tag == ELEMENTARY_CYCLIC and v.presentation.m == 1 and not v.presentation.relators:
            elim.add(offsets[v.id] + 1)
    moves = []
    position = list(range(len(raw.relators)))  # raw relator index -> current index
    for ri, e in id_rels:
        for end, imgs in ((e.u, e.images_u), (e.v, e.images_v)):
            g = offsets[end] + 1
            if g in elim and len(imgs) == 1 and len(imgs[0]) == 1:
                elim.discard(g)
                cur = position[ri]
                moves.append(RemoveGenerator(raw.names[g - 1], cur))
                position = [p - (p > cur) for p in position]
                break
    return moves


def fundamental_group(G: GraphOfGroups, *, collapse: bool = True) -> Presentation:
    """
    Presentation of π1: vertex generators, one stable letter per non-tree
    edge, vertex relators, ``image_u * image_v^-1`` per tree edge and
    ``s^-1 image_u s image_v^-1`` per non-tree edge.  With ``collapse``,
    generators of elementary cyclic vertices are eliminated through their
    tree identifications.
    """
    return fundamental_group_raw(G, collapse=collapse).presentation
# --- Tietze certificates ------------------------------------------------

def _word(spec, pres: Presentation) -> Word:
    if isinstance(spec, str):
        from .cli.syntax import parse_word
        return parse_word(spec, pres.names)
    return Word(spec)


def _gen(name, pres: Presentation) -> int:
    try:
        return pres.names.index(name) + 1
    except ValueError:
        raise CertificateError(f"no generator named {name!r}") from None


def _rel(i, pres: Presentation) -> Word:
    if not 0 <= i < len(pres.relators):
        raise CertificateError(f"no relator with index {i}")
    return pres.relators[i]


@dataclass(frozen=True)
class AddGenerator:
    """New generator ``name`` with relator ``name * word^-1``."""

    name: str
    word: object

    def apply(self, P):
        if self.name in P.names:
            raise CertificateError(f"generator {self.name!r} already exists")
        w = _word(self.word, P)
        t = P.m + 1
        return Presentation(P.names + (self.name,), P.relators + (Word([t]) * w.inverse(),))


@dataclass(frozen=True)
class RemoveGenerator:
    """Drop ``name`` using relator ``relator``, which must read name * w^-1 (up to rotation and inversion) with name absent from w."""

    name: str
    relator: int

    def solve(self, P):
        g = _gen(self.name, P)
        r = _rel(self.relator, P)
        for base in (r, r.inverse()):
            for k in range(len(base)):
                rot = Word(tuple(base)[k:] + tuple(base)[:k])
                if rot and rot[0] == g and all(abs(x) != g for x in rot[1:]):
                    return g, Word(rot[1:]).inverse()
        raise CertificateError(f"relator {self.relator} does not solve for {self.name!r}")

    def apply(self, P):
        g, w = self.solve(P)
        images = {h: Word([h]) for h in range(1, P.m + 1)}
        images[g] = w
        down = {h: Word([h - (h > g)]) for h in range(1, P.m + 1)}
        rels = [r.substitute(images).substitute(down) for i, r in enumerate(P.relators) if i != self.relator]
        names = P.names[:g - 1] + P.names[g:]
        return Presentation(names, tuple(rels))


@dataclass(frozen=True)
class ReplaceRelatorByProduct:
    """relator[target] := relator[target] * u relator[other]^sign u^-1."""

    target: int
    conjugator: object
    other: int
    sign: int = 1

    def apply(self, P):
        if self.target == self.other:
            raise CertificateError("target and other relator must differ")
        if self.sign not in (1, -1):
            raise CertificateError("sign must be +1 or -1")
        u = _word(self.conjugator, P)
        t, o = _rel(self.target, P), _rel(self.other, P)
        rels = list(P.relators)
        rels[self.target] = t * u * o ** self.sign * u.inverse()
        return Presentation(P.names, tuple(rels))


@dataclass(frozen=True)
class CyclicShiftRelator:
    relator: int
    shift: int = 1

    def apply(self, P):
        r = tuple(_rel(self.relator, P))
        rels = list(P.relators)
        if r:
            k = self.shift % len(r)
            rels[self.relator] = Word(r[k:] + r[:k])
        return Presentation(P.names, tuple(rels))


@dataclass(frozen=True)
class InvertRelator:
    relator: int

    def apply(self, P):
        rels = list(P.relators)
        rels[self.relator] = _rel(self.relator, P).inverse()
        return Presentation(P.names, tuple(rels))


@dataclass(frozen=True)
class RenameGenerators:
    """Reorder generators to ``order`` (current names) and rename them to ``new_names``."""

    order: tuple
    new_names: tuple = None

    def apply(self, P):
        order = tuple(self.order)
        if sorted(order) != sorted(P.names):
            raise CertificateError(f"{order} is not a permutation of {P.names}")
        new = tuple(self.new_names) if self.new_names is not None else order
        if len(new) != len(order):
            raise CertificateError("wrong number of new names")
        images = {_gen(nm, P): Word([i + 1]) for i, nm in enumerate(order)}
        return Presentation(new, tuple(r.substitute(images) for r in P.relators))


@dataclass(frozen=True)
class InvertGenerator:
    name: str

    def apply(self, P):
        g = _gen(self.name, P)
        images = {h: Word([h]) for h in range(1, P.m + 1)}
        images[g] = Word([-g])
        return Presentation(P.names, tuple(r.substitute(images) for r in P.relators))


MOVES = (AddGenerator, RemoveGenerator, ReplaceRelatorByProduct, CyclicShiftRelator, InvertRelator,
         RenameGenerators, InvertGenerator)


def certificate_trail(P, cert) -> list:
    """Every intermediate presentation, starting with P itself."""
    cur = P if isinstance(P, Presentation) else P.to_presentation()
    trail = [cur]
    for i, mv in enumerate(cert):
        try:
            cur = mv.apply(cur)
        except CertificateError as exc:
            raise CertificateError(str(exc), i) from None
        except DomainError as exc:
            raise CertificateError(str(exc), i) from None
        trail.append(cur)
    return trail


def apply_certificate(P, cert) -> Presentation:
    return certificate_trail(P, cert)[-1]


def verify_isomorphic(P1, P2, cert) -> bool:
    """Replay ``cert`` on P1 and compare with P2 up to relator rotation and inversion."""
    P2 = P2 if isinstance(P2, Presentation) else P2.to_presentation()
    try:
        Q = apply_certificate(P1, cert)
    except CertificateError:
        return False
    return Q.same_as(P2)


def _eliminable(P):
    for i, r in enumerate(P.relators):
        for g in range(1, P.m + 1):
            if sum(abs(x) == g for x in r) == 1:
                return RemoveGenerator(P.names[g - 1], i)
    return None


def find_certificate(P1, P2, *, max_depth: int = 8, max_word_length: int = 32):
    """
    Bounded certificate search: eliminate generators through relators of
    the form g w^-1 until the generator counts agree, then try every
    signed relabelling onto P2's generators.  ``max_word_length`` caps the
    root length of every intermediate relator.  Returns a move list or None.
    """
    P1 = P1 if isinstance(P1, Presentation) else P1.to_presentation()
    P2 = P2 if isinstance(P2, Presentation) else P2.to_presentation()
    moves, cur = [], P1
    while cur.m > P2.m and len(moves) < max_depth:
        mv = _eliminable(cur)
        if mv is None:
            return None
        nxt = mv.apply(cur)
        if any(r and len(root_and_exponent(r)[0]) > max_word_length for r in nxt.relators):
            return None
        moves.append(mv)
        cur = nxt
    if cur.m != P2.m:
        return None
    target = P2.relator_classes()
    for order in permutations(cur.names):
        for signs in product((1, -1), repeat=cur.m):
            inv = [InvertGenerator(nm) for nm, s in zip(order, signs) if s < 0]
            tail = inv + [RenameGenerators(order, P2.names)]
            try:
                Q = apply_certificate(cur, tail)
            except CertificateError:
                continue
            if Q.relator_classes() == target:
                return moves + tail
    return None
