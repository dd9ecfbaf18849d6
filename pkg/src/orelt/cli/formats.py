"""
Graph-of-groups and certificate file formats.

Graph of groups::

    jsj: true
    vertex x tag=elementary-cyclic
      gens: x
    vertex v tag=rigid
      gens: b c
      rel: (b c^2)^2
    edge e1 u=x v=v kind=cyclic tree=true
      image.u = x
      image.v = b

A dihedral edge has two ``image.u``/``image.v`` pairs, in order.  An edge
may name its stable letter with ``stable=<name>``.

Certificate, one move per line (relator numbers start at 1)::

    add <name>: <word>
    remove <name> rel=<i>
    product rel=<i> other=<j> sign=<+1|-1> conj: <word>
    shift rel=<i> by=<k>
    invert-rel rel=<i>
    invert-gen <name>
    rename <old>:<new> <old>:<new> ...

``rename`` lists every generator in its new position.  Words are parsed
against the generator names current at that step.
"""
from __future__ import annotations

from ..errors import ParseError
from ..gog import (
    AddGenerator, CYCLIC, DIHEDRAL, Edge, GraphOfGroups, InvertGenerator, InvertRelator, RemoveGenerator,
    RenameGenerators, ReplaceRelatorByProduct, CyclicShiftRelator, TAGS, Vertex, certificate_trail,
)
from ..presentation import Presentation
from .syntax import format_word, parse_lines, parse_word

_TRUE = {"true": True, "yes": True, "1": True, "false": False, "no": False, "0": False}


def _fields(tokens, lineno, allowed):
    out = {}
    for tok in tokens:
        key, sep, val = tok.partition("=")
        if not sep or key not in allowed:
            raise ParseError(f"unexpected field {tok!r}", lineno, 1)
        out[key] = val
    return out


def parse_gog(text: str) -> GraphOfGroups:
    lines = text.splitlines()
    jsj = False
    sections = []  # (kind, header tokens, header lineno, body [(lineno, line)])
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head = line.split()
        if head[0] in ("vertex", "edge"):
            sections.append((head[0], head[1:], lineno, []))
        elif head[0] == "jsj:":
            if len(head) != 2 or head[1].lower() not in _TRUE:
                raise ParseError("jsj: expects true or false", lineno, 1)
            jsj = _TRUE[head[1].lower()]
        elif sections:
            sections[-1][3].append((lineno, line))
        else:
            raise ParseError(f"unexpected line before first section: {line!r}", lineno, 1)
    vertices, edges = [], []
    vnames = {}
    pending = []
    for kind, head, lineno, body in sections:
        if not head:
            raise ParseError(f"{kind} needs an id", lineno, 1)
        if kind == "vertex":
            f = _fields(head[1:], lineno, {"tag"})
            tag = f.get("tag", "rigid")
            if tag not in TAGS:
                raise ParseError(f"unknown tag {tag!r}", lineno, 1)
            names, rels = parse_lines(body, first_line=lineno)
            vertices.append(Vertex(head[0], Presentation(names, rels), tag))
            vnames[head[0]] = names
        else:
            f = _fields(head[1:], lineno, {"u", "v", "kind", "tree", "stable"})
            for key in ("u", "v"):
                if key not in f:
                    raise ParseError(f"edge {head[0]} needs {key}=", lineno, 1)
            kind_ = f.get("kind", CYCLIC)
            if kind_ not in (CYCLIC, DIHEDRAL):
                raise ParseError(f"unknown edge kind {kind_!r}", lineno, 1)
            tree = _TRUE.get(f.get("tree", "true").lower())
            if tree is None:
                raise ParseError("tree= expects true or false", lineno, 1)
            pending.append((head[0], f, kind_, tree, lineno, body))
    for eid, f, kind_, tree, lineno, body in pending:
        imgs = {"u": [], "v": []}
        for bl, line in body:
            key, sep, rest = line.partition("=")
            key = key.strip()
            if not sep or key not in ("image.u", "image.v"):
                raise ParseError(f"expected image.u = ... or image.v = ..., got {line!r}", bl, 1)
            end = key[-1]
            if f[end] not in vnames:
                raise ParseError(f"edge {eid}: unknown vertex {f[end]!r}", lineno, 1)
            imgs[end].append(parse_word(rest, vnames[f[end]], line=bl, col0=len(key) + 1))
        edges.append(Edge(eid, f["u"], f["v"], tuple(imgs["u"]), tuple(imgs["v"]), kind_, tree, f.get("stable")))
    return GraphOfGroups(tuple(vertices), tuple(edges), jsj)


def format_gog(G: GraphOfGroups) -> str:
    out = [f"jsj: {'true' if G.jsj else 'false'}"]
    vmap = G.vertex_map
    for v in G.vertices:
        out.append(f"vertex {v.id} tag={v.tag}")
        out.append("  gens: " + " ".join(v.presentation.names))
        out.extend("  rel: " + format_word(r, v.presentation.names) for r in v.presentation.relators)
    for e in G.edges:
        extra = f" stable={e.stable}" if e.stable else ""
        out.append(f"edge {e.id} u={e.u} v={e.v} kind={e.kind} tree={'true' if e.tree else 'false'}{extra}")
        for a, b in zip(e.images_u, e.images_v):
            out.append("  image.u = " + format_word(a, vmap[e.u].presentation.names))
            out.append("  image.v = " + format_word(b, vmap[e.v].presentation.names))
    return "\n".join(out) + "\n"


def _int(val, lineno, what):
    try:
        return int(val)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {val!r}", lineno, 1) from None


def parse_certificate(text: str) -> list:
    """Moves with words kept as text; they are resolved against the names in force when replayed."""
    moves = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        op, _, rest = line.partition(" ")
        rest = rest.strip()
        if op == "add":
            name, sep, word = rest.partition(":")
            if not sep or not name.strip():
                raise ParseError("add expects '<name>: <word>'", lineno, 1)
            moves.append(AddGenerator(name.strip(), word.strip()))
        elif op == "remove":
            toks = rest.split()
            if len(toks) != 2:
                raise ParseError("remove expects '<name> rel=<i>'", lineno, 1)
            f = _fields(toks[1:], lineno, {"rel"})
            moves.append(RemoveGenerator(toks[0], _int(f["rel"], lineno, "rel") - 1))
        elif op == "product":
            head, sep, word = rest.partition("conj:")
            f = _fields(head.split(), lineno, {"rel", "other", "sign"})
            if not sep or "rel" not in f or "other" not in f:
                raise ParseError("product expects rel=, other=, sign= and conj:", lineno, 1)
            moves.append(ReplaceRelatorByProduct(_int(f["rel"], lineno, "rel") - 1, word.strip(),
                                                 _int(f["other"], lineno, "other") - 1,
                                                 _int(f.get("sign", "1"), lineno, "sign")))
        elif op == "shift":
            f = _fields(rest.split(), lineno, {"rel", "by"})
            moves.append(CyclicShiftRelator(_int(f["rel"], lineno, "rel") - 1, _int(f.get("by", "1"), lineno, "by")))
        elif op == "invert-rel":
            f = _fields(rest.split(), lineno, {"rel"})
            moves.append(InvertRelator(_int(f["rel"], lineno, "rel") - 1))
        elif op == "invert-gen":
            if len(rest.split()) != 1:
                raise ParseError("invert-gen expects one name", lineno, 1)
            moves.append(InvertGenerator(rest))
        elif op == "rename":
            pairs = [t.partition(":") for t in rest.split()]
            if not pairs or any(not sep for _, sep, _ in pairs):
                raise ParseError("rename expects old:new pairs", lineno, 1)
            moves.append(RenameGenerators(tuple(a for a, _, _ in pairs), tuple(b for _, _, b in pairs)))
        else:
            raise ParseError(f"unknown move {op!r}", lineno, 1)
    return moves


def format_certificate(P, cert) -> str:
    """Print ``cert`` as replayed from P, spelling words with the names current at each step."""
    trail = certificate_trail(P, cert)
    out = []
    for before, mv in zip(trail, cert):
        def word(spec):
            return spec if isinstance(spec, str) else format_word(spec, before.names)

        if isinstance(mv, AddGenerator):
            out.append(f"add {mv.name}: {word(mv.word)}")
        elif isinstance(mv, RemoveGenerator):
            out.append(f"remove {mv.name} rel={mv.relator + 1}")
        elif isinstance(mv, ReplaceRelatorByProduct):
            out.append(f"product rel={mv.target + 1} other={mv.other + 1} sign={mv.sign:+d} conj: {word(mv.conjugator)}")
        elif isinstance(mv, CyclicShiftRelator):
            out.append(f"shift rel={mv.relator + 1} by={mv.shift}")
        elif isinstance(mv, InvertRelator):
            out.append(f"invert-rel rel={mv.relator + 1}")
        elif isinstance(mv, InvertGenerator):
            out.append(f"invert-gen {mv.name}")
        elif isinstance(mv, RenameGenerators):
            new = mv.new_names if mv.new_names is not None else mv.order
            out.append("rename " + " ".join(f"{a}:{b}" for a, b in zip(mv.order, new)))
    return "\n".join(out) + ("\n" if out else "")
