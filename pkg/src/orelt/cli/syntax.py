"""
Text grammar for words and presentations.

A word is a whitespace-separated sequence of factors::

    factor := atom [ "^" integer ]
    atom   := name | "(" word ")" | "[" word "," word "]" | "1"

``name^k`` needs k != 0, ``[u, v]`` is u v u^-1 v^-1 and ``1`` is the
empty word.  A presentation file has one ``gens:`` line and any number
of ``rel:`` lines; ``#`` starts a comment.
"""
from __future__ import annotations

import re

from ..errors import ParseError
from ..presentation import OneRelatorPresentation, Presentation
from ..words import Word, commutator

_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<int>[+-]?\d+)|(?P<op>[()\[\],^]))")
NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def _tokenize(text, line, col0):
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col0 + pos + 1)
        kind = m.lastgroup
        out.append((kind, m.group(kind), col0 + m.start(kind) + 1))
        pos = m.end()
    out.append(("end", "", col0 + len(text) + 1))
    return out


class _WordParser:
    def __init__(self, text, names, line=None, col0=0):
        self.toks = _tokenize(text, line, col0)
        self.i = 0
        self.index = {nm: k + 1 for k, nm in enumerate(names)}
        self.line = line

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None, value=None):
        tok = self.toks[self.i]
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind
            raise ParseError(f"expected {want!r}, found {tok[1] or 'end of input'!r}", self.line, tok[2])
        self.i += 1
        return tok

    def word(self, stop=("end",)):
        letters = []
        while True:
            kind, val, col = self.peek()
            if kind in stop or (kind == "op" and val in stop):
                break
            letters.extend(self.factor())
        return Word(letters)

    def factor(self):
        kind, val, col = self.peek()
        if kind == "name":
            self.take()
            if val not in self.index:
                raise ParseError(f"unknown generator {val!r}", self.line, col)
            atom = Word([self.index[val]])
        elif kind == "int" and val == "1":
            self.take()
            atom = Word()
        elif kind == "op" and val == "(":
            self.take()
            atom = self.word(stop=(")",))
            self.take("op", ")")
        elif kind == "op" and val == "[":
            self.take()
            u = self.word(stop=(",",))
            self.take("op", ",")
            v = self.word(stop=("]",))
            self.take("op", "]")
            atom = commutator(u, v)
        else:
            raise ParseError(f"unexpected {val or 'end of input'!r}", self.line, col)
        if self.peek()[:2] == ("op", "^"):
            self.take()
            _, k, kcol = self.take("int")
            k = int(k)
            if k == 0:
                raise ParseError("exponent must be nonzero", self.line, kcol)
            atom = atom ** k
        return atom


def parse_word(text: str, names, *, line=None, col0=0) -> Word:
    p = _WordParser(text, names, line, col0)
    w = p.word()
    p.take("end")
    return w


def format_word(w, names) -> str:
    """Inverse of parse_word: runs of one letter are printed as ``name^k``."""
    w = list(w)
    if not w:
        return "1"
    parts = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        k = (j - i) * (1 if w[i] > 0 else -1)
        nm = names[abs(w[i]) - 1]
        parts.append(nm if k == 1 else f"{nm}^{k}")
        i = j
    return " ".join(parts)


def format_relator(P: OneRelatorPresentation) -> str:
    root = format_word(P.root.word, P.names)
    return root if P.n == 1 else f"({root})^{P.n}"


def _strip_comment(line):
    return line.split("#", 1)[0]


def parse_lines(lines, *, first_line=1):
    """Parse ``gens:``/``rel:`` lines (strings or ``(lineno, string)`` pairs) into ``(names, relators)``."""
    names, rels = None, []
    numbered = [x if isinstance(x, tuple) else (i, x) for i, x in enumerate(lines, first_line)]
    if numbered:
        first_line = numbered[0][0]
    for lineno, raw in numbered:
        line = _strip_comment(raw)
        if not line.strip():
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        col0 = len(key) + 1 + (len(line) - len(line.lstrip()))
        if not sep:
            raise ParseError("expected 'gens:' or 'rel:'", lineno, 1)
        if key == "gens":
            if names is not None:
                raise ParseError("duplicate gens line", lineno, 1)
            names = rest.split()
            for nm in names:
                if not NAME_RE.match(nm):
                    raise ParseError(f"bad generator name {nm!r}", lineno, line.index(nm) + 1)
            if len(set(names)) != len(names):
                raise ParseError("generator names must be unique", lineno, 1)
            if not names:
                raise ParseError("no generators", lineno, 1)
        elif key == "rel":
            if names is None:
                raise ParseError("rel before gens", lineno, 1)
            w = parse_word(rest, names, line=lineno, col0=col0)
            if not w:
                raise ParseError("empty relator", lineno, col0 + 1)
            rels.append(w)
        else:
            raise ParseError(f"unknown key {key!r}", lineno, 1)
    if names is None:
        raise ParseError("missing gens line", first_line, 1)
    return tuple(names), tuple(rels)


def parse_general(text: str) -> Presentation:
    names, rels = parse_lines(text.splitlines())
    return Presentation(names, rels)


def parse_presentation(text: str):
    """
    A one-relator presentation when there is exactly one ``rel:`` line,
    otherwise a general Presentation.

    >>> P = parse_presentation("gens: a t\\nrel: (t^-1 a^-1 t a^2)^2")
    >>> P.n, format_word(P.root.word, P.names)
    (2, 'a^2 t^-1 a^-1 t')
    """
    names, rels = parse_lines(text.splitlines())
    if len(rels) == 1:
        return OneRelatorPresentation.from_relator(len(names), rels[0], names)
    return Presentation(names, rels)


def format_presentation(P) -> str:
    lines = ["gens: " + " ".join(P.names)]
    if isinstance(P, OneRelatorPresentation):
        lines.append("rel: " + format_relator(P))
    else:
        lines.extend("rel: " + format_word(r, P.names) for r in P.relators)
    return "\n".join(lines) + "\n"


def inline(P) -> str:
    """One-line display: ``⟨a, t; (a^2 t^-1 a^-1 t)^2⟩``."""
    if isinstance(P, OneRelatorPresentation):
        rels = [format_relator(P)]
    else:
        rels = [format_word(r, P.names) for r in P.relators]
    return "<" + ", ".join(P.names) + ("; " + ", ".join(rels) if rels else "") + ">"
