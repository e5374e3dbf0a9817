"""Named built-in semigroups and the construction-expression language.

Catalog names are themselves expressions, e.g. ``prod(two,z2)``,
``reduced(chain3,{0,1},z2)``, ``gdot(s3)`` or ``cone(z3,2)``, so any name
printed in a report can be fed back to :func:`build`.

Grammar::

    expr    := atom | func "(" arg ("," arg)* ")"
    arg     := [key "="] (expr | integer | subset)
    subset  := "{" [elem ("," elem)*] "}" | "down(" elem ("," elem)* ")" | "empty"
    elem    := index | label

Inside subsets a decimal integer is an element index; other words are labels.

An atom that names an existing file is read in the table format.
"""
from __future__ import annotations

import os
import re
from functools import lru_cache

from . import constructions as cons
from .errors import ParseError
from .order import down_closure, enumerate_ideals, natural_order
from .semigroup import FiniteSemigroup, classify, read_table

CATALOG_MAX_ELEMENTS = 64
REDUCED_E_MAX = 6

_BASE = {
    "two": lambda: cons.two(),
    **{f"chain{k}": (lambda k=k: cons.chain(k)) for k in range(2, 9)},
    **{f"z{k}": (lambda k=k: cons.cyclic_group(k)) for k in range(2, 7)},
    "klein": cons.klein_group,
    "s3": lambda: cons.symmetric_group(3),
    "diamond": cons.diamond,
    "trivial": cons.trivial_group,
}

BASE_NAMES = ("two", "chain2", "chain3", "chain4", "chain5", "chain6", "chain7", "chain8",
              "z2", "z3", "z4", "z5", "z6", "klein", "s3", "diamond")
GROUP_NAMES = ("z2", "z3", "z4", "z5", "z6", "klein", "s3")
SMALL_SEMILATTICES = ("two", "chain2", "chain3", "chain4", "chain5", "diamond")


@lru_cache(maxsize=None)
def base(name: str) -> FiniteSemigroup:
    return _BASE[name]()


def _set_text(s):
    return "{" + ",".join(str(x) for x in sorted(s)) + "}"


@lru_cache(maxsize=1)
def catalog() -> dict:
    """Deterministic name -> semigroup library (every member has <= 64 elements)."""
    out = {}
    for name in BASE_NAMES:
        out[name] = base(name)
    for i, a in enumerate(BASE_NAMES):
        for b in BASE_NAMES[i:]:
            if base(a).size * base(b).size <= CATALOG_MAX_ELEMENTS:
                out[f"prod({a},{b})"] = cons.direct_product(base(a), base(b))
    for e in SMALL_SEMILATTICES:
        E = base(e)
        for ideal in enumerate_ideals(natural_order(E)):
            for h in GROUP_NAMES:
                H = base(h)
                if len(ideal) + (E.size - len(ideal)) * H.size <= CATALOG_MAX_ELEMENTS:
                    out[f"reduced({e},{_set_text(ideal)},{h})"] = \
                        cons.reduced_product(E, ideal, H).S
    for h in GROUP_NAMES:
        out[f"gdot({h})"] = cons.zero_extension(base(h)).S
        for n in (2, 3, 4):
            out[f"cone({h},{n})"] = cons.cone(base(h), n).S
    return out


def members(predicate=None, max_size=CATALOG_MAX_ELEMENTS):
    """(name, semigroup) pairs, in catalog order, passing the filters."""
    for name, S in catalog().items():
        if S.size <= max_size and (predicate is None or predicate(S)):
            yield name, S


def clifford_members(max_size=CATALOG_MAX_ELEMENTS):
    return members(lambda S: classify(S).is_clifford, max_size)


def semilattice_members(max_size=CATALOG_MAX_ELEMENTS):
    return members(lambda S: classify(S).is_semilattice, max_size)


def group_members(max_size=CATALOG_MAX_ELEMENTS):
    return members(lambda S: classify(S).is_group, max_size)


# ---------------------------------------------------------------------------
# expressions

_TOKEN = re.compile(r"\s*(?:(?P<word>[A-Za-z0-9_./\\^:~+-]+)|(?P<punct>[(){},=]))")


def _tokenize(text, source):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", 1, pos + 1, source)
        kind = "word" if m.group("word") else "punct"
        value = m.group(kind)
        out.append((kind, value, m.start(kind) + 1))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text, source=None, base_dir=None):
        self.text = text
        self.source = source
        self.base_dir = base_dir
        self.tokens = _tokenize(text, source)
        self.i = 0

    def error(self, msg, col=None):
        if col is None:
            col = self.tokens[self.i][2] if self.i < len(self.tokens) else len(self.text) + 1
        raise ParseError(msg, 1, col, self.source)

    def peek(self, value=None):
        if self.i >= len(self.tokens):
            return None
        tok = self.tokens[self.i]
        if value is not None and tok[1] != value:
            return None
        return tok

    def take(self, value=None):
        tok = self.peek()
        if tok is None:
            self.error("unexpected end of expression")
        if value is not None and tok[1] != value:
            self.error(f"expected {value!r}, found {tok[1]!r}")
        self.i += 1
        return tok

    def parse(self):
        node = self.node()
        if self.i != len(self.tokens):
            self.error(f"unexpected {self.tokens[self.i][1]!r}")
        return node

    def node(self):
        kind, word, col = self.take()
        if word == "{":
            items = []
            while not self.peek("}"):
                items.append(self.take()[1])
                if not self.peek("}"):
                    self.take(",")
            self.take("}")
            return ("set", items, col)
        if kind != "word":
            self.error(f"unexpected {word!r}", col)
        if self.peek("("):
            self.take("(")
            args, kwargs = [], {}
            while not self.peek(")"):
                if (self.i + 1 < len(self.tokens) and self.tokens[self.i + 1][1] == "="
                        and self.tokens[self.i][0] == "word"):
                    key = self.take()[1]
                    self.take("=")
                    kwargs[key] = self.node()
                else:
                    args.append(self.node())
                if not self.peek(")"):
                    self.take(",")
            self.take(")")
            return ("call", word, args, kwargs, col)
        return ("atom", word, col)


def _as_int(node, parser, what):
    if node[0] != "atom":
        parser.error(f"{what} must be an integer", node[-1])
    try:
        return int(node[1])
    except ValueError:
        parser.error(f"{what} must be an integer, got {node[1]!r}", node[2])


def _element(E, word, parser, col):
    # decimal integers are indices (catalog names rely on this); anything else is a label
    if word.isdigit():
        if int(word) < E.size:
            return int(word)
        parser.error(f"index {word} is outside E (size {E.size})", col)
    if E.labels is not None and word in E.labels:
        return E.labels.index(word)
    parser.error(f"no element {word!r} in E", col)


def _subset(E, node, parser):
    if node[0] == "set":
        return frozenset(_element(E, w, parser, node[2]) for w in node[1])
    if node[0] == "atom" and node[1] in ("empty", "none"):
        return frozenset()
    if node[0] == "call" and node[1] in ("down", "up"):
        xs = []
        for a in node[2]:
            if a[0] != "atom":
                parser.error("down() takes elements", a[-1])
            xs.append(_element(E, a[1], parser, a[2]))
        O = natural_order(E)
        if node[1] == "down":
            return down_closure(O, xs)
        from .order import up_closure
        return up_closure(O, xs)
    parser.error("expected an element set such as {0,1}, down(0) or empty", node[-1])


def _eval(node, parser):
    kind = node[0]
    if kind == "atom":
        word, col = node[1], node[2]
        path = word if parser.base_dir is None else os.path.join(parser.base_dir, word)
        if os.path.isfile(path):
            return read_table(path)
        if word in _BASE:
            return base(word)
        m = re.fullmatch(r"chain(\d+)", word)
        if m:
            return cons.chain(int(m.group(1)))
        m = re.fullmatch(r"z(\d+)", word)
        if m:
            return cons.cyclic_group(int(m.group(1)))
        parser.error(f"unknown semigroup or missing file {word!r}", col)
    if kind == "set":
        parser.error("an element set cannot stand for a semigroup", node[2])
    _, func, args, kwargs, col = node

    def arg(i, key):
        if key in kwargs:
            return kwargs[key]
        if i < len(args):
            return args[i]
        parser.error(f"{func}() is missing argument {key}", col)

    if func in ("prod", "product"):
        if len(args) < 2:
            parser.error("prod() needs at least two factors", col)
        out = _eval(args[0], parser)
        for a in args[1:]:
            out = cons.direct_product(out, _eval(a, parser))
        return out
    if func == "reduced":
        E = _eval(arg(0, "E"), parser)
        ideal = _subset(E, arg(1, "I"), parser)
        H = _eval(arg(2, "H"), parser)
        return cons.reduced_product(E, ideal, H).S
    if func == "cone":
        G = _eval(arg(0, "G"), parser)
        n = _as_int(arg(1, "n"), parser, "cone levels")
        return cons.cone(G, n).S
    if func in ("gdot", "zext"):
        return cons.zero_extension(_eval(arg(0, "G"), parser)).S
    if func == "chain":
        return cons.chain(_as_int(arg(0, "n"), parser, "chain length"))
    if func in ("z", "cyclic"):
        return cons.cyclic_group(_as_int(arg(0, "n"), parser, "group order"))
    if func in ("sym", "symmetric"):
        return cons.symmetric_group(_as_int(arg(0, "n"), parser, "degree"))
    parser.error(f"unknown construction {func!r}", col)


def build(expr: str, *, source=None, base_dir=None) -> FiniteSemigroup:
    """Evaluate a construction expression (or read a table file)."""
    path = expr if base_dir is None else os.path.join(base_dir, expr)
    if os.path.isfile(path):
        return read_table(path)
    parser = _Parser(expr, source=source, base_dir=base_dir)
    return _eval(parser.parse(), parser)


def parse_subset(E: FiniteSemigroup, text: str, source=None) -> frozenset:
    parser = _Parser(text, source=source)
    return _subset(E, parser.parse(), parser)
