"""Mini-language for class and property expressions.

Classes::

    all | simple | uniform | udim | compactcls | flen | zero | file(PATH)
    | e(X) | dsum(X) | sum(X,Y,...) | prod(X,Y,...) | pow(X,n)

Properties::

    extending | type1(X) | type2(X) | wtype1(X) | wtype2(X) | qc | Q(X)
    | C1(X) | C3(X) | xqc(X) | indecomposable | uniform | udim | modular
    | idiom | distributive | dsubc | true | false | CLASS

combined with ``not``, ``and``, ``or`` and parentheses.  A bare class
expression as a property means membership of the whole lattice.  Property
arguments default to ``all`` when omitted.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from . import classes as C
from . import extending as ext
from .core import Lattice, is_distributive, modularity_witness
from .elements import closed_elements, summand_elements
from .io import ParseError

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<punct>[(),]))")

_ATOMIC_CLASSES = {
    "all": C.ALL,
    "simple": C.SIMPLE,
    "uniform": C.UNIFORM,
    "udim": C.UDIM,
    "compactcls": C.COMPACT,
    "flen": C.FLEN,
    "zero": C.ZERO,
}
_UNARY_CLASSES = {"e": C.EssentialHull, "dsum": C.DirectSumPower}
_NARY_CLASSES = {"sum": C.Sum, "prod": C.Product}

_CLASS_PROPS = {
    "type1": ext.is_type1_extending,
    "type2": ext.is_type2_extending,
    "wtype1": ext.is_weak_type1_extending,
    "wtype2": ext.is_weak_type2_extending,
    "Q": ext.satisfies_Q,
    "C1": ext.satisfies_C1,
    "C3": ext.satisfies_C3,
    "xqc": ext.is_x_quasi_continuous,
}
_PLAIN_PROPS = {
    "extending", "qc", "indecomposable", "uniform", "udim", "modular",
    "idiom", "distributive", "dsubc", "true", "false",
}


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self) -> str | None:
        m = _TOKEN.match(self.text, self.pos)
        if not m or m.end() == self.pos:
            rest = self.text[self.pos:].strip()
            if rest:
                raise ParseError(f"unexpected input at {self.pos}: {rest[:20]!r}")
            return None
        return m.group("num") or m.group("name") or m.group("punct")

    def next(self) -> str:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of expression")
        self.pos = _TOKEN.match(self.text, self.pos).end()
        return tok

    def expect(self, tok: str):
        got = self.next()
        if got != tok:
            raise ParseError(f"expected {tok!r}, got {got!r}")

    def raw_until_close(self) -> str:
        end = self.text.find(")", self.pos)
        if end < 0:
            raise ParseError("unterminated file(...)")
        raw = self.text[self.pos:end].strip()
        self.pos = end + 1
        return raw

    def done(self) -> bool:
        return self.peek() is None


def _class(sc: _Scanner) -> C.ClassSpec:
    tok = sc.next()
    if tok in _ATOMIC_CLASSES:
        return _ATOMIC_CLASSES[tok]
    if tok == "file":
        sc.expect("(")
        return C.load_user_set(sc.raw_until_close())
    if tok in _UNARY_CLASSES:
        sc.expect("(")
        child = _class(sc)
        sc.expect(")")
        return _UNARY_CLASSES[tok](child)
    if tok in _NARY_CLASSES:
        sc.expect("(")
        kids = [_class(sc)]
        while sc.peek() == ",":
            sc.next()
            kids.append(_class(sc))
        sc.expect(")")
        return _NARY_CLASSES[tok](tuple(kids))
    if tok == "pow":
        sc.expect("(")
        child = _class(sc)
        sc.expect(",")
        n = sc.next()
        if not n.isdigit() or int(n) < 1:
            raise ParseError(f"pow exponent must be a positive integer, got {n!r}")
        sc.expect(")")
        return C.Power(child, int(n))
    raise ParseError(f"unknown class {tok!r}")


def parse_class(text: str) -> C.ClassSpec:
    sc = _Scanner(text)
    X = _class(sc)
    if not sc.done():
        raise ParseError(f"trailing input in class expression: {text!r}")
    return X


# -- property expressions ------------------------------------------------------


@dataclass(frozen=True)
class Prop:
    name: str
    cls: C.ClassSpec | None = None

    def __str__(self):
        return f"{self.name}({self.cls})" if self.cls is not None else self.name


@dataclass(frozen=True)
class Member:
    cls: C.ClassSpec

    def __str__(self):
        return str(self.cls)


@dataclass(frozen=True)
class Not:
    inner: object

    def __str__(self):
        return f"not {self.inner}"


@dataclass(frozen=True)
class And:
    left: object
    right: object

    def __str__(self):
        return f"({self.left} and {self.right})"


@dataclass(frozen=True)
class Or:
    left: object
    right: object

    def __str__(self):
        return f"({self.left} or {self.right})"


def _or(sc):
    node = _and(sc)
    while sc.peek() == "or":
        sc.next()
        node = Or(node, _and(sc))
    return node


def _and(sc):
    node = _unary(sc)
    while sc.peek() == "and":
        sc.next()
        node = And(node, _unary(sc))
    return node


def _unary(sc):
    tok = sc.peek()
    if tok == "not":
        sc.next()
        return Not(_unary(sc))
    if tok == "(":
        sc.next()
        node = _or(sc)
        sc.expect(")")
        return node
    if tok in _CLASS_PROPS:
        sc.next()
        cls = C.ALL
        if sc.peek() == "(":
            sc.next()
            cls = _class(sc)
            sc.expect(")")
        return Prop(tok, cls)
    if tok in _PLAIN_PROPS:
        sc.next()
        return Prop(tok)
    return Member(_class(sc))


def parse_property(text: str):
    sc = _Scanner(text)
    node = _or(sc)
    if not sc.done():
        raise ParseError(f"trailing input in property expression: {text!r}")
    return node


def _plain(name: str, L: Lattice) -> ext.PropertyVerdict:
    if name == "extending":
        return ext.is_extending(L)
    if name == "qc":
        return ext.is_quasi_continuous(L)
    if name in ("modular", "idiom"):
        w = modularity_witness(L)
        return ext.PropertyVerdict(name, w is None, dict(zip("abc", w)) if w else None)
    if name == "indecomposable":
        return ext.PropertyVerdict(name, ext.is_indecomposable(L))
    if name == "uniform":
        return ext.PropertyVerdict(name, C.is_uniform(L))
    if name == "udim":
        return ext.PropertyVerdict(name, C.member(C.UDIM, L))
    if name == "distributive":
        return ext.PropertyVerdict(name, is_distributive(L))
    if name == "dsubc":
        bad = sorted(summand_elements(L) - closed_elements(L))
        return ext.PropertyVerdict(name, not bad, {"d": bad[0]} if bad else None)
    return ext.PropertyVerdict(name, name == "true")


def evaluate(node, L: Lattice) -> ext.PropertyVerdict:
    if isinstance(node, Prop):
        if node.name in _CLASS_PROPS:
            return _CLASS_PROPS[node.name](L, node.cls)
        return _plain(node.name, L)
    if isinstance(node, Member):
        return ext.PropertyVerdict(f"member({node.cls})", C.member(node.cls, L))
    if isinstance(node, Not):
        return ext.PropertyVerdict(str(node), not evaluate(node.inner, L).holds)
    if isinstance(node, And):
        left = evaluate(node.left, L)
        if not left:
            return ext.PropertyVerdict(str(node), False, left.witness)
        right = evaluate(node.right, L)
        return ext.PropertyVerdict(str(node), right.holds, right.witness)
    if isinstance(node, Or):
        holds = evaluate(node.left, L).holds or evaluate(node.right, L).holds
        return ext.PropertyVerdict(str(node), holds)
    raise TypeError(f"not a property expression: {node!r}")


def check(L: Lattice, text: str) -> ext.PropertyVerdict:
    return evaluate(parse_property(text), L)

