"""Abstract classes of lattices as isomorphism-invariant predicates.

A class is an expression tree of frozen dataclasses.  Membership is decided
on canonical forms, so it is invariant under relabeling, and the one-element
lattice belongs to every class.

On finite lattices the classes ``udim`` (finite uniform dimension),
``compactcls`` (compact lattices) and ``flen`` (finite length) all coincide
with ``all``; they stay separate constructors so statements phrased in terms
of them can be run as written.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .core import Lattice, canonical_key, independent
from .elements import essentials


class ClassSpec:
    def _contains(self, L: Lattice) -> bool:
        raise NotImplementedError


@dataclass(frozen=True)
class All(ClassSpec):
    def _contains(self, L):
        return True

    def __str__(self):
        return "all"


@dataclass(frozen=True)
class SimpleClass(ClassSpec):
    def _contains(self, L):
        return L.n == 2

    def __str__(self):
        return "simple"


@dataclass(frozen=True)
class UniformClass(ClassSpec):
    def _contains(self, L):
        return is_uniform(L)

    def __str__(self):
        return "uniform"


@dataclass(frozen=True)
class FiniteUniformDim(ClassSpec):
    def _contains(self, L):
        return True

    def __str__(self):
        return "udim"


@dataclass(frozen=True)
class CompactClass(ClassSpec):
    def _contains(self, L):
        return True

    def __str__(self):
        return "compactcls"


@dataclass(frozen=True)
class FiniteLength(ClassSpec):
    def _contains(self, L):
        return True

    def __str__(self):
        return "flen"


@dataclass(frozen=True)
class ZeroOnly(ClassSpec):
    def _contains(self, L):
        return L.n == 1

    def __str__(self):
        return "zero"


@dataclass(frozen=True)
class UserSet(ClassSpec):
    keys: frozenset
    source: str = ""

    def _contains(self, L):
        return canonical_key(L) in self.keys

    def __str__(self):
        return f"file({self.source})"


@dataclass(frozen=True)
class EssentialHull(ClassSpec):
    child: ClassSpec

    def _contains(self, L):
        return any(member(self.child, L.initial(a)) for a in essentials(L))

    def __str__(self):
        return f"e({self.child})"


@dataclass(frozen=True)
class DirectSumPower(ClassSpec):
    child: ClassSpec

    def _contains(self, L):
        # zero summands are allowed, so n copies subsume fewer copies
        k = max(1, uniform_dimension(L))
        return _sum_member((self.child,) * k, L)

    def __str__(self):
        return f"dsum({self.child})"


@dataclass(frozen=True)
class Sum(ClassSpec):
    children: tuple

    def _contains(self, L):
        return _sum_member(self.children, L)

    def __str__(self):
        return "sum(" + ",".join(map(str, self.children)) + ")"


@dataclass(frozen=True)
class Product(ClassSpec):
    children: tuple

    def _contains(self, L):
        return _product_member(self.children, L)

    def __str__(self):
        return "prod(" + ",".join(map(str, self.children)) + ")"


@dataclass(frozen=True)
class Power(ClassSpec):
    child: ClassSpec
    n: int

    def _contains(self, L):
        return _product_member((self.child,) * self.n, L)

    def __str__(self):
        return f"pow({self.child},{self.n})"


ALL = All()
SIMPLE = SimpleClass()
UNIFORM = UniformClass()
UDIM = FiniteUniformDim()
COMPACT = CompactClass()
FLEN = FiniteLength()
ZERO = ZeroOnly()


_MEMBER_CACHE: dict = {}


def member(X: ClassSpec, L: Lattice) -> bool:
    if L.n == 1:
        return True
    key = (X, canonical_key(L))
    try:
        return _MEMBER_CACHE[key]
    except KeyError:
        value = _MEMBER_CACHE[key] = X._contains(L)
        return value


def x_intervals(X: ClassSpec, L: Lattice) -> frozenset[int]:
    """Elements a whose initial interval a/0 belongs to X."""
    return L.memo(
        ("x_intervals", X),
        lambda: frozenset(a for a in L.elements if member(X, L.initial(a))),
    )


def _sum_member(children: tuple, L: Lattice) -> bool:
    z = L.bottom
    cands = [sorted(x_intervals(X, L)) for X in children]

    def rec(i: int, chosen: list[int], acc: int) -> bool:
        if i == len(children):
            return acc == L.top
        for a in cands[i]:
            if a != z and L.meet(a, acc) != z:
                continue
            nxt = chosen + [a]
            if not independent(L, [x for x in nxt if x != z]):
                continue
            if rec(i + 1, nxt, L.join(acc, a)):
                return True
        return False

    return rec(0, [], z)


def _product_member(children: tuple, L: Lattice) -> bool:
    seen: dict = {}

    def rec(i: int, a: int) -> bool:
        if i == len(children):
            return a == L.top
        if (i, a) in seen:
            return seen[(i, a)]
        ok = any(
            member(children[i], L.interval(a, b)[0]) and rec(i + 1, b)
            for b in L.above(a)
        )
        seen[(i, a)] = ok
        return ok

    return rec(0, L.bottom)


def is_uniform(L: Lattice) -> bool:
    """Every nonzero element is essential."""
    return essentials(L) >= frozenset(L.elements) - {L.bottom}


def uniform_dimension(L: Lattice) -> int:
    """Largest size of an independent set of nonzero elements."""

    def grow(chosen: list[int], start: int) -> int:
        best = len(chosen)
        for x in range(start, L.n):
            if x == L.bottom:
                continue
            nxt = chosen + [x]
            if independent(L, nxt):
                best = max(best, grow(nxt, x + 1))
        return best

    return L.memo("uniform_dimension", lambda: grow([], 0))


# -- class-level properties sampled on the intervals of one lattice -------------


def included_locally(X: ClassSpec, Y: ClassSpec, L: Lattice) -> bool:
    """Every X-initial interval of L is a Y-initial interval."""
    return x_intervals(X, L) <= x_intervals(Y, L)


def _intervals(L: Lattice):
    for a in L.elements:
        for c in L.above(a):
            yield a, c


def closed_under_initial_locally(X: ClassSpec, L: Lattice) -> bool:
    """c/a in X implies d/a in X for every interval c/a of L and a <= d <= c."""
    return all(
        all(member(X, L.interval(a, d)[0]) for d in L.between(a, c))
        for a, c in _intervals(L)
        if member(X, L.interval(a, c)[0])
    )


def closed_under_quotients_locally(X: ClassSpec, L: Lattice) -> bool:
    """c/a in X implies c/d in X for every interval c/a of L and a <= d <= c."""
    return all(
        all(member(X, L.interval(d, c)[0]) for d in L.between(a, c))
        for a, c in _intervals(L)
        if member(X, L.interval(a, c)[0])
    )


def essentially_closed_locally(X: ClassSpec, L: Lattice) -> bool:
    """X and X^e select the same initial intervals of L."""
    return x_intervals(X, L) == x_intervals(EssentialHull(X), L)


def load_user_set(path: str | Path) -> UserSet:
    """Read a class from a lattice JSON file (one object or a list) or a
    directory of lattice files."""
    from .io import load_corpus, parse_lattice

    p = Path(path)
    if p.is_dir():
        lattices = load_corpus(p).lattices
    else:
        data = json.loads(p.read_text())
        items = data if isinstance(data, list) else [data]
        lattices = [parse_lattice(json.dumps(item)) for item in items]
    return UserSet(frozenset(canonical_key(L) for L in lattices), str(path))
