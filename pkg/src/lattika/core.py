"""Finite bounded lattices and order-theoretic primitives.

Elements of a lattice with ``n`` elements are the integers ``0..n-1``.  The
order is stored as two tuples of bitmasks (``down[a]`` has bit ``x`` set iff
``x <= a``, ``up[a]`` dually) and meet/join are precomputed tables, so every
query downstream is a table lookup.
"""
from __future__ import annotations

import functools
import os
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Sequence

ENUMERATE_CAP = 9
EXHAUSTIVE_CAP = 12


def enumerate_cap() -> int:
    return int(os.environ.get("LATTIKA_MAX_N", ENUMERATE_CAP))


def exhaustive_cap() -> int:
    return max(EXHAUSTIVE_CAP, int(os.environ.get("LATTIKA_MAX_N", 0)))


class LatticeError(Exception):
    pass


class NotAPoset(LatticeError):
    pass


class NotALattice(LatticeError):
    pass


class Unbounded(NotALattice):
    pass


class NotComparable(LatticeError):
    pass


class NotInInterval(LatticeError):
    pass


class SizeLimitExceeded(LatticeError):
    pass


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Lattice:
    """Immutable finite bounded lattice.

    Build one with :func:`from_covers` or :func:`from_down_sets`; the plain
    constructor trusts its arguments.
    """

    def __init__(self, down, up, meet, join, bottom, top, names=None):
        self.n = len(down)
        self.down: tuple[int, ...] = tuple(down)
        self.up: tuple[int, ...] = tuple(up)
        self.meet_table: tuple[tuple[int, ...], ...] = tuple(map(tuple, meet))
        self.join_table: tuple[tuple[int, ...], ...] = tuple(map(tuple, join))
        self.bottom = bottom
        self.top = top
        self.names: tuple[str, ...] | None = tuple(names) if names is not None else None
        self._memo: dict = {}

    def __repr__(self):
        return f"Lattice(n={self.n}, covers={self.covers()})"

    def __getstate__(self):
        state = self.__dict__.copy()
        state["_memo"] = {}
        return state

    @property
    def elements(self) -> range:
        return range(self.n)

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def leq(self, a: int, b: int) -> bool:
        return bool(self.down[b] >> a & 1)

    def lt(self, a: int, b: int) -> bool:
        return a != b and bool(self.down[b] >> a & 1)

    def meet(self, a: int, b: int) -> int:
        return self.meet_table[a][b]

    def join(self, a: int, b: int) -> int:
        return self.join_table[a][b]

    def join_all(self, elems: Iterable[int]) -> int:
        j = self.bottom
        for e in elems:
            j = self.join_table[j][e]
        return j

    def meet_all(self, elems: Iterable[int]) -> int:
        m = self.top
        for e in elems:
            m = self.meet_table[m][e]
        return m

    def below(self, a: int) -> list[int]:
        """Elements x with x <= a, ascending."""
        return list(_bits(self.down[a]))

    def above(self, a: int) -> list[int]:
        return list(_bits(self.up[a]))

    def between(self, low: int, high: int) -> list[int]:
        return list(_bits(self.up[low] & self.down[high]))

    def name(self, e: int) -> str:
        return self.names[e] if self.names else str(e)

    def index(self, name: str) -> int:
        if self.names and name in self.names:
            return self.names.index(name)
        return int(name)

    def covers(self) -> list[tuple[int, int]]:
        """Cover pairs (u, v) with u < v and nothing strictly between, sorted."""
        return list(self.memo("covers", self._covers))

    def _covers(self) -> tuple[tuple[int, int], ...]:
        out = []
        for v in self.elements:
            strict = self.down[v] & ~(1 << v)
            for u in _bits(strict):
                if not any(u != w and self.leq(u, w) for w in _bits(strict)):
                    out.append((u, v))
        return tuple(sorted(out))

    def interval(self, a: int, b: int) -> tuple["Lattice", tuple[int, ...]]:
        """Extract ``b/a`` as a lattice; returns (lattice, new id -> parent id)."""
        key = ("interval", a, b)
        if key not in self._memo:
            self._memo[key] = interval(self, a, b)
        return self._memo[key]

    def initial(self, a: int) -> "Lattice":
        """The extracted initial interval a/0."""
        return self.interval(self.bottom, a)[0]

    def memo(self, key, compute: Callable[[], object]):
        try:
            return self._memo[key]
        except KeyError:
            value = self._memo[key] = compute()
            return value


def lattice_cached(fn):
    """Memoize ``fn(L, *args)`` on the lattice instance."""

    @functools.wraps(fn)
    def wrapper(L: Lattice, *args):
        key = (fn.__qualname__, args)
        try:
            return L._memo[key]
        except KeyError:
            value = L._memo[key] = fn(L, *args)
            return value

    return wrapper


def _closure(n: int, down: list[int]) -> list[int]:
    down = list(down)
    for k in range(n):
        bit = 1 << k
        dk = down[k]
        for i in range(n):
            if down[i] & bit:
                down[i] |= dk
    return down


def from_down_sets(down: Sequence[int], names=None) -> Lattice:
    """Build a lattice from reflexive, transitively closed down-set masks."""
    n = len(down)
    if n < 1:
        raise LatticeError("a lattice needs at least one element")
    for a in range(n):
        for b in _bits(down[a]):
            if b != a and down[b] >> a & 1:
                raise NotAPoset(f"cycle through {a} and {b}")
    full = (1 << n) - 1
    up = [0] * n
    for a in range(n):
        for b in _bits(down[a]):
            up[b] |= 1 << a
    bottoms = [a for a in range(n) if up[a] == full]
    tops = [a for a in range(n) if down[a] == full]
    if not bottoms or not tops:
        raise Unbounded("no least element" if not bottoms else "no greatest element")
    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(a, n):
            lower = down[a] & down[b]
            g = next((x for x in _bits(lower) if down[x] == lower), None)
            upper = up[a] & up[b]
            j = next((x for x in _bits(upper) if up[x] == upper), None)
            if g is None or j is None:
                raise NotALattice(f"elements {a} and {b} lack a {'meet' if g is None else 'join'}")
            meet[a][b] = meet[b][a] = g
            join[a][b] = join[b][a] = j
    if names is not None and len(names) != n:
        raise LatticeError("names length does not match element count")
    return Lattice(down, up, meet, join, bottoms[0], tops[0], names)


def from_covers(n: int, covers: Iterable[tuple[int, int]], names=None) -> Lattice:
    """Lattice whose order is the reflexive-transitive closure of ``covers``."""
    if n < 1:
        raise LatticeError("a lattice needs at least one element")
    down = [1 << a for a in range(n)]
    for u, v in covers:
        if not (0 <= u < n and 0 <= v < n):
            raise LatticeError(f"cover ({u}, {v}) out of range for n={n}")
        if u == v:
            raise NotAPoset(f"self-loop at {u}")
        down[v] |= 1 << u
    return from_down_sets(_closure(n, down), names)


def from_leq(n: int, leq: Callable[[int, int], bool], names=None) -> Lattice:
    down = [sum(1 << a for a in range(n) if leq(a, b)) for b in range(n)]
    return from_down_sets(_closure(n, down), names)


def chain(n: int) -> Lattice:
    return from_covers(n, [(i, i + 1) for i in range(n - 1)])


def relabel(L: Lattice, perm: Sequence[int]) -> Lattice:
    """Isomorphic copy where old element ``x`` becomes ``perm[x]``."""
    n = L.n
    inv = [0] * n
    for old, new in enumerate(perm):
        inv[new] = old
    down = [sum(1 << perm[x] for x in _bits(L.down[inv[y]])) for y in range(n)]
    names = [L.names[inv[y]] for y in range(n)] if L.names else None
    return from_down_sets(down, names)


# -- intervals ---------------------------------------------------------------


@dataclass(frozen=True)
class IntervalView:
    parent: Lattice
    low: int
    high: int

    @property
    def carrier(self) -> tuple[int, ...]:
        return tuple(self.parent.between(self.low, self.high))

    def extract(self) -> tuple[Lattice, tuple[int, ...]]:
        return self.parent.interval(self.low, self.high)


def interval(L: Lattice, a: int, b: int) -> tuple[Lattice, tuple[int, ...]]:
    if not L.leq(a, b):
        raise NotComparable(f"{L.name(a)} is not below {L.name(b)}")
    carrier = L.between(a, b)
    pos = {x: i for i, x in enumerate(carrier)}
    down = [sum(1 << pos[x] for x in _bits(L.down[y] & L.up[a])) for y in carrier]
    up = [sum(1 << pos[x] for x in _bits(L.up[y] & L.down[b])) for y in carrier]
    meet = [[pos[L.meet(x, y)] for y in carrier] for x in carrier]
    join = [[pos[L.join(x, y)] for y in carrier] for x in carrier]
    names = [L.names[x] for x in carrier] if L.names else None
    sub = Lattice(down, up, meet, join, pos[a], pos[b], names)
    return sub, tuple(carrier)


# -- structural predicates -----------------------------------------------------


def modularity_witness(L: Lattice) -> tuple[int, int, int] | None:
    """Smallest (a, b, c) with b <= a and a^(b v c) != b v (a^c), or None."""
    for a in L.elements:
        for b in L.below(a):
            for c in L.elements:
                if L.meet(a, L.join(b, c)) != L.join(b, L.meet(a, c)):
                    return (a, b, c)
    return None


@lattice_cached
def is_modular(L: Lattice) -> bool:
    return modularity_witness(L) is None


@lattice_cached
def is_distributive(L: Lattice) -> bool:
    return all(
        L.meet(a, L.join(b, c)) == L.join(L.meet(a, b), L.meet(a, c))
        for a in L.elements
        for b in L.elements
        for c in L.elements
    )


def is_idiom(L: Lattice) -> bool:
    """Complete, upper-continuous and modular; finite lattices are complete
    and upper continuous, so this is modularity."""
    return is_modular(L)


def _directed_subsets(L: Lattice):
    if L.n > exhaustive_cap():
        raise SizeLimitExceeded(f"exhaustive subset search is capped at n={exhaustive_cap()}")
    for mask in range(1, 1 << L.n):
        members = list(_bits(mask))
        if all(any(L.leq(x, z) and L.leq(y, z) for z in members) for x, y in combinations(members, 2)):
            yield members


def is_upper_continuous_exhaustive(L: Lattice) -> bool:
    """Check a ^ (V D) == V (a ^ d) over every nonempty directed subset D."""
    for D in _directed_subsets(L):
        top = L.join_all(D)
        for a in L.elements:
            if L.meet(a, top) != L.join_all(L.meet(a, d) for d in D):
                return False
    return True


def compact_elements(L: Lattice, exhaustive: bool = False) -> frozenset[int]:
    """Compact elements, via the S-compact criterion when ``exhaustive``.

    Every element of a finite lattice is compact, so the default skips the
    subset search.
    """
    if not exhaustive:
        return frozenset(L.elements)
    directed = list(_directed_subsets(L))
    return frozenset(
        c
        for c in L.elements
        if all(any(L.leq(c, d) for d in D) for D in directed if L.leq(c, L.join_all(D)))
    )


def is_compactly_generated(L: Lattice, exhaustive: bool = False) -> bool:
    compact = compact_elements(L, exhaustive)
    return all(L.join_all(c for c in compact if L.leq(c, a)) == a for a in L.elements)


def independent(L: Lattice, elems: Iterable[int]) -> bool:
    elems = list(elems)
    if len(set(elems)) != len(elems) or L.bottom in elems:
        return False
    for i, e in enumerate(elems):
        rest = L.join_all(elems[:i] + elems[i + 1:])
        if L.meet(e, rest) != L.bottom:
            return False
    return True


def complement_pairs(L: Lattice) -> list[tuple[int, int]]:
    """Unordered pairs {a, b} (as a <= b by index) with a v b = 1 and a ^ b = 0."""
    return [
        (a, b)
        for a in L.elements
        for b in range(a, L.n)
        if L.join(a, b) == L.top and L.meet(a, b) == L.bottom
    ]


@lattice_cached
def height(L: Lattice) -> tuple[int, ...]:
    """Length of the longest chain from bottom to each element."""
    h = [0] * L.n
    order = sorted(L.elements, key=lambda x: bin(L.down[x]).count("1"))
    for v in order:
        h[v] = max((h[u] + 1 for u in L.below(v) if u != v), default=0)
    return tuple(h)


def finite_length(L: Lattice) -> int:
    return height(L)[L.top]


# -- canonical forms -----------------------------------------------------------


def _refine(L: Lattice, cells: list[list[int]]) -> list[list[int]]:
    """Split an ordered partition until it is equitable w.r.t. strict order."""
    while True:
        cell_of = {x: i for i, cell in enumerate(cells) for x in cell}

        def signature(x: int):
            below = sorted(cell_of[y] for y in _bits(L.down[x]) if y != x)
            above = sorted(cell_of[y] for y in _bits(L.up[x]) if y != x)
            return (tuple(below), tuple(above))

        new_cells = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict = {}
            for x in cell:
                groups.setdefault(signature(x), []).append(x)
            new_cells.extend(groups[k] for k in sorted(groups))
        if len(new_cells) == len(cells):
            return new_cells
        cells = new_cells


def _initial_cells(L: Lattice) -> list[list[int]]:
    h = height(L)
    groups: dict = {}
    for x in L.elements:
        key = (h[x], bin(L.down[x]).count("1"), bin(L.up[x]).count("1"))
        groups.setdefault(key, []).append(x)
    return _refine(L, [groups[k] for k in sorted(groups)])


def _encode(L: Lattice, order: list[int]) -> tuple:
    pos = {x: i for i, x in enumerate(order)}
    return tuple(sorted((pos[u], pos[v]) for u, v in L.covers()))


def _search(L: Lattice, cells: list[list[int]], best: list):
    k = next((i for i, c in enumerate(cells) if len(c) > 1), None)
    if k is None:
        order = [c[0] for c in cells]
        code = _encode(L, order)
        if best[0] is None or code < best[0]:
            best[0], best[1] = code, order
        return
    for x in cells[k]:
        rest = [y for y in cells[k] if y != x]
        _search(L, _refine(L, cells[:k] + [[x], rest] + cells[k + 1:]), best)


@lattice_cached
def canonical_labeling(L: Lattice) -> tuple[int, ...]:
    """perm[x] = canonical index of x.  Canonical indices extend the order."""
    best: list = [None, None]
    _search(L, _initial_cells(L), best)
    perm = [0] * L.n
    for i, x in enumerate(best[1]):
        perm[x] = i
    return tuple(perm)


@lattice_cached
def canonical_key(L: Lattice) -> str:
    """Text form ``n|u.v;u.v`` of the canonical cover list."""
    perm = canonical_labeling(L)
    pairs = sorted((perm[u], perm[v]) for u, v in L.covers())
    return f"{L.n}|" + ";".join(f"{u}.{v}" for u, v in pairs)


def canonical_form(L: Lattice) -> bytes:
    return canonical_key(L).encode()


def canonicalize(L: Lattice) -> Lattice:
    return relabel(L, canonical_labeling(L))


def is_isomorphic(L1: Lattice, L2: Lattice) -> tuple[int, ...] | None:
    """A bijection (tuple indexed by L1 element) onto L2, or None."""
    if L1.n != L2.n or canonical_key(L1) != canonical_key(L2):
        return None
    p1, p2 = canonical_labeling(L1), canonical_labeling(L2)
    inv2 = {c: x for x, c in enumerate(p2)}
    return tuple(inv2[p1[x]] for x in L1.elements)
