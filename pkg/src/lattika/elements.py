"""Distinguished element sets: essentials, pseudocomplements, closed
elements, direct summands and essential closures.

Throughout, ``leq_e(L, a, c)`` ("a is essential below c") means ``a <= c``
and every nonzero ``x <= c`` meets ``a`` nontrivially, i.e. ``a`` is
essential in the interval ``c/0``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .core import Lattice, NotInInterval, _bits, lattice_cached


def is_essential_in(L: Lattice, a: int, low: int, high: int) -> bool:
    """Is ``a`` essential in the interval ``high/low``?"""
    if not (L.leq(low, a) and L.leq(a, high)):
        raise NotInInterval(f"{L.name(a)} not in {L.name(high)}/{L.name(low)}")
    return all(
        L.meet(a, x) != low
        for x in _bits(L.up[low] & L.down[high])
        if x != low
    )


def is_essential(L: Lattice, a: int) -> bool:
    return a in essentials(L)


@lattice_cached
def _ess_matrix(L: Lattice) -> tuple[tuple[bool, ...], ...]:
    z = L.bottom
    rows = []
    for a in L.elements:
        row = []
        for c in L.elements:
            row.append(
                L.leq(a, c)
                and all(L.meet(a, x) != z for x in _bits(L.down[c]) if x != z)
            )
        rows.append(tuple(row))
    return tuple(rows)


def leq_e(L: Lattice, a: int, c: int) -> bool:
    return _ess_matrix(L)[a][c]


@lattice_cached
def essentials(L: Lattice) -> frozenset[int]:
    return frozenset(a for a in L.elements if leq_e(L, a, L.top))


@lattice_cached
def pseudocomplements(L: Lattice, a: int) -> frozenset[int]:
    """Maximal elements of the annihilator {x : a ^ x = 0}."""
    ann = [x for x in L.elements if L.meet(a, x) == L.bottom]
    return frozenset(x for x in ann if not any(L.lt(x, y) for y in ann))


@lattice_cached
def pseudocomplement_range(L: Lattice) -> frozenset[int]:
    return frozenset().union(*(pseudocomplements(L, a) for a in L.elements))


@lattice_cached
def closed_elements(L: Lattice) -> frozenset[int]:
    return frozenset(
        a for a in L.elements if not any(L.lt(a, b) and leq_e(L, a, b) for b in L.elements)
    )


@lattice_cached
def complements(L: Lattice, a: int) -> frozenset[int]:
    return frozenset(
        b for b in L.elements if L.join(a, b) == L.top and L.meet(a, b) == L.bottom
    )


@lattice_cached
def summand_elements(L: Lattice) -> frozenset[int]:
    return frozenset(a for a in L.elements if complements(L, a))


@lattice_cached
def essential_closures(L: Lattice, a: int) -> frozenset[int]:
    """Closed elements c with a <=e c."""
    return frozenset(c for c in closed_elements(L) if leq_e(L, a, c))


def relative_pseudocomplements(L: Lattice, c: int, high: int) -> frozenset[int]:
    """Maximal d <= high with c ^ d = 0."""
    if not L.leq(c, high):
        raise NotInInterval(f"{L.name(c)} is not below {L.name(high)}")
    ann = [d for d in L.below(high) if L.meet(c, d) == L.bottom]
    return frozenset(d for d in ann if not any(L.lt(d, y) for y in ann))


def dominates(L: Lattice, b: int, a: int) -> bool:
    return L.lt(a, b) and len(L.between(a, b)) == 2


def is_atom(L: Lattice, a: int) -> bool:
    return dominates(L, a, L.bottom)


# -- interval-relative helpers -----------------------------------------------


def _lift(L: Lattice, low: int, high: int, sub_set) -> frozenset[int]:
    emb = L.interval(low, high)[1]
    return frozenset(emb[x] for x in sub_set)


def closed_in(L: Lattice, high: int) -> frozenset[int]:
    """C(high/0), as parent element ids."""
    return _lift(L, L.bottom, high, closed_elements(L.initial(high)))


def summands_in(L: Lattice, high: int) -> frozenset[int]:
    """D(high/0), as parent element ids."""
    return _lift(L, L.bottom, high, summand_elements(L.initial(high)))


@dataclass
class ElementClassTable:
    lattice: Lattice
    essentials: frozenset[int]
    pseudocomplements_of: dict[int, frozenset[int]]
    pseudocomplement_range: frozenset[int]
    closed: frozenset[int]
    summands: frozenset[int]

    def to_dict(self) -> dict:
        L = self.lattice
        names = lambda s: [L.name(x) for x in sorted(s)]  # noqa: E731
        return {
            "E": names(self.essentials),
            "C": names(self.closed),
            "D": names(self.summands),
            "P": {L.name(a): names(p) for a, p in sorted(self.pseudocomplements_of.items())},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def element_class_table(L: Lattice) -> ElementClassTable:
    return ElementClassTable(
        lattice=L,
        essentials=essentials(L),
        pseudocomplements_of={a: pseudocomplements(L, a) for a in L.elements},
        pseudocomplement_range=pseudocomplement_range(L),
        closed=closed_elements(L),
        summands=summand_elements(L),
    )
