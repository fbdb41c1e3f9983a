"""Enumeration of finite lattices up to isomorphism.

Removing a coatom from a lattice with at least three elements leaves a
lattice, so every ``n+1``-element lattice arises from an ``n``-element one
by adding a new coatom above some down-set of the inner elements.  Each
level is generated that way and deduplicated by canonical form.
"""
from __future__ import annotations

import functools
from typing import Callable

from .core import (
    Lattice,
    LatticeError,
    NotALattice,
    SizeLimitExceeded,
    _bits,
    canonical_key,
    canonicalize,
    chain,
    enumerate_cap,
    from_down_sets,
)
from .io import Corpus


def _inner_downsets(L: Lattice) -> list[int]:
    inner = [x for x in L.elements if x not in (L.bottom, L.top)]
    out = []
    for bits in range(1 << len(inner)):
        S = 0
        for i, x in enumerate(inner):
            if bits >> i & 1:
                S |= 1 << x
        if all((L.down[x] & ~(1 << L.bottom)) & ~S == 0 for x in _bits(S)):
            out.append(S)
    return out


def _extensions(L: Lattice):
    m = L.n
    for S in _inner_downsets(L):
        down = list(L.down) + [S | 1 << L.bottom | 1 << m]
        down[L.top] |= 1 << m
        try:
            yield from_down_sets(down)
        except NotALattice:
            continue


@functools.lru_cache(maxsize=None)
def _level(n: int) -> tuple[Lattice, ...]:
    if n <= 2:
        return (canonicalize(chain(n)),)
    found: dict[str, Lattice] = {}
    for parent in _level(n - 1):
        for L in _extensions(parent):
            key = canonical_key(L)
            if key not in found:
                found[key] = canonicalize(L)
    return tuple(found[k] for k in sorted(found))


def enumerate_lattices(n: int, filter: Callable[[Lattice], bool] | None = None) -> Corpus:
    """One canonical representative per isomorphism class of n-element lattices."""
    if n < 1:
        raise LatticeError("n must be positive")
    if n > enumerate_cap():
        raise SizeLimitExceeded(f"enumeration is capped at n={enumerate_cap()} (LATTIKA_MAX_N)")
    lattices = [L for L in _level(n) if filter is None or filter(L)]
    return Corpus(f"enumerated n={n}", lattices, ["enumerated"] * len(lattices))


def enumerate_up_to(max_n: int, filter: Callable[[Lattice], bool] | None = None) -> Corpus:
    """All lattices with 1 <= n <= max_n, ordered by (n, canonical form)."""
    lattices: list[Lattice] = []
    for n in range(1, max_n + 1):
        lattices.extend(enumerate_lattices(n, filter).lattices)
    return Corpus(f"enumerated n<={max_n}", lattices, ["enumerated"] * len(lattices))
