"""Linear morphisms between bounded lattices and complement projections."""
from __future__ import annotations

from dataclasses import dataclass

from .core import Lattice, LatticeError, NotComparable, is_modular


class NotComplementPair(LatticeError):
    pass


class NotModular(LatticeError):
    pass


@dataclass(frozen=True)
class LinearMorphism:
    """A map ``values[x]`` from ``domain`` into ``codomain``.

    ``kernel`` is the domain element whose upper interval ``1/kernel`` should
    map isomorphically onto ``image/0`` in the codomain.
    """

    domain: Lattice
    codomain: Lattice
    values: tuple[int, ...]
    kernel: int
    image: int

    def __call__(self, x: int) -> int:
        return self.values[x]

    def to_dict(self) -> dict:
        return {
            "values": [self.codomain.name(v) for v in self.values],
            "kernel": self.domain.name(self.kernel),
            "image": self.codomain.name(self.image),
        }


def verify_linear_morphism(phi: LinearMorphism) -> tuple[bool, str | None]:
    """Check both defining clauses; returns (ok, reason-if-not)."""
    D, C, k = phi.domain, phi.codomain, phi.kernel
    if len(phi.values) != D.n:
        return False, "value table is not total"
    for x in D.elements:
        if phi(x) != phi(D.join(x, k)):
            return False, f"phi({D.name(x)}) != phi({D.name(x)} v kernel)"
    source = D.between(k, D.top)
    target = C.between(C.bottom, phi.image)
    mapped = [phi(x) for x in source]
    if sorted(mapped) != target:
        return False, "1/kernel is not mapped bijectively onto image/0"
    for x in source:
        for y in source:
            if D.leq(x, y) != C.leq(phi(x), phi(y)):
                return False, f"order not reflected between {D.name(x)} and {D.name(y)}"
    return True, None


def projection_onto(L: Lattice, target: int, kernel: int) -> LinearMorphism:
    """Projection e -> (e v kernel) ^ target along a complement pair."""
    if not is_modular(L):
        raise NotModular("projections need a modular lattice")
    if L.join(target, kernel) != L.top or L.meet(target, kernel) != L.bottom:
        raise NotComplementPair(f"{L.name(target)} and {L.name(kernel)} are not complements")
    values = tuple(L.meet(L.join(e, kernel), target) for e in L.elements)
    return LinearMorphism(L, L, values, kernel, target)


def restrict(phi: LinearMorphism, low: int, high: int) -> LinearMorphism:
    """Restriction of ``phi`` to the extracted interval ``high/low``.

    The new kernel is ``(kernel ^ high) v low`` and the image is ``phi(high)``.
    """
    D = phi.domain
    if not D.leq(low, high):
        raise NotComparable(f"{D.name(low)} is not below {D.name(high)}")
    sub, emb = D.interval(low, high)
    k = D.join(D.meet(phi.kernel, high), low)
    return LinearMorphism(
        sub,
        phi.codomain,
        tuple(phi(emb[x]) for x in sub.elements),
        emb.index(k),
        phi(high),
    )


def is_injective(phi: LinearMorphism) -> bool:
    return len(set(phi.values)) == len(phi.values)
