"""Extending-type properties of a finite lattice relative to a class.

Each decision returns a :class:`PropertyVerdict`.  A false verdict carries
the first violating tuple in element order as its witness.

The plain type-1/type-2 properties quantify over *every* pseudocomplement or
essential closure; the weak variants ask for *some* one in ``D(L)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .classes import ALL, ClassSpec, x_intervals
from .core import Lattice
from .elements import (
    complements,
    essential_closures,
    leq_e,
    pseudocomplements,
    summand_elements,
)


@dataclass(frozen=True)
class PropertyVerdict:
    name: str
    holds: bool
    witness: dict | None = field(default=None)

    def __bool__(self):
        return self.holds

    def describe(self, L: Lattice) -> str:
        if self.holds:
            return "true"
        if not self.witness:
            return "false"
        vals = ",".join(L.name(v) for v in self.witness.values())
        return f"false, witness ({vals})"

    def to_dict(self, L: Lattice) -> dict:
        out = {"property": self.name, "holds": self.holds}
        if self.witness is not None:
            out["witness"] = {k: L.name(v) for k, v in self.witness.items()}
        return out


def _verdict(name: str, witness: dict | None) -> PropertyVerdict:
    return PropertyVerdict(name, witness is None, witness)


def _first(gen):
    return next(gen, None)


def is_extending(L: Lattice) -> PropertyVerdict:
    D = summand_elements(L)
    return _verdict(
        "extending",
        _first({"a": a} for a in L.elements if not any(leq_e(L, a, d) for d in D)),
    )


def is_type1_extending(L: Lattice, X: ClassSpec = ALL) -> PropertyVerdict:
    D = summand_elements(L)
    return _verdict(
        f"type1({X})",
        _first(
            {"a": a, "b": b}
            for a in sorted(x_intervals(X, L))
            for b in sorted(pseudocomplements(L, a))
            if b not in D
        ),
    )


def is_weak_type1_extending(L: Lattice, X: ClassSpec = ALL) -> PropertyVerdict:
    D = summand_elements(L)
    return _verdict(
        f"wtype1({X})",
        _first({"a": a} for a in sorted(x_intervals(X, L)) if not pseudocomplements(L, a) & D),
    )


def is_type2_extending(L: Lattice, X: ClassSpec = ALL) -> PropertyVerdict:
    D = summand_elements(L)
    return _verdict(
        f"type2({X})",
        _first(
            {"a": a, "c": c}
            for a in sorted(x_intervals(X, L))
            for c in sorted(essential_closures(L, a))
            if c not in D
        ),
    )


def is_weak_type2_extending(L: Lattice, X: ClassSpec = ALL) -> PropertyVerdict:
    D = summand_elements(L)
    return _verdict(
        f"wtype2({X})",
        _first({"a": a} for a in sorted(x_intervals(X, L)) if not essential_closures(L, a) & D),
    )


def splits(L: Lattice, a: int, b: int) -> bool:
    """Is there c (+) d = 1 with a <= c and b <= d?"""
    return any(
        L.leq(a, c) and any(L.leq(b, d) for d in complements(L, c))
        for c in summand_elements(L)
    )


def _disjoint_unsplit(L: Lattice, candidates) -> dict | None:
    return _first(
        {"a": a, "b": b}
        for a in candidates
        for b in L.elements
        if L.meet(a, b) == L.bottom and not splits(L, a, b)
    )


def is_quasi_continuous(L: Lattice) -> PropertyVerdict:
    return _verdict("qc", _disjoint_unsplit(L, L.elements))


def satisfies_Q(L: Lattice, X: ClassSpec = ALL) -> PropertyVerdict:
    return _verdict(f"Q({X})", _disjoint_unsplit(L, sorted(x_intervals(X, L))))


def satisfies_C1(L: Lattice, X: ClassSpec = ALL) -> PropertyVerdict:
    D = summand_elements(L)
    return _verdict(
        f"C1({X})",
        _first(
            {"a": a} for a in sorted(x_intervals(X, L)) if not any(leq_e(L, a, d) for d in D)
        ),
    )


def satisfies_C3(L: Lattice, X: ClassSpec = ALL) -> PropertyVerdict:
    D = summand_elements(L)
    xs = x_intervals(X, L)
    return _verdict(
        f"C3({X})",
        _first(
            {"a": a, "b": b}
            for a in sorted(D & xs)
            for b in sorted(D)
            if L.meet(a, b) == L.bottom and L.join(a, b) not in D
        ),
    )


def is_x_quasi_continuous(L: Lattice, X: ClassSpec = ALL) -> PropertyVerdict:
    c1 = satisfies_C1(L, X)
    if not c1:
        return PropertyVerdict(f"xqc({X})", False, c1.witness)
    c3 = satisfies_C3(L, X)
    return PropertyVerdict(f"xqc({X})", c3.holds, c3.witness)


def is_indecomposable(L: Lattice) -> bool:
    return L.n >= 2 and summand_elements(L) == {L.bottom, L.top}
