"""Small named lattices used in examples and tests."""
from __future__ import annotations

from .core import Lattice, from_covers


def C2() -> Lattice:
    return from_covers(2, [(0, 1)], ["0", "1"])


def C3() -> Lattice:
    return from_covers(3, [(0, 1), (1, 2)], ["0", "m", "1"])


def B2() -> Lattice:
    return from_covers(4, [(0, 1), (0, 2), (1, 3), (2, 3)], ["0", "x", "y", "1"])


def M3() -> Lattice:
    return from_covers(
        5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)], ["0", "a", "b", "c", "1"]
    )


def N5() -> Lattice:
    # 0 < p < r < 1 and 0 < q < 1
    return from_covers(5, [(0, 1), (1, 3), (3, 4), (0, 2), (2, 4)], ["0", "p", "q", "r", "1"])


FIXTURES = {"C2": C2, "C3": C3, "B2": B2, "M3": M3, "N5": N5}
