"""Smallest-counterexample search over enumerated lattices."""
from __future__ import annotations

from dataclasses import dataclass

from ..core import Lattice, canonical_key
from ..enumerate import enumerate_lattices
from ..expr import evaluate, parse_property
from ..io import lattice_to_dict


@dataclass(frozen=True)
class MineResult:
    hypothesis: str
    negated_conclusion: str
    max_n: int
    witness: Lattice | None
    searched: int

    @property
    def found(self) -> bool:
        return self.witness is not None

    def to_dict(self) -> dict:
        out = {
            "hypothesis": self.hypothesis,
            "negated_conclusion": self.negated_conclusion,
            "max_n": self.max_n,
            "searched": self.searched,
        }
        if self.witness is not None:
            out["witness"] = {"key": canonical_key(self.witness), **lattice_to_dict(self.witness)}
        else:
            out["exhausted"] = f"no lattice with n <= {self.max_n} satisfies both"
        return out

    def describe(self) -> str:
        if self.witness is None:
            return f"exhausted: no witness with n <= {self.max_n} ({self.searched} lattices searched)"
        return f"witness n={self.witness.n} key={canonical_key(self.witness)} (after {self.searched} lattices)"


def find_counterexample(hypothesis: str, negated_conclusion: str, max_n: int) -> MineResult:
    """First lattice by (n, canonical key) satisfying both expressions."""
    hyp = parse_property(hypothesis)
    neg = parse_property(negated_conclusion)
    searched = 0
    for n in range(1, max_n + 1):
        for L in enumerate_lattices(n).lattices:
            searched += 1
            if evaluate(hyp, L).holds and evaluate(neg, L).holds:
                return MineResult(hypothesis, negated_conclusion, max_n, L, searched)
    return MineResult(hypothesis, negated_conclusion, max_n, None, searched)
