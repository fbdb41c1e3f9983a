"""Finite strictness and converse searches.

Each row asks for the smallest lattice satisfying a hypothesis but not a
conclusion; an exhaustion line means no such lattice exists up to max_n.
"""
import argparse
import json
from dataclasses import dataclass

from lattika.harness.miner import find_counterexample

SEARCHES = [
    ("not modular", "not dsubc"),
    ("modular and wtype1(all)", "not type1(all)"),
    ("modular and wtype1(simple)", "not type1(simple)"),
    ("modular and type1(simple)", "not type2(simple)"),
    ("modular and type2(simple)", "not type1(simple)"),
    ("modular and extending", "not qc"),
    ("modular and Q(simple)", "not qc"),
    ("modular and C1(all)", "not C3(all)"),
    ("modular and wtype1(uniform)", "not wtype1(all)"),
    ("simple", "not extending"),
]


@dataclass
class Config:
    max_n: int = 6
    json: bool = False


def main(cfg: Config):
    for hyp, neg in SEARCHES:
        res = find_counterexample(hyp, neg, cfg.max_n)
        if cfg.json:
            print(json.dumps(res.to_dict()))
        else:
            print(f"{hyp:32} | {neg:22} | {res.describe()}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=Config.max_n)
    p.add_argument("--json", action="store_true")
    main(Config(**vars(p.parse_args())))
