"""Count lattices (all and modular) per size and time the enumeration."""
import argparse
import time
from dataclasses import dataclass

from lattika.core import is_distributive, is_modular
from lattika.enumerate import enumerate_lattices


@dataclass
class Config:
    max_n: int = 8


def main(cfg: Config):
    print(f"{'n':>2} {'lattices':>9} {'modular':>8} {'distrib':>8} {'seconds':>8}")
    for n in range(1, cfg.max_n + 1):
        start = time.perf_counter()
        corpus = enumerate_lattices(n)
        elapsed = time.perf_counter() - start
        mod = sum(is_modular(L) for L in corpus)
        dist = sum(is_distributive(L) for L in corpus)
        print(f"{n:>2} {len(corpus):>9} {mod:>8} {dist:>8} {elapsed:>8.2f}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=Config.max_n)
    main(Config(**vars(p.parse_args())))
