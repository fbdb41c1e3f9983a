"""Lattice JSON files and corpora.

File format: ``{"n": 5, "covers": [[0, 1], ...], "names": ["0", "a", ...]}``
where each pair is a cover ``u < v``.  ``names`` is optional.
"""
from __future__ import annotations

import hashlib
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path

from .core import Lattice, LatticeError, canonical_key, canonicalize, from_covers

log = logging.getLogger(__name__)


class ParseError(LatticeError):
    pass


def parse_lattice(text: str, strict: bool = True) -> Lattice:
    """Parse the JSON lattice format.

    With ``strict`` duplicate or transitively implied pairs are rejected;
    otherwise they are dropped with a warning.
    """
    try:
        data = json.loads(text)
        n = data["n"]
        pairs = [tuple(p) for p in data["covers"]]
        names = data.get("names")
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise ParseError(f"malformed lattice JSON: {exc}") from exc
    if not isinstance(n, int) or any(len(p) != 2 for p in pairs):
        raise ParseError("'n' must be an integer and covers must be pairs")
    if names is not None and (len(names) != n or len(set(names)) != n):
        raise ParseError("'names' must list n distinct names")
    L = from_covers(n, pairs, names)
    given = set(pairs)
    actual = set(L.covers())
    dupes = len(pairs) != len(given)
    implied = given - actual
    if dupes or implied:
        msg = f"duplicate pairs: {dupes}; non-cover pairs: {sorted(implied)}"
        if strict:
            raise ParseError(msg)
        log.warning("reducing cover list (%s)", msg)
    return L


def lattice_to_dict(L: Lattice) -> dict:
    out: dict = {"n": L.n, "covers": [list(p) for p in L.covers()]}
    if L.names:
        out["names"] = list(L.names)
    return out


def serialize_lattice(L: Lattice) -> str:
    return json.dumps(lattice_to_dict(L))


def read_lattice(path: str | Path, strict: bool = True) -> Lattice:
    return parse_lattice(Path(path).read_text(), strict=strict)


def key_hash(L: Lattice) -> str:
    return hashlib.sha1(canonical_key(L).encode()).hexdigest()[:12]


@dataclass
class Corpus:
    source: str
    lattices: list[Lattice] = field(default_factory=list)
    provenance: list[str] = field(default_factory=list)
    errors: list[tuple[str, str]] = field(default_factory=list)

    def __len__(self):
        return len(self.lattices)

    def __iter__(self):
        return iter(self.lattices)


def make_corpus(source: str, items: list[tuple[Lattice, str]]) -> Corpus:
    """Canonicalize, drop isomorphic duplicates (first wins), sort by (n, key)."""
    seen: dict[str, tuple[Lattice, str]] = {}
    for L, prov in items:
        seen.setdefault(canonical_key(L), (canonicalize(L), prov))
    ordered = sorted(seen.items(), key=lambda kv: (kv[1][0].n, kv[0]))
    return Corpus(source, [L for _, (L, _) in ordered], [p for _, (_, p) in ordered])


def load_corpus(directory: str | Path, strict: bool = True) -> Corpus:
    directory = Path(directory)
    items, errors = [], []
    for path in sorted(directory.glob("*.json")):
        try:
            items.append((read_lattice(path, strict), str(path)))
        except LatticeError as exc:
            errors.append((str(path), str(exc)))
    corpus = make_corpus(str(directory), items)
    corpus.errors = errors
    return corpus


def export_corpus(corpus: Corpus, out_dir: str | Path) -> list[Path]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for L in corpus:
        path = out / f"{L.n}-{key_hash(L)}.json"
        path.write_text(serialize_lattice(L) + "\n")
        written.append(path)
    return written
