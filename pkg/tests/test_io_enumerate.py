import json
import logging

import pytest
from hypothesis import given

from conftest import FIXTURE_DIR, lattices
from lattika.core import SizeLimitExceeded, canonical_key, is_modular
from lattika.enumerate import enumerate_lattices, enumerate_up_to
from lattika.io import (
    ParseError,
    export_corpus,
    key_hash,
    load_corpus,
    parse_lattice,
    read_lattice,
    serialize_lattice,
)

# frozen from the labeled-poset oracle in tests/oracles.py
ORACLE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 5, 6: 15, 7: 53}
MODULAR_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 4, 6: 8, 7: 16}


def test_round_trip_of_fixture_file():
    text = (FIXTURE_DIR / "M3.json").read_text().strip()
    assert serialize_lattice(parse_lattice(text)) == text


def test_strict_parse_rejects_implied_pair(caplog):
    text = json.dumps({"n": 3, "covers": [[0, 1], [1, 2], [0, 2]]})
    with pytest.raises(ParseError):
        parse_lattice(text)
    with caplog.at_level(logging.WARNING):
        L = parse_lattice(text, strict=False)
    assert L.covers() == [(0, 1), (1, 2)] and "reducing" in caplog.text


def test_strict_parse_rejects_duplicates_and_garbage():
    with pytest.raises(ParseError):
        parse_lattice(json.dumps({"n": 2, "covers": [[0, 1], [0, 1]]}))
    with pytest.raises(ParseError):
        parse_lattice("{not json")
    with pytest.raises(ParseError):
        parse_lattice(json.dumps({"n": 2, "covers": [[0, 1]], "names": ["a"]}))


def test_n5_fixture_is_not_modular():
    assert not is_modular(read_lattice(FIXTURE_DIR / "N5.json"))


def test_load_corpus(tmp_path):
    assert len(load_corpus(tmp_path)) == 0
    m3 = (FIXTURE_DIR / "M3.json").read_text()
    (tmp_path / "a.json").write_text(m3)
    (tmp_path / "b.json").write_text(m3)
    (tmp_path / "bad.json").write_text("{}")
    corpus = load_corpus(tmp_path)
    assert len(corpus) == 1 and corpus.provenance == [str(tmp_path / "a.json")]
    assert [p for p, _ in corpus.errors] == [str(tmp_path / "bad.json")]
    fixtures = load_corpus(FIXTURE_DIR)
    assert len(fixtures) == 5
    assert [L.n for L in fixtures] == sorted(L.n for L in fixtures)


def test_export_uses_hash_names(tmp_path):
    corpus = enumerate_lattices(5)
    paths = export_corpus(corpus, tmp_path)
    assert sorted(p.name for p in paths) == sorted(f"5-{key_hash(L)}.json" for L in corpus)
    again = load_corpus(tmp_path)
    assert [canonical_key(L) for L in again] == [canonical_key(L) for L in corpus]


@given(lattices())
def test_serialization_round_trip(L):
    M = parse_lattice(serialize_lattice(L))
    assert M.covers() == L.covers()


def test_counts_match_frozen_oracle():
    for n, count in ORACLE_COUNTS.items():
        assert len(enumerate_lattices(n)) == count
        assert len(enumerate_lattices(n, is_modular)) == MODULAR_COUNTS[n]


def test_enumerated_lattices_match_oracle_classes():
    from oracles import lattice_classes, normalized_leq, oracle_key

    for n in range(1, 7):
        got = {oracle_key(n, normalized_leq(L)) for L in enumerate_lattices(n)}
        assert got == lattice_classes(n)


def test_enumeration_is_deterministic_and_sorted():
    a = [canonical_key(L) for L in enumerate_up_to(6)]
    b = [canonical_key(L) for L in enumerate_up_to(6)]
    assert a == b
    assert a == sorted(a, key=lambda k: (int(k.split("|")[0]), k))


def test_enumeration_cap(monkeypatch):
    with pytest.raises(SizeLimitExceeded):
        enumerate_lattices(10)
    monkeypatch.setenv("LATTIKA_MAX_N", "3")
    with pytest.raises(SizeLimitExceeded):
        enumerate_lattices(4)
